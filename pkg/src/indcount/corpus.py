"""Deterministic pattern and host collections for self-tests and acceptance runs."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from .graph import (Graph, build_graph, cycle_graph, disjoint_union, empty_graph,
                    path_graph, random_bounded_degree_graph, star_graph)


def _canonical(n: int, edges) -> tuple:
    best = None
    for perm in permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def all_graphs(m: int) -> list[Graph]:
    """One representative of every isomorphism class on exactly m vertices."""
    pairs = list(combinations(range(m), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        key = _canonical(m, edges)
        if key not in seen:
            seen[key] = build_graph(m, key)
    return sorted(seen.values(), key=lambda g: (g.num_edges(), g.edges()))


def small_patterns(max_m: int = 4) -> list[Graph]:
    return [g for m in range(1, max_m + 1) for g in all_graphs(m)]


def host_corpus(count: int = 200, seed: int = 2024, max_n: int = 10, max_deg: int = 3) -> list[Graph]:
    """Structured hosts (paths, cycles, stars, disjoint unions) followed by
    random bounded-degree hosts up to ``count`` graphs in total."""
    rng = random.Random(seed)
    hosts = [empty_graph(0), empty_graph(1), empty_graph(5)]
    hosts += [path_graph(n) for n in range(2, max_n + 1)]
    hosts += [cycle_graph(n) for n in range(3, max_n + 1)]
    hosts += [star_graph(k) for k in range(1, max_n)]
    hosts += [
        disjoint_union(path_graph(3), cycle_graph(4)),
        disjoint_union(cycle_graph(3), cycle_graph(3), empty_graph(2)),
        disjoint_union(star_graph(3), path_graph(2), path_graph(2)),
        disjoint_union(cycle_graph(5), cycle_graph(5)),
        disjoint_union(path_graph(4), star_graph(4)),
    ]
    while len(hosts) < count:
        n = rng.randint(1, max_n)
        hosts.append(random_bounded_degree_graph(n, max_deg, rng.uniform(0.2, 0.9), rng))
    return hosts[:count]
