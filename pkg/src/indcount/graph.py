"""Immutable simple undirected graphs on vertices 0..n-1."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

VertexSubset = tuple[int, ...]


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match vertex count")

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(a) for a in self.adjacency), reverse=True))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(a)) for a in nbrs))


def max_degree(G: Graph) -> int:
    return max((len(a) for a in G.adjacency), default=0)


def _check_subset(G: Graph, S: Iterable[int]) -> VertexSubset:
    S = tuple(sorted(set(S)))
    if S and (S[0] < 0 or S[-1] >= G.n):
        raise GraphError(f"subset {S} out of range for n={G.n}")
    return S


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """G[S] relabelled so that vertex i is the i-th smallest element of S."""
    S = _check_subset(G, S)
    pos = {v: i for i, v in enumerate(S)}
    adj = tuple(
        tuple(sorted(pos[w] for w in G.adjacency[v] if w in pos)) for v in S
    )
    return Graph(len(S), adj)


def connected_components(G: Graph) -> list[VertexSubset]:
    seen = [False] * G.n
    comps = []
    for root in range(G.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(connected_components(G)) == 1


def neighborhood_of_set(G: Graph, S: Iterable[int]) -> VertexSubset:
    S = _check_subset(G, S)
    inside = set(S)
    out = {w for v in S for w in G.adjacency[v] if w not in inside}
    return tuple(sorted(out))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return build_graph(offset, edges)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Return the graph with vertex v renamed perm[v]."""
    return build_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


# Standard families

def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def random_bounded_degree_graph(n: int, max_deg: int, p: float, rng: random.Random) -> Graph:
    """Random graph: candidate pairs in shuffled order, each kept with
    probability p unless it would push a degree above max_deg."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    deg = [0] * n
    edges = []
    for u, v in pairs:
        if deg[u] < max_deg and deg[v] < max_deg and rng.random() < p:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return build_graph(n, edges)


def random_regular_graph(d: int, n: int, rng: random.Random, max_tries: int = 1000) -> Graph:
    """Uniform-ish d-regular simple graph via the pairing model with restarts."""
    if (n * d) % 2 or d >= n:
        raise GraphError(f"no {d}-regular graph on {n} vertices")
    for _ in range(max_tries):
        points = [v for v in range(n) for _ in range(d)]
        rng.shuffle(points)
        edges = set()
        ok = True
        for i in range(0, len(points), 2):
            u, v = points[i], points[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return build_graph(n, sorted(edges))
    raise GraphError(f"failed to sample a {d}-regular graph on {n} vertices")
