"""Brute-force reference counts.

Deliberately naive and independent of the fast path: subsets come from
itertools.combinations and isomorphism is decided by trying vertex
permutations component by component.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph


def _components(verts, nbrs):
    left = set(verts)
    comps = []
    while left:
        stack = [left.pop()]
        comp = set(stack)
        while stack:
            u = stack.pop()
            for w in nbrs[u]:
                if w in left:
                    left.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _edge_set(verts, nbrs):
    vs = set(verts)
    return {frozenset((u, w)) for u in verts for w in nbrs[u] if w in vs}


def _same_graph(va, ea, vb, eb) -> bool:
    """Is there a bijection va -> vb carrying edge set ea onto eb?"""
    if len(va) != len(vb) or len(ea) != len(eb):
        return False
    for image in permutations(vb):
        f = dict(zip(va, image))
        if all(frozenset(f[x] for x in e) in eb for e in ea):
            return True
    return False


class _Shape:
    """A graph split into components, each as (vertices, edge set)."""

    def __init__(self, verts, nbrs):
        self.parts = []
        for comp in _components(verts, nbrs):
            self.parts.append((comp, _edge_set(comp, nbrs)))
        self.parts.sort(key=lambda p: (len(p[0]), len(p[1])))
        self.signature = [(len(v), len(e)) for v, e in self.parts]


def _isomorphic(a: _Shape, b: _Shape) -> bool:
    if a.signature != b.signature:
        return False
    used = [False] * len(b.parts)

    def assign(i: int) -> bool:
        if i == len(a.parts):
            return True
        va, ea = a.parts[i]
        for j, (vb, eb) in enumerate(b.parts):
            if not used[j] and a.signature[i] == b.signature[j] and _same_graph(va, ea, vb, eb):
                used[j] = True
                if assign(i + 1):
                    return True
                used[j] = False
        return False

    return assign(0)


def _neighbour_sets(G: Graph):
    return [set(a) for a in G.adjacency]


def brute_force_ind(H: Graph, G: Graph) -> int:
    if H.n > G.n:
        return 0
    target = _Shape(range(H.n), _neighbour_sets(H))
    nbrs = _neighbour_sets(G)
    h_edges = sum(len(e) for _, e in target.parts)
    count = 0
    for S in combinations(range(G.n), H.n):
        vs = set(S)
        edges = sum(1 for u in S for w in nbrs[u] if w in vs) // 2
        if edges != h_edges:
            continue
        if _isomorphic(_Shape(S, nbrs), target):
            count += 1
    return count


def brute_force_connected_subsets(G: Graph, k: int) -> list[tuple[int, ...]]:
    nbrs = _neighbour_sets(G)
    out = []
    for size in range(1, min(k, G.n) + 1):
        for S in combinations(range(G.n), size):
            if len(_components(S, nbrs)) == 1:
                out.append(S)
    return out


def brute_force_independence_counts(G: Graph, m: int) -> list[int]:
    """Number of independent sets of each size 0..m."""
    nbrs = _neighbour_sets(G)
    counts = []
    for size in range(m + 1):
        counts.append(sum(
            1 for S in combinations(range(G.n), size)
            if not any(w in nbrs[u] for u, w in combinations(S, 2))))
    return counts
