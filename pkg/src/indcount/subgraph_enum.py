"""Connected induced subset enumeration and anchored embeddings of
connected patterns into bounded-degree hosts."""

from __future__ import annotations

from collections import deque
from typing import Iterator

from .graph import Graph, VertexSubset, is_connected, neighborhood_of_set


class ConnectedSubsetIndex:
    """All vertex subsets of size <= k that induce a connected subgraph.

    Subsets are stored as sorted tuples, grouped by size and sorted
    lexicographically within a size class. ``ids`` maps each subset to its
    position in ``subsets``; ids are dense and increase with size.
    """

    def __init__(self, graph: Graph, k: int, layers: list[list[VertexSubset]]):
        self.graph = graph
        self.k = k
        self.subsets: list[VertexSubset] = []
        self.size_offsets = [0]
        for layer in layers:
            self.subsets.extend(sorted(layer))
            self.size_offsets.append(len(self.subsets))
        self.ids = {s: i for i, s in enumerate(self.subsets)}
        # per-kernel caches keyed by kernel name; filled lazily
        self._cache: dict = {}

    def by_size(self, size: int) -> list[VertexSubset]:
        if not 1 <= size <= self.k:
            return []
        return self.subsets[self.size_offsets[size - 1]:self.size_offsets[size]]

    def counts(self) -> list[int]:
        return [self.size_offsets[i + 1] - self.size_offsets[i] for i in range(self.k)]

    def __len__(self) -> int:
        return len(self.subsets)

    def __contains__(self, S) -> bool:
        return tuple(S) in self.ids

    def __iter__(self) -> Iterator[VertexSubset]:
        return iter(self.subsets)

    def id_of(self, S: VertexSubset) -> int:
        try:
            return self.ids[S]
        except KeyError:
            raise LookupError(f"subset {S} missing from connected-subset index") from None


def enumerate_connected_subsets(G: Graph, k: int) -> ConnectedSubsetIndex:
    if k < 1:
        raise ValueError("size bound must be >= 1")
    layer: set[VertexSubset] = {(v,) for v in range(G.n)}
    layers = [layer]
    for _ in range(2, k + 1):
        grown: set[VertexSubset] = set()
        for S in layer:
            for v in neighborhood_of_set(G, S):
                grown.add(tuple(sorted(S + (v,))))
        layer = grown
        layers.append(layer)
    return ConnectedSubsetIndex(G, k, [list(l) for l in layers])


def anchored_order(H: Graph) -> tuple[list[int], list[int]]:
    """BFS order from vertex 0 plus, for each position i >= 1, the position
    of an earlier neighbour (its BFS parent)."""
    order = [0]
    parent_of = {0: -1}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in H.adjacency[u]:
            if w not in parent_of:
                parent_of[w] = u
                order.append(w)
                queue.append(w)
    pos = {v: i for i, v in enumerate(order)}
    parents = [-1] + [pos[parent_of[v]] for v in order[1:]]
    return order, parents


def _check_pattern(H: Graph) -> None:
    if not is_connected(H):
        raise ValueError("pattern must be connected and nonempty")


def _embeddings(H: Graph, G: Graph, roots=None) -> Iterator[list[int]]:
    """Yield induced embeddings of connected H into G (image lists in
    anchored order). Adjacency with every placed vertex is checked as each
    vertex is placed."""
    order, parents = anchored_order(H)
    k = len(order)
    hadj = [set(H.adjacency[v]) for v in range(H.n)]
    # want[i][j]: must position i be adjacent to position j < i
    want = [[order[j] in hadj[order[i]] for j in range(i)] for i in range(k)]
    gadj = G.adjacency
    gset = [set(a) for a in gadj] if G.n else []
    image = [0] * k
    used: set[int] = set()
    hdeg = [len(H.adjacency[v]) for v in order]

    def extend(i: int) -> Iterator[list[int]]:
        if i == k:
            yield image
            return
        row = want[i]
        for x in gadj[image[parents[i]]]:
            if x in used or len(gadj[x]) < hdeg[i]:
                continue
            nb = gset[x]
            for j in range(i):
                if (image[j] in nb) != row[j]:
                    break
            else:
                image[i] = x
                used.add(x)
                yield from extend(i + 1)
                used.discard(x)

    for r in (range(G.n) if roots is None else roots):
        if len(gadj[r]) < hdeg[0]:
            continue
        image[0] = r
        used.add(r)
        yield from extend(1)
        used.discard(r)


def is_isomorphic_connected(H1: Graph, H2: Graph) -> bool:
    _check_pattern(H1)
    if H1.n != H2.n or H1.num_edges() != H2.num_edges():
        return False
    if H1.degree_sequence() != H2.degree_sequence():
        return False
    for _ in _embeddings(H1, H2):
        return True
    return False


def count_induced_connected(Hc: Graph, G: Graph) -> int:
    _check_pattern(Hc)
    if Hc.n > G.n:
        return 0
    found: set[VertexSubset] = set()
    for image in _embeddings(Hc, G):
        found.add(tuple(sorted(image)))
    return len(found)


def occurs_connected(Hc: Graph, G: Graph) -> bool:
    """True iff ind(Hc, G) > 0."""
    _check_pattern(Hc)
    for _ in _embeddings(Hc, G):
        return True
    return False
