"""Pure-Python coefficient-table kernel.

Mirrors ``_kernel.pyx`` exactly and is used when the compiled module is
unavailable. Every connected subset S is handled with local bitmasks over
its own vertices: bit j stands for the j-th smallest vertex of S.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def local_adjacency(S, adjacency) -> list[int]:
    pos = {v: j for j, v in enumerate(S)}
    masks = []
    for v in S:
        m = 0
        for w in adjacency[v]:
            j = pos.get(w)
            if j is not None:
                m |= 1 << j
        masks.append(m)
    return masks


def component_of(seed: int, within: int, ladj: list[int]) -> int:
    """Connected component (as a mask) of the bit ``seed`` inside ``within``."""
    comp = seed
    frontier = seed
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        j = low.bit_length() - 1
        new = ladj[j] & within & ~comp
        comp |= new
        frontier |= new
    return comp


def is_connected_mask(mask: int, ladj: list[int]) -> bool:
    return mask != 0 and component_of(mask & -mask, mask, ladj) == mask


def prepare(subsets, ids, adjacency):
    """Per-subset local structure: (size, local adjacency, [(mask, id)]) with
    one pair for every nonempty connected submask."""
    out = []
    for S in subsets:
        s = len(S)
        ladj = local_adjacency(S, adjacency)
        pairs = []
        for mask in range(1, 1 << s):
            if is_connected_mask(mask, ladj):
                T = tuple(S[j] for j in range(s) if mask >> j & 1)
                g = ids.get(T)
                if g is None:
                    raise LookupError(f"subset {T} missing from connected-subset index")
                pairs.append((mask, g))
        out.append((s, ladj, pairs))
    return out


def fill_table(local, weights, m: int) -> list[list[int]]:
    """Coefficient rows a[id][k] (k = 0..m) for a component-product oracle.

    ``weights[id]`` is the weight of the connected subset ``id``; the oracle
    value of an arbitrary subset U is the product of the weights of the
    components of G[U], nonzero only for i = |U|.
    """
    rows: list = [None] * len(local)
    for sid, (s, ladj, pairs) in enumerate(local):
        row = [0] * (m + 1)
        rows[sid] = row
        if s > m:
            continue
        full = (1 << s) - 1
        cg = [-1] * (full + 1)
        for mask, g in pairs:
            cg[mask] = g
        pc = [0] * (full + 1)
        lam = [0] * (full + 1)
        lam[0] = 1
        live = []
        for U in range(1, full + 1):
            pc[U] = pc[U >> 1] + (U & 1)
            comp = component_of(U & -U, U, ladj)
            w = weights[cg[comp]]
            if w:
                rest = lam[U ^ comp]
                if rest:
                    lam[U] = w * rest
                    live.append(U)
        # covers (U, T) with T a proper connected submask of S
        for U in live:
            i = pc[U]
            if i >= m:
                continue
            lu = lam[U]
            R = full ^ U
            W = U
            while True:
                T = R | W
                if T != full and T:
                    g = cg[T]
                    if g >= 0:
                        src = rows[g]
                        lo = s if s > i + pc[T] else i + pc[T]
                        for k in range(lo, m + 1):
                            row[k] -= lu * src[k - i]
                if W == 0:
                    break
                W = (W - 1) & U
        # T = S itself; row[k - i] must be final before row[k] is read
        row[s] -= s * lam[full]
        for k in range(s + 1, m + 1):
            acc = row[k]
            for U in live:
                i = pc[U]
                if k - i >= s:
                    acc -= lam[U] * row[k - i]
            row[k] = acc
    return rows
