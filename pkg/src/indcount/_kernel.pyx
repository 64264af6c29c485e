# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled coefficient-table kernel; same contract as ``_kernel_py``.

``fill_table`` first runs with checked int64 arithmetic and reruns with
Python integers if any product or difference overflows, so results are
always exact.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy
from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM
from cpython.ref cimport Py_INCREF
from cpython.array cimport array, clone

IMPLEMENTATION = "cython"

cdef enum:
    MAX_LOCAL = 24

cdef extern from *:
    bint mul_overflow "__builtin_mul_overflow"(long long a, long long b, long long *res) nogil
    bint sub_overflow "__builtin_sub_overflow"(long long a, long long b, long long *res) nogil
    int ctz "__builtin_ctz"(unsigned int x) nogil
    int popcount "__builtin_popcount"(unsigned int x) nogil

cdef array _int_template = array("i")


cdef inline unsigned int component_of(unsigned int seed, unsigned int within,
                                      const int *ladj) nogil:
    cdef unsigned int comp = seed, frontier = seed, low, new
    while frontier:
        low = frontier & (~frontier + 1)
        frontier ^= low
        new = (<unsigned int>ladj[ctz(low)]) & within & ~comp
        comp |= new
        frontier |= new
    return comp


cdef class LocalStructure:
    """Flat per-subset data: size, local adjacency masks, and the
    (mask, id) pair of every nonempty connected submask."""
    cdef public array sizes, ladj, pair_off, pair_mask, pair_gid
    cdef public int width

    def __len__(self):
        return len(self.sizes)


def prepare(subsets, dict ids, adjacency):
    cdef Py_ssize_t N = len(subsets), sid, npairs = 0, cap
    cdef int width = 1, s, j, t, c, v
    cdef unsigned int mask, full
    cdef int verts[MAX_LOCAL]
    cdef int *la
    cdef int *pmask = NULL
    cdef int *pgid = NULL
    cdef tuple S, T
    cdef object item, nb, g
    for S in subsets:
        if len(S) > width:
            width = len(S)
    if width > MAX_LOCAL:
        raise ValueError(f"subsets larger than {MAX_LOCAL} vertices are not supported")

    cdef LocalStructure out = LocalStructure()
    out.width = width
    out.sizes = clone(_int_template, N, zero=True)
    out.ladj = clone(_int_template, N * width, zero=True)
    out.pair_off = clone(array("q"), N + 1, zero=True)
    cdef int[::1] sizes = out.sizes
    cdef int[::1] ladj = out.ladj
    cdef long long[::1] off = out.pair_off

    cap = 1024
    pmask = <int *> malloc(cap * sizeof(int))
    pgid = <int *> malloc(cap * sizeof(int))
    try:
        for sid in range(N):
            S = <tuple> subsets[sid]
            s = len(S)
            sizes[sid] = s
            for j in range(s):
                verts[j] = S[j]
            la = &ladj[sid * width]
            for j in range(s):
                for nb in adjacency[verts[j]]:
                    v = nb
                    for t in range(s):
                        if verts[t] == v:
                            la[j] |= 1 << t
                            break
            full = (1u << s) - 1
            if npairs + <Py_ssize_t> full > cap:
                while npairs + <Py_ssize_t> full > cap:
                    cap *= 2
                pmask = <int *> realloc(pmask, cap * sizeof(int))
                pgid = <int *> realloc(pgid, cap * sizeof(int))
                if pmask == NULL or pgid == NULL:
                    raise MemoryError()
            for mask in range(1, full + 1):
                if component_of(mask & (~mask + 1), mask, la) != mask:
                    continue
                T = PyTuple_New(popcount(mask))
                c = 0
                for j in range(s):
                    if mask >> j & 1:
                        item = <object> PyTuple_GET_ITEM(S, j)
                        Py_INCREF(item)
                        PyTuple_SET_ITEM(T, c, item)
                        c += 1
                g = ids.get(T)
                if g is None:
                    raise LookupError(f"subset {T} missing from connected-subset index")
                pmask[npairs] = mask
                pgid[npairs] = g
                npairs += 1
            off[sid + 1] = npairs
        out.pair_mask = clone(_int_template, npairs, zero=False)
        out.pair_gid = clone(_int_template, npairs, zero=False)
        if npairs:
            memcpy(out.pair_mask.data.as_voidptr, pmask, npairs * sizeof(int))
            memcpy(out.pair_gid.data.as_voidptr, pgid, npairs * sizeof(int))
    finally:
        free(pmask)
        free(pgid)
    return out


cdef bint _fill_int64(LocalStructure L, const long long *W, long long *rows, int m) except -1:
    """Returns False on overflow (rows then partially filled)."""
    cdef int[::1] sizes = L.sizes
    cdef int[::1] ladj = L.ladj
    cdef long long[::1] off = L.pair_off
    cdef int[::1] pmask = L.pair_mask
    cdef int[::1] pgid = L.pair_gid
    cdef Py_ssize_t N = sizes.shape[0], sid, p
    cdef int width = L.width, s, i, k, lo, nlive, q, stride = m + 1
    cdef unsigned int full, U, R, Wm, T, comp
    cdef long long w, lu, prod, acc
    cdef long long *row
    cdef long long *src
    cdef int *la
    cdef Py_ssize_t tabsize = (<Py_ssize_t> 1) << width
    cdef int *cg = <int *> malloc(tabsize * sizeof(int))
    cdef int *pc = <int *> malloc(tabsize * sizeof(int))
    cdef long long *lam = <long long *> malloc(tabsize * sizeof(long long))
    cdef unsigned int *live = <unsigned int *> malloc(tabsize * sizeof(unsigned int))
    cdef bint ok = True
    if cg == NULL or pc == NULL or lam == NULL or live == NULL:
        free(cg); free(pc); free(lam); free(live)
        raise MemoryError()
    with nogil:
        for sid in range(N):
            s = sizes[sid]
            row = rows + sid * stride
            for k in range(stride):
                row[k] = 0
            if s > m:
                continue
            full = (1u << s) - 1
            la = &ladj[sid * width]
            for U in range(full + 1):
                cg[U] = -1
            for p in range(off[sid], off[sid + 1]):
                cg[pmask[p]] = pgid[p]
            pc[0] = 0
            lam[0] = 1
            nlive = 0
            for U in range(1, full + 1):
                pc[U] = pc[U >> 1] + <int>(U & 1)
                lam[U] = 0
                comp = component_of(U & (~U + 1), U, la)
                w = W[cg[comp]]
                if w != 0 and lam[U ^ comp] != 0:
                    if mul_overflow(w, lam[U ^ comp], &prod):
                        ok = False
                        break
                    lam[U] = prod
                    live[nlive] = U
                    nlive += 1
            if not ok:
                break
            for q in range(nlive):
                U = live[q]
                i = pc[U]
                if i >= m:
                    continue
                lu = lam[U]
                R = full ^ U
                Wm = U
                while True:
                    T = R | Wm
                    if T != full and T != 0 and cg[T] >= 0:
                        src = rows + cg[T] * stride
                        lo = i + pc[T]
                        if lo < s:
                            lo = s
                        for k in range(lo, m + 1):
                            if mul_overflow(lu, src[k - i], &prod) or sub_overflow(row[k], prod, &row[k]):
                                ok = False
                                break
                        if not ok:
                            break
                    if Wm == 0:
                        break
                    Wm = (Wm - 1) & U
                if not ok:
                    break
            if not ok:
                break
            if mul_overflow(<long long> s, lam[full], &prod) or sub_overflow(row[s], prod, &row[s]):
                ok = False
                break
            for k in range(s + 1, m + 1):
                acc = row[k]
                for q in range(nlive):
                    U = live[q]
                    i = pc[U]
                    if k - i >= s:
                        if mul_overflow(lam[U], row[k - i], &prod) or sub_overflow(acc, prod, &acc):
                            ok = False
                            break
                if not ok:
                    break
                row[k] = acc
            if not ok:
                break
    free(cg); free(pc); free(lam); free(live)
    return ok


cdef list _fill_object(LocalStructure L, list weights, int m):
    cdef int[::1] sizes = L.sizes
    cdef int[::1] ladj = L.ladj
    cdef long long[::1] off = L.pair_off
    cdef int[::1] pmask = L.pair_mask
    cdef int[::1] pgid = L.pair_gid
    cdef Py_ssize_t N = sizes.shape[0], sid, p
    cdef int width = L.width, s, i, k, lo, nlive, q
    cdef unsigned int full, U, R, Wm, T, comp
    cdef int *la
    cdef Py_ssize_t tabsize = (<Py_ssize_t> 1) << width
    cdef int *cg = <int *> malloc(tabsize * sizeof(int))
    cdef int *pc = <int *> malloc(tabsize * sizeof(int))
    cdef unsigned int *live = <unsigned int *> malloc(tabsize * sizeof(unsigned int))
    cdef list rows = [None] * N
    cdef list row, src, lam
    cdef object w, lu, acc, rest
    if cg == NULL or pc == NULL or live == NULL:
        free(cg); free(pc); free(live)
        raise MemoryError()
    try:
        for sid in range(N):
            s = sizes[sid]
            row = [0] * (m + 1)
            rows[sid] = row
            if s > m:
                continue
            full = (1u << s) - 1
            la = &ladj[sid * width]
            for U in range(full + 1):
                cg[U] = -1
            for p in range(off[sid], off[sid + 1]):
                cg[pmask[p]] = pgid[p]
            lam = [0] * (full + 1)
            lam[0] = 1
            pc[0] = 0
            nlive = 0
            for U in range(1, full + 1):
                pc[U] = pc[U >> 1] + <int>(U & 1)
                comp = component_of(U & (~U + 1), U, la)
                w = weights[cg[comp]]
                if w:
                    rest = lam[U ^ comp]
                    if rest:
                        lam[U] = w * rest
                        live[nlive] = U
                        nlive += 1
            for q in range(nlive):
                U = live[q]
                i = pc[U]
                if i >= m:
                    continue
                lu = lam[U]
                R = full ^ U
                Wm = U
                while True:
                    T = R | Wm
                    if T != full and T != 0 and cg[T] >= 0:
                        src = <list> rows[cg[T]]
                        lo = i + pc[T]
                        if lo < s:
                            lo = s
                        for k in range(lo, m + 1):
                            row[k] = row[k] - lu * src[k - i]
                    if Wm == 0:
                        break
                    Wm = (Wm - 1) & U
            row[s] = row[s] - s * lam[full]
            for k in range(s + 1, m + 1):
                acc = row[k]
                for q in range(nlive):
                    U = live[q]
                    i = pc[U]
                    if k - i >= s:
                        acc = acc - lam[U] * row[k - i]
                row[k] = acc
    finally:
        free(cg); free(pc); free(live)
    return rows


def fill_table(LocalStructure local, weights, int m):
    cdef Py_ssize_t N = len(local.sizes), sid, k
    cdef int stride = m + 1
    cdef long long *W = NULL
    cdef long long *rows = NULL
    cdef bint ok = False
    weights = list(weights)
    try:
        W = <long long *> malloc((len(weights) + 1) * sizeof(long long))
        rows = <long long *> malloc((N * stride + 1) * sizeof(long long))
        if W == NULL or rows == NULL:
            raise MemoryError()
        try:
            for k in range(len(weights)):
                W[k] = weights[k]
            ok = _fill_int64(local, W, rows, m)
        except OverflowError:
            ok = False
        if ok:
            return [[rows[sid * stride + k] for k in range(stride)] for sid in range(N)]
    finally:
        free(W)
        free(rows)
    return _fill_object(local, weights, m)
