# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled edge-subset enumeration for cut spectra.

Bit ``j`` of a mask set means edge ``j`` is removed. Every mask in
``[lo, hi)`` is classified; with ``prune`` a mask leaving fewer than
``n - 1`` edges is counted as a cut without running union-find, otherwise a
fresh union-find over the surviving edges decides.
"""

cdef enum:
    MAXV = 64
    MAXE = 63


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    bint __builtin_mul_overflow(unsigned long long, unsigned long long, unsigned long long*) nogil
    bint __builtin_add_overflow(unsigned long long, unsigned long long, unsigned long long*) nogil


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void _count(int n, int m, int* eu, int* ev, unsigned long long lo,
                 unsigned long long hi, int prune, unsigned long long* counts) noexcept nogil:
    cdef int parent[MAXV]
    cdef unsigned long long mask
    cdef int i, j, a, b, comps, k
    cdef int corank = m - n + 1
    mask = lo
    while mask < hi:
        k = __builtin_popcountll(mask)
        if prune and k > corank:
            counts[k] += 1
            mask += 1
            continue
        for i in range(n):
            parent[i] = i
        comps = n
        j = 0
        while j < m and comps > 1:
            if not ((mask >> j) & 1):
                a = _find(parent, eu[j])
                b = _find(parent, ev[j])
                if a != b:
                    parent[a] = b
                    comps -= 1
            j += 1
        if comps > 1:
            counts[k] += 1
        mask += 1


def cut_counts(int n, us, vs, unsigned long long lo, unsigned long long hi, bint prune=False):
    """Per-size counts of disconnecting edge subsets among masks ``lo..hi-1``."""
    cdef int m = len(us)
    cdef int eu[MAXE]
    cdef int ev[MAXE]
    cdef unsigned long long counts[MAXE + 1]
    cdef int i
    if n > MAXV or m > MAXE:
        raise ValueError("graph too large for the compiled kernel")
    if hi > (1ULL << m):
        raise ValueError("mask range exceeds 2**m")
    for i in range(m):
        eu[i] = us[i]
        ev[i] = vs[i]
    for i in range(m + 1):
        counts[i] = 0
    with nogil:
        _count(n, m, eu, ev, lo, hi, prune, counts)
    return [counts[i] for i in range(m + 1)]


cdef int _connected_without(int n, int m, int* eu, int* ev, unsigned long long mask) noexcept nogil:
    cdef int parent[MAXV]
    cdef int i, j, a, b, comps
    for i in range(n):
        parent[i] = i
    comps = n
    j = 0
    while j < m and comps > 1:
        if not ((mask >> j) & 1):
            a = _find(parent, eu[j])
            b = _find(parent, ev[j])
            if a != b:
                parent[a] = b
                comps -= 1
        j += 1
    return comps <= 1


cdef int _noncut(int n, int m, int* eu, int* ev, unsigned long long* w, int kmax,
                 unsigned long long* sums) noexcept nogil:
    # depth-first over removal sets in increasing edge order; a disconnecting
    # set is never extended because all its supersets disconnect as well
    cdef unsigned long long mask_stack[MAXE + 1]
    cdef unsigned long long prod_stack[MAXE + 1]
    cdef int next_stack[MAXE + 1]
    cdef int depth = 0
    cdef int j
    cdef unsigned long long mask, p
    mask_stack[0] = 0
    prod_stack[0] = 1
    next_stack[0] = 0
    sums[0] = 1
    while depth >= 0:
        j = next_stack[depth]
        if depth == kmax or j >= m:
            depth -= 1
            continue
        next_stack[depth] = j + 1
        mask = mask_stack[depth] | (1ULL << j)
        if not _connected_without(n, m, eu, ev, mask):
            continue
        if __builtin_mul_overflow(prod_stack[depth], w[j], &p):
            return 1
        if __builtin_add_overflow(sums[depth + 1], p, &sums[depth + 1]):
            return 1
        depth += 1
        mask_stack[depth] = mask
        prod_stack[depth] = p
        next_stack[depth] = j + 1
    return 0


def noncut_sums(int n, us, vs, weights, int kmax):
    """Per-size sums of weight products over removal sets that keep the graph connected.

    Raises OverflowError when a partial sum leaves 64 bits.
    """
    cdef int m = len(us)
    cdef int eu[MAXE]
    cdef int ev[MAXE]
    cdef unsigned long long w[MAXE]
    cdef unsigned long long sums[MAXE + 1]
    cdef int i, status
    if n > MAXV or m > MAXE:
        raise ValueError("graph too large for the compiled kernel")
    kmax = min(kmax, m)
    for i in range(m):
        eu[i] = us[i]
        ev[i] = vs[i]
        w[i] = weights[i]
    for i in range(m + 1):
        sums[i] = 0
    with nogil:
        status = _noncut(n, m, eu, ev, w, kmax, sums)
    if status:
        raise OverflowError("weight sums exceed 64 bits")
    return [sums[i] for i in range(kmax + 1)]
