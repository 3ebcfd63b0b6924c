# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled maximal-clique enumeration over bitset adjacency rows.

Same contract as the pure-Python kernel: rows are arbitrary Python ints,
split here into 64-bit words (at most 128 vertices, enough for n <= 11).
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

BACKEND = "cython"

DEF NWORDS = 2


cdef inline int _lowest_bit(uint64_t* w) nogil:
    cdef int i, b
    cdef uint64_t x
    for i in range(NWORDS):
        x = w[i]
        if x:
            b = 0
            while not (x >> b) & 1:
                b += 1
            return 64 * i + b
    return -1


cdef inline bint _is_empty(uint64_t* w) nogil:
    cdef int i
    for i in range(NWORDS):
        if w[i]:
            return False
    return True


cdef void _expand(uint64_t* adj, int depth, int* clique,
                  uint64_t* stack_p, uint64_t* stack_x, list out):
    """One Bron-Kerbosch node; candidate/excluded sets live in per-depth
    slots of the preallocated stacks."""
    cdef uint64_t* p = stack_p + depth * NWORDS
    cdef uint64_t* x = stack_x + depth * NWORDS
    cdef uint64_t* np_ = stack_p + (depth + 1) * NWORDS
    cdef uint64_t* nx = stack_x + (depth + 1) * NWORDS
    cdef int v, i
    cdef uint64_t bit

    if _is_empty(p) and _is_empty(x):
        out.append(tuple([clique[i] for i in range(depth)]))
        return
    while True:
        v = _lowest_bit(p)
        if v < 0:
            return
        for i in range(NWORDS):
            np_[i] = p[i] & adj[v * NWORDS + i]
            nx[i] = x[i] & adj[v * NWORDS + i]
        clique[depth] = v
        _expand(adj, depth + 1, clique, stack_p, stack_x, out)
        bit = (<uint64_t>1) << (v & 63)
        p[v >> 6] ^= bit
        x[v >> 6] |= bit


def maximal_cliques(masks, int m):
    """All maximal cliques, each as a sorted tuple, lexicographically."""
    if m > 64 * NWORDS:
        raise ValueError(f"kernel supports at most {64 * NWORDS} vertices")
    cdef uint64_t* adj = <uint64_t*>malloc(m * NWORDS * sizeof(uint64_t))
    cdef uint64_t* stack_p = <uint64_t*>malloc((m + 2) * NWORDS * sizeof(uint64_t))
    cdef uint64_t* stack_x = <uint64_t*>malloc((m + 2) * NWORDS * sizeof(uint64_t))
    cdef int* clique = <int*>malloc((m + 1) * sizeof(int))
    if adj == NULL or stack_p == NULL or stack_x == NULL or clique == NULL:
        free(adj); free(stack_p); free(stack_x); free(clique)
        raise MemoryError()
    cdef int i, w
    cdef object row
    cdef list out = []
    try:
        for i in range(m):
            row = masks[i]
            for w in range(NWORDS):
                adj[i * NWORDS + w] = <uint64_t>((row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)
        for w in range(NWORDS):
            stack_p[w] = 0
            stack_x[w] = 0
        for i in range(m):
            stack_p[i >> 6] |= (<uint64_t>1) << (i & 63)
        _expand(adj, 0, clique, stack_p, stack_x, out)
    finally:
        free(adj)
        free(stack_p)
        free(stack_x)
        free(clique)
    out.sort()
    return out
