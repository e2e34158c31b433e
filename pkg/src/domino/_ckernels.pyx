# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``domino._pykernels``; same traversal, same node counts."""

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long x) nogil

NAME = "cython"

cdef enum:
    MAXN = 64

cdef enum:
    DS = 0
    CDS = 1
    TDS = 2
    IDS = 3


cdef struct Ctx:
    int n
    int variant
    int k
    int ncomp
    u64 full
    long long nodes
    u64 adj[MAXN]
    u64 cover[MAXN]
    u64 deadline[MAXN + 1]
    u64 need[MAXN + 1]
    int ncomp_prefix[MAXN + 1]


cdef inline u64 lowbit(u64 x) nogil:
    return x & (~x + 1)


cdef int component_count(u64 mask, Ctx* c) nogil:
    cdef int count = 0
    cdef u64 rest = mask, seen, frontier, grow, f, low
    while rest:
        seen = lowbit(rest)
        frontier = seen
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = lowbit(f)
                grow |= c.adj[__builtin_ctzll(low)]
                f ^= low
            frontier = grow & mask & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


cdef bint off_rec(Ctx* c, int v, u64 chosen, u64 covered, int count, u64* out) nogil:
    c.nodes += 1
    if c.deadline[v] & ~covered:
        return False
    if count == c.k or v == c.n:
        if (covered & c.full) != c.full:
            return False
        if c.variant == CDS and component_count(chosen, c) != c.ncomp:
            return False
        out[0] = chosen
        return True
    cdef u64 bit = (<u64>1) << v
    if not (c.variant == IDS and (c.adj[v] & chosen)):
        if off_rec(c, v + 1, chosen | bit, covered | c.cover[v], count + 1, out):
            return True
    return off_rec(c, v + 1, chosen, covered, count, out)


cdef inline bint inc_ok(Ctx* c, int m, u64 chosen, u64 covered) nogil:
    if (covered & c.need[m]) != c.need[m]:
        return False
    if c.variant == CDS and component_count(chosen, c) != c.ncomp_prefix[m]:
        return False
    return True


cdef bint inc_rec(Ctx* c, int i, u64 chosen, u64 covered, int count, u64* out) nogil:
    c.nodes += 1
    if i == c.n:
        out[0] = chosen
        return True
    cdef u64 with_i, cov_i
    if count < c.k and not (c.variant == IDS and (c.adj[i] & chosen)):
        with_i = chosen | ((<u64>1) << i)
        cov_i = covered | c.cover[i]
        if inc_ok(c, i + 1, with_i, cov_i):
            if inc_rec(c, i + 1, with_i, cov_i, count + 1, out):
                return True
    if inc_ok(c, i + 1, chosen, covered):
        return inc_rec(c, i + 1, chosen, covered, count, out)
    return False


cdef void load(Ctx* c, adj, cover):
    cdef int n = len(adj)
    if n > MAXN:
        raise ValueError(f"compiled kernels handle at most {MAXN} vertices")
    c.n = n
    c.nodes = 0
    for v in range(n):
        c.adj[v] = <u64>adj[v]
        c.cover[v] = <u64>cover[v]


def offline_search(adj, cover, deadline, int variant, int ncomp, full, int k):
    cdef Ctx c
    cdef u64 out = 0
    load(&c, adj, cover)
    c.variant = variant
    c.k = k
    c.ncomp = ncomp
    c.full = <u64>full
    for v in range(c.n + 1):
        c.deadline[v] = <u64>deadline[v]
    cdef bint found
    with nogil:
        found = off_rec(&c, 0, 0, 0, 0, &out)
    return (int(out) if found else -1), c.nodes


def incremental_search(adj, cover, need, ncomp_prefix, int variant, int k):
    cdef Ctx c
    cdef u64 out = 0
    load(&c, adj, cover)
    c.variant = variant
    c.k = k
    for m in range(c.n + 1):
        c.need[m] = <u64>need[m]
        c.ncomp_prefix[m] = ncomp_prefix[m]
    cdef bint found
    with nogil:
        found = inc_rec(&c, 0, 0, 0, 0, &out)
    return (int(out) if found else -1), c.nodes


def induced_component_count(mask, adj):
    """Components of the subgraph induced by ``mask``."""
    cdef Ctx c
    load(&c, adj, adj)
    return component_count(<u64>mask, &c)
