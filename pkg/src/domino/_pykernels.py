"""Pure-Python search kernels over bitmask-encoded graphs.

Vertex ``v`` of the instance is bit ``v - 1``.  Both kernels are
include-first depth-first searches bounded by a target size ``k``; the first
solution found is the lexicographically smallest one of size at most ``k``.
``_ckernels`` mirrors this module line for line, including node counts.
"""

from __future__ import annotations

from typing import Sequence

NAME = "python"

DS, CDS, TDS, IDS = 0, 1, 2, 3


def induced_component_count(mask: int, adj: Sequence[int]) -> int:
    count = 0
    rest = mask
    while rest:
        seen = rest & -rest
        frontier = seen
        while frontier:
            grow = 0
            f = frontier
            while f:
                low = f & -f
                grow |= adj[low.bit_length() - 1]
                f ^= low
            frontier = grow & mask & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


def offline_search(
    adj: Sequence[int],
    cover: Sequence[int],
    deadline: Sequence[int],
    variant: int,
    ncomp: int,
    full: int,
    k: int,
) -> tuple[int, int]:
    """Smallest-lex feasible set of size <= k on the final graph, or -1.

    ``deadline[v]`` holds the vertices that must already be covered once
    vertices ``0..v-1`` are decided.  Returns ``(mask, nodes)``.
    """
    n = len(adj)
    nodes = 0

    def rec(v: int, chosen: int, covered: int, count: int) -> int:
        nonlocal nodes
        nodes += 1
        if deadline[v] & ~covered:
            return -1
        if count == k or v == n:
            if covered & full != full:
                return -1
            if variant == CDS and induced_component_count(chosen, adj) != ncomp:
                return -1
            return chosen
        if not (variant == IDS and adj[v] & chosen):
            found = rec(v + 1, chosen | (1 << v), covered | cover[v], count + 1)
            if found >= 0:
                return found
        return rec(v + 1, chosen, covered, count)

    result = rec(0, 0, 0, 0)
    return result, nodes


def incremental_search(
    adj: Sequence[int],
    cover: Sequence[int],
    need: Sequence[int],
    ncomp_prefix: Sequence[int],
    variant: int,
    k: int,
) -> tuple[int, int]:
    """Smallest-lex final set of size <= k whose every prefix is feasible.

    Vertex ``i`` is decided at its own arrival; ``need[m]`` is the cover
    demanded on ``G_m`` and ``ncomp_prefix[m]`` its component count.
    Returns ``(mask, nodes)`` with mask -1 when nothing fits.
    """
    n = len(adj)
    nodes = 0

    def ok(m: int, chosen: int, covered: int) -> bool:
        if covered & need[m] != need[m]:
            return False
        if variant == CDS and induced_component_count(chosen, adj) != ncomp_prefix[m]:
            return False
        return True

    def rec(i: int, chosen: int, covered: int, count: int) -> int:
        nonlocal nodes
        nodes += 1
        if i == n:
            return chosen
        if count < k and not (variant == IDS and adj[i] & chosen):
            with_i = chosen | (1 << i)
            cov_i = covered | cover[i]
            if ok(i + 1, with_i, cov_i):
                found = rec(i + 1, with_i, cov_i, count + 1)
                if found >= 0:
                    return found
        if ok(i + 1, chosen, covered):
            return rec(i + 1, chosen, covered, count)
        return -1

    result = rec(0, 0, 0, 0)
    return result, nodes
