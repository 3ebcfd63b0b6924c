"""Pure-Python maximal-clique enumeration over bitset adjacency rows."""

from __future__ import annotations

import sys

BACKEND = "python"


def maximal_cliques(masks, m: int) -> list[tuple[int, ...]]:
    """All maximal cliques of the graph whose row i has bit j set iff i~j.

    Bron-Kerbosch over Python integer bitsets, candidates taken in ascending
    index order; the result is sorted lexicographically.
    """
    masks = list(masks)
    out: list[tuple[int, ...]] = []
    limit = max(2000, 16 * m)
    old = sys.getrecursionlimit()
    if old < limit:
        sys.setrecursionlimit(limit)

    def expand(clique: list[int], cand: int, done: int) -> None:
        if cand == 0 and done == 0:
            out.append(tuple(clique))
            return
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            clique.append(v)
            expand(clique, cand & masks[v], done & masks[v])
            clique.pop()
            cand ^= low
            done |= low

    try:
        expand([], (1 << m) - 1, 0)
    finally:
        sys.setrecursionlimit(old)
    out.sort()
    return out
