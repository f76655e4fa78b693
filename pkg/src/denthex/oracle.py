"""Brute-force tiling counts: the ground truth every formula is checked against.

Counting is a memoised branch over the cell that comes first in scan order.
With that choice the set of remaining cells is always "everything after a
ragged frontier", so the memo table stays about as small as a transfer
matrix while the code stays a plain recursion.
"""

from __future__ import annotations

from typing import Iterator

from .lattice import (
    UNTILEABLE,
    Graph,
    Region,
    UnitTriangle,
    dual_graph,
    reduce_forced,
)


class NotBipartite(ValueError):
    pass


def _bipartition(g: Graph) -> list[int]:
    adj = g.adjacency()
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    stack.append(v)
                elif color[v] == color[u]:
                    raise NotBipartite(f"odd cycle through vertex {u}")
    return color


def _count_masks(n: int, nbr_masks: list[int]) -> int:
    """Perfect matchings of a graph given as adjacency bitmasks.

    Vertices must be numbered so that low indices are scanned first.
    """
    memo: dict[int, int] = {0: 1}

    def go(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        options = nbr_masks[i] & rest
        total = 0
        while options:
            bit = options & -options
            options ^= bit
            total += go(rest ^ bit)
        memo[mask] = total
        return total

    if n % 2:
        return 0
    return go((1 << n) - 1)


def count_matchings(g: Graph) -> int:
    """Number of perfect matchings of a bipartite graph."""
    color = _bipartition(g)
    if 2 * sum(color) != g.n:
        return 0
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return _count_masks(g.n, nbr)


def count_tilings(r: Region) -> int:
    """Exact number of lozenge tilings of ``r`` (0 when untileable)."""
    if not r.balanced:
        return 0
    red = reduce_forced(r)
    if red is UNTILEABLE:
        return 0
    g = dual_graph(red.region)
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return _count_masks(g.n, nbr)


Tiling = frozenset  # of (up_cell, down_cell) lozenges


def _iter_tilings(cells: list[UnitTriangle], nbr_masks: list[int]) -> Iterator[list[tuple[int, int]]]:
    def go(mask: int, acc: list[tuple[int, int]]):
        if not mask:
            yield list(acc)
            return
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        options = nbr_masks[i] & rest
        while options:
            bit = options & -options
            options ^= bit
            acc.append((i, bit.bit_length() - 1))
            yield from go(rest ^ bit, acc)
            acc.pop()

    yield from go((1 << len(cells)) - 1, [])


def enumerate_tilings(r: Region, limit: int) -> list[Tiling]:
    """Up to ``limit`` tilings of ``r``, each a frozenset of (Up, Down) cell pairs.

    Tilings come out in a fixed order (lexicographic in the branching of
    the scan-order search).
    """
    if limit < 1:
        raise ValueError("limit must be positive")
    if not r.balanced:
        return []
    g = dual_graph(r)
    cells = list(g.labels)
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    out = []
    for pairs in _iter_tilings(cells, nbr):
        lozenges = []
        for i, j in pairs:
            a, b = cells[i], cells[j]
            lozenges.append((a, b) if a.orient < b.orient else (b, a))
        out.append(frozenset(lozenges))
        if len(out) >= limit:
            break
    return out
