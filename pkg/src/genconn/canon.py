"""Canonical labeling by colour refinement plus individualization.

The canonical form is the relabeling whose graph6 bit string (upper triangle,
column by column) is lexicographically smallest among the leaves of the
individualization tree. Two graphs are isomorphic iff their forms are equal.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph


def _refine(cells: list[list[int]], adj: tuple[int, ...]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            mk = 0
            for v in cell:
                mk |= 1 << v
            masks.append(mk)
        out: list[list[int]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & mk).bit_count() for mk in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) > 1:
                split = True
                out.extend(groups[k] for k in sorted(groups))
            else:
                out.append(cell)
        cells = out
        if not split:
            return cells


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def _column_bits(adj: tuple[int, ...], order: list[int], start: int, stop: int) -> int:
    """Bits for columns ``start..stop-1`` of the relabeled upper triangle."""
    value = 0
    for j in range(start, stop):
        col = adj[order[j]]
        for i in range(j):
            value = value << 1 | (col >> order[i] & 1)
    return value


def canonical_order(g: Graph) -> list[int]:
    """Vertex sequence ``order`` such that position ``i`` holds ``order[i]`` in the canonical form."""
    adj = g.adj
    n = g.n
    total = n * (n - 1) // 2
    best_value = -1
    best_order: list[int] = []

    def walk(cells: list[list[int]]) -> None:
        nonlocal best_value, best_order
        lead = 0
        while lead < len(cells) and len(cells[lead]) == 1:
            lead += 1
        order = [c[0] for c in cells[:lead]]
        if best_value >= 0 and lead > 1:
            pbits = lead * (lead - 1) // 2
            prefix = _column_bits(adj, order, 1, lead)
            if prefix > best_value >> (total - pbits):
                return
        if lead == len(cells):
            value = _column_bits(adj, order, 1, n)
            if best_value < 0 or value < best_value:
                best_value = value
                best_order = order
            return
        # individualize inside the first non-singleton cell
        cell = cells[lead]
        tried: list[int] = []
        for v in cell:
            if any(_twins(adj, u, v) for u in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            walk(_refine(cells[:lead] + [[v], rest] + cells[lead + 1:], adj))

    walk(_refine([list(range(n))], adj))
    return best_order


@lru_cache(maxsize=1 << 16)
def _canon_rows(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    g = Graph(n, adj)
    order = canonical_order(g)
    perm = [0] * n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm).adj


def canonical_form(g: Graph) -> Graph:
    return Graph(g.n, _canon_rows(g.n, g.adj))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
