"""Isomorph-free generation of all graphs of a given order, one edge count at a time."""

from __future__ import annotations

from typing import Iterator

from .canon import canonical_form
from .graph import BudgetExceeded, Graph, bits, is_connected
from .graph6 import encode

MAX_ENUM_ORDER = 8

# n -> levels[m] = canonical graphs with m edges, sorted by graph6
_LEVELS: dict[int, list[list[Graph]]] = {}
_UPPER: dict[tuple[int, int], list[Graph]] = {}


def _grow(n: int, upto: int) -> list[list[Graph]]:
    levels = _LEVELS.setdefault(n, [[Graph.empty(n)]])
    while len(levels) <= upto:
        seen = set()
        for g in levels[-1]:
            for u in range(n):
                for v in bits(g.full & ~g.adj[u] & ~((1 << (u + 1)) - 1)):
                    seen.add(canonical_form(g.with_edges([(u, v)])))
        levels.append(sorted(seen, key=encode))
    return levels


def graphs_with_size(n: int, m: int, max_order: int = MAX_ENUM_ORDER) -> list[Graph]:
    """All graphs on ``n`` vertices with exactly ``m`` edges, up to isomorphism.

    Levels above half of the possible edges are taken as complements of the
    lower levels.
    """
    if n > max_order:
        raise BudgetExceeded(f"order {n} exceeds the enumeration budget {max_order}")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        return []
    if 2 * m <= total:
        return _grow(n, m)[m]
    key = (n, m)
    if key not in _UPPER:
        low = graphs_with_size(n, total - m, max_order)
        _UPPER[key] = sorted((canonical_form(h.complement()) for h in low), key=encode)
    return _UPPER[key]


def enumerate_graphs(
    n: int, min_edges: int = 0, max_edges: int | None = None, max_order: int = MAX_ENUM_ORDER
) -> Iterator[Graph]:
    total = n * (n - 1) // 2
    hi = total if max_edges is None else min(max_edges, total)
    for m in range(max(min_edges, 0), hi + 1):
        yield from graphs_with_size(n, m, max_order)


def enumerate_connected(
    n: int, min_edges: int = 0, max_edges: int | None = None, max_order: int = MAX_ENUM_ORDER
) -> Iterator[Graph]:
    """Connected graphs on ``n`` vertices with edge count in range, each once up to
    isomorphism, ordered by size then graph6."""
    lo = max(min_edges, n - 1)
    for g in enumerate_graphs(n, lo, max_edges, max_order):
        if is_connected(g):
            yield g
