"""Cycle-ear classifiers for kappa-bar_3 = 1 and kappa-bar_4 = 1.

The fast classifiers read edge/vertex counts of the bridgeless components. The
literal search over cycles and their ears is kept as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import (
    BudgetExceeded,
    CYCLE,
    CYCLE_WITH_EAR,
    SINGLETON,
    Edge,
    Graph,
    bits,
    block_decomposition,
    norm_edge,
)

MAX_EAR_ORDER = 12

OPEN = "open"
CLOSED = "closed"


@dataclass(frozen=True)
class Ear:
    cycle: tuple[int, ...]  # cycle as a vertex sequence
    path: tuple[int, ...]
    kind: str

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def inner(self) -> int:
        out = 0
        for v in self.path[1:-1]:
            out |= 1 << v
        return out

    def edges(self) -> set[Edge]:
        return {norm_edge(a, b) for a, b in zip(self.path, self.path[1:])}


def cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every cycle once, as a vertex tuple starting at its smallest vertex,
    with the second vertex smaller than the last; lexicographic order."""
    adj = g.adj
    for start in range(g.n):
        allowed = g.full & ~((1 << (start + 1)) - 1)
        stack = [start]

        def extend(v: int, used: int) -> Iterator[tuple[int, ...]]:
            for u in bits(adj[v] & allowed & ~used):
                stack.append(u)
                yield from extend(u, used | 1 << u)
                stack.pop()
            if len(stack) >= 3 and adj[v] >> start & 1 and stack[1] < stack[-1]:
                yield tuple(stack)

        found = sorted(extend(start, 1 << start))
        yield from found


def ears_of(g: Graph, cyc: tuple[int, ...]) -> Iterator[Ear]:
    """Ears of the cycle ``cyc``: chords, open paths and closed paths through vertices off the cycle."""
    adj = g.adj
    cmask = 0
    for v in cyc:
        cmask |= 1 << v
    cedges = {norm_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])}
    for a in cyc:
        # chords
        for b in bits(adj[a] & cmask):
            if a < b and norm_edge(a, b) not in cedges:
                yield Ear(cyc, (a, b), OPEN)
        # paths leaving the cycle at a
        walk = [a]

        def extend(v: int, used: int) -> Iterator[Ear]:
            for u in bits(adj[v] & ~used & ~cmask):
                walk.append(u)
                yield from extend(u, used | 1 << u)
                walk.pop()
            if len(walk) >= 2:
                for b in bits(adj[v] & cmask):
                    if b == a and len(walk) >= 3:
                        yield Ear(cyc, tuple(walk) + (a,), CLOSED)
                    elif b > a:
                        yield Ear(cyc, tuple(walk) + (b,), OPEN)

        yield from extend(a, 0)


def _disjoint(e1: Ear, e2: Ear) -> bool:
    return not (e1.inner & e2.inner) and not (e1.edges() & e2.edges())


def find_cycle_with_ears(g: Graph, threshold: int, max_order: int = MAX_EAR_ORDER):
    """First cycle (lexicographic) having ``threshold`` pairwise internally disjoint ears.

    Returns ``(cycle, ears)`` or None.
    """
    if g.n > max_order:
        raise BudgetExceeded(f"order {g.n} exceeds the ear search budget {max_order}")
    for cyc in cycles(g):
        if threshold <= 0:
            return cyc, []
        ears = list(ears_of(g, cyc))
        chosen: list[Ear] = []

        def pick(start: int) -> bool:
            if len(chosen) == threshold:
                return True
            for i in range(start, len(ears)):
                if all(_disjoint(ears[i], c) for c in chosen):
                    chosen.append(ears[i])
                    if pick(i + 1):
                        return True
                    chosen.pop()
            return False

        if pick(0):
            return cyc, list(chosen)
    return None


def kappa3_equals_one(g: Graph) -> bool:
    """No cycle has an ear: every bridgeless component is a vertex or a cycle."""
    return all(c.kind in (SINGLETON, CYCLE) for c in block_decomposition(g).components)


def kappa4_equals_one(g: Graph) -> bool:
    """No cycle has two ears: bridgeless components are vertices, cycles, or cycles with one ear."""
    return all(
        c.kind in (SINGLETON, CYCLE, CYCLE_WITH_EAR) for c in block_decomposition(g).components
    )
