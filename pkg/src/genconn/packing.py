"""Edge-disjoint spanning trees: the partition criterion and a constructive packer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .graph import BudgetExceeded, Edge, Graph, bits, bridges, complete, is_connected, reach

MAX_PARTITION_ORDER = 10
MAX_PACKING_ORDER = 12


@dataclass(frozen=True)
class Partition:
    blocks: tuple[int, ...]  # vertex masks, ordered by smallest member

    @property
    def p(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_rgs(cls, rgs: list[int]) -> "Partition":
        blocks = [0] * (max(rgs) + 1)
        for v, b in enumerate(rgs):
            blocks[b] |= 1 << v
        return cls(tuple(blocks))

    def as_lists(self) -> list[list[int]]:
        return [list(bits(b)) for b in self.blocks]


def cross_edges(g: Graph, part: Partition) -> int:
    inside = 0
    for block in part.blocks:
        inside += sum((g.adj[v] & block).bit_count() for v in bits(block))
    return g.m - inside // 2


def restricted_growth(n: int, p: int) -> Iterator[list[int]]:
    """Restricted growth strings of length ``n`` using exactly ``p`` labels, lexicographic."""
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[list[int]]:
        # top = largest label used so far
        if n - i < p - 1 - top:
            return
        if i == n:
            if top == p - 1:
                yield list(rgs)
            return
        for b in range(min(top + 2, p)):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    if n == 0 or p < 1 or p > n:
        return
    yield from rec(1, 0)


def partitions(n: int) -> Iterator[Partition]:
    for p in range(1, n + 1):
        for rgs in restricted_growth(n, p):
            yield Partition.from_rgs(rgs)


def nash_williams_check(
    g: Graph, t: int, max_order: int = MAX_PARTITION_ORDER
) -> tuple[bool, Partition | None]:
    """Check every vertex partition for at least ``t * (p - 1)`` cross edges.

    Returns ``(True, None)`` or ``(False, witness)`` where the witness has the
    fewest blocks, then the lexicographically first growth string.
    """
    if g.n > max_order:
        raise BudgetExceeded(f"order {g.n} exceeds the partition budget {max_order}")
    for p in range(2, g.n + 1):
        for rgs in restricted_growth(g.n, p):
            part = Partition.from_rgs(rgs)
            if cross_edges(g, part) < t * (p - 1):
                return False, part
    return True, None


@dataclass
class _Forest:
    n: int
    parent: list[int] = field(init=False)
    edges: list[Edge] = field(default_factory=list)
    rows: list[int] = field(init=False)

    def __post_init__(self):
        self.parent = list(range(self.n))
        self.rows = [0] * self.n

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x


def find_edge_disjoint_spanning_trees(
    g: Graph, t: int, max_order: int = MAX_PACKING_ORDER
) -> list[list[Edge]] | None:
    """``t`` pairwise edge-disjoint spanning trees of ``g``, or None.

    Backtracks over the edges in order, giving each to one tree or to none.
    A branch dies once some tree can no longer be completed from its own
    edges plus the undecided ones.
    """
    if g.n > max_order:
        raise BudgetExceeded(f"order {g.n} exceeds the packing budget {max_order}")
    if not is_connected(g):
        return None
    n = g.n
    if t <= 0:
        return []
    if n == 1:
        return [[] for _ in range(t)]
    need = n - 1
    if g.m < t * need or min(g.degrees()) < t:
        return None
    if t >= 2 and bridges(g):
        return None
    edges = g.edges()
    forests = [_Forest(n) for _ in range(t)]
    undecided = list(g.adj)
    full = g.full

    def feasible() -> bool:
        missing = sum(need - len(f.edges) for f in forests)
        if missing > sum(r.bit_count() for r in undecided) // 2:
            return False
        for f in forests:
            rows = [a | b for a, b in zip(f.rows, undecided)]
            if reach(rows, 0, full) != full:
                return False
        return True

    def rec(i: int) -> bool:
        if all(len(f.edges) == need for f in forests):
            return True
        if i == len(edges):
            return False
        u, v = edges[i]
        undecided[u] &= ~(1 << v)
        undecided[v] &= ~(1 << u)
        seen_empty = False
        for f in forests:
            if not f.edges:
                # empty forests are interchangeable
                if seen_empty:
                    continue
                seen_empty = True
            if len(f.edges) == need:
                continue
            ru, rv = f.find(u), f.find(v)
            if ru == rv:
                continue
            f.parent[ru] = rv
            f.edges.append((u, v))
            f.rows[u] |= 1 << v
            f.rows[v] |= 1 << u
            if feasible() and rec(i + 1):
                return True
            f.rows[u] &= ~(1 << v)
            f.rows[v] &= ~(1 << u)
            f.edges.pop()
            f.parent[ru] = ru
        if feasible() and rec(i + 1):
            return True
        undecided[u] |= 1 << v
        undecided[v] |= 1 << u
        return False

    if rec(0):
        return [list(f.edges) for f in forests]
    return None


def is_spanning_tree(g: Graph, tree: list[Edge]) -> bool:
    if len(tree) != g.n - 1 or not all(g.has_edge(u, v) for u, v in tree):
        return False
    rows = [0] * g.n
    for u, v in tree:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return reach(rows, 0, g.full) == g.full


def kappa_n_equals_one(g: Graph, max_order: int = MAX_PACKING_ORDER) -> bool:
    """With S the whole vertex set, internally disjoint trees are edge-disjoint spanning trees."""
    if not is_connected(g):
        raise ValueError("graph must be connected")
    return find_edge_disjoint_spanning_trees(g, 2, max_order) is None


@dataclass
class Lemma1Report:
    n: int
    cases: int
    failures: list[str]
    tight_graph6: str
    tight_fails: bool

    @property
    def passed(self) -> bool:
        return not self.failures and self.tight_fails


def verify_lemma1(n: int) -> Lemma1Report:
    """Delete every edge set of size at most n - 3 (up to isomorphism) from K_n and
    confirm two edge-disjoint spanning trees survive; then confirm a deleted star of
    n - 2 edges kills them."""
    from .generate import enumerate_graphs
    from .graph6 import encode

    if not 5 <= n <= 8:
        raise ValueError(f"n must lie in 5..8, got {n}")
    kn = complete(n)
    cases = 0
    failures = []
    for deleted in enumerate_graphs(n, 0, n - 3):
        h = kn.without_edges(deleted.edges())
        cases += 1
        trees = find_edge_disjoint_spanning_trees(h, 2)
        if trees is None or not all(is_spanning_tree(h, tr) for tr in trees):
            failures.append(encode(deleted))
    tight = kn.without_edges([(0, v) for v in range(2, n)])
    return Lemma1Report(
        n, cases, failures, encode(tight), find_edge_disjoint_spanning_trees(tight, 2) is None
    )
