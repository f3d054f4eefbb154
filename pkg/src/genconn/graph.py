"""Small simple graphs as bit-row adjacency, plus the structural primitives
(connectivity, bridges, bridgeless components, the adding operation)."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 32

Edge = tuple[int, int]


class BudgetExceeded(ValueError):
    """Input larger than an exhaustive search is allowed to handle."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    n: int
    adj: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency has wrong number of rows")
        full = (1 << self.n) - 1
        total = 0
        for v, row in enumerate(self.adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"bad adjacency row for vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency at {u},{v}")
            total += row.bit_count()
        object.__setattr__(self, "m", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def complement(self) -> "Graph":
        full = self.full
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            r = 0
            for u in bits(row):
                r |= 1 << perm[u]
            rows[perm[v]] = r
        return Graph(self.n, tuple(rows))

    def without_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def with_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# Named small graphs


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# Traversal and bridges


def reach(adj: Sequence[int], start: int, within: int) -> int:
    """Bitmask of vertices reachable from ``start`` inside the vertex mask ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    return reach(g.adj, 0, g.full) == g.full


def components(g: Graph) -> list[int]:
    """Connected components as vertex masks, ordered by smallest vertex."""
    left = g.full
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        comp = reach(g.adj, v, left)
        out.append(comp)
        left &= ~comp
    return out


def bridges(g: Graph) -> list[Edge]:
    """Cut edges of ``g`` via low-link DFS, sorted."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[Edge] = []
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # stack entries: vertex, parent, remaining neighbour mask
        stack = [(root, -1, g.adj[root])]
        while stack:
            v, parent, todo = stack[-1]
            if todo:
                u = (todo & -todo).bit_length() - 1
                stack[-1] = (v, parent, todo & (todo - 1))
                if u == parent:
                    continue
                if disc[u] == -1:
                    disc[u] = low[u] = clock
                    clock += 1
                    stack.append((u, v, g.adj[u]))
                else:
                    low[v] = min(low[v], disc[u])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.append(norm_edge(parent, v))
    return sorted(found)


SINGLETON = "singleton"
CYCLE = "cycle"
CYCLE_WITH_EAR = "cycle-with-one-ear"
OTHER = "other"


@dataclass(frozen=True)
class Component:
    vertices: int  # mask
    order: int
    size: int
    kind: str


@dataclass(frozen=True)
class BlockDecomposition:
    bridges: tuple[Edge, ...]
    components: tuple[Component, ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Bridges of ``g`` plus its maximal bridgeless subgraphs, each classified."""
    if not is_connected(g):
        raise ValueError("block decomposition needs a connected graph")
    cut = bridges(g)
    h = g.without_edges(cut)
    comps = []
    for mask in components(h):
        order = mask.bit_count()
        size = sum((h.adj[v] & mask).bit_count() for v in bits(mask)) // 2
        if order == 1:
            kind = SINGLETON
        elif size == order:
            kind = CYCLE
        elif size == order + 1:
            kind = CYCLE_WITH_EAR
        else:
            kind = OTHER
        # bridgeless and connected: size >= order unless a singleton
        assert order == 1 or size >= order
        comps.append(Component(mask, order, size, kind))
    return BlockDecomposition(tuple(cut), tuple(comps))


def add_operation(g1: Graph, g2: Graph, u: int, v: int) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` (the latter shifted by ``g1.n``) plus edge ``u``-``v``."""
    if not (0 <= u < g1.n and 0 <= v < g2.n):
        raise ValueError(f"attachment vertices {u}, {v} out of range")
    if not (is_connected(g1) and is_connected(g2)):
        raise ValueError("adding operation joins two connected graphs")
    shift = g1.n
    rows = list(g1.adj) + [row << shift for row in g2.adj]
    rows[u] |= 1 << (v + shift)
    rows[v + shift] |= 1 << u
    return Graph(g1.n + g2.n, tuple(rows))


def disjoint_union(*gs: Graph) -> Graph:
    rows: list[int] = []
    for g in gs:
        shift = len(rows)
        rows.extend(row << shift for row in g.adj)
    return Graph(len(rows), tuple(rows))
