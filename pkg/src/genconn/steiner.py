"""Exact internally disjoint Steiner tree packing by backtracking.

Trees are edge lists. Two S-Steiner trees are internally disjoint when they
share no edge and no vertex outside S.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .graph import BudgetExceeded, Edge, Graph, bits, is_connected, norm_edge, reach

MAX_STEINER_ORDER = 10


@dataclass(frozen=True)
class SteinerPacking:
    terminals: tuple[int, ...]
    trees: tuple[tuple[Edge, ...], ...]

    def __len__(self):
        return len(self.trees)


def _mask(vertices: Sequence[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def is_steiner_tree(g: Graph, tree: Sequence[Sequence[int]], s: Sequence[int]) -> bool:
    """True iff the edge set ``tree`` (edges of ``g``) is a tree whose vertices contain ``s``."""
    edges = {norm_edge(u, v) for u, v in tree}
    if len(edges) != len(tree) or not all(g.has_edge(u, v) for u, v in edges):
        return False
    verts = {x for e in edges for x in e}
    if not set(s) <= verts:
        return False
    if len(edges) != len(verts) - 1:
        return False
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def is_valid_packing(g: Graph, packing: SteinerPacking) -> bool:
    """Check the packing invariants without trusting the search that built it."""
    s = set(packing.terminals)
    vsets = []
    used: set[Edge] = set()
    for tree in packing.trees:
        if not is_steiner_tree(g, tree, packing.terminals):
            return False
        edges = {norm_edge(u, v) for u, v in tree}
        if used & edges:
            return False
        used |= edges
        vsets.append({x for e in edges for x in e})
    return all(a & b == s for a, b in combinations(vsets, 2))


# Minimal Steiner trees: trees containing S whose leaves all lie in S.


def _spanning_trees(adj: list[int], wmask: int, need_deg2: int) -> Iterator[list[Edge]]:
    """Spanning trees of the graph induced on ``wmask`` (restricted rows ``adj``)
    in which every vertex of ``need_deg2`` has degree at least 2."""
    edges = [(u, v) for u in bits(wmask) for v in bits(adj[u] & wmask) if u < v]
    target = wmask.bit_count() - 1
    n_e = len(edges)
    deg = {v: 0 for v in bits(wmask)}
    avail = {v: (adj[v] & wmask).bit_count() for v in bits(wmask)}
    chosen: list[Edge] = []
    comp = {v: v for v in bits(wmask)}

    def find(x):
        while comp[x] != x:
            x = comp[x]
        return x

    def rec(i: int) -> Iterator[list[Edge]]:
        if len(chosen) == target:
            if all(deg[v] >= 2 for v in bits(need_deg2)):
                yield list(chosen)
            return
        if n_e - i < target - len(chosen):
            return
        u, v = edges[i]
        ru, rv = find(u), find(v)
        avail[u] -= 1
        avail[v] -= 1
        if ru != rv:
            comp[ru] = rv
            deg[u] += 1
            deg[v] += 1
            chosen.append((u, v))
            yield from rec(i + 1)
            chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            comp[ru] = ru
        # skip edge i, if the degree constraints can still be met
        ok = True
        for x in (u, v):
            if need_deg2 >> x & 1 and deg[x] + avail[x] < 2:
                ok = False
            if deg[x] + avail[x] < 1:
                ok = False
        if ok:
            yield from rec(i + 1)
        avail[u] += 1
        avail[v] += 1

    yield from rec(0)


def minimal_steiner_trees(
    g: Graph, s: Sequence[int], vertices: int | None = None, adj: list[int] | None = None
) -> Iterator[list[Edge]]:
    """All minimal S-Steiner trees of ``g`` restricted to ``vertices`` and the rows ``adj``.

    Ordered by number of non-terminal vertices used, then by their bit mask.
    """
    smask = _mask(s)
    if adj is None:
        adj = list(g.adj)
    if vertices is None:
        vertices = g.full
    if smask & ~vertices:
        return
    if len(s) == 1:
        yield []
        return
    pool = [v for v in bits(vertices & ~smask)]
    first = next(bits(smask))
    for size in range(len(pool) + 1):
        for extra in combinations(pool, size):
            xmask = _mask(extra)
            wmask = smask | xmask
            if any((adj[x] & wmask).bit_count() < 2 for x in extra):
                continue
            if reach(adj, first, wmask) != wmask:
                continue
            yield from _spanning_trees(adj, wmask, xmask)


def _leftover_tree(adj: list[int], s: Sequence[int], vertices: int) -> list[Edge] | None:
    """Some minimal Steiner tree for ``s`` in the residual graph, or None."""
    smask = _mask(s)
    root = s[0]
    comp = reach(adj, root, vertices)
    if smask & ~comp:
        return None
    # BFS tree, then strip non-terminal leaves
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in bits(adj[v] & comp):
            if u not in parent:
                parent[u] = v
                order.append(u)
    keep = set()
    for t in s:
        x = t
        while x != -1 and x not in keep:
            keep.add(x)
            x = parent[x]
    return sorted(norm_edge(v, parent[v]) for v in keep if parent[v] != -1)


def _check_budget(g: Graph, max_order: int) -> None:
    if g.n > max_order:
        raise BudgetExceeded(f"order {g.n} exceeds the Steiner search budget {max_order}")


def find_packing(
    g: Graph, s: Sequence[int], t: int, max_order: int = MAX_STEINER_ORDER
) -> SteinerPacking | None:
    """A packing of ``t`` internally disjoint S-Steiner trees, or None if none exists."""
    _check_budget(g, max_order)
    s = tuple(sorted(set(s)))
    if len(s) < 2:
        raise ValueError("terminal set needs at least two vertices")
    if not is_connected(g):
        raise ValueError("graph must be connected")
    smask = _mask(s)
    if t <= 0:
        return SteinerPacking(s, ())
    if any(g.degree(x) < t for x in s):
        return None
    need = len(s) - 1
    picked: list[list[Edge]] = []

    def rec(adj: list[int], vertices: int, edges_left: int, last_key: tuple) -> bool:
        remaining = t - len(picked)
        if edges_left < remaining * need:
            return False
        if any((adj[x] & vertices).bit_count() < remaining for x in s):
            return False
        if remaining == 1:
            tree = _leftover_tree(adj, s, vertices)
            if tree is None:
                return False
            picked.append(tree)
            return True
        for tree in minimal_steiner_trees(g, s, vertices, adj):
            key = tuple(tree)
            if key <= last_key:
                continue
            inner = 0
            for u, v in tree:
                inner |= (1 << u) | (1 << v)
            inner &= ~smask
            sub = list(adj)
            for u, v in tree:
                sub[u] &= ~(1 << v)
                sub[v] &= ~(1 << u)
            keep = vertices & ~inner
            for v in bits(inner):
                for u in bits(sub[v]):
                    sub[u] &= ~(1 << v)
                sub[v] = 0
            left = sum((sub[v] & keep).bit_count() for v in bits(keep)) // 2
            picked.append(tree)
            if rec(sub, keep, left, key):
                return True
            picked.pop()
        return False

    if rec(list(g.adj), g.full, g.m, ()):
        return SteinerPacking(s, tuple(tuple(tr) for tr in picked))
    return None


def has_t_disjoint_steiner_trees(
    g: Graph, s: Sequence[int], t: int, max_order: int = MAX_STEINER_ORDER
) -> tuple[bool, SteinerPacking | None]:
    packing = find_packing(g, s, t, max_order)
    return packing is not None, packing


def steiner_local_connectivity(
    g: Graph, s: Sequence[int], max_order: int = MAX_STEINER_ORDER, with_witness: bool = False
):
    """kappa(S): the largest number of internally disjoint S-Steiner trees.

    Returns the value, or ``(value, packing)`` when ``with_witness`` is set.
    """
    best = find_packing(g, s, 1, max_order)
    assert best is not None
    t = 2
    while True:
        packing = find_packing(g, s, t, max_order)
        if packing is None:
            break
        best = packing
        t += 1
    return (len(best), best) if with_witness else len(best)


def terminal_sets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of ``0..n-1`` in increasing bit-mask order."""
    for combo in sorted(combinations(range(n), k), key=_mask):
        yield combo


def _check_k(g: Graph, k: int) -> None:
    if not 2 <= k <= g.n:
        raise ValueError(f"k must lie in 2..{g.n}, got {k}")
    if not is_connected(g):
        raise ValueError("graph must be connected")


def kappa_bar_at_least(
    g: Graph, k: int, t: int = 2, max_order: int = MAX_STEINER_ORDER
) -> tuple[int, ...] | None:
    """First terminal set S (bit-mask order) with kappa(S) >= t, or None."""
    _check_k(g, k)
    _check_budget(g, max_order)
    for s in terminal_sets(g.n, k):
        if find_packing(g, s, t, max_order) is not None:
            return s
    return None


def max_generalized_local_connectivity(
    g: Graph, k: int, max_order: int = MAX_STEINER_ORDER, with_witness: bool = False
):
    """The maximal generalized local connectivity over all k-sets of vertices."""
    _check_k(g, k)
    _check_budget(g, max_order)
    best, arg = 0, None
    for s in terminal_sets(g.n, k):
        # a set only matters if it could beat the current best
        if min(g.degree(x) for x in s) <= best:
            continue
        if find_packing(g, s, best + 1, max_order) is None:
            continue
        value = steiner_local_connectivity(g, s, max_order)
        if value > best:
            best, arg = value, s
    return (best, arg) if with_witness else best


def generalized_k_connectivity(
    g: Graph, k: int, max_order: int = MAX_STEINER_ORDER, with_witness: bool = False
):
    """The generalized k-connectivity: minimum of kappa(S) over all k-sets."""
    _check_k(g, k)
    _check_budget(g, max_order)
    best, arg = None, None
    for s in terminal_sets(g.n, k):
        # skip sets that cannot go below the current minimum
        if best is not None and find_packing(g, s, best, max_order) is not None:
            continue
        value = steiner_local_connectivity(g, s, max_order)
        if best is None or value < best:
            best, arg = value, s
            if best == 1:
                break
    return (best, arg) if with_witness else best


def kappa_bar_equals_one(g: Graph, k: int, max_order: int = MAX_STEINER_ORDER) -> bool:
    return kappa_bar_at_least(g, k, 2, max_order) is None
