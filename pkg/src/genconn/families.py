"""Building blocks, the three extremal classes, the lower-bound chains and the
five-terminal counterexample.

A class member is a tree of blocks glued by bridges (the adding operation).
Classes are materialized by trying every attachment, and membership is decided
by deleting the bridges and reading off the multiset of blocks.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb

from .canon import canonical_form
from .ears import kappa3_equals_one, kappa4_equals_one
from .generate import enumerate_connected, graphs_with_size
from .graph import (
    Graph,
    add_operation,
    bits,
    block_decomposition,
    bridges,
    complete,
    cycle,
    is_connected,
)
from .graph6 import encode
from .steiner import kappa_bar_equals_one

G_CLASS = "G"  # k = 3
H_CLASS = "H"  # k = 4
K_CLASS = "K"  # k = n
CLASSES = (G_CLASS, H_CLASS, K_CLASS)

D_NAMES = ("D1", "D2", "D3")
F_NAMES = ("F1", "F2", "F3", "F4")


def _derive(order: int, size: int) -> list[Graph]:
    """Bridgeless connected graphs of the given order and size with kappa-bar_4 = 1."""
    return [
        g
        for g in enumerate_connected(order, size, size)
        if not bridges(g) and kappa_bar_equals_one(g, 4)
    ]


@lru_cache(maxsize=None)
def catalog() -> dict[str, Graph]:
    """Named blocks in canonical form. D and F blocks are numbered in graph6 order."""
    blocks = {
        "K1": Graph.empty(1),
        "A": cycle(3),
        "B": complete(4).without_edges([(0, 1)]),
        "C3": cycle(3),
        "C4": cycle(4),
        "C5": cycle(5),
    }
    for names, (order, size) in ((D_NAMES, (5, 6)), (F_NAMES, (6, 7))):
        found = _derive(order, size)
        if len(found) != len(names):
            raise RuntimeError(f"expected {len(names)} blocks of order {order}, found {len(found)}")
        blocks.update(zip(names, found))
    return {name: canonical_form(g) for name, g in blocks.items()}


def block(name: str) -> Graph:
    try:
        return catalog()[name]
    except KeyError:
        raise KeyError(f"unknown block {name!r}") from None


def catalog_report() -> list[dict]:
    return [
        {"name": name, "order": g.n, "size": g.m, "graph6": encode(g)}
        for name, g in catalog().items()
    ]


# Compositions


def residue(cls: str, n: int) -> int:
    if cls == G_CLASS:
        return n % 3
    if cls == H_CLASS:
        return n % 4
    if cls == K_CLASS:
        return 0
    raise ValueError(f"unknown class {cls!r}")


def min_order(cls: str) -> int:
    return {G_CLASS: 3, H_CLASS: 4, K_CLASS: 5}[cls]


def extremal_size(cls: str, n: int) -> int:
    """Edge count attained by the class at order ``n``."""
    if cls == G_CLASS:
        return (4 * n - 3 - n % 3) // 3
    if cls == H_CLASS:
        return (3 * n - (2, 3, 4, 3)[n % 4]) // 2
    if cls == K_CLASS:
        return comb(n - 1, 2) + 1
    raise ValueError(f"unknown class {cls!r}")


def compositions(cls: str, n: int) -> list[Counter]:
    """Block multisets allowed for the class at order ``n``."""
    if cls == G_CLASS:
        r, q = divmod(n, 3)
        raw = {
            0: [{"C3": r}],
            1: [{"C3": r, "K1": 1}, {"C3": r - 1, "C4": 1}],
            2: [
                {"C3": r, "K1": 2},
                {"C3": r - 1, "C4": 1, "K1": 1},
                {"C3": r - 1, "C5": 1},
                {"C3": r - 2, "C4": 2},
            ],
        }[q]
    elif cls == H_CLASS:
        r, q = divmod(n, 4)
        if q == 0:
            raw = [{"B": r}]
        elif q == 1:
            raw = [{"B": r, "K1": 1}] + [{"B": r - 1, d: 1} for d in D_NAMES]
        elif q == 2:
            raw = [{"B": r, "K1": 2}, {"B": r - 1, "A": 2}]
            raw += [{"B": r - 1, d: 1, "K1": 1} for d in D_NAMES]
            for i, di in enumerate(D_NAMES):
                for dj in D_NAMES[i:]:
                    c = Counter({"B": r - 2})
                    c[di] += 1
                    c[dj] += 1
                    raw.append(dict(c))
            raw += [{"B": r - 1, f: 1} for f in F_NAMES]
        else:
            raw = [{"B": r, "A": 1}]
    else:
        raise ValueError(f"class {cls!r} has no block compositions")
    out = []
    for comp in raw:
        if all(c >= 0 for c in comp.values()):
            c = Counter({k: v for k, v in comp.items() if v > 0})
            if c:
                out.append(c)
    return out


def general_g_constraints(counts: Counter, n: int) -> bool:
    """The looser bounds on numbers of triangles, 4-cycles, 5-cycles and single vertices."""
    i, j, k, l = counts["C3"], counts["C4"], counts["C5"], counts["K1"]
    extra = set(counts) - {"C3", "C4", "C5", "K1"}
    return (
        not extra
        and 0 <= i <= n // 3
        and j <= 2
        and k <= 1
        and l <= 2
        and 3 * i + 4 * j + 5 * k + l == n
    )


def general_h_constraints(counts: Counter, n: int) -> bool:
    ds = sum(counts[d] for d in D_NAMES)
    fs = sum(counts[f] for f in F_NAMES)
    extra = set(counts) - {"A", "B", "K1", *D_NAMES, *F_NAMES}
    return (
        not extra
        and counts["A"] <= 2
        and counts["B"] <= n // 4
        and ds <= 2
        and fs <= 1
        and counts["K1"] <= 2
        and not (ds and fs)
        and 3 * counts["A"] + 4 * counts["B"] + 5 * ds + 6 * fs + counts["K1"] == n
    )


def realize(blocks: list[Graph]) -> set[Graph]:
    """Every graph (canonical) obtained by gluing the blocks into a tree with bridges."""
    keys = [encode(b) for b in blocks]
    by_key = dict(zip(keys, blocks))
    first, rest = keys[0], Counter(keys[1:])
    states = {(by_key[first], tuple(sorted(rest.elements())))}
    done: set[Graph] = set()
    while states:
        nxt = set()
        for g, left in states:
            if not left:
                done.add(g)
                continue
            for key in set(left):
                b = by_key[key]
                remaining = list(left)
                remaining.remove(key)
                for u in range(g.n):
                    for v in range(b.n):
                        nxt.add((canonical_form(add_operation(g, b, u, v)), tuple(remaining)))
        states = nxt
    return done


def generate_class(cls: str, n: int) -> list[Graph]:
    """All members of the class at order ``n``, canonical and sorted by graph6."""
    if n < min_order(cls):
        raise ValueError(f"class {cls} starts at order {min_order(cls)}")
    if cls == K_CLASS:
        if n == 5:
            members = graphs_with_size(5, 7)
            assert all(is_connected(g) for g in members)
            return list(members)
        return [canonical_form(add_operation(complete(n - 1), Graph.empty(1), 0, 0))]
    found: set[Graph] = set()
    for comp in compositions(cls, n):
        names = sorted(comp.elements())
        found |= realize([block(name) for name in names])
    return sorted(found, key=encode)


def block_multiset(cls: str, g: Graph) -> Counter | None:
    """Names of the bridgeless components of ``g`` read as blocks of the class, or None
    if some component is not a block of that class."""
    names = ("K1", "C3", "C4", "C5") if cls == G_CLASS else ("K1", "A", "B", *D_NAMES, *F_NAMES)
    lookup = {block(name): name for name in names}
    out = Counter()
    for comp in block_decomposition(g).components:
        h = canonical_form(g.induced(list(bits(comp.vertices))))
        name = lookup.get(h)
        if name is None:
            return None
        out[name] += 1
    return out


def is_member(cls: str, q: int | None, g: Graph) -> bool:
    """Whether connected ``g`` lies in the class for residue ``q`` (None: take it from n)."""
    n = g.n
    if not is_connected(g) or n < min_order(cls):
        return False
    if cls == K_CLASS:
        if n == 5:
            return g.m == 7
        return canonical_form(g) == generate_class(K_CLASS, n)[0]
    if q is not None and q != residue(cls, n):
        return False
    counts = block_multiset(cls, g)
    if counts is None:
        return False
    return any(counts == comp for comp in compositions(cls, n))


def satisfies_class_property(cls: str, g: Graph) -> bool:
    if cls == G_CLASS:
        return kappa3_equals_one(g)
    if cls == H_CLASS:
        return kappa4_equals_one(g)
    from .packing import kappa_n_equals_one

    return kappa_n_equals_one(g)


# General k


def lower_bound_value(n: int, k: int) -> int:
    r, q = divmod(n, k - 1)
    if q == 0:
        return r * comb(k - 1, 2) + r - 1
    return r * comb(k - 1, 2) + comb(q, 2) + r


def lower_bound_construction(n: int, k: int) -> Graph:
    """A chain of r cliques of order k - 1, plus a clique of order q when q > 0, joined by bridges."""
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    r, q = divmod(n, k - 1)
    if r < 1:
        raise ValueError(f"n={n} is smaller than k-1={k - 1}")
    parts = [complete(k - 1)] * r + ([complete(q)] if q else [])
    g = parts[0]
    for part in parts[1:]:
        # attach each new clique to the previous one
        g = add_operation(g, part, g.n - 1, 0)
    return g


def k5_counterexample() -> Graph:
    """Triangle u1 u2 u3 with a closed triangle ear u_i v_i w_i u_i at each corner."""
    edges = [(0, 1), (1, 2), (0, 2)]
    for i in range(3):
        v, w = 3 + 2 * i, 4 + 2 * i
        edges += [(i, v), (v, w), (w, i)]
    return Graph.from_edges(9, edges)
