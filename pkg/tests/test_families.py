from collections import Counter
from math import comb

import pytest

from genconn.canon import canonical_form, is_isomorphic
from genconn.families import (
    D_NAMES,
    F_NAMES,
    G_CLASS,
    H_CLASS,
    K_CLASS,
    block,
    block_multiset,
    catalog,
    catalog_report,
    compositions,
    extremal_size,
    general_g_constraints,
    general_h_constraints,
    generate_class,
    is_member,
    k5_counterexample,
    lower_bound_construction,
    lower_bound_value,
    realize,
    residue,
    satisfies_class_property,
)
from genconn.generate import enumerate_connected, graphs_with_size
from genconn.graph import Graph, add_operation, bridges, complete, cycle, is_connected
from genconn.steiner import kappa_bar_equals_one


def test_catalog_shapes():
    cat = catalog()
    assert set(cat) == {"K1", "A", "B", "C3", "C4", "C5", *D_NAMES, *F_NAMES}
    assert is_isomorphic(block("B"), complete(4).without_edges([(0, 1)]))
    assert block("B").m == 5
    assert is_isomorphic(block("A"), cycle(3))
    for name in D_NAMES:
        assert (block(name).n, block(name).m) == (5, 6)
    for name in F_NAMES:
        assert (block(name).n, block(name).m) == (6, 7)
    assert len({cat[x] for x in (*D_NAMES, *F_NAMES)}) == 7
    assert [r["name"] for r in catalog_report()] == list(cat)
    with pytest.raises(KeyError):
        block("Z")


def test_b_is_the_only_order_4_size_5_graph():
    assert graphs_with_size(4, 5) == [block("B")]


def test_blocks_are_bridgeless_and_qualify():
    for name, g in catalog().items():
        assert is_connected(g) and not bridges(g)
        if g.n >= 4:
            assert kappa_bar_equals_one(g, 4)
    for name in ("C3", "C4", "C5"):
        assert kappa_bar_equals_one(block(name), 3)


def test_derived_block_counts():
    bridgeless = lambda n, m: [g for g in enumerate_connected(n, m, m) if not bridges(g)]
    assert sum(kappa_bar_equals_one(g, 4) for g in bridgeless(5, 6)) == 3
    assert sum(kappa_bar_equals_one(g, 4) for g in bridgeless(6, 7)) == 4


def test_generate_examples():
    (g,) = generate_class(G_CLASS, 6)
    assert g.m == 7 and len(bridges(g)) == 1
    (k,) = generate_class(K_CLASS, 6)
    assert k.m == 11 and is_isomorphic(k, add_operation(complete(5), Graph.empty(1), 0, 0))
    assert generate_class(H_CLASS, 4) == [block("B")]
    with pytest.raises(ValueError):
        generate_class(H_CLASS, 3)


def test_k5_class_is_all_order5_size7_graphs():
    members = generate_class(K_CLASS, 5)
    assert len(members) == 4
    # seven edges on five vertices cannot be disconnected
    assert all(is_connected(g) for g in members)
    assert comb(4, 2) < 7


def test_member_examples():
    two_triangles = add_operation(cycle(3), cycle(3), 0, 0)
    assert is_member(G_CLASS, 0, two_triangles)
    assert not is_member(G_CLASS, 0, cycle(6))
    c3c4 = add_operation(cycle(3), cycle(4), 1, 2)
    assert is_member(G_CLASS, 1, c3c4)
    assert not is_member(G_CLASS, 0, c3c4)
    assert is_member(H_CLASS, None, block("B"))
    assert not is_member(H_CLASS, None, complete(4))


@pytest.mark.parametrize("cls, ns", [(G_CLASS, range(3, 10)), (H_CLASS, range(4, 10)), (K_CLASS, range(5, 9))])
def test_generated_members_have_class_size_and_property(cls, ns):
    for n in ns:
        members = generate_class(cls, n)
        assert members and len(set(members)) == len(members)
        for g in members:
            assert canonical_form(g) == g
            assert g.n == n and g.m == extremal_size(cls, n)
            assert satisfies_class_property(cls, g)
            assert is_member(cls, residue(cls, n), g)


def test_size_formulas():
    assert [extremal_size(G_CLASS, n) for n in range(3, 9)] == [3, 4, 5, 7, 8, 9]
    assert [extremal_size(H_CLASS, n) for n in range(4, 9)] == [5, 6, 7, 9, 11]
    assert [extremal_size(K_CLASS, n) for n in range(5, 9)] == [7, 11, 16, 22]
    for n in range(3, 40):
        q = n % 3
        assert 3 * extremal_size(G_CLASS, n) == 4 * n - 3 - q


def test_compositions_respect_general_constraints():
    for n in range(3, 30):
        for comp in compositions(G_CLASS, n):
            assert general_g_constraints(comp, n)
    for n in range(4, 30):
        for comp in compositions(H_CLASS, n):
            assert general_h_constraints(comp, n)
    assert not general_g_constraints(Counter({"C4": 3}), 12)
    assert not general_h_constraints(Counter({"D1": 1, "F1": 1}), 11)


def test_block_multiset():
    g = add_operation(block("B"), block("D2"), 0, 0)
    assert block_multiset(H_CLASS, g) == Counter({"B": 1, "D2": 1})
    assert block_multiset(G_CLASS, g) is None


def test_realize_attachment_counts():
    # two triangles joined by a bridge: one graph up to isomorphism
    assert len(realize([cycle(3), cycle(3)])) == 1
    # C4 plus K1: a pendant vertex on a 4-cycle
    assert len(realize([cycle(4), Graph.empty(1)])) == 1
    # three triangles: the middle one carries both bridges at one corner or at two
    assert len(realize([cycle(3)] * 3)) == 2


def test_lower_bound_examples():
    assert lower_bound_construction(8, 5).m == 13 == lower_bound_value(8, 5)
    assert lower_bound_construction(10, 5).m == 15 == lower_bound_value(10, 5)
    assert lower_bound_construction(9, 5).m == 14 == lower_bound_value(9, 5)
    with pytest.raises(ValueError):
        lower_bound_construction(3, 5)


def test_lower_bound_arithmetic():
    for k in range(3, 10):
        for n in range(k - 1, 31):
            g = lower_bound_construction(n, k)
            assert g.n == n and is_connected(g)
            assert g.m == lower_bound_value(n, k)


@pytest.mark.parametrize("k", [5, 6])
def test_lower_bound_qualifies(k):
    for n in range(k, 11):
        assert kappa_bar_equals_one(lower_bound_construction(n, k), k)


def test_counterexample_shape():
    g = k5_counterexample()
    assert (g.n, g.m) == (9, 12)
    assert is_connected(g) and not bridges(g)
