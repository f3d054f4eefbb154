from itertools import combinations

import pytest
from hypothesis import given

from genconn.families import generate_class, K_CLASS
from genconn.generate import enumerate_connected
from genconn.graph import BudgetExceeded, Graph, complete, cycle, path
from genconn.graph6 import decode
from genconn.packing import (
    Partition,
    cross_edges,
    find_edge_disjoint_spanning_trees,
    is_spanning_tree,
    kappa_n_equals_one,
    nash_williams_check,
    partitions,
    restricted_growth,
    verify_lemma1,
)
from genconn.steiner import kappa_bar_equals_one

from conftest import connected_graphs


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def check_trees(g, trees, t):
    assert len(trees) == t
    used = set()
    for tree in trees:
        assert is_spanning_tree(g, tree)
        edges = set(tree)
        assert not used & edges
        used |= edges


def test_cross_edges_examples():
    k4 = complete(4)
    assert cross_edges(k4, Partition.from_rgs([0, 1, 2, 3])) == 6
    assert cross_edges(k4, Partition.from_rgs([0, 0, 1, 1])) == 4
    assert cross_edges(cycle(5), Partition.from_rgs([0] * 5)) == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_partition_counts_are_bell_numbers(n):
    parts = list(partitions(n))
    assert len(parts) == bell(n)
    assert len(set(parts)) == len(parts)
    for part in parts:
        covered = 0
        for b in part.blocks:
            assert b and not covered & b
            covered |= b
        assert covered == (1 << n) - 1


def test_restricted_growth_order():
    assert list(restricted_growth(3, 2)) == [[0, 0, 1], [0, 1, 0], [0, 1, 1]]


def test_nash_williams_examples():
    assert nash_williams_check(complete(5), 2) == (True, None)
    ok, witness = nash_williams_check(path(4), 2)
    assert not ok and witness.p == 2  # fewest blocks first
    assert cross_edges(path(4), witness) < 2 * (witness.p - 1)
    assert nash_williams_check(complete(5).without_edges([(0, 1), (2, 3)]), 2)[0]
    with pytest.raises(BudgetExceeded):
        nash_williams_check(complete(11), 2)


def test_tree_fails_with_singletons_available():
    # every partition into singletons also violates the bound on a tree
    tree = path(5)
    singletons = Partition.from_rgs(list(range(5)))
    assert cross_edges(tree, singletons) < 2 * (singletons.p - 1)


def brute_two_trees(g):
    n = g.n
    trees = [set(t) for t in combinations(g.edges(), n - 1) if is_spanning_tree(g, list(t))]
    return any(not a & b for a, b in combinations(trees, 2))


def test_packer_examples():
    k4 = complete(4)
    trees = find_edge_disjoint_spanning_trees(k4, 2)
    check_trees(k4, trees, 2)
    assert brute_two_trees(k4)
    for n in range(3, 8):
        assert find_edge_disjoint_spanning_trees(cycle(n), 2) is None
    k5 = complete(5)
    for pair in combinations(k5.edges(), 2):
        h = k5.without_edges(pair)
        check_trees(h, find_edge_disjoint_spanning_trees(h, 2), 2)
    assert find_edge_disjoint_spanning_trees(Graph.empty(2), 1) is None


def test_packer_three_trees():
    k6 = complete(6)
    check_trees(k6, find_edge_disjoint_spanning_trees(k6, 3), 3)
    assert find_edge_disjoint_spanning_trees(complete(5), 3) is None


@pytest.mark.parametrize("n", [4, 5])
def test_packer_matches_brute_force(n):
    for g in enumerate_connected(n):
        assert (find_edge_disjoint_spanning_trees(g, 2) is not None) == brute_two_trees(g)


@pytest.mark.parametrize("n", range(1, 8))
def test_criterion_matches_packer(n):
    for g in enumerate_connected(n):
        ok, witness = nash_williams_check(g, 2)
        trees = find_edge_disjoint_spanning_trees(g, 2)
        assert ok == (trees is not None)
        if trees is not None:
            check_trees(g, trees, 2)
            assert g.m >= 2 * (n - 1)
        else:
            assert cross_edges(g, witness) < 2 * (witness.p - 1)


@given(connected_graphs(min_n=2, max_n=8))
def test_edge_count_prefilter(g):
    for t in (1, 2, 3):
        if find_edge_disjoint_spanning_trees(g, t) is not None:
            assert g.m >= t * (g.n - 1)


def test_kappa_n_examples():
    assert kappa_n_equals_one(complete(4).without_edges([(0, 1)]))
    assert not kappa_n_equals_one(complete(5))
    assert kappa_n_equals_one(generate_class(K_CLASS, 6)[0])
    with pytest.raises(ValueError):
        kappa_n_equals_one(Graph.empty(3))


@pytest.mark.parametrize("n", range(2, 8))
def test_kappa_n_matches_oracle(n):
    for g in enumerate_connected(n):
        assert kappa_n_equals_one(g) == kappa_bar_equals_one(g, n)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_dense_complements_keep_two_trees(n):
    report = verify_lemma1(n)
    assert report.failures == [] and report.cases > 0
    assert report.tight_fails and report.passed
    tight = decode(report.tight_graph6)
    assert tight.m == n * (n - 1) // 2 - (n - 2)


def test_deleted_star_of_four_at_six():
    h = complete(6).without_edges([(0, v) for v in range(1, 5)])
    assert h.degree(0) == 1
    assert find_edge_disjoint_spanning_trees(h, 2) is None
    assert not nash_williams_check(h, 2)[0]


def test_dense_check_range():
    with pytest.raises(ValueError):
        verify_lemma1(4)
