"""Named verification runs. Each returns a report of individual checks plus any
counterexample graphs, so the CLI and the test-suite share one implementation."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations, permutations
from math import comb, factorial

from .canon import canonical_form
from .ears import find_cycle_with_ears, kappa3_equals_one, kappa4_equals_one
from .extremal import ORACLE, STRUCTURAL, compute_f
from .families import (
    D_NAMES,
    F_NAMES,
    G_CLASS,
    H_CLASS,
    K_CLASS,
    block,
    catalog,
    compositions,
    extremal_size,
    general_g_constraints,
    general_h_constraints,
    generate_class,
    k5_counterexample,
    lower_bound_construction,
    lower_bound_value,
)
from .generate import enumerate_connected, enumerate_graphs, graphs_with_size
from .graph import Graph, bridges, is_connected
from .graph6 import decode, encode
from .packing import (
    find_edge_disjoint_spanning_trees,
    is_spanning_tree,
    nash_williams_check,
    verify_lemma1,
)
from .steiner import (
    find_packing,
    is_valid_packing,
    kappa_bar_at_least,
    kappa_bar_equals_one,
    terminal_sets,
)

THEOREM_IDS = ("T3", "T4", "T-n", "L1", "P1", "P2", "NW", "CEX", "LB", "BLOCKS", "INFRA")

# connected graphs on n vertices, n = 1..8
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    id: str
    checks: list[Check] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(ok), detail))
        return ok

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        return out


def _sets_equal(report: VerifyReport, label: str, found: list[str], expected: list[Graph]):
    want = sorted(encode(g) for g in expected)
    got = sorted(found)
    ok = got == want
    report.add(label, ok, f"{len(got)} extremal graphs vs {len(want)} class members")
    if not ok:
        report.counterexamples.extend(sorted(set(got) ^ set(want)))


def _extremal_run(rid: str, k: int, cls: str, ns: range, oracle_max: int) -> VerifyReport:
    report = VerifyReport(rid)
    for n in ns:
        expected = extremal_size(cls, n)
        structural = compute_f(n, k, STRUCTURAL)
        if n <= oracle_max:
            primary = compute_f(n, k, ORACLE)
            report.add(
                f"n={n} oracle agrees with structural",
                primary.f_value == structural.f_value
                and primary.extremal_graphs == structural.extremal_graphs,
            )
        else:
            primary = structural
        report.add(
            f"n={n} f={primary.f_value} ({primary.method})",
            primary.f_value == expected,
            f"expected {expected}",
        )
        _sets_equal(report, f"n={n} extremal set = class {cls}", primary.extremal_graphs,
                    generate_class(cls, n))
    return report


def verify_t3(n_max: int = 8, oracle_max: int = 7) -> VerifyReport:
    return _extremal_run("T3", 3, G_CLASS, range(3, n_max + 1), oracle_max)


def verify_t4(n_max: int = 8, oracle_max: int = 7) -> VerifyReport:
    return _extremal_run("T4", 4, H_CLASS, range(4, n_max + 1), oracle_max)


def verify_tn(n_max: int = 8, oracle_max: int = 6) -> VerifyReport:
    report = VerifyReport("T-n")
    report.add(
        "every order-5 size-7 graph is connected",
        all(is_connected(g) for g in graphs_with_size(5, 7)),
    )
    for n in range(5, n_max + 1):
        res = compute_f(n, n, STRUCTURAL)
        report.add(f"n={n} f={res.f_value}", res.f_value == comb(n - 1, 2) + 1,
                   f"expected {comb(n - 1, 2) + 1}; levels {res.levels}")
        # sizes above the answer were all excluded by the packer
        report.add(f"n={n} only the top {len(res.levels)} levels scanned",
                   res.levels[-1] == res.f_value)
        _sets_equal(report, f"n={n} extremal set = class K", res.extremal_graphs,
                    generate_class(K_CLASS, n))
        if n >= 6:
            report.add(f"n={n} unique extremal graph", len(res.extremal_graphs) == 1)
        if n <= oracle_max:
            alt = compute_f(n, n, ORACLE)
            report.add(f"n={n} oracle agrees", alt.extremal_graphs == res.extremal_graphs)
    return report


def verify_l1(n_min: int = 5, n_max: int = 8) -> VerifyReport:
    report = VerifyReport("L1")
    for n in range(n_min, n_max + 1):
        res = verify_lemma1(n)
        report.add(f"n={n} all {res.cases} deletions keep two trees", not res.failures)
        report.add(f"n={n} deleted star of {n - 2} edges fails", res.tight_fails)
        report.counterexamples.extend(res.failures)
    return report


def _prop_run(rid: str, k: int, classify, n_max: int) -> VerifyReport:
    report = VerifyReport(rid)
    for n in range(k, n_max + 1):
        mismatches = []
        count = 0
        for g in enumerate_connected(n):
            count += 1
            oracle = kappa_bar_equals_one(g, k)
            fast = classify(g)
            literal = find_cycle_with_ears(g, k - 2) is None
            if not oracle == fast == literal:
                mismatches.append(encode(g))
        report.add(f"n={n}: {count} graphs, {len(mismatches)} mismatches", not mismatches)
        report.counterexamples.extend(mismatches)
    return report


def verify_p1(n_max: int = 7) -> VerifyReport:
    return _prop_run("P1", 3, kappa3_equals_one, n_max)


def verify_p2(n_max: int = 7) -> VerifyReport:
    return _prop_run("P2", 4, kappa4_equals_one, n_max)


def verify_nw(n_max: int = 7, t: int = 2) -> VerifyReport:
    report = VerifyReport("NW")
    for n in range(2, n_max + 1):
        bad = []
        count = 0
        for g in enumerate_connected(n):
            count += 1
            criterion, _ = nash_williams_check(g, t)
            trees = find_edge_disjoint_spanning_trees(g, t)
            valid = trees is None or (
                all(is_spanning_tree(g, tr) for tr in trees)
                and len({e for tr in trees for e in tr}) == t * (n - 1)
            )
            if criterion != (trees is not None) or not valid:
                bad.append(encode(g))
        report.add(f"n={n}: {count} graphs, {len(bad)} disagreements", not bad)
        report.counterexamples.extend(bad)
    return report


def verify_cex() -> VerifyReport:
    report = VerifyReport("CEX")
    g = k5_counterexample()
    report.add("order 9, size 12", g.n == 9 and g.m == 12, encode(g))
    sets = list(terminal_sets(g.n, 5))
    multi = [s for s in sets if find_packing(g, s, 2) is not None]
    report.add(f"kappa5 = 1 on all {len(sets)} five-sets", len(sets) == 126 and not multi)
    found = find_cycle_with_ears(g, 2)
    report.add("a cycle has two internally disjoint ears", found is not None,
               f"cycle {found[0]}" if found else "")
    witness = kappa_bar_at_least(g, 4, 2)
    report.add("kappa4 >= 2 by oracle", witness is not None, f"S={witness}")
    if witness is not None:
        packing = find_packing(g, witness, 2)
        report.add("oracle witness packing is valid", is_valid_packing(g, packing))
    report.add("ear classifier rejects it for k=4", not kappa4_equals_one(g))
    return report


def verify_lb(oracle_n_max: int = 10, arithmetic_n_max: int = 30) -> VerifyReport:
    report = VerifyReport("LB")
    for k in (5, 6):
        for n in range(k, oracle_n_max + 1):
            g = lower_bound_construction(n, k)
            ok_size = g.m == lower_bound_value(n, k)
            ok_one = kappa_bar_equals_one(g, k)
            report.add(f"k={k} n={n} m={g.m} kappa=1", ok_size and ok_one)
            if not (ok_size and ok_one):
                report.counterexamples.append(encode(g))
    bad = []
    for k in range(5, arithmetic_n_max + 1):
        for n in range(k, arithmetic_n_max + 1):
            if lower_bound_construction(n, k).m != lower_bound_value(n, k):
                bad.append(f"{n},{k}")
    report.add(f"edge counts match for all n <= {arithmetic_n_max}", not bad, ";".join(bad))
    return report


def verify_blocks() -> VerifyReport:
    report = VerifyReport("BLOCKS")
    cat = catalog()
    d_all = [g for g in enumerate_connected(5, 6, 6) if not bridges(g)]
    f_all = [g for g in enumerate_connected(6, 7, 7) if not bridges(g)]
    d = [g for g in d_all if kappa_bar_equals_one(g, 4)]
    f = [g for g in f_all if kappa_bar_equals_one(g, 4)]
    report.add("exactly 3 D-blocks", len(d) == 3, f"{len(d_all)} bridgeless candidates")
    report.add("exactly 4 F-blocks", len(f) == 4, f"{len(f_all)} bridgeless candidates")
    report.add("catalog D/F agree with derivation",
               sorted(map(encode, d)) == sorted(encode(cat[x]) for x in D_NAMES)
               and sorted(map(encode, f)) == sorted(encode(cat[x]) for x in F_NAMES))
    order4 = list(enumerate_connected(4, 5, 5))
    report.add("B is the unique connected order-4 size-5 graph",
               len(order4) == 1 and order4[0] == cat["B"])
    report.add("A is the triangle", cat["A"] == cat["C3"] == canonical_form(
        Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])))
    report.add("block orders and sizes", all(
        (cat[x].n, cat[x].m) == want for x, want in
        [("K1", (1, 0)), ("A", (3, 3)), ("B", (4, 5)), ("C3", (3, 3)), ("C4", (4, 4)),
         ("C5", (5, 5))] + [(x, (5, 6)) for x in D_NAMES] + [(x, (6, 7)) for x in F_NAMES]))
    report.add("all blocks satisfy the k=4 classifier",
               all(kappa4_equals_one(g) for g in cat.values()))
    report.add("cycles satisfy the k=3 classifier",
               all(kappa3_equals_one(cat[x]) for x in ("C3", "C4", "C5")))
    report.add("blocks are bridgeless", all(not bridges(g) for g in cat.values()))
    ok = all(general_g_constraints(c, n) for n in range(3, 16) for c in compositions(G_CLASS, n))
    report.add("G compositions satisfy the general bounds", ok)
    ok = all(general_h_constraints(c, n) for n in range(4, 17) for c in compositions(H_CLASS, n))
    report.add("H compositions satisfy the general bounds", ok)
    return report


# Independent oracles for the infrastructure


def labeled_connected_count(n: int) -> int:
    """Connected labeled graphs on n vertices by brute force over all edge subsets."""
    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(max(n, 1), [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
        count += is_connected(g)
    return count


def automorphisms(g: Graph) -> int:
    return sum(1 for p in permutations(range(g.n)) if g.relabel(p) == g)


def verify_infra(n_max: int = 6, perm_graphs: int = 200, perms: int = 50, seed: int = 0) -> VerifyReport:
    report = VerifyReport("INFRA")
    # graph6 round trip over every labeled graph
    bad = 0
    for n in range(1, n_max + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            bad += decode(encode(g)) != g
    report.add(f"graph6 round trip, all labeled graphs n <= {n_max}", bad == 0)

    rng = random.Random(seed)
    pool = [g for n in (6, 7) for g in enumerate_graphs(n)]
    sample = rng.sample(pool, perm_graphs)
    bad = 0
    for g in sample:
        c = canonical_form(g)
        for _ in range(perms):
            p = list(range(g.n))
            rng.shuffle(p)
            bad += canonical_form(g.relabel(p)) != c
        bad += canonical_form(c) != c
    report.add(f"canonical form invariant, {perms} permutations x {perm_graphs} graphs", bad == 0)

    for n in range(1, n_max + 1):
        graphs = list(enumerate_connected(n))
        distinct = len({encode(g) for g in graphs}) == len(graphs)
        labeled = sum(factorial(n) // automorphisms(g) for g in graphs)
        expected = labeled_connected_count(n)
        report.add(f"n={n}: {len(graphs)} connected classes, {labeled} labelings",
                   distinct and labeled == expected and len(graphs) == CONNECTED_COUNTS[n - 1],
                   f"brute force {expected}")
    return report


RUNNERS = {
    "T3": verify_t3,
    "T4": verify_t4,
    "T-n": verify_tn,
    "L1": verify_l1,
    "P1": verify_p1,
    "P2": verify_p2,
    "NW": verify_nw,
    "CEX": verify_cex,
    "LB": verify_lb,
    "BLOCKS": verify_blocks,
    "INFRA": verify_infra,
}


def verify_theorem(rid: str, **params) -> VerifyReport:
    try:
        runner = RUNNERS[rid]
    except KeyError:
        raise ValueError(f"unknown check {rid!r}; choose from {', '.join(THEOREM_IDS)}") from None
    return runner(**params)
