"""Exit criteria.  Every tolerance is exact; runtimes are asserted against
the stated budgets.  A summary line per criterion is printed at the end of
the pytest run."""
import time
from contextlib import contextmanager

import pytest

from edgeideals import graphs as gr
from edgeideals.betti import (betti_hochster, betti_koszul, graded_betti,
                              has_linear_resolution, hilbert, pd_depth, regularity)
from edgeideals.ideals import MonomialIdeal, edge_ideal
from edgeideals.linalg import GF2, QQ
from edgeideals.suite import (DEPTH_TARGETS, JOIN_POOL, MULT_TARGETS, additivity_pairs,
                              check_minh, construct_depth_pair, construct_mult_pair,
                              construct_reg3_join, construct_reg_dim, depth,
                              graph_checks, random_labeled_graphs, sweep_small_graphs,
                              verify_artinian_reg, verify_complement_reg,
                              verify_disjoint_union_additivity, verify_join_depth,
                              verify_join_multiplicity, verify_self_join,
                              verify_star_series, verify_wheel_symbolic, verify_whiskered)


@contextmanager
def budget(seconds):
    clock = {"start": time.perf_counter()}
    yield clock
    clock["elapsed"] = time.perf_counter() - clock["start"]


def finish(record, number, failures, clock, limit, what):
    ok = not failures and clock["elapsed"] < limit
    record(number, ok, f"{what} [{clock['elapsed']:.1f}s / {limit}s]"
           + (f" failures={failures[:3]}" if failures else ""))
    assert not failures, failures
    assert clock["elapsed"] < limit


def test_criterion_01_complete_graphs(record_criterion):
    failures = []
    with budget(5) as clock:
        for n in range(2, 8):
            k = gr.complete(n)
            if (hilbert(k).multiplicity, depth(k)) != (n, 1):
                failures.append(n)
    finish(record_criterion, 1, failures, clock, 5, "e(K_n) = n, depth 1, n = 2..7")


def test_criterion_02_whiskered(record_criterion):
    failures = []
    with budget(30) as clock:
        for n in range(1, 7):
            for r in range(1, n + 1):
                res = verify_whiskered(n, r)
                if not res.passed:
                    failures.append((n, r, res.computed))
    finish(record_criterion, 2, failures, clock, 30, "W(n,r): linear, pd n, depth r, e n-r")


def test_criterion_03_staircase(record_criterion):
    failures = []
    with budget(30) as clock:
        for n in range(1, 5):
            f = gr.staircase(n)
            t = graded_betti(f)
            got = (pd_depth(t)[1], gr.krull_dim(f), regularity(t), len(edge_ideal(f)))
            if got != (n, n, 1, n * (n + 1) // 2):
                failures.append((n, got))
    finish(record_criterion, 3, failures, clock, 30, "F_n Cohen-Macaulay, reg 1, mu C(n+1,2)")


def test_criterion_04_paths(record_criterion):
    failures = []
    with budget(5) as clock:
        for n in range(1, 5):
            odd, even = gr.path(2 * n + 1), gr.path(2 * n)
            if hilbert(odd).multiplicity != 1 or gr.multiplicity_by_covers(odd) != 1:
                failures.append(("e", 2 * n + 1))
            if gr.krull_dim(odd) != n + 1 or hilbert(odd).d != n + 1:
                failures.append(("dim", 2 * n + 1))
            if gr.krull_dim(even) != n or hilbert(even).d != n:
                failures.append(("dim", 2 * n))
    finish(record_criterion, 4, failures, clock, 5, "paths: e(P_2n+1)=1, dims n+1 and n")


def test_criterion_05_stars(record_criterion):
    failures = []
    with budget(5) as clock:
        for s in range(1, 6):
            res = verify_star_series(s)
            if not res.passed:
                failures.append((s, res.computed))
    finish(record_criterion, 5, failures, clock, 5, "star Hilbert series identity, deg h = s")


def test_criterion_06_join_multiplicity(record_criterion):
    failures = []
    pool = [f() for f in JOIN_POOL.values()]
    with budget(60) as clock:
        for g in pool:
            for h in pool:
                for res in (verify_join_multiplicity(g, h), verify_join_depth(g, h)):
                    if not res.passed:
                        failures.append(res.instance)
    finish(record_criterion, 6, failures, clock, 60,
           f"join trichotomy and depth 1 over {len(pool) ** 2} ordered pairs")


def test_criterion_07_self_join(record_criterion):
    failures = []
    with budget(120) as clock:
        for g in (gr.complete(2), gr.path(3), gr.star(2), gr.path(4)):
            for l in (1, 2, 3):
                res = verify_self_join(g, l)
                if not res.passed:
                    failures.append((res.instance, res.computed))
    finish(record_criterion, 7, failures, clock, 120, "self-join (a) reg, (b) e, (c) series")


@pytest.mark.slow
def test_criterion_08_oracle_equivalence(record_criterion):
    failures, count = [], 0
    with budget(600) as clock:
        for n in range(2, 6):
            for g in gr.all_labeled_graphs(n):
                count += 1
                for field in (QQ, GF2):
                    h = betti_hochster(g, field)
                    k = betti_koszul(edge_ideal(g), field)
                    if h.multigraded != k.multigraded or graded_betti(g, field).graded != h.graded:
                        failures.append((g.to_json(), field.name))
    finish(record_criterion, 8, failures, clock, 600,
           f"Hochster = Koszul entrywise on {count} graphs, QQ and GF(2)")


@pytest.mark.slow
def test_criterion_09_bounds_sweep(record_criterion):
    checks = ["reg_le_dim", "mult_covers", "h1_codim", "e1_bounds"]
    failures = []
    with budget(900) as clock:
        rep = sweep_small_graphs(6, checks, GF2)
        failures.extend(rep.counterexamples)
        for g in random_labeled_graphs(100, 6, seed=20261018):
            got = graph_checks(g, checks, QQ)
            if not all(got.values()):
                failures.append(g.to_json())
            if graded_betti(g, QQ).graded != graded_betti(g, GF2).graded:
                failures.append(("field", g.to_json()))
    finish(record_criterion, 9, failures, clock, 900,
           f"bounds on {rep.graphs} graphs (GF(2)) + 100 QQ spot checks")


@pytest.mark.slow
def test_criterion_10_minh(record_criterion):
    failures, skipped = [], []
    with budget(1200) as clock:
        c5 = check_minh(gr.cycle(5), 3)
        if [r.computed for r in c5[1:]] != [4, 6]:
            failures.append(("C5 values", [r.computed for r in c5]))
        results = list(c5)
        for g in (gr.cycle(7), gr.wheel(4), gr.wheel(5), gr.complete_multipartite([2, 3]),
                  gr.complete_multipartite([2, 2, 1])):
            results.extend(check_minh(g, 2))
        for n in (4, 5):
            for s in (2, 3):
                results.append(verify_wheel_symbolic(n, s))
        for r in results:
            if r.status == "skipped":
                skipped.append(r.instance)
            elif not r.passed:
                failures.append((r.instance, r.expected, r.computed))
    finish(record_criterion, 10, failures, clock, 1200,
           f"Minh instances and wheel formula ({len(results)} checks, skipped={skipped})")


def test_criterion_11_artinian(record_criterion):
    failures = []
    empty1 = MonomialIdeal(1, ())
    edge2 = MonomialIdeal(2, ((1, 1),))
    path3 = edge_ideal(gr.path(3))
    with budget(10) as clock:
        for s in (2, 3):
            for i, j in ((empty1, empty1), (edge2, empty1), (edge2, edge2), (path3, empty1)):
                res = verify_artinian_reg(i, j, s)
                if not res.passed:
                    failures.append((res.instance, res.computed))
    finish(record_criterion, 11, failures, clock, 10, "reg = 2s - 1 for s = 2, 3")


@pytest.mark.slow
def test_criterion_12_constructions(record_criterion):
    failures, count = [], 0
    with budget(600) as clock:
        for d in range(1, 5):
            for r in range(1, d + 1):
                count += 1
                res = construct_reg_dim(r, d)[1]
                if not res.passed:
                    failures.append(res.instance)
        for e in range(1, 4):
            for target in MULT_TARGETS:
                for v in range(1, 4):
                    if target in ("hdeg", "dim") and e * v < 2:
                        continue
                    count += 1
                    res = construct_mult_pair(e, target, v)[1]
                    if not res.passed:
                        failures.append((res.instance, res.computed))
        for delta in range(1, 4):
            for target in DEPTH_TARGETS:
                for v in range(1, 4):
                    count += 1
                    res = construct_depth_pair(delta, target, v)[1]
                    if not res.passed:
                        failures.append((res.instance, res.computed))
    finish(record_criterion, 12, failures, clock, 600,
           f"{count} constructions verified, no gate skips")


def test_criterion_13_complement_regularity(record_criterion):
    failures = []
    with budget(30) as clock:
        for n in (4, 5, 6, 7):
            res = verify_complement_reg(gr.cycle(n))
            if not res.passed:
                failures.append((n, res.status, res.computed))
        res = construct_reg3_join(gr.complement(gr.cycle(5)), gr.complete(2))[1]
        if not res.passed:
            failures.append(("reg3 join", res.status, res.computed))
    finish(record_criterion, 13, failures, clock, 30, "reg(S/I(C_n^c)) = 2; reg 3 join")


def test_criterion_14_union_additivity(record_criterion):
    failures = []
    pairs = additivity_pairs()
    with budget(60) as clock:
        for g, h in pairs:
            res = verify_disjoint_union_additivity(g, h)
            if not res.passed:
                failures.append((res.instance, res.expected, res.computed))
    finish(record_criterion, 14, failures, clock, 60,
           f"reg, depth, deg h additive on {len(pairs)} pairs")
