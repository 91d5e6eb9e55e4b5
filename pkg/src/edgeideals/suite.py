"""Executable checks of the join, multiplicity and regularity results, plus the
graph constructions realising prescribed invariant pairs.

Every check returns a :class:`VerificationResult` whose ``passed`` flag is
exact equality of ``expected`` and ``computed``.  Checks whose hypotheses do
not hold come back ``inapplicable``; checks stopped by the cost gate come
back ``skipped``.  Neither counts as a failure.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import graphs as gr
from .betti import (DEFAULT_KOSZUL_GATE, CostExceeded, betti_hochster, betti_koszul,
                    graded_betti, has_linear_resolution, hilbert, ideal_regularity,
                    one_minus_t_pow, pd_depth, poly_add, poly_mul, regularity, trim)
from .graphs import Graph
from .ideals import (IdealError, MonomialIdeal, edge_ideal, embed, ideal_sum, power,
                     squarefree_symbolic_power, symbolic_power, variables_ideal)
from .linalg import GF2, QQ, Field

log = logging.getLogger(__name__)

PASS, FAIL, SKIPPED, INAPPLICABLE = "pass", "fail", "skipped", "inapplicable"


@dataclass
class VerificationResult:
    claim: str
    instance: str
    expected: Any = None
    computed: Any = None
    status: str = PASS
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {"claim": self.claim, "instance": self.instance, "expected": self.expected,
                "computed": self.computed, "pass": self.passed, "status": self.status,
                **({"details": self.details} if self.details else {})}


def _result(claim, instance, expected, computed, **details) -> VerificationResult:
    status = PASS if expected == computed else FAIL
    return VerificationResult(claim, instance, expected, computed, status, details)


def _skipped(claim, instance, exc: CostExceeded) -> VerificationResult:
    return VerificationResult(claim, instance, status=SKIPPED,
                              details={"reason": "cost", "estimate": exc.estimate,
                                       "gate": exc.limit})


def _inapplicable(claim, instance, reason) -> VerificationResult:
    return VerificationResult(claim, instance, status=INAPPLICABLE, details={"reason": reason})


# -- small invariant helpers ------------------------------------------------

def reg_quotient(g: Graph, field: Field = QQ) -> int:
    return regularity(graded_betti(g, field))


def depth(g: Graph, field: Field = QQ) -> int:
    return pd_depth(graded_betti(g, field), g.n)[1]


def h_degree(g: Graph) -> int:
    return hilbert(g).degree


def symbolic_reg(g: Graph, s: int, gate=DEFAULT_KOSZUL_GATE) -> int:
    """reg(I(G)^(s)), ideal view."""
    return ideal_regularity(symbolic_power(g, s), gate=gate)


def ordinary_reg(g: Graph, s: int, gate=DEFAULT_KOSZUL_GATE) -> int:
    return ideal_regularity(power(edge_ideal(g), s), gate=gate)


def _name(g: Graph) -> str:
    return f"n={g.n} edges={[list(e) for e in g.edges]}"


# -- regularity of symbolic powers ------------------------------------------

def artinian_ideal(i_x: MonomialIdeal, j_y: MonomialIdeal, s: int) -> MonomialIdeal:
    """(I + <y>)^(s) + (J + <x>)^(s) in k[x, y]."""
    for part in (i_x, j_y):
        if part.n < 1:
            raise IdealError("both variable groups must be nonempty")
        if not part.is_squarefree or any(sum(g) < 2 for g in part.gens):
            raise IdealError("inputs must be squarefree and generated in degree >= 2, or zero")
    m, n = i_x.n, j_y.n
    xs, ys = range(m), range(m, m + n)
    left = ideal_sum(embed(i_x, m + n, 0), variables_ideal(m + n, ys))
    right = ideal_sum(embed(j_y, m + n, m), variables_ideal(m + n, xs))
    return ideal_sum(squarefree_symbolic_power(left, s), squarefree_symbolic_power(right, s))


def verify_artinian_reg(i_x: MonomialIdeal, j_y: MonomialIdeal, s: int) -> VerificationResult:
    claim, inst = "artinian_reg", f"I={i_x}, J={j_y}, s={s}"
    k = artinian_ideal(i_x, j_y, s)
    try:
        return _result(claim, inst, 2 * s - 1, ideal_regularity(k))
    except CostExceeded as exc:
        return _skipped(claim, inst, exc)


def join_all(graphs: Sequence[Graph]) -> Graph:
    out = graphs[0]
    for g in graphs[1:]:
        out = gr.join(out, g)
    return out


def join_symbolic_formula(graphs: Sequence[Graph], s: int, gate=DEFAULT_KOSZUL_GATE) -> int:
    """max reg(I(G_j)^(i)) - i + s over 1 <= i <= s and factors with an edge."""
    return max(symbolic_reg(g, i, gate) - i + s
               for g in graphs if g.edges for i in range(1, s + 1))


def verify_join_symbolic_reg(graphs: Sequence[Graph], s: int,
                             gate=DEFAULT_KOSZUL_GATE) -> VerificationResult:
    claim = "join_symbolic_reg"
    inst = f"factors={[_name(g) for g in graphs]}, s={s}"
    if len(graphs) < 2:
        raise ValueError("need at least two join factors")
    if not any(g.edges for g in graphs):
        raise ValueError("at least one factor needs an edge")
    try:
        lhs = symbolic_reg(join_all(graphs), s, gate)
        rhs = join_symbolic_formula(graphs, s, gate)
    except CostExceeded as exc:
        return _skipped(claim, inst, exc)
    return _result(claim, inst, rhs, lhs)


def verify_wheel_symbolic(n: int, s: int, gate=DEFAULT_KOSZUL_GATE) -> VerificationResult:
    claim, inst = "wheel_symbolic_reg", f"W_{n}, s={s}"
    if not (4 <= n <= 6 and 2 <= s <= 3):
        raise ValueError("wheel check is capped at 4 <= n <= 6, 2 <= s <= 3")
    g = gr.wheel(n)
    formula = 2 * s + gr.induced_matching_number(gr.cycle(n)) - 1
    try:
        sym, ordi = symbolic_reg(g, s, gate), ordinary_reg(g, s, gate)
    except CostExceeded as exc:
        return _skipped(claim, inst, exc)
    return _result(claim, inst, {"symbolic": formula, "ordinary": formula},
                   {"symbolic": sym, "ordinary": ordi})


def check_minh(g: Graph, s_max: int, gate=DEFAULT_KOSZUL_GATE) -> list[VerificationResult]:
    """reg I(G)^(s) == reg I(G)^s for s = 1..s_max."""
    out = []
    for s in range(1, s_max + 1):
        inst = f"{_name(g)}, s={s}"
        try:
            sym = symbolic_reg(g, s, gate)
            ordi = ordinary_reg(g, s, gate)
        except CostExceeded as exc:
            out.append(_skipped("minh", inst, exc))
            continue
        out.append(_result("minh", inst, ordi, sym))
    return out


# -- multiplicity and depth of joins -----------------------------------------

def join_multiplicity_formula(g: Graph, h: Graph) -> tuple[str, int]:
    hg, hh = gr.height(g), gr.height(h)
    eg, eh = gr.multiplicity_by_covers(g), gr.multiplicity_by_covers(h)
    left, right = g.n + hh, h.n + hg
    if left == right:
        return "equal", eg + eh
    return ("first", eg) if left > right else ("second", eh)


def verify_join_multiplicity(g: Graph, h: Graph) -> VerificationResult:
    branch, value = join_multiplicity_formula(g, h)
    return _result("join_multiplicity", f"G={_name(g)} H={_name(h)}", value,
                   gr.multiplicity_by_covers(gr.join(g, h)), branch=branch)


def verify_join_depth(g: Graph, h: Graph) -> VerificationResult:
    return _result("join_depth", f"G={_name(g)} H={_name(h)}", 1, depth(gr.join(g, h)))


def self_join_series_identity(g: Graph, l: int) -> tuple[list[int], list[int]]:
    """Both sides of H(G^{*l}) = l H(G) - (l - 1), over a common (1 - t)^D."""
    big, small = hilbert(gr.self_join(g, l)), hilbert(g)
    top = max(big.d, small.d)
    lhs = big.numerator_over(top)
    rhs = poly_add(poly_mul([l], list(small.numerator_over(top))),
                   one_minus_t_pow(top), -(l - 1))
    return trim(lhs), rhs


def verify_self_join(g: Graph, l: int) -> VerificationResult:
    if not g.edges:
        raise ValueError("self-join check needs a graph with an edge")
    big = gr.self_join(g, l)
    lhs, rhs = self_join_series_identity(g, l)
    expected = {"a_reg": reg_quotient(g), "b_multiplicity": l * gr.multiplicity_by_covers(g),
                "c_series": rhs}
    computed = {"a_reg": reg_quotient(big), "b_multiplicity": gr.multiplicity_by_covers(big),
                "c_series": lhs}
    return _result("self_join", f"{_name(g)}, l={l}", expected, computed)


def verify_whiskered(n: int, r: int) -> VerificationResult:
    g = gr.whiskered_complete(n, r)
    table = graded_betti(g)
    pd_, depth_ = pd_depth(table)
    expected: dict = {"linear_resolution": True, "pd": n, "depth": r}
    computed: dict = {"linear_resolution": has_linear_resolution(table), "pd": pd_, "depth": depth_}
    if r < n:
        expected["multiplicity"] = n - r
        computed["multiplicity"] = gr.multiplicity_by_covers(g)
    return _result("whiskered", f"W({n},{r})", expected, computed)


def verify_complement_reg(g: Graph) -> VerificationResult:
    claim, inst = "complement_reg", _name(g)
    if gr.has_triangle(g) or gr.is_forest(g):
        return _inapplicable(claim, inst, "needs a triangle-free graph that is not a forest")
    return _result(claim, inst, 2, reg_quotient(gr.complement(g)))


def construct_reg3_join(g: Graph, h: Graph) -> tuple[Graph, VerificationResult]:
    claim, inst = "reg3_join", f"G={_name(g)} H={_name(h)}"
    joined = gr.join(g, h)
    if not g.edges or not h.edges:
        return joined, _inapplicable(claim, inst, "both factors need an edge")
    rg, rh = reg_quotient(g) + 1, reg_quotient(h) + 1
    if rg != 3 or rh > 3:
        return joined, _inapplicable(claim, inst, f"reg I(G)={rg}, reg I(H)={rh}")
    return joined, _result(claim, inst, 3, reg_quotient(joined) + 1)


# -- constructions -----------------------------------------------------------

def _with_edges(g: Graph, k: int) -> Graph:
    for _ in range(k):
        g = gr.disjoint_union(g, gr.complete(2))
    return g


def construct_reg_dim(r: int, d: int) -> tuple[Graph, VerificationResult]:
    """(r-1) disjoint edges plus F_{d-r+1}: reg(S/I) = r and dim = d."""
    if not 1 <= r <= d:
        raise ValueError(f"need 1 <= r <= d, got r={r}, d={d}")
    g = _with_edges(gr.staircase(d - r + 1), r - 1)
    return g, _result("reg_dim", f"r={r}, d={d}", {"reg": r, "dim": d},
                      {"reg": reg_quotient(g), "dim": gr.krull_dim(g)})


MULT_TARGETS = ("reg", "hdeg", "depth", "dim")


def mult_pair_graph(e: int, target: str, v: int) -> Graph:
    if e < 1 or v < 1:
        raise ValueError("multiplicity and target value must be positive")
    if target == "reg":
        base = gr.path(3 * v if v % 2 else 3 * v + 1)
        return gr.self_join(base, e)
    if target in ("hdeg", "dim"):
        if e * v < 2:
            raise ValueError(f"{target} pair needs e*{target} >= 2 (got e={e}, value={v})")
        if v == 1:
            return gr.complete(e)
        return gr.self_join(gr.star(v), e)
    if target == "depth":
        return gr.whiskered_complete(e + v, v)
    raise ValueError(f"unknown target {target!r}; choose from {MULT_TARGETS}")


def _measure(g: Graph, target: str) -> int:
    if target == "reg":
        return reg_quotient(g)
    if target == "hdeg":
        return h_degree(g)
    if target == "depth":
        return depth(g)
    if target == "dim":
        return gr.krull_dim(g)
    raise ValueError(target)


def construct_mult_pair(e: int, target: str, v: int) -> tuple[Graph, VerificationResult]:
    g = mult_pair_graph(e, target, v)
    expected = {"multiplicity": e, target: v}
    computed = {"multiplicity": hilbert(g).multiplicity, target: _measure(g, target)}
    return g, _result("mult_pair", f"e={e}, {target}={v}", expected, computed,
                      vertices=g.n)


DEPTH_TARGETS = ("reg", "hdeg")


def depth_pair_graph(delta: int, target: str, v: int) -> tuple[Graph, str]:
    if delta < 1 or v < 1:
        raise ValueError("depth and target value must be positive")
    if target == "reg":
        r = v
        if delta == 1:
            return gr.self_join(gr.path(3 * r), 2), "I"
        if delta <= r:
            return _with_edges(gr.self_join(gr.path(3 * (r - delta + 1)), 2), delta - 1), "II"
        if r == 1:
            return gr.whiskered_complete(delta + 1, delta), "III"
        return _with_edges(gr.whiskered_complete(delta - r + 2, delta - r + 1), r - 1), "IV"
    if target == "hdeg":
        s = v
        if delta == 1:
            return gr.star(s), "I"
        if delta <= s:
            return _with_edges(gr.star(s - delta + 1), delta - 1), "II"
        if s == 1:
            return gr.staircase(delta), "III"
        return _with_edges(gr.staircase(delta - s + 1), s - 1), "IV"
    raise ValueError(f"unknown target {target!r}; choose from {DEPTH_TARGETS}")


def construct_depth_pair(delta: int, target: str, v: int) -> tuple[Graph, VerificationResult]:
    g, case = depth_pair_graph(delta, target, v)
    expected = {"depth": delta, target: v}
    computed = {"depth": depth(g), target: _measure(g, target)}
    return g, _result("depth_pair", f"depth={delta}, {target}={v}", expected, computed,
                      case=case, vertices=g.n)


def verify_disjoint_union_additivity(g: Graph, h: Graph) -> VerificationResult:
    u = gr.disjoint_union(g, h)
    expected = {"reg": reg_quotient(g) + reg_quotient(h), "depth": depth(g) + depth(h),
                "hdeg": h_degree(g) + h_degree(h)}
    computed = {"reg": reg_quotient(u), "depth": depth(u), "hdeg": h_degree(u)}
    return _result("union_additivity", f"G={_name(g)} H={_name(h)}", expected, computed)


# -- exhaustive sweep ---------------------------------------------------------

SWEEP_CHECKS = ("reg_le_dim", "mult_covers", "h1_codim", "e1_bounds", "oracle", "minh2")


@dataclass
class SweepReport:
    n_max: int
    field: str
    checks: tuple[str, ...]
    graphs: int = 0
    passed: dict = field(default_factory=dict)
    failed: dict = field(default_factory=dict)
    skipped: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "field": self.field, "checks": list(self.checks),
                "graphs": self.graphs, "passed": self.passed, "failed": self.failed,
                "skipped": self.skipped, "counterexamples": self.counterexamples}


def graph_checks(g: Graph, checks: Iterable[str], field: Field = GF2,
                 minh_gate: int = 2_000_000) -> dict[str, bool | None]:
    """Run the selected per-graph checks; None marks a cost skip."""
    checks = set(checks)
    out: dict[str, bool | None] = {}
    table = graded_betti(g, field)
    hs = hilbert(g)
    covers = gr.minimal_vertex_covers(g)
    dim_ = g.n - covers.height
    if "reg_le_dim" in checks:
        out["reg_le_dim"] = regularity(table) <= dim_
    if "mult_covers" in checks:
        out["mult_covers"] = hs.multiplicity == covers.min_count
    if "h1_codim" in checks:
        out["h1_codim"] = len(hs.h) > 1 and hs.h[1] == covers.height
    if "e1_bounds" in checks:
        out["e1_bounds"] = hs.multiplicity != 1 or (hs.degree >= 2 and dim_ >= 2)
    if "oracle" in checks:
        ref = betti_hochster(g, field)
        out["oracle"] = (ref.graded == table.graded
                         and ref.graded == betti_koszul(edge_ideal(g), field).graded)
    if "minh2" in checks:
        try:
            out["minh2"] = symbolic_reg(g, 2, minh_gate) == ordinary_reg(g, 2, minh_gate)
        except CostExceeded:
            out["minh2"] = None
    return out


def sweep_small_graphs(n_max: int, checks: Sequence[str] = SWEEP_CHECKS[:4],
                       field: Field = GF2, n_min: int = 2,
                       progress: Callable[[int], None] | None = None) -> SweepReport:
    if n_max > 6:
        raise ValueError("exhaustive labelled sweeps are capped at n_max = 6")
    unknown = set(checks) - set(SWEEP_CHECKS)
    if unknown:
        raise ValueError(f"unknown sweep checks {sorted(unknown)}; choose from {SWEEP_CHECKS}")
    rep = SweepReport(n_max, field.name, tuple(checks))
    for name in checks:
        rep.passed[name] = rep.failed[name] = rep.skipped[name] = 0
    for n in range(n_min, n_max + 1):
        for g in gr.all_labeled_graphs(n):
            rep.graphs += 1
            for name, ok in graph_checks(g, checks, field).items():
                if ok is None:
                    rep.skipped[name] += 1
                elif ok:
                    rep.passed[name] += 1
                else:
                    rep.failed[name] += 1
                    rep.counterexamples.append({"check": name, "graph": g.to_json()})
            if progress:
                progress(rep.graphs)
    return rep


def random_labeled_graphs(count: int, n_max: int, seed: int = 0) -> list[Graph]:
    """Random labelled graphs with an edge on 2..n_max vertices (reproducible)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, n_max)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = [p for p in pairs if rng.random() < 0.5]
        if edges:
            out.append(gr.make_graph(n, edges))
    return out


# -- suites --------------------------------------------------------------------

JOIN_POOL = {
    "K2": lambda: gr.complete(2), "K3": lambda: gr.complete(3), "P3": lambda: gr.path(3),
    "P4": lambda: gr.path(4), "C4": lambda: gr.cycle(4), "C5": lambda: gr.cycle(5),
    "K12": lambda: gr.star(2),
}


def _joins_suite() -> list[VerificationResult]:
    out = []
    pool = {k: f() for k, f in JOIN_POOL.items()}
    for g in pool.values():
        for h in pool.values():
            out.append(verify_join_multiplicity(g, h))
            out.append(verify_join_depth(g, h))
    for name in ("K2", "P3", "K12", "P4"):
        for l in (1, 2, 3):
            out.append(verify_self_join(pool[name], l))
    out.append(verify_join_symbolic_reg([gr.complete(2), gr.complete(2)], 1))
    out.append(verify_join_symbolic_reg([gr.complete(2), gr.complete(2)], 2))
    out.append(verify_join_symbolic_reg([gr.path(3), gr.complete(2)], 2))
    out.append(verify_join_symbolic_reg([gr.complete(1), gr.cycle(5)], 2))
    out.append(construct_reg3_join(gr.complement(gr.cycle(5)), gr.complete(2))[1])
    out.append(construct_reg3_join(gr.complement(gr.cycle(6)), gr.whiskered_complete(3, 2))[1])
    out.append(construct_reg3_join(gr.complement(gr.cycle(5)), gr.complement(gr.cycle(5)))[1])
    for n in range(2, 8):
        k = gr.complete(n)
        out.append(_result("complete_graph", f"K_{n}", {"multiplicity": n, "depth": 1},
                           {"multiplicity": gr.multiplicity_by_covers(k), "depth": depth(k)}))
    return out


def _constructions_suite() -> list[VerificationResult]:
    out = []
    for n in range(1, 7):
        for r in range(1, n + 1):
            out.append(verify_whiskered(n, r))
    for n in range(1, 5):
        f = gr.staircase(n)
        t = graded_betti(f)
        out.append(_result("staircase", f"F_{n}",
                           {"depth": n, "dim": n, "reg": 1, "mu": n * (n + 1) // 2},
                           {"depth": pd_depth(t)[1], "dim": gr.krull_dim(f),
                            "reg": regularity(t), "mu": len(edge_ideal(f))}))
    for n in range(1, 5):
        odd, even = gr.path(2 * n + 1), gr.path(2 * n)
        out.append(_result("path", f"P_{2 * n + 1}, P_{2 * n}",
                           {"e_odd": 1, "dim_odd": n + 1, "dim_even": n},
                           {"e_odd": gr.multiplicity_by_covers(odd),
                            "dim_odd": gr.krull_dim(odd), "dim_even": gr.krull_dim(even)}))
    for s in range(1, 6):
        out.append(verify_star_series(s))
    for d in range(1, 5):
        for r in range(1, d + 1):
            out.append(construct_reg_dim(r, d)[1])
    for e in range(1, 4):
        for target in MULT_TARGETS:
            for v in range(1, 4):
                if target in ("hdeg", "dim") and e * v < 2:
                    continue
                out.append(construct_mult_pair(e, target, v)[1])
    for delta in range(1, 4):
        for target in DEPTH_TARGETS:
            for v in range(1, 4):
                out.append(construct_depth_pair(delta, target, v)[1])
    for n in (4, 5, 6, 7):
        out.append(verify_complement_reg(gr.cycle(n)))
    for g, h in additivity_pairs():
        out.append(verify_disjoint_union_additivity(g, h))
    return out


def verify_star_series(s: int) -> VerificationResult:
    """H(K_{1,s}) = 1/(1-t)^s + 1/(1-t) - 1, compared over (1 - t)^s."""
    hs = hilbert(gr.star(s))
    top = max(s, hs.d)
    formula = poly_add(poly_add(one_minus_t_pow(top - s), one_minus_t_pow(top - 1)),
                       one_minus_t_pow(top), -1)
    expected = {"series": formula, "hdeg": s}
    computed = {"series": hs.numerator_over(top), "hdeg": hs.degree}
    if s >= 2:
        expected["multiplicity"] = 1
        computed["multiplicity"] = hs.multiplicity
    return _result("star_series", f"K_1,{s}", expected, computed)


def additivity_pairs() -> list[tuple[Graph, Graph]]:
    k2, p3, p6 = gr.complete(2), gr.path(3), gr.path(6)
    return [(k2, k2), (p6, k2), (gr.staircase(2), gr.star(2)), (gr.cycle(5), k2),
            (gr.cycle(5), gr.cycle(4)), (p3, gr.whiskered_complete(3, 2)),
            (gr.complete(3), gr.staircase(3)), (gr.wheel(4), p3),
            (gr.path(4), gr.star(3)), (gr.complement(gr.cycle(6)), k2)]


def _minh_suite(gate=DEFAULT_KOSZUL_GATE) -> list[VerificationResult]:
    out = []
    out.extend(check_minh(gr.cycle(5), 3, gate))
    for g in (gr.cycle(7), gr.wheel(4), gr.wheel(5), gr.complete_multipartite([2, 3]),
              gr.complete_multipartite([2, 2, 1]), gr.path(4)):
        out.extend(check_minh(g, 2, gate))
    for n in (4, 5, 6):
        for s in (2, 3):
            out.append(verify_wheel_symbolic(n, s, gate))
    x1 = MonomialIdeal(1, ())
    x2 = MonomialIdeal(2, ((1, 1),))
    for s in (1, 2, 3):
        out.append(verify_artinian_reg(x1, x1, s))
        out.append(verify_artinian_reg(x2, MonomialIdeal(1, ()), s))
        out.append(verify_artinian_reg(x2, x2, s))
    return out


SUITES = {
    "joins": _joins_suite,
    "constructions": _constructions_suite,
    "minh": _minh_suite,
}


@dataclass
class SuiteReport:
    suite: str
    results: list[VerificationResult]

    @property
    def summary(self) -> dict:
        counts = {"passed": 0, "failed": 0, "skipped": 0, "inapplicable": 0}
        for r in self.results:
            key = {PASS: "passed", FAIL: "failed", SKIPPED: "skipped",
                   INAPPLICABLE: "inapplicable"}[r.status]
            counts[key] += 1
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def to_json(self) -> dict:
        return {"suite": self.suite, "results": [r.to_json() for r in self.results],
                "summary": self.summary}


def run_suite(name: str = "default") -> SuiteReport:
    if name == "default":
        results = []
        for key in ("joins", "constructions", "minh"):
            log.info("running %s checks", key)
            results.extend(SUITES[key]())
        return SuiteReport(name, results)
    try:
        return SuiteReport(name, SUITES[name]())
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from default, {', '.join(SUITES)}") from None
