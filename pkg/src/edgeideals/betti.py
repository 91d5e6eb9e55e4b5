"""Graded Betti numbers of S/I and the invariants read off them.

Three routes, cross-checked against each other in the tests:

* :func:`betti_hochster` sums reduced homology of every induced subcomplex
  of the independence complex (squarefree, multigraded, brute force);
* :func:`graded_betti` evaluates the same sum recursively, splitting the
  graph into connected components (simplicial joins, Kunneth) and into
  co-components (disjoint unions of complexes), with memoisation;
* :func:`betti_koszul` works for any monomial ideal through the upper
  Koszul complexes at the points of the lcm lattice.

All tables are for the quotient S/I, so ``beta[0, 0] == 1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import product as cartesian
from math import comb, prod

import numpy as np

from .complexes import SimplicialComplex, f_vector, independence_complex, reduced_homology_ranks
from .graphs import (Graph, complement, components, has_isolated_vertex, induced_mask,
                     induced_matching_number, maximal_independent_sets, members,
                     minimal_vertex_covers)
from .ideals import MonomialIdeal, edge_ideal
from .linalg import GF2, QQ, Field


class CostExceeded(RuntimeError):
    """A computation's estimated size is above the configured gate."""

    def __init__(self, what: str, estimate: int, limit: int):
        super().__init__(f"{what}: estimated cost {estimate:,} exceeds gate {limit:,}")
        self.what = what
        self.estimate = estimate
        self.limit = limit


DEFAULT_KOSZUL_GATE = 700_000_000


@dataclass
class BettiTable:
    """Betti numbers of S/I over ``field``.

    ``graded`` maps ``(i, j)`` to beta_{i,j}; ``multigraded`` (when the route
    produced one) maps ``(i, a)`` with ``a`` an exponent vector.
    """

    n: int
    field: Field
    graded: dict[tuple[int, int], int]
    multigraded: dict[tuple[int, tuple[int, ...]], int] | None = dc_field(default=None, repr=False)

    @classmethod
    def from_multigraded(cls, n, field, multi) -> "BettiTable":
        graded: dict[tuple[int, int], int] = {}
        for (i, a), r in multi.items():
            graded[i, sum(a)] = graded.get((i, sum(a)), 0) + r
        return cls(n, field, graded, multi)

    def __getitem__(self, key) -> int:
        return self.graded.get(key, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.n == other.n and self.graded == other.graded

    def total(self, i: int) -> int:
        return sum(r for (k, _), r in self.graded.items() if k == i)

    def entries(self) -> list[dict]:
        return [{"i": i, "j": j, "rank": r} for (i, j), r in sorted(self.graded.items())]

    def to_json(self) -> list[dict]:
        return self.entries()

    def __str__(self) -> str:
        # Macaulay2-style: rows j - i, columns i
        if not self.graded:
            return "(empty)"
        pd_ = max(i for i, _ in self.graded)
        reg_ = max(j - i for i, j in self.graded)
        width = max(len(str(r)) for r in self.graded.values()) + 1
        lines = ["      " + "".join(f"{i:>{width}}" for i in range(pd_ + 1))]
        for row in range(reg_ + 1):
            cells = "".join(f"{self.graded.get((i, i + row), '.')!s:>{width}}" for i in range(pd_ + 1))
            lines.append(f"{row:>4}: {cells}")
        return "\n".join(lines)


# -- Hochster, brute force --------------------------------------------------

def betti_hochster(g: Graph, field: Field = QQ) -> BettiTable:
    """beta_{i,A}(S/I(G)) = dim H~_{|A|-i-1}(Delta_A) for every vertex subset A."""
    multi: dict[tuple[int, tuple[int, ...]], int] = {}
    for a in range(1 << g.n):
        size = bin(a).count("1")
        if a and has_isolated_vertex(g, a):
            continue  # Delta_A is a cone
        delta_a = SimplicialComplex(g.n, tuple(maximal_independent_sets(g, a)))
        degree = tuple((a >> v) & 1 for v in range(g.n))
        for k, r in reduced_homology_ranks(delta_a, field).items():
            if r:
                multi[size - k - 1, degree] = r
    return BettiTable.from_multigraded(g.n, field, multi)


# -- Hochster, decomposed ---------------------------------------------------
# Polynomials in (t, u) are dicts {(j, d): coeff}; the monomial t^j u^d stands
# for beta_{j-d, j}.  Homology polynomials Q(u) = sum_k dim H~_k u^(k+1) are
# dicts {d: coeff}.

def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (j1, d1), c1 in a.items():
        for (j2, d2), c2 in b.items():
            key = (j1 + j2, d1 + d2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _padd(*terms: tuple[int, dict]) -> dict:
    out: dict = {}
    for coeff, poly in terms:
        for k, v in poly.items():
            out[k] = out.get(k, 0) + coeff * v
    return {k: v for k, v in out.items() if v}


def _subsets_poly(n: int) -> dict:
    """(1+t)^n - 1."""
    return {(j, 0): comb(n, j) for j in range(1, n + 1)}


def _co_components(g: Graph) -> list[int]:
    return components(complement(g))


@lru_cache(maxsize=None)
def _homology_poly(n: int, edges: tuple, p: int) -> tuple:
    g = Graph(n, edges)
    if n == 0:
        return ((0, 1),)
    if has_isolated_vertex(g):
        return ()
    comps = components(g)
    if len(comps) > 1:
        # independence complex of a disjoint union is the join of complexes
        acc = {0: 1}
        for c in comps:
            part = dict(_homology_of(induced_mask(g, c), p))
            nxt: dict = {}
            for d1, c1 in acc.items():
                for d2, c2 in part.items():
                    nxt[d1 + d2] = nxt.get(d1 + d2, 0) + c1 * c2
            acc = {k: v for k, v in nxt.items() if v}
        return tuple(sorted(acc.items()))
    cocomps = _co_components(g)
    if len(cocomps) > 1:
        # independence complex of a join is the disjoint union of complexes
        acc = {1: len(cocomps) - 1}
        for c in cocomps:
            for d, v in _homology_of(induced_mask(g, c), p):
                acc[d] = acc.get(d, 0) + v
        return tuple(sorted((k, v) for k, v in acc.items() if v))
    ranks = reduced_homology_ranks(independence_complex(g), Field(p))
    return tuple(sorted((k + 1, r) for k, r in ranks.items() if r))


def _homology_of(g: Graph, p: int) -> tuple:
    return _homology_poly(g.n, g.edges, p)


@lru_cache(maxsize=None)
def _betti_poly(n: int, edges: tuple, p: int) -> tuple:
    g = Graph(n, edges)
    if n == 0:
        return (((0, 0), 1),)
    comps = components(g)
    if len(comps) > 1:
        acc = {(0, 0): 1}
        for c in comps:
            acc = _pmul(acc, dict(_betti_of(induced_mask(g, c), p)))
        return tuple(sorted(acc.items()))
    cocomps = _co_components(g)
    if len(cocomps) > 1:
        sub = induced_mask(g, cocomps[0])
        acc, size = dict(_betti_of(sub, p)), sub.n
        one = {(0, 0): 1}
        for c in cocomps[1:]:
            sub = induced_mask(g, c)
            other = dict(_betti_of(sub, p))
            b1, b2 = _subsets_poly(size), _subsets_poly(sub.n)
            cross_u = {(j, 1): v for (j, _), v in _pmul(b1, b2).items()}
            acc = _padd((1, acc), (1, other), (-1, one),
                        (1, _pmul(_padd((1, acc), (-1, one)), b2)),
                        (1, _pmul(_padd((1, other), (-1, one)), b1)),
                        (1, cross_u))
            size += sub.n
        return tuple(sorted(acc.items()))
    acc: dict = {}
    for a in range(1 << n):
        for d, v in _homology_of(induced_mask(g, a), p):
            key = (bin(a).count("1"), d)
            acc[key] = acc.get(key, 0) + v
    return tuple(sorted(acc.items()))


def _betti_of(g: Graph, p: int) -> tuple:
    return _betti_poly(g.n, g.edges, p)


def graded_betti(g: Graph, field: Field = QQ) -> BettiTable:
    """Graded Betti table of S/I(G) by the decomposed Hochster sum."""
    graded = {(j - d, j): v for (j, d), v in _betti_of(g, field.p)}
    return BettiTable(g.n, field, graded)


def clear_caches() -> None:
    _betti_poly.cache_clear()
    _homology_poly.cache_clear()


# -- upper Koszul over the lcm lattice --------------------------------------

def lcm_lattice(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """Nonunit points of the lcm lattice, in graded order.

    A box point ``a`` belongs to the lattice iff the lcm of the generators
    dividing ``x^a`` is ``x^a`` itself.
    """
    gens = np.array(ideal.gens, dtype=np.int64).reshape(len(ideal.gens), ideal.n)
    top = gens.max(axis=0)
    pts = np.array(list(cartesian(*[range(t + 1) for t in top])), dtype=np.int64)
    pts = pts.reshape(-1, ideal.n)
    out = []
    for chunk in np.array_split(pts, max(1, len(pts) // 4096)):
        div = (gens[None, :, :] <= chunk[:, None, :]).all(axis=2)
        hit = div.any(axis=1)
        masked = np.where(div[:, :, None], gens[None, :, :], 0).max(axis=1)
        keep = hit & (masked == chunk).all(axis=1)
        out.extend(tuple(int(x) for x in row) for row in chunk[keep])
    return sorted(out, key=lambda a: (sum(a), a))


def koszul_cost(ideal: MonomialIdeal) -> int:
    if ideal.is_zero:
        return 0
    top = [max(g[v] for g in ideal.gens) for v in range(ideal.n)]
    support = sum(1 for t in top if t)
    return prod(t + 1 for t in top) * (1 << support) * len(ideal.gens)


def upper_koszul_complex(ideal: MonomialIdeal, a) -> SimplicialComplex | None:
    """K^a(I): squarefree sigma <= a with x^(a - sigma) in I; None if void."""
    a = np.asarray(a, dtype=np.int64)
    supp = [v for v in range(ideal.n) if a[v]]
    gens = np.array(ideal.gens, dtype=np.int64).reshape(len(ideal.gens), ideal.n)
    k = len(supp)
    sig = np.zeros((1 << k, ideal.n), dtype=np.int64)
    for bit, v in enumerate(supp):
        sig[:, v] = (np.arange(1 << k) >> bit) & 1
    inside = (gens[None, :, :] <= (a[None, :] - sig)[:, None, :]).all(axis=2).any(axis=1)
    masks = [sum(1 << v for v in range(ideal.n) if row[v]) for row in sig[inside]]
    if not masks:
        return None
    faces = set(masks)
    facets = [m for m in faces if not any(m != o and m & o == m for o in faces)]
    return SimplicialComplex(ideal.n, tuple(sorted(facets, key=members)))


def betti_koszul(ideal: MonomialIdeal, field: Field = QQ,
                 gate: int | None = DEFAULT_KOSZUL_GATE) -> BettiTable:
    """beta_{i,a}(I) = dim H~_{i-1}(K^a(I)) at every lcm-lattice point ``a``."""
    if ideal.is_zero:
        raise ValueError("the zero ideal has no Betti table of interest")
    cost = koszul_cost(ideal)
    if gate is not None and cost > gate:
        raise CostExceeded("betti_koszul", cost, gate)
    multi = {(0, (0,) * ideal.n): 1}
    for a in lcm_lattice(ideal):
        cx = upper_koszul_complex(ideal, a)
        if cx is None:
            continue
        for k, r in reduced_homology_ranks(cx, field).items():
            if r:
                multi[k + 2, a] = r  # beta_{k+1}(I) = beta_{k+2}(S/I)
    return BettiTable.from_multigraded(ideal.n, field, multi)


# -- invariants -------------------------------------------------------------

def regularity(table: BettiTable, of: str = "quotient") -> int:
    """reg(S/I) = max(j - i); reg(I) = reg(S/I) + 1."""
    if of == "quotient":
        return max(j - i for i, j in table.graded)
    if of == "ideal":
        return max(j - i + 1 for i, j in table.graded if i >= 1)
    raise ValueError(f"of must be 'quotient' or 'ideal', got {of!r}")


def pd_depth(table: BettiTable, n: int | None = None) -> tuple[int, int]:
    n = table.n if n is None else n
    pd_ = max(i for i, _ in table.graded)
    return pd_, n - pd_


def has_linear_resolution(table: BettiTable) -> bool:
    """I(G) has a 2-linear resolution: beta_{i,j}(S/I) = 0 for i >= 1 unless j = i + 1."""
    return all(j == i + 1 for i, j in table.graded if i >= 1)


def ideal_regularity(ideal: MonomialIdeal, field: Field = QQ,
                     gate: int | None = DEFAULT_KOSZUL_GATE) -> int:
    return regularity(betti_koszul(ideal, field, gate), of="ideal")


# -- Hilbert series ---------------------------------------------------------

def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_add(a: list[int], b: list[int], scale: int = 1) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += scale * y
    return trim(out)


def trim(p: list[int]) -> list[int]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def one_minus_t_pow(k: int) -> list[int]:
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


@dataclass(frozen=True)
class HilbertSeries:
    """H(S/I, t) = h(t) / (1 - t)^d."""

    h: tuple[int, ...]
    d: int

    @property
    def multiplicity(self) -> int:
        return sum(self.h)

    @property
    def degree(self) -> int:
        return len(self.h) - 1

    def numerator_over(self, power: int) -> list[int]:
        """Numerator when the denominator is written as (1 - t)^power."""
        if power < self.d:
            raise ValueError("cannot lower the denominator exponent")
        return trim(poly_mul(list(self.h), one_minus_t_pow(power - self.d)))

    def to_json(self) -> dict:
        return {"h": list(self.h), "d": self.d, "multiplicity": self.multiplicity,
                "degree": self.degree}


def hilbert_from_f_vector(f: list[int]) -> HilbertSeries:
    d = len(f) - 1
    num = [0]
    for i, fi in enumerate(f):
        num = poly_add(num, poly_mul([0] * i + [1], one_minus_t_pow(d - i)), fi)
    return HilbertSeries(tuple(trim(num)), d)


def hilbert(g: Graph) -> HilbertSeries:
    """Hilbert series of S/I(G) from the f-vector of the independence complex."""
    return hilbert_from_f_vector(f_vector(independence_complex(g)))


def k_polynomial(table: BettiTable) -> list[int]:
    """sum_{i,j} (-1)^i beta_{i,j} t^j, the numerator over (1 - t)^n."""
    top = max(j for _, j in table.graded)
    out = [0] * (top + 1)
    for (i, j), r in table.graded.items():
        out[j] += (-1) ** i * r
    return trim(out)


# -- report -----------------------------------------------------------------

@dataclass
class InvariantReport:
    n: int
    reg: int
    pd: int
    depth: int
    dim: int
    height: int
    multiplicity: int
    hilbert: HilbertSeries
    nu: int
    cohen_macaulay: bool
    linear_resolution: bool
    field_agreement: bool
    fields: dict = dc_field(default_factory=dict)
    betti: BettiTable | None = dc_field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "n": self.n, "reg": self.reg, "pd": self.pd, "depth": self.depth,
            "dim": self.dim, "height": self.height, "multiplicity": self.multiplicity,
            "h_poly": self.hilbert.to_json(), "nu": self.nu,
            "flags": {"cohen_macaulay": self.cohen_macaulay,
                      "linear_resolution": self.linear_resolution},
            "field_agreement": self.field_agreement,
            "fields": self.fields,
            "betti": self.betti.to_json() if self.betti else None,
        }


def invariant_report(g: Graph, fields: tuple[Field, ...] = (QQ, GF2)) -> InvariantReport:
    """All invariants of S/I(G); the first field is primary, the rest shadow it."""
    if not g.edges:
        raise ValueError("invariant_report needs a graph with at least one edge")
    tables = [graded_betti(g, f) for f in fields]
    per_field = {}
    for f, t in zip(fields, tables):
        pd_, depth_ = pd_depth(t, g.n)
        per_field[f.name] = {"reg": regularity(t), "pd": pd_, "depth": depth_}
    main = tables[0]
    agreement = all(v == per_field[fields[0].name] for v in per_field.values())
    covers = minimal_vertex_covers(g)
    hs = hilbert(g)
    pd_, depth_ = pd_depth(main, g.n)
    dim_ = g.n - covers.height
    return InvariantReport(
        n=g.n, reg=regularity(main), pd=pd_, depth=depth_, dim=dim_,
        height=covers.height, multiplicity=hs.multiplicity, hilbert=hs,
        nu=induced_matching_number(g), cohen_macaulay=depth_ == dim_,
        linear_resolution=has_linear_resolution(main), field_agreement=agreement,
        fields=per_field, betti=main)
