"""Monomial ideals as antichains of exponent vectors.

Generators are kept minimal and sorted graded-lexicographically, so two
ideals are equal exactly when their generator tuples are equal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product as cartesian
from typing import Iterable, Sequence

from .graphs import Graph, minimal_vertex_covers

Monomial = tuple[int, ...]


class IdealError(ValueError):
    pass


def grlex_key(m: Monomial):
    return (sum(m), tuple(-e for e in m))


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def mul(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def _minimal(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    kept: list[Monomial] = []
    for m in sorted(set(gens), key=grlex_key):
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]

    def __contains__(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.gens for e in g)

    def max_degree(self) -> int:
        return max((sum(g) for g in self.gens), default=0)

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @classmethod
    def from_json(cls, data: dict | str) -> "MonomialIdeal":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n, gens = data["n"], data["gens"]
        except (KeyError, TypeError) as exc:
            raise IdealError(f"ideal JSON needs 'n' and 'gens': {exc}") from None
        return minimalize(n, gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def monomial_str(m: Monomial) -> str:
    parts = [f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e]
    return "*".join(parts) or "1"


def minimalize(n: int, gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    checked = []
    for g in gens:
        g = tuple(int(e) for e in g)
        if len(g) != n:
            raise IdealError(f"monomial {g} has {len(g)} exponents, expected {n}")
        if any(e < 0 for e in g):
            raise IdealError(f"negative exponent in {g}")
        checked.append(g)
    return MonomialIdeal(n, _minimal(checked))


def _same_ring(*ideals: MonomialIdeal) -> int:
    ns = {i.n for i in ideals}
    if len(ns) != 1:
        raise IdealError(f"ideals live in rings with different variable counts {sorted(ns)}")
    return ns.pop()


def contains(ideal: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != ideal.n:
        raise IdealError(f"monomial has {len(m)} exponents, ideal has {ideal.n} variables")
    return tuple(m) in ideal


def equals(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _same_ring(a, b)
    return a.gens == b.gens


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(a, b)
    return MonomialIdeal(n, _minimal(a.gens + b.gens))


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(a, b)
    return MonomialIdeal(n, _minimal(mul(u, v) for u in a.gens for v in b.gens))


def power(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    if s < 1:
        raise IdealError(f"power needs s >= 1, got {s}")
    out = ideal
    for _ in range(s - 1):
        out = ideal_product(out, ideal)
    return out


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    n = _same_ring(a, b)
    return MonomialIdeal(n, _minimal(lcm(u, v) for u in a.gens for v in b.gens))


def variables_ideal(n: int, variables: Iterable[int]) -> MonomialIdeal:
    return MonomialIdeal(n, _minimal(_unit(n, i) for i in variables))


def _unit(n: int, i: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(n))


def edge_ideal(g: Graph) -> MonomialIdeal:
    return MonomialIdeal(g.n, _minimal(
        tuple(1 if k in e else 0 for k in range(g.n)) for e in g.edges))


def cover_prime_power(cover: Iterable[int], s: int, n: int) -> MonomialIdeal:
    """Minimal generators of <x_i : i in cover>^s."""
    cover = sorted(set(cover))
    if s < 1 or not cover:
        raise IdealError("cover_prime_power needs s >= 1 and a nonempty cover")
    gens = []
    for combo in _compositions(s, len(cover)):
        m = [0] * n
        for i, e in zip(cover, combo):
            m[i] = e
        gens.append(tuple(m))
    return MonomialIdeal(n, _minimal(gens))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def minimal_primes(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """Minimal primes of a squarefree monomial ideal, as variable sets.

    These are the inclusion-minimal transversals of the generator supports.
    """
    if not ideal.is_squarefree:
        raise IdealError("minimal_primes is only implemented for squarefree ideals")
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in ideal.gens]
    if not supports:
        return []
    found: list[frozenset] = []
    for size in range(1, ideal.n + 1):
        for cand in combinations(range(ideal.n), size):
            c = frozenset(cand)
            if any(f <= c for f in found):
                continue
            if all(s & c for s in supports):
                found.append(c)
    return sorted((tuple(sorted(c)) for c in found), key=lambda c: (len(c), c))


def _intersect_prime_powers(primes, s: int, n: int) -> MonomialIdeal:
    ordered = sorted(primes, key=lambda c: (len(c), tuple(c)))
    out = cover_prime_power(ordered[0], s, n)
    for c in ordered[1:]:
        out = intersect(out, cover_prime_power(c, s, n))
    return out


def symbolic_power(g: Graph, s: int) -> MonomialIdeal:
    """I(G)^(s) as the intersection of the s-th powers of the cover primes."""
    if s < 1:
        raise IdealError(f"symbolic power needs s >= 1, got {s}")
    if not g.edges:
        raise IdealError("symbolic power of the zero ideal is not modelled")
    return _intersect_prime_powers(minimal_vertex_covers(g).covers, s, g.n)


def squarefree_symbolic_power(ideal: MonomialIdeal, s: int) -> MonomialIdeal:
    """I^(s) for any nonzero squarefree monomial ideal."""
    if s < 1:
        raise IdealError(f"symbolic power needs s >= 1, got {s}")
    primes = minimal_primes(ideal)
    if not primes:
        raise IdealError("symbolic power of the zero ideal is not modelled")
    return _intersect_prime_powers(primes, s, ideal.n)


def symbolic_power_enumerated(g: Graph, s: int) -> MonomialIdeal:
    """Independent route: scan {0..s}^n for vectors of cover-degree >= s.

    No minimal generator of an intersection of s-th powers of squarefree
    primes has an exponent above s, so the box is enough.
    """
    if s < 1 or not g.edges:
        raise IdealError("symbolic_power_enumerated needs s >= 1 and an edge")
    covers = minimal_vertex_covers(g).covers
    members = [m for m in cartesian(range(s + 1), repeat=g.n)
               if all(sum(m[i] for i in c) >= s for c in covers)]
    return MonomialIdeal(g.n, _minimal(members))


def in_symbolic_power(g: Graph, m: Sequence[int], s: int) -> bool:
    """Membership test that never builds generators."""
    return all(sum(m[i] for i in c) >= s for c in minimal_vertex_covers(g).covers)


def embed(ideal: MonomialIdeal, n: int, offset: int = 0) -> MonomialIdeal:
    """Same generators in a larger ring, variables shifted by ``offset``."""
    if offset + ideal.n > n:
        raise IdealError("embedding does not fit")
    pad = lambda g: (0,) * offset + g + (0,) * (n - offset - ideal.n)
    return MonomialIdeal(n, tuple(pad(g) for g in ideal.gens))
