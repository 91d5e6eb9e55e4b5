"""Exact matrix rank over the rationals and prime fields."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``p == 0`` means the rationals, otherwise F_p."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return QQ
        if t.startswith("f"):
            t = t[1:]
        return cls(int(t))


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


QQ = Field(0)
GF2 = Field(2)


def rank(rows: Sequence[Sequence[int]], field: Field = QQ) -> int:
    """Rank of an integer matrix given as a list of rows."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    if field.p == 2:
        return _rank_gf2(rows)
    if field.p:
        return _rank_modp(rows, field.p)
    return _rank_bareiss(rows)


def _rank_gf2(rows) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        v = 0
        for k, a in enumerate(r):
            if a & 1:
                v |= 1 << k
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def _rank_modp(rows, p: int) -> int:
    m = [[a % p for a in r] for r in rows]
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        pr = [a * inv % p for a in m[r]]
        m[r] = pr
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], pr)]
        r += 1
        if r == len(m):
            break
    return r


def rank_sparse(rows: Sequence[dict[int, int]], field: Field = QQ) -> int:
    """Rank of a matrix whose rows are ``{column: entry}`` dicts.

    Over QQ rows are combined fraction-free (``a*row - b*pivot``) and divided
    by their content, which keeps entries small for boundary matrices.
    """
    if field.p == 2:
        return _rank_gf2_masks(
            [sum(1 << k for k, a in r.items() if a & 1) for r in rows])
    p = field.p
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        cur = {k: (a % p if p else a) for k, a in row.items()}
        cur = {k: a for k, a in cur.items() if a}
        while cur:
            lead = min(cur)
            prow = pivots.get(lead)
            if prow is None:
                if p:
                    inv = pow(cur[lead], -1, p)
                    cur = {k: a * inv % p for k, a in cur.items()}
                else:
                    g = 0
                    for a in cur.values():
                        g = gcd(g, a)
                    if g != 1:
                        cur = {k: a // g for k, a in cur.items()}
                pivots[lead] = cur
                break
            f = cur[lead]
            if p:
                for k, b in prow.items():
                    v = (cur.get(k, 0) - f * b) % p
                    if v:
                        cur[k] = v
                    else:
                        cur.pop(k, None)
            else:
                pv = prow[lead]
                new = {k: pv * a for k, a in cur.items()}
                for k, b in prow.items():
                    v = new.get(k, 0) - f * b
                    if v:
                        new[k] = v
                    else:
                        new.pop(k, None)
                cur = new
    return len(pivots)


def _rank_gf2_masks(vectors) -> int:
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def _rank_bareiss(rows) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    r, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(r + 1, nrows):
            f = m[i][c]
            row = m[i]
            pr = m[r]
            m[i] = [(pv * row[k] - f * pr[k]) // prev for k in range(ncols)]
        prev = pv
        r += 1
        if r == nrows:
            break
    return r
