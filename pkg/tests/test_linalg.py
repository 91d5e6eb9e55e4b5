from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from edgeideals.linalg import GF2, QQ, Field, rank, rank_sparse


def fraction_rank(rows):
    m = [[Fraction(a) for a in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def modp_rank_oracle(rows, p):
    return fraction_rank_mod(rows, p)


def fraction_rank_mod(rows, p):
    m = [[a % p for a in r] for r in rows]
    r = 0
    for c in range(len(m[0]) if m else 0):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] * inv % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
    return r


matrices = st.integers(1, 6).flatmap(lambda c: st.lists(
    st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=6))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_ranks_match_oracles(rows):
    sparse = [{k: a for k, a in enumerate(r) if a} for r in rows]
    assert rank(rows, QQ) == fraction_rank(rows) == rank_sparse(sparse, QQ)
    for p in (2, 3, 5):
        assert rank(rows, Field(p)) == fraction_rank_mod(rows, p) == rank_sparse(sparse, Field(p))


def test_field_parse_and_validation():
    assert Field.parse("q") == QQ and Field.parse("f2") == GF2 and Field.parse("7").p == 7
    with pytest.raises(ValueError):
        Field(4)


def test_characteristic_dependent_rank():
    # [[2]] vanishes mod 2
    assert rank([[2]], QQ) == 1 and rank([[2]], GF2) == 0
    assert rank([[1, 1], [1, -1]], QQ) == 2 and rank([[1, 1], [1, -1]], GF2) == 1
