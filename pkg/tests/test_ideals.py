from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from edgeideals import graphs as gr
from edgeideals.ideals import (IdealError, MonomialIdeal, contains, cover_prime_power,
                               edge_ideal, equals, ideal_product, ideal_sum, in_symbolic_power,
                               intersect, minimal_primes, minimalize, power,
                               squarefree_symbolic_power, symbolic_power,
                               symbolic_power_enumerated)

from test_graphs import graphs


def monomials_up_to(n, degree):
    return [m for m in product(range(degree + 1), repeat=n) if sum(m) <= degree]


def test_edge_ideal_examples():
    assert edge_ideal(gr.complete(2)).gens == ((1, 1),)
    assert edge_ideal(gr.path(3)).gens == ((1, 1, 0), (0, 1, 1))
    for n in range(1, 6):
        assert len(edge_ideal(gr.staircase(n))) == n * (n + 1) // 2


def test_minimalize_contains_equals():
    i = minimalize(2, [(2, 0), (2, 1), (1, 1)])
    assert i.gens == ((2, 0), (1, 1))
    assert contains(MonomialIdeal(2, ((1, 1),)), (2, 3))
    assert not contains(MonomialIdeal(2, ((1, 1),)), (2, 0))
    with pytest.raises(IdealError):
        equals(MonomialIdeal(2, ()), MonomialIdeal(3, ()))
    with pytest.raises(IdealError):
        minimalize(2, [(1, 2, 3)])


def test_power_and_sum_examples():
    assert power(MonomialIdeal(2, ((1, 1),)), 3).gens == ((3, 3),)
    assert power(edge_ideal(gr.path(3)), 2).gens == ((2, 2, 0), (1, 2, 1), (0, 2, 2))
    a = MonomialIdeal(4, ((1, 1, 0, 0),))
    b = MonomialIdeal(4, ((0, 0, 1, 1),))
    assert len(ideal_sum(a, b)) == 2
    with pytest.raises(IdealError):
        power(a, 0)


def test_intersect_examples():
    x, y = MonomialIdeal(2, ((1, 0),)), MonomialIdeal(2, ((0, 1),))
    assert intersect(x, y).gens == ((1, 1),)
    # (x_1^2) and (x_0, x_2)^2 in three variables
    got = intersect(MonomialIdeal(3, ((0, 2, 0),)), cover_prime_power([0, 2], 2, 3))
    assert got.gens == ((2, 2, 0), (1, 2, 1), (0, 2, 2))


@st.composite
def ideals(draw, n=3, max_exp=3):
    gens = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n).filter(any),
                         min_size=1, max_size=4))
    return minimalize(n, gens)


@settings(max_examples=100, deadline=None)
@given(ideals(), ideals())
def test_intersection_membership_oracle(a, b):
    meet = intersect(a, b)
    top = max(a.max_degree(), b.max_degree()) * 2 + 2
    for m in monomials_up_to(3, top):
        assert (m in meet) == (m in a and m in b)
    both = ideal_sum(a, b)
    prod_ = ideal_product(a, b)
    for m in monomials_up_to(3, top):
        assert (m in both) == (m in a or m in b)
        if m in prod_:
            assert m in meet


def test_cover_prime_power_examples():
    assert cover_prime_power([0], 3, 2).gens == ((3, 0),)
    assert cover_prime_power([0, 1], 2, 2).gens == ((2, 0), (1, 1), (0, 2))
    assert len(cover_prime_power([0, 1, 2], 2, 3)) == 6


def test_symbolic_power_examples():
    assert symbolic_power(gr.complete(2), 2).gens == ((2, 2),)
    k3 = symbolic_power(gr.complete(3), 2)
    expected = ideal_sum(power(edge_ideal(gr.complete(3)), 2), MonomialIdeal(3, ((1, 1, 1),)))
    assert k3 == expected
    assert k3 == symbolic_power_enumerated(gr.complete(3), 2)
    p3 = gr.path(3)
    assert symbolic_power(p3, 2) == power(edge_ideal(p3), 2) == symbolic_power_enumerated(p3, 2)
    with pytest.raises(IdealError):
        symbolic_power(gr.edgeless(3), 2)


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=5, min_edges=1), st.integers(1, 3))
def test_symbolic_power_properties(g, s):
    sym = symbolic_power(g, s)
    assert sym == symbolic_power_enumerated(g, s)
    if s == 1:
        assert sym == edge_ideal(g)
    for u in power(edge_ideal(g), s).gens:
        assert u in sym
    for m in product(range(s + 1), repeat=g.n):
        assert (m in sym) == in_symbolic_power(g, m, s)


def test_minimal_primes_of_squarefree_ideal():
    assert minimal_primes(edge_ideal(gr.path(3))) == [(1,), (0, 2)]
    i = MonomialIdeal(3, ((1, 1, 0), (0, 0, 1)))
    assert minimal_primes(i) == [(0, 2), (1, 2)]
    assert squarefree_symbolic_power(edge_ideal(gr.cycle(5)), 2) == symbolic_power(gr.cycle(5), 2)
    with pytest.raises(IdealError):
        minimal_primes(MonomialIdeal(1, ((2,),)))


def test_ideal_json_sorted_graded_lex():
    i = MonomialIdeal.from_json({"n": 3, "gens": [[0, 2, 2], [2, 2, 0], [1, 2, 1], [3, 3, 3]]})
    assert i.to_json() == {"n": 3, "gens": [[2, 2, 0], [1, 2, 1], [0, 2, 2]]}
