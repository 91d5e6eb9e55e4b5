from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from edgeideals import graphs as gr
from edgeideals.complexes import (SimplicialComplex, euler_characteristic, f_vector,
                                  independence_complex, reduced_homology_ranks, restrict)
from edgeideals.graphs import members
from edgeideals.linalg import GF2, QQ

from test_graphs import graphs


def facets(cx):
    return [list(members(f)) for f in cx.facets]


def test_independence_complex_examples():
    assert facets(independence_complex(gr.complete(3))) == [[0], [1], [2]]
    pent = independence_complex(gr.cycle(5))
    assert facets(pent) == [[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]]
    assert facets(independence_complex(gr.edgeless(4))) == [[0, 1, 2, 3]]


def test_restrict_examples():
    pent = independence_complex(gr.cycle(5))
    edge = restrict(pent, [0, 2])
    assert facets(edge) == [[0, 2]]
    assert reduced_homology_ranks(edge) == {-1: 0, 0: 0, 1: 0}
    empty = restrict(pent, [])
    assert empty.faces == (0,)
    assert reduced_homology_ranks(empty) == {-1: 1}
    for four in combinations(range(5), 4):
        assert not any(reduced_homology_ranks(restrict(pent, four)).values())


def test_f_vector_examples():
    for n in range(1, 6):
        assert f_vector(independence_complex(gr.complete(n))) == [1, n]
    assert f_vector(independence_complex(gr.star(2))) == [1, 3, 1]
    assert f_vector(independence_complex(gr.cycle(5))) == [1, 5, 5]


def test_homology_examples():
    two_points = SimplicialComplex.from_facets(2, [[0], [1]])
    assert reduced_homology_ranks(two_points) == {-1: 0, 0: 1}
    hollow = SimplicialComplex.from_facets(3, [[0, 1], [1, 2], [0, 2]])
    assert reduced_homology_ranks(hollow)[1] == 1
    pent = independence_complex(gr.cycle(5))
    for field in (QQ, GF2):
        assert reduced_homology_ranks(pent, field) == {-1: 0, 0: 0, 1: 1}


def test_rp2_is_field_dependent():
    # six-vertex triangulation of the real projective plane
    rp2 = SimplicialComplex.from_facets(6, [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5]])
    assert reduced_homology_ranks(rp2, QQ) == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert reduced_homology_ranks(rp2, GF2) == {-1: 0, 0: 0, 1: 1, 2: 1}


def test_void_complex_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets(3, [])


@st.composite
def complexes(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    raw = draw(st.lists(st.sets(st.integers(0, n - 1), max_size=n), min_size=1, max_size=6))
    return SimplicialComplex.from_facets(n, raw)


@settings(max_examples=120, deadline=None)
@given(complexes())
def test_euler_poincare(cx):
    for field in (QQ, GF2):
        ranks = reduced_homology_ranks(cx, field)
        assert sum((-1) ** k * r for k, r in ranks.items()) == euler_characteristic(cx)
        assert all(k <= cx.dim for k, r in ranks.items() if r)


@settings(max_examples=80, deadline=None)
@given(complexes(), st.integers(0, 5))
def test_cone_is_acyclic(cx, apex_seed):
    apex = cx.n
    cone = SimplicialComplex.from_facets(cx.n + 1, [list(members(f)) + [apex] for f in cx.facets])
    assert not any(reduced_homology_ranks(cone).values())


@settings(max_examples=80, deadline=None)
@given(complexes(), st.sets(st.integers(0, 5)))
def test_restrict_faces(cx, subset):
    subset = {v for v in subset if v < cx.n}
    a = sum(1 << v for v in subset)
    expected = sorted(f for f in cx.faces if f & a == f)
    assert sorted(restrict(cx, subset).faces) == expected


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_independence_complex_faces_are_independent_sets(g):
    cx = independence_complex(g)
    indep = [m for m in range(1 << g.n) if gr.is_independent(g, m)]
    assert sorted(cx.faces) == sorted(indep)
    for v in range(g.n):
        assert [v] in cx
