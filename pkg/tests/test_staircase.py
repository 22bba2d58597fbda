from __future__ import annotations

from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbspine.staircase import (
    STANDARD,
    Grading,
    HilbertFunction,
    Monomial,
    MonomialIdeal,
    conjugate_partition,
    enumerate_ideals,
    graded_hilbert_function,
    ideals_with_hf,
    make_ideal,
    monomials_of_degree,
    partitions,
)

from .strategies import gradings, ideals


def gens(M):
    return [str(m) for m in M.generators]


def test_generators_of_worked_examples():
    assert gens(make_ideal((4,))) == ["x^4", "y"]
    assert make_ideal((4,)).colength == 4
    assert gens(make_ideal((6, 4, 2, 1))) == ["x^6", "x^4*y", "x^2*y^2", "x*y^3", "y^4"]
    assert gens(make_ideal((11, 8, 4, 1, 1, 1, 1))) == ["x^11", "x^8*y", "x^4*y^2", "x*y^3", "y^7"]


def test_lcms():
    M = make_ideal((6, 4, 2, 1))
    assert M.lcms[0] is None
    assert [str(w) for w in M.lcms[1:]] == ["x^6*y", "x^4*y^2", "x^2*y^3", "x*y^4"]


def test_membership_rule():
    M = make_ideal((6, 4, 2, 1))
    assert Monomial(6, 0) in M and Monomial(5, 0) not in M
    assert Monomial(0, 4) in M and Monomial(0, 3) not in M
    assert None not in M


def test_invalid_partitions_rejected():
    for bad in [(), (1, 2), (3, 0), (-1,)]:
        with pytest.raises(ValueError):
            MonomialIdeal(bad)


def test_hilbert_function_examples():
    assert graded_hilbert_function(make_ideal((2, 2)), STANDARD) == HilbertFunction((1, 2, 1))
    assert graded_hilbert_function(make_ideal((5, 1)), Grading(1, 2)) == HilbertFunction((1, 1, 2, 1, 1))
    assert graded_hilbert_function(make_ideal((4,)), Grading(1, 3)) == HilbertFunction((1, 1, 1, 1))


def test_hilbert_function_trims_and_pads():
    h = HilbertFunction((1, 2, 0, 0))
    assert h.values == (1, 2)
    assert h[5] == 0 and h.total == 3 and h.dmax == 1


def test_degree_slices():
    assert [str(m) for m in monomials_of_degree(STANDARD, 2)] == ["x^2", "x*y", "y^2"]
    assert [str(m) for m in monomials_of_degree(Grading(2, 3), 18)] == ["x^9", "x^6*y^2", "x^3*y^4", "y^6"]
    assert monomials_of_degree(Grading(2, 3), 1) == []


def test_partition_counts_and_order():
    assert [len(enumerate_ideals(n)) for n in (4, 6, 10)] == [5, 11, 42]
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_ideals_with_hf_examples():
    assert [M.lam for M in ideals_with_hf(HilbertFunction((1, 2, 1)), STANDARD)] == [(3, 1), (2, 2), (2, 1, 1)]
    assert {M.lam for M in ideals_with_hf(HilbertFunction((1, 1, 2, 1, 1)), Grading(1, 2))} == {
        (5, 1), (4, 1, 1), (3, 3), (3, 2, 1)
    }
    assert ideals_with_hf(HilbertFunction((2,)), STANDARD) == []


def test_j_plus_minus():
    M = make_ideal((6, 4, 2, 1))
    assert M.j_minus(Monomial(2, 2)) == 2
    m = Monomial(6, 4)
    assert (M.j_plus(m), M.j_minus(m)) == (4, 0)
    with pytest.raises(ValueError):
        M.j_minus(Monomial(0, 0))


def test_grading_normalizes_and_validates():
    assert Grading(2, 4) == Grading(1, 2)
    with pytest.raises(ValueError):
        Grading(0, 1)
    assert Grading.parse("2,3") == Grading(2, 3)


def test_monomial_parse_roundtrip():
    for s in ["1", "x", "y", "x^4*y", "x*y^3", "y^7"]:
        assert str(Monomial.parse(s)) == s


@given(ideals(), gradings())
def test_hilbert_function_sums_to_colength(M, g):
    assert graded_hilbert_function(M, g).total == M.colength


@given(gradings(), st.integers(0, 20))
def test_slices_increasing(g, d):
    s = monomials_of_degree(g, d)
    assert s == sorted(s) and len(set(s)) == len(s)
    assert all(g.degree(m) == d for m in s)
    if g == STANDARD:
        assert len(s) == d + 1


@given(ideals(), gradings())
def test_fibre_contains_ideal(M, g):
    assert M in ideals_with_hf(graded_hilbert_function(M, g), g)


@given(ideals(), gradings())
def test_transpose_duality(M, g):
    T = M.transpose()
    assert T.lam == conjugate_partition(M.lam)
    assert graded_hilbert_function(M, g) == graded_hilbert_function(T, Grading(g.b, g.a))


@given(ideals())
def test_generator_shape(M):
    first, last = M.generators[0], M.generators[-1]
    assert first.j == 0 and last.i == 0
    assert M.e + 1 == len(set(M.lam)) + 1
    assert list(M.generators) == sorted(M.generators)
    for k, m in enumerate(M.generators):
        assert M.j_plus(m) == k == M.j_minus(m)


@given(gradings(), st.integers(0, 8), st.integers(0, 8), st.integers(-3, 3))
def test_shift_and_shift_length_inverse(g, i, j, ell):
    assert gcd(g.a, g.b) == 1
    m = Monomial(i, j)
    t = g.shift(m, ell)
    if t is None:
        assert i + ell * g.b < 0 or j - ell * g.a < 0
    else:
        assert g.degree(t) == g.degree(m)
        assert g.shift_length(m, t) == ell
