from __future__ import annotations

import random
from itertools import combinations

import pytest

from hilbspine.arrows import universal_generators
from hilbspine.matroid import Matroid
from hilbspine.polyring import PrimeField, RationalField
from hilbspine.poset import fibers, lex_extremes
from hilbspine.specialize import (
    LEX_X_LT_Y,
    LEX_Y_LT_X,
    edge_probe,
    initial_ideal,
    matroid_of_degree,
    random_point,
    specialize_ideal,
    specialized_hilbert_function,
    staircase_to_ideal,
    tropical_fingerprint,
)
from hilbspine.staircase import (
    STANDARD,
    Grading,
    HilbertFunction,
    Monomial,
    enumerate_ideals,
    graded_hilbert_function,
    make_ideal,
)

GF = PrimeField(32003)
Q = RationalField()
G23 = Grading(2, 3)
mono = Monomial.parse


def sets(*groups):
    return {frozenset(mono(s) for s in grp) for grp in groups}


def zero_point(M, g):
    return {v: 0 for v in universal_generators(M, g).variables()}


def test_specialized_generators_two_three():
    M = make_ideal((7, 1, 1, 1))
    J = specialize_ideal(M, G23, {(2, 2): 1}, Q)
    assert [{str(m): v for m, v in f.items()} for f in J.generators] == [
        {"x^7": 1},
        {"x*y": 1},
        {"y^4": 1, "x^6": 1},
    ]
    assert specialized_hilbert_function(J) == graded_hilbert_function(M, G23)


def test_point_validation():
    M = make_ideal((7, 1, 1, 1))
    with pytest.raises(KeyError):
        specialize_ideal(M, G23, {}, Q)
    with pytest.raises(ValueError):
        specialize_ideal(M, G23, {(2, 2): 1, (1, 1): 1}, Q)


def test_two_three_matroids():
    J = specialize_ideal(make_ideal((7, 1, 1, 1)), G23, {(2, 2): 1}, Q)
    m12 = matroid_of_degree(J, 12)
    assert m12.circuit_sets() == sets(["x^3*y^2"], ["x^6", "y^4"])
    assert m12.label(m12.loops) == [mono("x^3*y^2")]
    m8 = matroid_of_degree(J, 8)
    assert m8.circuit_sets() == sets(["x*y^2"])
    assert m8.label(m8.coloops) == [mono("x^4")]
    assert m8.label(m8.loops) == [mono("x*y^2")]


def test_degree_eighteen_matroid():
    M = make_ideal((10, 7, 7, 2, 2, 1))
    F = universal_generators(M, G23)
    J = specialize_ideal(M, G23, random_point(F, GF, random.Random(7)), GF, F)
    m = matroid_of_degree(J, 18)
    assert m.rank == 2 and not m.is_uniform and not m.loops and not m.coloops
    assert m.circuit_sets() == sets(
        ["x^3*y^4", "x^6*y^2"], ["x^9", "x^3*y^4", "y^6"], ["x^9", "x^6*y^2", "y^6"]
    )
    assert initial_ideal(J, LEX_Y_LT_X).lam == (9, 5, 5, 4, 4, 1, 1)
    assert initial_ideal(J, LEX_Y_LT_X, basis="multiples").lam == (9, 5, 5, 4, 4, 1, 1)
    assert initial_ideal(J, LEX_X_LT_Y) == M


def test_origin_of_cell():
    for M in enumerate_ideals(6):
        for g in (STANDARD, Grading(1, 2)):
            J = specialize_ideal(M, g, zero_point(M, g), Q)
            assert initial_ideal(J, LEX_X_LT_Y) == M == initial_ideal(J, LEX_Y_LT_X)
            fp = tropical_fingerprint(J)
            assert sorted(fp) == list(range(J.hf.dmax + 1))
            for d, m in fp.items():
                for k, x in enumerate(m.ground):
                    if x in M:
                        assert k in m.loops
                    else:
                        assert k in m.coloops


def test_cell_membership_at_random_points():
    rng = random.Random(3)
    for M in enumerate_ideals(6):
        for g in (STANDARD, Grading(1, 2), G23):
            F = universal_generators(M, g)
            J = specialize_ideal(M, g, random_point(F, GF, rng), GF, F)
            assert initial_ideal(J, LEX_X_LT_Y) == M
            assert initial_ideal(J, LEX_X_LT_Y, basis="multiples") == M


def test_flatness_on_standard_example():
    M = make_ideal((6, 4, 2, 1))
    F = universal_generators(M, STANDARD)
    rng = random.Random(0)
    for _ in range(100):
        J = specialize_ideal(M, STANDARD, random_point(F, GF, rng), GF, F)
        assert specialized_hilbert_function(J) == J.hf


def test_generic_point_flips_to_lex_most():
    M = make_ideal((3, 1))
    F = universal_generators(M, STANDARD)
    J = specialize_ideal(M, STANDARD, random_point(F, GF, random.Random(1)), GF, F)
    assert initial_ideal(J, LEX_Y_LT_X).lam == (2, 1, 1)


def test_standard_generic_points_are_uniform():
    rng = random.Random(11)
    for N in range(1, 8):
        for h in fibers(enumerate_ideals(N), STANDARD):
            lo, _ = lex_extremes(h, STANDARD)
            F = universal_generators(lo, STANDARD)
            fps = []
            for _ in range(2):
                J = specialize_ideal(lo, STANDARD, random_point(F, GF, rng), GF, F)
                fp = tropical_fingerprint(J)
                for d, m in fp.items():
                    assert m.is_uniform and m.rank == h[d]
                fps.append({d: m.bases for d, m in fp.items()})
            assert fps[0] == fps[1]
            if F.variables():
                J0 = specialize_ideal(lo, STANDARD, zero_point(lo, STANDARD), GF)
                assert {d: m.bases for d, m in tropical_fingerprint(J0).items()} != fps[0]


def test_edge_probe():
    res = edge_probe(HilbertFunction((1, 2, 1)), STANDARD, Q, trials=10, seed=4)
    assert res.found and res.M_minus.lam == (3, 1) and res.M_plus.lam == (2, 1, 1)
    J = specialize_ideal(res.M_minus, STANDARD, res.witness, Q)
    assert initial_ideal(J, LEX_Y_LT_X) == res.M_plus
    with pytest.raises(ValueError):
        edge_probe(HilbertFunction((1, 2)), STANDARD)


def test_edge_probe_deterministic():
    h = HilbertFunction((1, 2, 2, 1))
    a = edge_probe(h, STANDARD, GF, seed=5)
    b = edge_probe(h, STANDARD, GF, seed=5)
    assert a == b and a.found


def test_staircase_to_ideal_rejects_non_ideals():
    with pytest.raises(ValueError):
        staircase_to_ideal({Monomial(0, 0), Monomial(2, 0)})


def dual_bases(ground, vectors, field):
    """Oracle via duality: E is a basis iff the complement of E indexes a
    nonsingular maximal minor of a generator matrix of the span."""
    from hilbspine.polyring import rank, row_echelon

    n = len(ground)
    gen = [row for row in row_echelon(vectors, field)[0] if any(row)] if vectors else []
    k = len(gen)
    out = set()
    for S in combinations(range(n), k):
        if rank([[row[c] for c in S] for row in gen], field) == k if k else True:
            out.add(frozenset(range(n)) - frozenset(S))
    return out


def test_matroid_axioms_on_produced_matroids():
    rng = random.Random(2)
    for M in enumerate_ideals(6):
        for g in (STANDARD, Grading(1, 2), G23):
            F = universal_generators(M, g)
            J = specialize_ideal(M, g, random_point(F, GF, rng), GF, F)
            for d in range(J.hf.dmax + 1):
                m = matroid_of_degree(J, d)
                assert m.satisfies_basis_exchange()
                assert m.rank == J.hf[d]
                assert set(m.bases) == dual_bases(m.ground, J.basis_vectors(d), GF)
                for C in m.circuits:
                    assert not m.is_independent(C)
                    assert all(m.is_independent(C - {e}) for e in C)


def test_matroid_dict_roundtrip():
    J = specialize_ideal(make_ideal((7, 1, 1, 1)), G23, {(2, 2): 1}, Q)
    m = matroid_of_degree(J, 12)
    data = m.to_dict()
    assert data["circuits"] == [["x^3*y^2"], ["x^6", "y^4"]]
    assert data["uniform"] is False and data["loops"] == ["x^3*y^2"]
    assert Matroid.from_dict(data) == m
