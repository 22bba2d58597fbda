from __future__ import annotations

from itertools import permutations

import pytest

from hilbspine.arrows import negative_arrows, positive_arrows
from hilbspine.poset import (
    EmptyFiberError,
    _slices,
    coprime_gradings,
    dominance_leq,
    fibers,
    lex_extremes,
    poset_hasse,
    spine_graph,
)
from hilbspine.staircase import (
    STANDARD,
    Grading,
    HilbertFunction,
    enumerate_ideals,
    make_ideal,
)

FIG3_H, FIG3_G = HilbertFunction((1, 1, 2, 1, 1)), Grading(1, 2)


def matching_leq(M, M2, g, dmax):
    """Oracle: a degree-preserving bijection phi: M_d -> M2_d with phi(m) <= m, by brute force.

    The lex-least ideal of a fibre holds the lex-largest monomials in every degree.
    """
    for A, B in zip(_slices(M, g, dmax), _slices(M2, g, dmax)):
        if len(A) != len(B):
            return False
        if not any(all(b <= a for a, b in zip(A, perm)) for perm in permutations(B)):
            return False
    return True


def test_dominance_examples():
    assert dominance_leq(make_ideal((5, 1)), make_ideal((3, 3)), FIG3_G)
    assert not dominance_leq(make_ideal((4, 1, 1)), make_ideal((3, 3)), FIG3_G)
    assert not dominance_leq(make_ideal((3, 3)), make_ideal((4, 1, 1)), FIG3_G)
    M = make_ideal((6, 4, 2, 1))
    assert dominance_leq(M, M, STANDARD)


def test_dominance_needs_same_hf():
    with pytest.raises(ValueError):
        dominance_leq(make_ideal((4,)), make_ideal((2, 2)), STANDARD)


def test_dominance_matches_matching_oracle():
    for N in range(1, 7):
        ideals = enumerate_ideals(N)
        for g in coprime_gradings(N):
            for h, fiber in fibers(ideals, g).items():
                if len(fiber) > 4:
                    continue
                for M in fiber:
                    for M2 in fiber:
                        assert dominance_leq(M, M2, g) == matching_leq(M, M2, g, h.dmax)


def test_lex_extremes_examples():
    lo, hi = lex_extremes(FIG3_H, FIG3_G)
    assert (lo.lam, hi.lam) == ((5, 1), (3, 2, 1))
    lo, hi = lex_extremes(HilbertFunction((1, 2, 1)), STANDARD)
    assert (lo.lam, hi.lam) == ((3, 1), (2, 1, 1))
    with pytest.raises(EmptyFiberError):
        lex_extremes(HilbertFunction((2,)), STANDARD)


def test_lex_extremes_two_three_example():
    from hilbspine.staircase import graded_hilbert_function

    g = Grading(2, 3)
    h = graded_hilbert_function(make_ideal((10, 7, 7, 2, 2, 1)), g)
    lo, hi = lex_extremes(h, g)
    assert (lo.lam, hi.lam) == ((10, 7, 7, 2, 2, 1), (9, 5, 5, 4, 4, 1, 1))


def test_one_two_graded_diamond():
    P = poset_hasse(FIG3_H, FIG3_G)
    names = [M.lam for M in P.elements]
    covers = {(names[a], names[b]) for a, b in P.hasse}
    assert covers == {
        ((5, 1), (4, 1, 1)),
        ((5, 1), (3, 3)),
        ((4, 1, 1), (3, 2, 1)),
        ((3, 3), (3, 2, 1)),
    }


def test_chain_and_singleton():
    P = poset_hasse(HilbertFunction((1, 2, 1)), STANDARD)
    names = [M.lam for M in P.elements]
    assert {(names[a], names[b]) for a, b in P.hasse} == {((3, 1), (2, 2)), ((2, 2), (2, 1, 1))}
    P = poset_hasse(HilbertFunction((1, 2)), STANDARD)
    assert len(P.elements) == 1 and P.hasse == []


def test_extremes_are_the_arrowless_ideals():
    gradings = [STANDARD, Grading(1, 2), Grading(2, 3), Grading(3, 1)]
    for N in range(1, 9):
        ideals = enumerate_ideals(N)
        for g in gradings:
            for h, fiber in fibers(ideals, g).items():
                lo, hi = lex_extremes(h, g)
                assert [M for M in fiber if not negative_arrows(M, g)] == [lo]
                assert [M for M in fiber if not positive_arrows(M, g)] == [hi]
                for M in fiber:
                    assert dominance_leq(lo, M, g) and dominance_leq(M, hi, g)


def test_standard_grading_extremes_transpose():
    for N in range(1, 9):
        for h in fibers(enumerate_ideals(N), STANDARD):
            lo, hi = lex_extremes(h, STANDARD)
            assert hi == lo.transpose()
            # w_k / m_{k-1} = y on the lex-least ideal
            for k in range(1, lo.e + 1):
                w, m = lo.lcms[k], lo.generators[k - 1]
                assert (w.i - m.i, w.j - m.j) == (0, 1)


def test_spine_small_cases():
    assert (len(spine_graph(1).vertices), len(spine_graph(1).edges)) == (1, 0)
    s2 = spine_graph(2)
    assert {frozenset(M.lam for M in e) for e in s2.edge_set()} == {frozenset({(2,), (1, 1)})}
    s4 = spine_graph(4)
    assert {frozenset(M.lam for M in e) for e in s4.edge_set()} == {
        frozenset({(4,), (3, 1)}),
        frozenset({(4,), (2, 2)}),
        frozenset({(4,), (1, 1, 1, 1)}),
        frozenset({(3, 1), (2, 1, 1)}),
        frozenset({(2, 2), (1, 1, 1, 1)}),
        frozenset({(2, 1, 1), (1, 1, 1, 1)}),
    }


def test_spine_golden_counts():
    # frozen regression values from the exhaustive grading sweep
    assert [len(spine_graph(N).edges) for N in range(1, 9)] == [0, 1, 3, 6, 13, 17, 37, 54]
    assert len(spine_graph(6).vertices) == 11


def test_grading_bound_is_enough():
    for N in range(2, 7):
        assert spine_graph(N).edge_set() == spine_graph(N, max_weight=3 * N).edge_set()


def test_witnesses_are_fibre_extremes():
    for N in range(2, 7):
        spine = spine_graph(N)
        for (u, v), ws in spine.edges.items():
            for w in ws:
                lo, hi = lex_extremes(w.hf, w.grading)
                assert {lo, hi} == {spine.vertices[u], spine.vertices[v]}


def test_each_edge_has_one_witness():
    # fibres over different (grading, Hilbert function) pairs contribute disjoint edges
    for N in range(2, 8):
        assert all(len(ws) == 1 for ws in spine_graph(N).edges.values())
