"""Graded dominance order, lex-least/lex-most ideals and the spine graph.

``M <= M2`` when, degree by degree, the monomials of ``M`` can be matched
bijectively to those of ``M2`` with every monomial of ``M`` at least as large
(x < y) as its partner.  On a totally ordered slice such a matching exists
iff the two slices, each sorted decreasingly, compare pointwise; this is the
test used here.

Only gradings ``(a, b)`` with ``a, b <= N`` can produce spine edges: two
distinct monomials in the ``[0, N]^2`` box share a degree only if
``a*di = b*dj`` with ``|di|, |dj| <= N``, and coprimality then forces
``b | di`` and ``a | dj``.  Larger gradings give singleton fibres.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arrows import negative_arrows, positive_arrows
from .staircase import (
    Grading,
    HilbertFunction,
    MonomialIdeal,
    enumerate_ideals,
    graded_hilbert_function,
    ideal_monomials_of_degree,
    ideals_with_hf,
)


class EmptyFiberError(ValueError):
    """No monomial ideal realizes the requested Hilbert function."""


def _slices(M: MonomialIdeal, g: Grading, dmax: int) -> list[list]:
    return [sorted(ideal_monomials_of_degree(M, g, d), reverse=True) for d in range(dmax + 1)]


def dominance_leq(M: MonomialIdeal, M2: MonomialIdeal, g: Grading) -> bool:
    h = graded_hilbert_function(M, g)
    if h != graded_hilbert_function(M2, g):
        raise ValueError(f"ideals {M} and {M2} have different Hilbert functions under ({g})")
    return _leq_slices(_slices(M, g, h.dmax), _slices(M2, g, h.dmax))


def _leq_slices(s1: list[list], s2: list[list]) -> bool:
    return all(p >= q for a, b in zip(s1, s2) for p, q in zip(a, b))


def _extremes_of(fiber: list[MonomialIdeal], g: Grading, h: HilbertFunction):
    sl = [_slices(M, g, h.dmax) for M in fiber]
    lo = hi = 0
    for k in range(1, len(fiber)):
        if _leq_slices(sl[k], sl[lo]):
            lo = k
        if _leq_slices(sl[hi], sl[k]):
            hi = k
    for k in range(len(fiber)):
        if not (_leq_slices(sl[lo], sl[k]) and _leq_slices(sl[k], sl[hi])):
            raise RuntimeError(f"fiber of h={h} under ({g}) has no unique extremes")
    return fiber[lo], fiber[hi]


def lex_extremes(h: HilbertFunction, g: Grading) -> tuple[MonomialIdeal, MonomialIdeal]:
    """``(M^-, M^+)``: the minimum and maximum of the dominance order on the fibre."""
    fiber = ideals_with_hf(h, g)
    if not fiber:
        raise EmptyFiberError(f"no monomial ideal has Hilbert function {h} under ({g})")
    lo, hi = _extremes_of(fiber, g, h)
    if negative_arrows(lo, g) or positive_arrows(hi, g):
        raise RuntimeError("dominance extremes disagree with the arrow characterization")
    return lo, hi


@dataclass
class DominancePoset:
    grading: Grading
    hf: HilbertFunction
    elements: list[MonomialIdeal]
    relation: list[list[bool]]
    hasse: list[tuple[int, int]]

    @property
    def minimum(self) -> MonomialIdeal:
        n = len(self.elements)
        return next(self.elements[i] for i in range(n) if all(self.relation[i]))

    @property
    def maximum(self) -> MonomialIdeal:
        n = len(self.elements)
        return next(
            self.elements[j] for j in range(n) if all(self.relation[i][j] for i in range(n))
        )


def poset_hasse(h: HilbertFunction, g: Grading) -> DominancePoset:
    fiber = ideals_with_hf(h, g)
    if not fiber:
        raise EmptyFiberError(f"no monomial ideal has Hilbert function {h} under ({g})")
    sl = [_slices(M, g, h.dmax) for M in fiber]
    n = len(fiber)
    rel = [[_leq_slices(sl[i], sl[j]) for j in range(n)] for i in range(n)]
    covers = []
    for i in range(n):
        for j in range(n):
            if i == j or not rel[i][j]:
                continue
            if not any(k not in (i, j) and rel[i][k] and rel[k][j] for k in range(n)):
                covers.append((i, j))
    return DominancePoset(g, h, fiber, rel, covers)


@dataclass(frozen=True)
class Witness:
    grading: Grading
    hf: HilbertFunction


@dataclass
class SpineGraph:
    colength: int
    vertices: list[MonomialIdeal]
    edges: dict[tuple[int, int], list[Witness]] = field(default_factory=dict)

    def edge_set(self) -> set[frozenset[MonomialIdeal]]:
        return {frozenset((self.vertices[u], self.vertices[v])) for u, v in self.edges}

    def __len__(self) -> int:
        return len(self.edges)


def coprime_gradings(bound: int) -> list[Grading]:
    return [
        Grading(a, b)
        for a in range(1, bound + 1)
        for b in range(1, bound + 1)
        if math.gcd(a, b) == 1
    ]


def fibers(ideals: list[MonomialIdeal], g: Grading) -> dict[HilbertFunction, list[MonomialIdeal]]:
    """Group ideals by graded Hilbert function, preserving input order."""
    out: dict[HilbertFunction, list[MonomialIdeal]] = {}
    for M in ideals:
        out.setdefault(graded_hilbert_function(M, g), []).append(M)
    return out


def spine_graph(N: int, max_weight: int | None = None) -> SpineGraph:
    """Spine on the partitions of ``N``, scanning coprime gradings in ``[1, max_weight]^2``."""
    vertices = enumerate_ideals(N)
    index = {M: k for k, M in enumerate(vertices)}
    spine = SpineGraph(N, vertices)
    for g in coprime_gradings(max_weight or N):
        for h, fiber in sorted(fibers(vertices, g).items(), key=lambda kv: kv[0].values):
            if len(fiber) < 2:
                continue
            lo, hi = _extremes_of(fiber, g, h)
            u, v = sorted((index[lo], index[hi]))
            spine.edges.setdefault((u, v), []).append(Witness(g, h))
    spine.edges = dict(sorted(spine.edges.items()))
    return spine
