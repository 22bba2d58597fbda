"""Points of a cell: specialized ideals, initial ideals, matroids and edge probes."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .arrows import UniversalFamily, universal_generators
from .matroid import Matroid
from .polyring import Field, PrimeField, RationalField, Var, rank, row_echelon
from .poset import lex_extremes
from .staircase import (
    Grading,
    HilbertFunction,
    Monomial,
    MonomialIdeal,
    graded_hilbert_function,
    ideals_with_hf,
    monomials_of_degree,
)

LEX_X_LT_Y = "x<y"
LEX_Y_LT_X = "y<x"
RNG_NAME = "MT19937 (python random.Random)"


@dataclass
class SpecializedIdeal:
    """The universal family of ``M`` evaluated at a point of its cell."""

    M: MonomialIdeal
    g: Grading
    field: Field
    point: dict[Var, object]
    family: UniversalFamily = field(repr=False)

    @cached_property
    def hf(self) -> HilbertFunction:
        return graded_hilbert_function(self.M, self.g)

    @cached_property
    def generators(self) -> list[dict[Monomial, object]]:
        """Specialized ``f_i`` as carrier -> scalar maps (zero terms dropped)."""
        out = []
        for i in range(len(self.family.fs)):
            poly: dict[Monomial, object] = {}
            for carrier, coeff in self.family.terms(i):
                v = coeff.evaluate(self.point, self.field)
                if v != 0:
                    poly[carrier] = v
            out.append(poly)
        return out

    def _vector(self, poly: Mapping[Monomial, object], shift: Monomial, slice_: list[Monomial]):
        pos = {m: k for k, m in enumerate(slice_)}
        vec = [self.field.zero] * len(slice_)
        for m, v in poly.items():
            vec[pos[m * shift]] = v
        return vec

    def basis_vectors(self, d: int) -> list[list[object]]:
        """Coefficient vectors of ``g_m`` for ``m`` in ``M_d``: the columns of the Macaulay matrix."""
        slice_ = monomials_of_degree(self.g, d)
        out = []
        for m in slice_:
            if m in self.M:
                k = self.M.j_minus(m)
                mk = self.M.generators[k]
                out.append(self._vector(self.generators[k], Monomial(m.i - mk.i, m.j - mk.j), slice_))
        return out

    def multiple_vectors(self, d: int) -> list[list[object]]:
        """All degree-``d`` monomial multiples ``x^p y^q f_i``."""
        slice_ = monomials_of_degree(self.g, d)
        out = []
        for i, mi in enumerate(self.M.generators):
            rest = d - self.g.degree(mi)
            for s in monomials_of_degree(self.g, rest):
                out.append(self._vector(self.generators[i], s, slice_))
        return out


def specialize_ideal(
    M: MonomialIdeal,
    g: Grading,
    point: Mapping[Var, object],
    field: Field,
    family: UniversalFamily | None = None,
) -> SpecializedIdeal:
    fam = family or universal_generators(M, g)
    need = set(fam.variables())
    missing = need - set(point)
    if missing:
        raise KeyError(f"point does not assign {sorted(missing)}")
    extra = set(point) - need
    if extra:
        raise ValueError(f"{sorted(extra)} are not arrow variables of {M} under ({g})")
    pt = {v: field(x) for v, x in point.items()}
    return SpecializedIdeal(M, g, field, pt, fam)


def random_point(family: UniversalFamily, field: Field, rng: random.Random) -> dict[Var, object]:
    return {v: field.random(rng) for v in family.variables()}


def specialized_hilbert_function(J: SpecializedIdeal, extra_degrees: int | None = None) -> HilbertFunction:
    """``q_d - dim I_d`` from all monomial multiples of the generators.

    Degrees up to ``dmax + a*b`` are checked by default so that a failure of
    flatness just past ``dmax`` would show up as a nonzero tail.
    """
    top = J.hf.dmax + (J.g.a * J.g.b if extra_degrees is None else extra_degrees)
    vals = []
    for d in range(top + 1):
        q = len(monomials_of_degree(J.g, d))
        vecs = J.multiple_vectors(d)
        vals.append(q - (rank(vecs, J.field) if vecs else 0))
    return HilbertFunction(tuple(vals))


def _leading_monomials(vectors, slice_: list[Monomial], order: str, field: Field) -> set[Monomial]:
    if not vectors:
        return set()
    if order == LEX_X_LT_Y:
        perm = list(range(len(slice_)))[::-1]
    elif order == LEX_Y_LT_X:
        perm = list(range(len(slice_)))
    else:
        raise ValueError(f"unknown monomial order {order!r}")
    rows = [[v[k] for k in perm] for v in vectors]
    _, pivots = row_echelon(rows, field)
    return {slice_[perm[c]] for c in pivots}


def initial_ideal(J: SpecializedIdeal, order: str = LEX_X_LT_Y, basis: str = "macaulay") -> MonomialIdeal:
    """Initial ideal under a lex order, assembled degree by degree up to ``dmax``."""
    staircase: set[Monomial] = set()
    for d in range(J.hf.dmax + 1):
        slice_ = monomials_of_degree(J.g, d)
        vecs = J.basis_vectors(d) if basis == "macaulay" else J.multiple_vectors(d)
        lead = _leading_monomials(vecs, slice_, order, J.field)
        staircase.update(m for m in slice_ if m not in lead)
    return staircase_to_ideal(staircase)


def staircase_to_ideal(staircase: set[Monomial]) -> MonomialIdeal:
    for m in staircase:
        if (m.i and Monomial(m.i - 1, m.j) not in staircase) or (
            m.j and Monomial(m.i, m.j - 1) not in staircase
        ):
            raise ValueError(f"leading monomials do not form a monomial ideal (at {m})")
    rows = max(m.j for m in staircase) + 1
    lam = [sum(1 for m in staircase if m.j == j) for j in range(rows)]
    return MonomialIdeal(tuple(lam))


def matroid_of_degree(J: SpecializedIdeal, d: int) -> Matroid:
    return Matroid.from_columns(monomials_of_degree(J.g, d), J.basis_vectors(d), J.field)


def tropical_fingerprint(J: SpecializedIdeal) -> dict[int, Matroid]:
    return {d: matroid_of_degree(J, d) for d in range(J.hf.dmax + 1)}


@dataclass
class ProbeResult:
    hf: HilbertFunction
    grading: Grading
    M_minus: MonomialIdeal
    M_plus: MonomialIdeal
    field: str
    seed: int
    trials: int
    attempts: int
    witness: dict[Var, object] | None

    @property
    def found(self) -> bool:
        return self.witness is not None


def edge_probe(
    h: HilbertFunction,
    g: Grading,
    field: Field | None = None,
    trials: int = 10,
    seed: int = 0,
) -> ProbeResult:
    """Sample the cell of ``M^-`` for a point whose opposite initial ideal is ``M^+``.

    Failing to find one is not a proof that no such point exists.
    """
    field = field or PrimeField()
    if len(ideals_with_hf(h, g)) < 2:
        raise ValueError(f"the fibre of h={h} under ({g}) has fewer than two ideals")
    lo, hi = lex_extremes(h, g)
    fam = universal_generators(lo, g)
    rng = random.Random(seed)
    for attempt in range(1, trials + 1):
        pt = random_point(fam, field, rng)
        J = specialize_ideal(lo, g, pt, field, fam)
        if initial_ideal(J, LEX_Y_LT_X) == hi:
            return ProbeResult(h, g, lo, hi, field.name, seed, trials, attempt, pt)
    return ProbeResult(h, g, lo, hi, field.name, seed, trials, trials, None)


def field_from_prime(prime: int | None, bound: int = 10) -> Field:
    return PrimeField(prime) if prime else RationalField(bound)
