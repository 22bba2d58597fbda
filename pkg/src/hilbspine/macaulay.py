"""Symbolic Macaulay matrices of the universal family and their maximal minors.

Column ``m`` (a degree-``d`` monomial of ``M``) holds the coefficients of
``g_m = (m / m_{j^-(m)}) f_{j^-(m)}``; rows are all degree-``d`` monomials.
Rows and columns are both increasing in the x < y order.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace

from .arrows import UniversalFamily, direct_path, negative_arrows, universal_generators
from .polyring import ONE, ZERO, CPolynomial, Mono, Var, maximal_minors, mono_mul, mono_str
from .staircase import (
    STANDARD,
    Grading,
    Monomial,
    MonomialIdeal,
    graded_hilbert_function,
    monomials_of_degree,
)

DEFAULT_MAX_MINORS = 10**6


class MinorGuardError(RuntimeError):
    """Too many maximal minors requested; raised instead of truncating."""


class CertificateError(RuntimeError):
    """A direct-path certificate could not be produced or did not check out."""


def max_minors_from_env() -> int:
    raw = os.environ.get("HILB_SPINE_MAX_MINORS")
    return int(raw) if raw else DEFAULT_MAX_MINORS


@dataclass
class MacaulayMatrix:
    M: MonomialIdeal
    g: Grading
    d: int
    rows: list[Monomial]
    cols: list[Monomial]
    entries: list[list[CPolynomial]]
    killed: frozenset[Var] = field(default_factory=frozenset)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)

    def entry(self, row: Monomial, col: Monomial) -> CPolynomial:
        return self.entries[self.rows.index(row)][self.cols.index(col)]

    def submatrix(self, row_idx: tuple[int, ...]) -> list[list[CPolynomial]]:
        return [self.entries[r] for r in row_idx]

    def bordered(self) -> str:
        """Text dump with monomial labels on the border."""
        head = [""] + [str(c) for c in self.cols]
        body = [[str(r)] + [str(e) for e in row] for r, row in zip(self.rows, self.entries)]
        table = [head] + body
        widths = [max(len(t[k]) for t in table) for k in range(len(head))]
        return "\n".join(
            "  ".join(cell.rjust(w) if k else cell.ljust(w) for k, (cell, w) in enumerate(zip(t, widths)))
            for t in table
        )


def macaulay_matrix(
    M: MonomialIdeal, g: Grading, d: int, family: UniversalFamily | None = None
) -> MacaulayMatrix:
    fam = family or universal_generators(M, g)
    rows = monomials_of_degree(g, d)
    cols = [m for m in rows if m in M]
    pos = {m: k for k, m in enumerate(rows)}
    entries = [[ZERO] * len(cols) for _ in rows]
    for c, m in enumerate(cols):
        for ell, coeff in fam.fs[M.j_minus(m)].items():
            entries[pos[g.shift(m, ell)]][c] = coeff
    return MacaulayMatrix(M, g, d, rows, cols, entries)


def is_lex_least(M: MonomialIdeal, g: Grading) -> bool:
    return not negative_arrows(M, g)


def quotient_variables(R: MacaulayMatrix) -> frozenset[Var]:
    """``Y``: arrow variables with index above ``j^-(m*)``, ``m*`` the first column."""
    k = R.M.j_minus(R.cols[0])
    fam = universal_generators(R.M, R.g)
    return frozenset(v for v in fam.variables() if v[0] > k)


def bar_quotient(R: MacaulayMatrix) -> MacaulayMatrix:
    """Base change of ``R`` to the quotient setting ``Y`` to zero."""
    if R.g != STANDARD:
        raise ValueError("the bar quotient needs the standard (1,1) grading")
    if not is_lex_least(R.M, R.g):
        raise ValueError(f"{R.M} is not the lex-least ideal of its Hilbert function")
    if not R.cols:
        raise ValueError(f"{R.M} has no monomials in degree {R.d}")
    Y = quotient_variables(R)
    entries = [[e.set_zero(Y) for e in row] for row in R.entries]
    return replace(R, entries=entries, killed=R.killed | Y)


@dataclass(frozen=True)
class Certificate:
    rows: tuple[int, ...]
    lengths: tuple[int, ...]
    Q: Mono
    determinant: CPolynomial
    q_coefficient: int

    @property
    def leading(self) -> tuple[Mono, int] | None:
        return self.determinant.leading_term() if self.determinant else None

    @property
    def q_is_leading(self) -> bool:
        lead = self.leading
        return lead is not None and lead == (self.Q, 1)


def direct_path_certificate(
    Rbar: MacaulayMatrix, rows: tuple[int, ...], det: CPolynomial | None = None
) -> Certificate:
    """Direct-path product ``Q`` of the square submatrix of ``Rbar`` on ``rows``.

    Raises CertificateError when a diagonal direct path is missing or when
    ``Q`` does not occur in the minor with coefficient exactly 1.
    """
    n0 = len(Rbar.cols)
    if len(rows) != n0 or list(rows) != sorted(set(rows)):
        raise ValueError(f"need {n0} distinct increasing row indices, got {rows}")
    k = Rbar.M.j_minus(Rbar.cols[0])
    lengths = []
    Q: Mono = ()
    for r, col in zip(rows, Rbar.cols):
        ell = Rbar.g.shift_length(col, Rbar.rows[r])
        if ell is None or ell < 0:
            raise CertificateError(f"row {Rbar.rows[r]} lies below the diagonal at column {col}")
        lengths.append(ell)
        if ell:
            p = direct_path(Rbar.M, Rbar.g, k, ell)
            if p is None:
                raise CertificateError(f"no direct path of length {ell} from m_{k} in {Rbar.M}")
            Q = mono_mul(Q, p.monomial)
    if det is None:
        det = maximal_minors(Rbar.submatrix(rows))[tuple(range(n0))]
    coeff = det.coefficient(Q)
    if coeff != 1:
        raise CertificateError(
            f"Q = {mono_str(Q)} has coefficient {coeff} in the minor on rows {rows}"
        )
    return Certificate(tuple(rows), tuple(lengths), Q, det, coeff)


@dataclass
class MinorRecord:
    rows: tuple[Monomial, ...]
    nonzero: bool
    leading: str
    Q: str
    q_coefficient: int
    q_is_leading: bool


@dataclass
class MinorReport:
    M: MonomialIdeal
    d: int
    minor_count: int
    all_nonzero: bool
    certificates_ok: bool
    q_always_leading: bool
    records: list[MinorRecord]


def verify_minors_nonzero(
    M_minus: MonomialIdeal, d: int, max_minors: int | None = None
) -> MinorReport:
    """Compute every maximal minor of ``R`` and of its bar quotient, symbolically."""
    g = STANDARD
    if not is_lex_least(M_minus, g):
        raise ValueError(f"{M_minus} is not lex-least for the standard grading")
    h = graded_hilbert_function(M_minus, g)
    if h[d] >= d + 1:
        raise ValueError(f"h({d}) = {h[d]} leaves no ideal monomials in degree {d}")
    n0 = d + 1 - h[d]
    count = math.comb(d + 1, n0)
    cap = max_minors_from_env() if max_minors is None else max_minors
    if count > cap:
        raise MinorGuardError(f"{count} maximal minors exceed the guard {cap}")
    R = macaulay_matrix(M_minus, g, d)
    Rbar = bar_quotient(R)
    full = maximal_minors(R.entries)
    bar = maximal_minors(Rbar.entries)
    records = []
    certs_ok = True
    q_lead = True
    for rows, minor in full.items():
        try:
            cert = direct_path_certificate(Rbar, rows, bar[rows])
            qc, is_lead, qs = cert.q_coefficient, cert.q_is_leading, mono_str(cert.Q)
        except CertificateError:
            qc, is_lead, qs = 0, False, "-"
            certs_ok = False
        q_lead &= is_lead
        lead = mono_str(bar[rows].leading_term()[0]) if bar[rows] else "-"
        records.append(
            MinorRecord(tuple(R.rows[r] for r in rows), bool(minor), lead, qs, qc, is_lead)
        )
    return MinorReport(
        M_minus,
        d,
        count,
        all(r.nonzero for r in records),
        certs_ok,
        q_lead,
        records,
    )


__all__ = [
    "Certificate",
    "CertificateError",
    "MacaulayMatrix",
    "MinorGuardError",
    "MinorReport",
    "bar_quotient",
    "direct_path_certificate",
    "macaulay_matrix",
    "verify_minors_nonzero",
]
