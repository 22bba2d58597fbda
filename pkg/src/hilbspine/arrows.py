"""Significant arrows, paths and the universal family over a cell.

Throughout, ``r`` is the Laurent monomial ``x^b / y^a`` of the grading and an
arrow ``(i, l)`` moves the generator ``m_i`` to ``m_i * r^l``.  The universal
family is stored carrier-wise: ``f_i`` maps ``l`` to the coefficient of the
carrier monomial ``m_i * r^l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .polyring import ONE, ZERO, CPolynomial, Mono, mono_mul
from .staircase import Grading, Monomial, MonomialIdeal


class Arrow(NamedTuple):
    i: int
    ell: int

    @property
    def var(self) -> tuple[int, int]:
        return (self.i, self.ell)

    def __str__(self) -> str:
        return f"({self.i},{self.ell})"


class Path(NamedTuple):
    steps: tuple[Arrow, ...]

    @property
    def length(self) -> int:
        return sum(a.ell for a in self.steps)

    @property
    def monomial(self) -> Mono:
        return tuple(sorted((a.var for a in self.steps), reverse=True))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.steps)) + ")"


def positive_arrows(M: MonomialIdeal, g: Grading) -> tuple[Arrow, ...]:
    """``T^+(M)``, sorted by generator index then length."""
    out = []
    for i in range(1, M.e + 1):
        m, w = M.generators[i], M.lcms[i]
        for ell in range(1, m.j // g.a + 1):
            if g.shift(m, ell) not in M and g.shift(w, ell) in M:
                out.append(Arrow(i, ell))
    return tuple(out)


def negative_arrows(M: MonomialIdeal, g: Grading) -> tuple[Arrow, ...]:
    """``T^-(M)``; lengths are negative."""
    out = []
    for i in range(0, M.e):
        m, w = M.generators[i], M.lcms[i + 1]
        for k in range(1, m.i // g.b + 1):
            if g.shift(m, -k) not in M and g.shift(w, -k) in M:
                out.append(Arrow(i, -k))
    return tuple(sorted(out))


def arrow_target(M: MonomialIdeal, g: Grading, arrow: Arrow) -> int:
    """``j^+(w_i r^l)``: the generator a path continues from after ``arrow``."""
    return M.j_plus(g.shift(M.lcms[arrow.i], arrow.ell))


def _arrows_by_index(M: MonomialIdeal, g: Grading) -> dict[int, list[Arrow]]:
    table: dict[int, list[Arrow]] = {}
    for a in positive_arrows(M, g):
        table.setdefault(a.i, []).append(a)
    return table


def all_paths_from(M: MonomialIdeal, g: Grading, k: int) -> list[Path]:
    """Every path from ``m_k``, including the empty one.

    Listed with first steps in decreasing ``(i, l)``, recursively; the index
    of the generator strictly drops after each step, so the set is finite.
    """
    arrows = sorted(positive_arrows(M, g), reverse=True)
    targets = {a: arrow_target(M, g, a) for a in arrows}
    memo: dict[int, list[tuple[Arrow, ...]]] = {}

    def walk(top: int) -> list[tuple[Arrow, ...]]:
        if top in memo:
            return memo[top]
        out: list[tuple[Arrow, ...]] = [()]
        for a in arrows:
            if a.i <= top:
                out.extend((a,) + tail for tail in walk(targets[a]))
        memo[top] = out
        return out

    return [Path(steps) for steps in walk(k)]


def paths_from(M: MonomialIdeal, g: Grading, k: int, ell: int) -> list[Path]:
    if not 0 <= k <= M.e:
        raise ValueError(f"generator index {k} out of range 0..{M.e}")
    return [p for p in all_paths_from(M, g, k) if p.length == ell]


def _z_sequence(M: MonomialIdeal, g: Grading, k: int) -> list[Arrow]:
    """Greedy longest-arrow chain from ``m_k`` used to build direct paths."""
    longest: dict[int, int] = {}
    for a in positive_arrows(M, g):
        longest[a.i] = max(longest.get(a.i, 0), a.ell)
    z: list[Arrow] = []
    i = k
    while i > 0:
        ell = longest.get(i, 0)
        if ell > 0:
            a = Arrow(i, ell)
            z.append(a)
            i = arrow_target(M, g, a)
        else:
            i -= 1
    return z


def direct_path(M: MonomialIdeal, g: Grading, k: int, ell: int) -> Path | None:
    """The direct path ``p_{k,ell}`` from ``m_k``, or None when there is none."""
    if ell < 1:
        raise ValueError("direct paths have positive length")
    arrows = set(positive_arrows(M, g))
    z = _z_sequence(M, g, k)
    used = 0
    for s, step in enumerate(z):
        rest = ell - used
        if rest < step.ell:
            # a shorter final arrow at the index of z_{s+1}
            last = Arrow(step.i, rest)
            if last not in arrows:
                return None
            return Path(tuple(z[:s]) + (last,))
        used += step.ell
        if used == ell:
            return Path(tuple(z[: s + 1]))
    return None


@dataclass(frozen=True)
class UniversalFamily:
    """Generators ``f_0..f_e`` of the universal ideal over the cell of ``M``."""

    M: MonomialIdeal
    g: Grading
    arrows: tuple[Arrow, ...]
    fs: tuple[dict[int, CPolynomial], ...]

    def terms(self, i: int) -> list[tuple[Monomial, CPolynomial]]:
        """``(carrier, coefficient)`` pairs of ``f_i``, leading term first."""
        m = self.M.generators[i]
        return [(self.g.shift(m, ell), c) for ell, c in sorted(self.fs[i].items())]

    def coefficient(self, i: int, carrier: Monomial) -> CPolynomial:
        ell = self.g.shift_length(self.M.generators[i], carrier)
        if ell is None:
            return ZERO
        return self.fs[i].get(ell, ZERO)

    def variables(self) -> list[tuple[int, int]]:
        return [a.var for a in self.arrows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniversalFamily):
            return NotImplemented
        return (self.M, self.g, self.fs) == (other.M, other.g, other.fs)

    def __hash__(self) -> int:
        return hash((self.M, self.g))

    def format(self, i: int) -> str:
        parts = []
        for carrier, c in self.terms(i):
            cs = str(c)
            if cs == "1":
                parts.append(str(carrier))
            elif len(c.terms) == 1 and list(c.terms.values())[0] == 1:
                parts.append(f"{cs}*{carrier}")
            else:
                parts.append(f"({cs})*{carrier}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return "\n".join(f"f_{i} = {self.format(i)}" for i in range(len(self.fs)))


def universal_generators(M: MonomialIdeal, g: Grading) -> UniversalFamily:
    """Recursive construction ``f_i = (m_i/m_{i-1}) f_{i-1} + sum c_i^l (...) f_{j^+(w_i r^l)}``."""
    arrows = positive_arrows(M, g)
    by_index = _arrows_by_index(M, g)
    fs: list[dict[int, CPolynomial]] = [{0: ONE}]
    for i in range(1, M.e + 1):
        # multiplying by m_i/m_{i-1} keeps the r-shift of every carrier
        f = dict(fs[i - 1])
        for a in by_index.get(i, []):
            c = CPolynomial.var(*a.var)
            for ell, coeff in fs[arrow_target(M, g, a)].items():
                key = ell + a.ell
                f[key] = f.get(key, ZERO) + c * coeff
        fs.append({ell: p for ell, p in f.items() if p})
    return UniversalFamily(M, g, arrows, tuple(fs))


def universal_generators_pathsum(M: MonomialIdeal, g: Grading) -> UniversalFamily:
    """Same family, built as ``f_i = sum over paths P from m_i of c_P m_i r^l(P)``."""
    arrows = positive_arrows(M, g)
    fs = []
    for i in range(M.e + 1):
        acc: dict[int, dict[Mono, int]] = {}
        for p in all_paths_from(M, g, i):
            bucket = acc.setdefault(p.length, {})
            bucket[p.monomial] = bucket.get(p.monomial, 0) + 1
        fs.append({ell: CPolynomial(t) for ell, t in acc.items()})
    return UniversalFamily(M, g, arrows, tuple(fs))


def path_sum(paths: list[Path]) -> CPolynomial:
    out: dict[Mono, int] = {}
    for p in paths:
        out[p.monomial] = out.get(p.monomial, 0) + 1
    return CPolynomial(out)


def path_monomial(path: Path | None) -> Mono:
    return () if path is None else path.monomial


__all__ = [
    "Arrow",
    "Path",
    "UniversalFamily",
    "all_paths_from",
    "arrow_target",
    "direct_path",
    "negative_arrows",
    "path_sum",
    "paths_from",
    "positive_arrows",
    "universal_generators",
    "universal_generators_pathsum",
]
