"""Monomial ideals of finite colength in K[x, y], encoded as staircases.

An ideal is stored as the row lengths of its staircase (a partition): row ``j``
holds the monomials ``x^i y^j`` with ``i < lam[j]`` that are *not* in the
ideal.  Everything else (generators, lcms, graded Hilbert functions) is derived.

Monomials are compared lexicographically with ``x < y``: the y-exponent is
compared first, so pure powers of x are the smallest monomials of a degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Iterator, Sequence


@total_ordering
@dataclass(frozen=True, slots=True)
class Monomial:
    """The monomial ``x^i y^j``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i < 0 or self.j < 0:
            raise ValueError(f"negative exponent in x^{self.i}*y^{self.j}")

    def __lt__(self, other: Monomial) -> bool:
        return (self.j, self.i) < (other.j, other.i)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.i + other.i, self.j + other.j)

    def divides(self, other: Monomial) -> bool:
        return self.i <= other.i and self.j <= other.j

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(self.i, other.i), max(self.j, other.j))

    def __str__(self) -> str:
        parts = []
        for var, e in (("x", self.i), ("y", self.j)):
            if e == 1:
                parts.append(var)
            elif e > 1:
                parts.append(f"{var}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"

    @classmethod
    def parse(cls, text: str) -> Monomial:
        text = text.strip().replace(" ", "")
        if text == "1":
            return cls(0, 0)
        i = j = 0
        for factor in text.split("*"):
            var, _, exp = factor.partition("^")
            e = int(exp) if exp else 1
            if var == "x":
                i += e
            elif var == "y":
                j += e
            else:
                raise ValueError(f"cannot parse monomial {text!r}")
        return cls(i, j)


@dataclass(frozen=True, slots=True)
class Grading:
    """Positive weights ``deg(x) = a``, ``deg(y) = b``, normalized to be coprime."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise ValueError(f"grading weights must be positive, got ({self.a},{self.b})")
        g = math.gcd(self.a, self.b)
        if g > 1:
            object.__setattr__(self, "a", self.a // g)
            object.__setattr__(self, "b", self.b // g)

    def degree(self, m: Monomial) -> int:
        return self.a * m.i + self.b * m.j

    def shift(self, m: Monomial, ell: int) -> Monomial | None:
        """Apply ``r^ell`` with ``r = x^b / y^a``; None when it leaves S."""
        i = m.i + ell * self.b
        j = m.j - ell * self.a
        if i < 0 or j < 0:
            return None
        return Monomial(i, j)

    def shift_length(self, src: Monomial, dst: Monomial) -> int | None:
        """The ``ell`` with ``dst = src * r^ell``, or None if there is none."""
        di, dj = dst.i - src.i, src.j - dst.j
        if di % self.b or dj % self.a:
            return None
        ell = di // self.b
        return ell if ell * self.a == dj else None

    def __str__(self) -> str:
        return f"{self.a},{self.b}"

    @classmethod
    def parse(cls, text: str) -> Grading:
        a, b = (int(t) for t in text.split(","))
        return cls(a, b)


STANDARD = Grading(1, 1)


@dataclass(frozen=True, slots=True)
class HilbertFunction:
    """Finitely supported ``h: Z>=0 -> Z>=0``; trailing zeros are dropped."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        vals = tuple(int(v) for v in self.values)
        if any(v < 0 for v in vals):
            raise ValueError("Hilbert function values must be nonnegative")
        while vals and vals[-1] == 0:
            vals = vals[:-1]
        object.__setattr__(self, "values", vals)

    def __getitem__(self, d: int) -> int:
        return self.values[d] if 0 <= d < len(self.values) else 0

    @property
    def total(self) -> int:
        return sum(self.values)

    @property
    def dmax(self) -> int:
        return len(self.values) - 1

    def __str__(self) -> str:
        return ",".join(map(str, self.values))

    @classmethod
    def parse(cls, text: str) -> HilbertFunction:
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))


@dataclass(frozen=True)
class MonomialIdeal:
    """A finite-colength monomial ideal given by its staircase rows."""

    lam: tuple[int, ...]
    _rows: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        lam = tuple(int(v) for v in self.lam)
        if not lam:
            raise ValueError("empty partition: the unit ideal has colength 0")
        if any(v < 1 for v in lam):
            raise ValueError(f"partition entries must be positive: {lam}")
        if any(lam[k] < lam[k + 1] for k in range(len(lam) - 1)):
            raise ValueError(f"partition must be weakly decreasing: {lam}")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "_rows", len(lam))

    def __contains__(self, m: Monomial | None) -> bool:
        if m is None:
            return False
        return m.j >= self._rows or m.i >= self.lam[m.j]

    @property
    def colength(self) -> int:
        return sum(self.lam)

    @cached_property
    def generators(self) -> tuple[Monomial, ...]:
        """Minimal generators ``m_0 < ... < m_e``; ``m_0`` is a power of x."""
        gens = [Monomial(self.lam[0], 0)]
        for j in range(1, self._rows):
            if self.lam[j] < self.lam[j - 1]:
                gens.append(Monomial(self.lam[j], j))
        gens.append(Monomial(0, self._rows))
        return tuple(gens)

    @property
    def e(self) -> int:
        return len(self.generators) - 1

    @cached_property
    def lcms(self) -> tuple[Monomial | None, ...]:
        """``w_k = lcm(m_k, m_{k-1})``; index 0 is a placeholder."""
        g = self.generators
        return (None,) + tuple(g[k].lcm(g[k - 1]) for k in range(1, len(g)))

    def staircase(self) -> Iterator[Monomial]:
        for j, row in enumerate(self.lam):
            for i in range(row):
                yield Monomial(i, j)

    def transpose(self) -> MonomialIdeal:
        return MonomialIdeal(conjugate_partition(self.lam))

    def j_plus(self, m: Monomial) -> int:
        """Largest generator index dividing ``m``."""
        idx = [k for k, g in enumerate(self.generators) if g.divides(m)]
        if not idx:
            raise ValueError(f"{m} is not in the ideal {self}")
        return idx[-1]

    def j_minus(self, m: Monomial) -> int:
        """Smallest generator index dividing ``m``."""
        for k, g in enumerate(self.generators):
            if g.divides(m):
                return k
        raise ValueError(f"{m} is not in the ideal {self}")

    def __str__(self) -> str:
        return ",".join(map(str, self.lam))

    def generator_string(self) -> str:
        return "<" + ", ".join(map(str, self.generators)) + ">"

    @classmethod
    def parse(cls, text: str) -> MonomialIdeal:
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))


def make_ideal(lam: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(tuple(lam))


def conjugate_partition(lam: Sequence[int]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v > c) for c in range(lam[0]))


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in reverse-lexicographic order, ``(n,)`` first."""
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        # strip trailing ones, then decrement the last part > 1
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        a[-1] -= 1
        rest = ones + 1
        part = a[-1]
        while rest > part:
            a.append(part)
            rest -= part
        a.append(rest)


def enumerate_ideals(n: int) -> list[MonomialIdeal]:
    if n < 1:
        raise ValueError("colength must be at least 1")
    return [MonomialIdeal(p) for p in partitions(n)]


def monomials_of_degree(g: Grading, d: int) -> list[Monomial]:
    """Degree-``d`` monomials, increasing in the x < y order."""
    if d < 0:
        return []
    out = []
    for j in range(d // g.b + 1):
        rest = d - g.b * j
        if rest % g.a == 0:
            out.append(Monomial(rest // g.a, j))
    return out


def ideal_monomials_of_degree(M: MonomialIdeal, g: Grading, d: int) -> list[Monomial]:
    return [m for m in monomials_of_degree(g, d) if m in M]


def graded_hilbert_function(M: MonomialIdeal, g: Grading) -> HilbertFunction:
    counts: dict[int, int] = {}
    for m in M.staircase():
        d = g.degree(m)
        counts[d] = counts.get(d, 0) + 1
    top = max(counts)
    return HilbertFunction(tuple(counts.get(d, 0) for d in range(top + 1)))


def ideals_with_hf(h: HilbertFunction, g: Grading) -> list[MonomialIdeal]:
    if h.total == 0:
        return []
    # cheap necessary condition before enumerating partitions
    if any(h[d] > len(monomials_of_degree(g, d)) for d in range(h.dmax + 1)):
        return []
    return [M for M in enumerate_ideals(h.total) if graded_hilbert_function(M, g) == h]
