"""Sparse integer polynomials in the arrow variables ``c_i^l``.

A variable is the pair ``(i, l)``.  A monomial is the tuple of its variables
listed in *decreasing* order with repetition, so ``c_2^1 c_1^1`` is
``((2, 1), (1, 1))`` and the unit monomial is ``()``.  With this encoding
plain tuple comparison is the lexicographic monomial order in which
``c_i^l > c_j^m`` iff ``i > j`` or ``i == j and l > m``, and it is also the
order used to print terms.
"""

from __future__ import annotations

import random
import re
from collections import Counter
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Var = tuple[int, int]
Mono = tuple[Var, ...]

DEFAULT_PRIME = 32003
DETERMINANT_SIZE_LIMIT = 16


def mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def mono_div(a: Mono, b: Mono) -> Mono | None:
    """``a / b`` if ``b`` divides ``a``."""
    ca = Counter(a)
    ca.subtract(b)
    if any(v < 0 for v in ca.values()):
        return None
    return tuple(sorted(ca.elements(), reverse=True))


def mono_degree(m: Mono) -> int:
    """Weighted degree with ``deg(c_i^l) = l``."""
    return sum(v[1] for v in m)


def mono_str(m: Mono) -> str:
    if not m:
        return "1"
    parts = []
    for v, e in _grouped(m):
        s = f"c({v[0]},{v[1]})"
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


def _grouped(m: Mono) -> list[tuple[Var, int]]:
    out: list[tuple[Var, int]] = []
    for v in m:
        if out and out[-1][0] == v:
            out[-1] = (v, out[-1][1] + 1)
        else:
            out.append((v, 1))
    return out


class CPolynomial:
    """Immutable polynomial over Z in the variables ``c_i^l``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = int(c)
        self.terms: dict[Mono, int] = clean
        self._hash: int | None = None

    @classmethod
    def const(cls, c: int) -> CPolynomial:
        return cls({(): c})

    @classmethod
    def var(cls, i: int, ell: int) -> CPolynomial:
        return cls({((i, ell),): 1})

    @classmethod
    def monomial(cls, m: Mono, c: int = 1) -> CPolynomial:
        return cls({m: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CPolynomial.const(other)
        if not isinstance(other, CPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: CPolynomial | int) -> CPolynomial:
        if isinstance(other, int):
            other = CPolynomial.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return CPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> CPolynomial:
        return CPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: CPolynomial | int) -> CPolynomial:
        if isinstance(other, int):
            other = CPolynomial.const(other)
        return self + (-other)

    def __rsub__(self, other: int) -> CPolynomial:
        return CPolynomial.const(other) - self

    def __mul__(self, other: CPolynomial | int) -> CPolynomial:
        if isinstance(other, int):
            return CPolynomial({m: c * other for m, c in self.terms.items()})
        if not self.terms or not other.terms:
            return ZERO
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return CPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> CPolynomial:
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v in m}

    def coefficient(self, m: Mono) -> int:
        return self.terms.get(m, 0)

    def leading_term(self) -> tuple[Mono, int]:
        """Largest monomial in the lex order described in the module docstring."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def weighted_degree(self) -> int | None:
        """Common weighted degree if homogeneous; None if inhomogeneous or zero."""
        degs = {mono_degree(m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def set_zero(self, variables: Iterable[Var]) -> CPolynomial:
        """Image in the quotient by the given variables."""
        kill = set(variables)
        if not kill:
            return self
        return CPolynomial({m: c for m, c in self.terms.items() if not kill.intersection(m)})

    def exact_div(self, other: CPolynomial) -> CPolynomial:
        """Quotient when ``other`` divides ``self``; raises ArithmeticError otherwise."""
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        lm, lc = other.leading_term()
        rem = dict(self.terms)
        quot: dict[Mono, int] = {}
        while rem:
            m = max(rem)
            c = rem[m]
            qm = mono_div(m, lm)
            if qm is None or c % lc:
                raise ArithmeticError("polynomial division is not exact")
            qc = c // lc
            quot[qm] = qc
            for om, oc in other.terms.items():
                t = mono_mul(qm, om)
                v = rem.get(t, 0) - qc * oc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return CPolynomial(quot)

    def evaluate(self, point: Mapping[Var, object], field: Field):
        missing = self.variables() - set(point)
        if missing:
            raise KeyError(f"point does not assign {sorted(missing)}")
        total = field.zero
        for m, c in self.terms.items():
            t = field(c)
            for v in m:
                t = field.mul(t, point[v])
            total = field.add(total, t)
        return total

    def sorted_terms(self) -> list[tuple[Mono, int]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not m:
                body = str(mag)
            elif mag == 1:
                body = mono_str(m)
            else:
                body = f"{mag}*{mono_str(m)}"
            out += (("-" if sign == "-" else "") if not out else sign) + body
        return out

    def __repr__(self) -> str:
        return f"CPolynomial({self})"

    @classmethod
    def parse(cls, text: str) -> CPolynomial:
        """Inverse of ``str``; accepts spaces around operators."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return ZERO
        if s[0] not in "+-":
            s = "+" + s
        out: dict[Mono, int] = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            coef = 1
            mono: list[Var] = []
            for factor in body.split("*"):
                mt = re.fullmatch(r"c\((\d+),(\d+)\)(?:\^(\d+))?", factor)
                if mt:
                    mono.extend([(int(mt[1]), int(mt[2]))] * int(mt[3] or 1))
                elif factor.isdigit():
                    coef *= int(factor)
                else:
                    raise ValueError(f"cannot parse polynomial factor {factor!r}")
            key = tuple(sorted(mono, reverse=True))
            out[key] = out.get(key, 0) + (-coef if sign == "-" else coef)
        return cls(out)


ZERO = CPolynomial()
ONE = CPolynomial.const(1)


# --------------------------------------------------------------------- fields


class Field:
    """Exact scalar field; elements are plain Python numbers."""

    name = "field"
    zero: object
    one: object

    def __call__(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return self(a + b)

    def sub(self, a, b):
        return self(a - b)

    def mul(self, a, b):
        return self(a * b)

    def neg(self, a):
        return self(-a)

    def inv(self, a):
        raise NotImplementedError

    def random(self, rng: random.Random):
        raise NotImplementedError


class RationalField(Field):
    """The rationals; random elements are integers in ``[-bound, bound]``."""

    def __init__(self, bound: int = 10):
        self.bound = bound
        self.name = "QQ"
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, a) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def random(self, rng: random.Random) -> Fraction:
        return Fraction(rng.randint(-self.bound, self.bound))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "RationalField()"


class PrimeField(Field):
    """GF(p) with elements stored as integers in ``[0, p)``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, a) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


def specialize(p: CPolynomial, point: Mapping[Var, object], field: Field):
    return p.evaluate(point, field)


def rank(rows: Sequence[Sequence[object]], field: Field) -> int:
    return len(row_echelon(rows, field)[1])


def row_echelon(rows: Sequence[Sequence[object]], field: Field):
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    A = [[field(x) for x in r] for r in rows]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(A)) if A[k][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = field.inv(A[r][c])
        A[r] = [field.mul(x, inv) for x in A[r]]
        for k in range(len(A)):
            if k != r and A[k][c] != 0:
                f = A[k][c]
                A[k] = [field.sub(x, field.mul(f, y)) for x, y in zip(A[k], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


# --------------------------------------------------------------- determinants


class DeterminantSizeError(ValueError):
    pass


def _check_square(A: Sequence[Sequence[CPolynomial]], limit: int) -> int:
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("determinant of a non-square matrix")
    if n > limit:
        raise DeterminantSizeError(f"{n}x{n} exceeds the determinant size limit {limit}")
    return n


def determinant(
    A: Sequence[Sequence[CPolynomial]],
    method: str = "laplace",
    limit: int = DETERMINANT_SIZE_LIMIT,
) -> CPolynomial:
    """Exact determinant by memoized Laplace expansion or Bareiss elimination."""
    n = _check_square(A, limit)
    if n == 0:
        return ONE
    if method == "laplace":
        return maximal_minors(A, [tuple(range(n))])[tuple(range(n))]
    if method == "bareiss":
        return _bareiss(A)
    raise ValueError(f"unknown determinant method {method!r}")


def maximal_minors(
    A: Sequence[Sequence[CPolynomial]],
    row_sets: Iterable[tuple[int, ...]] | None = None,
) -> dict[tuple[int, ...], CPolynomial]:
    """Maximal minors of a tall matrix, keyed by sorted row-index tuples.

    Each minor is expanded along its last column; subdeterminants on the
    leading columns are cached by row set, so minors that share rows share
    work.
    """
    n = len(A)
    k = len(A[0]) if n else 0
    if row_sets is None:
        row_sets = combinations(range(n), k)
    memo: dict[tuple[int, ...], CPolynomial] = {(): ONE}

    def det(rows: tuple[int, ...]) -> CPolynomial:
        got = memo.get(rows)
        if got is not None:
            return got
        col = len(rows) - 1
        total = ZERO
        for t, r in enumerate(rows):
            entry = A[r][col]
            if not entry:
                continue
            sub = det(rows[:t] + rows[t + 1 :])
            if not sub:
                continue
            term = entry * sub
            total = total + term if (t + col) % 2 == 0 else total - term
        memo[rows] = total
        return total

    return {rows: det(tuple(rows)) for rows in row_sets}


def _bareiss(A: Sequence[Sequence[CPolynomial]]) -> CPolynomial:
    M = [list(row) for row in A]
    n = len(M)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not M[k][k]:
            swap = next((r for r in range(k + 1, n) if M[r][k]), None)
            if swap is None:
                return ZERO
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).exact_div(prev)
        prev = M[k][k]
    return M[n - 1][n - 1] * sign
