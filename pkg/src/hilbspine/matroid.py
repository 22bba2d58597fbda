"""Matroids on degree slices, stored by their list of bases."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .polyring import Field, rank
from .staircase import Monomial


@dataclass(frozen=True)
class Matroid:
    ground: tuple[Monomial, ...]
    rank: int
    bases: frozenset[frozenset[int]]

    @classmethod
    def from_columns(
        cls, ground: Sequence[Monomial], columns: Sequence[Sequence[object]], field: Field
    ) -> Matroid:
        """Matroid of the subspace spanned by ``columns`` (vectors indexed by ``ground``).

        A set ``E`` is independent iff no nonzero vector of the span is supported
        in ``E``, i.e. the rows outside ``E`` keep the full column rank.
        """
        n = len(ground)
        rows = [[col[r] for col in columns] for r in range(n)]
        full = rank(rows, field) if columns else 0
        r = n - full
        bases = []
        for E in combinations(range(n), r):
            keep = [rows[k] for k in range(n) if k not in E]
            if (rank(keep, field) if columns else 0) == full:
                bases.append(frozenset(E))
        return cls(tuple(ground), r, frozenset(bases))

    def label(self, idx) -> list[Monomial]:
        return [self.ground[k] for k in sorted(idx)]

    def is_independent(self, S) -> bool:
        S = frozenset(S)
        return any(S <= B for B in self.bases)

    @cached_property
    def circuits(self) -> list[frozenset[int]]:
        """Minimal dependent sets, by size then lexicographically."""
        out = []
        n = len(self.ground)
        for size in range(1, min(n, self.rank + 1) + 1):
            for C in combinations(range(n), size):
                Cs = frozenset(C)
                if self.is_independent(Cs):
                    continue
                if all(self.is_independent(Cs - {e}) for e in Cs):
                    out.append(Cs)
        return out

    @property
    def loops(self) -> list[int]:
        return [k for k in range(len(self.ground)) if not any(k in B for B in self.bases)]

    @property
    def coloops(self) -> list[int]:
        return [k for k in range(len(self.ground)) if all(k in B for B in self.bases)]

    @property
    def is_uniform(self) -> bool:
        return len(self.bases) == math.comb(len(self.ground), self.rank)

    def satisfies_basis_exchange(self) -> bool:
        if not self.bases:
            return False
        for A in self.bases:
            for B in self.bases:
                for a in A - B:
                    if not any((A - {a}) | {b} in self.bases for b in B - A):
                        return False
        return True

    def circuit_sets(self) -> set[frozenset[Monomial]]:
        return {frozenset(self.label(C)) for C in self.circuits}

    def to_dict(self) -> dict:
        key = lambda ms: [str(m) for m in ms]  # noqa: E731
        return {
            "ground": key(self.ground),
            "rank": self.rank,
            "bases": sorted(key(self.label(B)) for B in self.bases),
            "circuits": [key(self.label(C)) for C in self.circuits],
            "uniform": self.is_uniform,
            "loops": key(self.label(self.loops)),
            "coloops": key(self.label(self.coloops)),
        }

    @classmethod
    def from_dict(cls, data: dict) -> Matroid:
        ground = tuple(Monomial.parse(s) for s in data["ground"])
        pos = {m: k for k, m in enumerate(ground)}
        bases = frozenset(frozenset(pos[Monomial.parse(s)] for s in B) for B in data["bases"])
        return cls(ground, int(data["rank"]), bases)
