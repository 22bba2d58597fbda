"""Exit checks: worked examples and desk-scale sweeps, one function per criterion.

Each ``criterion_*`` returns a :class:`CriterionResult`; ``run_all`` runs them in
order.  Expected values below are transcribed from the worked examples and are
compared exactly (all arithmetic is exact).
"""

from __future__ import annotations

import contextlib
import io
import json
import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .arrows import positive_arrows, universal_generators, universal_generators_pathsum
from .macaulay import bar_quotient, macaulay_matrix, verify_minors_nonzero
from .polyring import CPolynomial, PrimeField, RationalField
from .poset import coprime_gradings, fibers, lex_extremes, poset_hasse, spine_graph
from .specialize import (
    LEX_X_LT_Y,
    LEX_Y_LT_X,
    edge_probe,
    initial_ideal,
    matroid_of_degree,
    random_point,
    specialize_ideal,
    specialized_hilbert_function,
    tropical_fingerprint,
)
from .staircase import (
    STANDARD,
    Grading,
    HilbertFunction,
    Monomial,
    MonomialIdeal,
    enumerate_ideals,
    make_ideal,
)

PRIME = 32003

SPINE_4_EDGES = {
    frozenset({(4,), (3, 1)}),
    frozenset({(4,), (2, 2)}),
    frozenset({(4,), (1, 1, 1, 1)}),
    frozenset({(3, 1), (2, 1, 1)}),
    frozenset({(2, 2), (1, 1, 1, 1)}),
    frozenset({(2, 1, 1), (1, 1, 1, 1)}),
}

RUNNING_EXAMPLE = (11, 8, 4, 1, 1, 1, 1)
RUNNING_FAMILY = {
    1: "x^8*y + c(1,1)*x^10",
    2: "x^4*y^2 + (c(1,1)+c(2,1))*x^6*y + (c(2,1)*c(1,1)+c(2,2))*x^8",
    3: "x*y^3 + (c(1,1)+c(2,1)+c(3,1))*x^3*y^2"
    " + (c(2,1)*c(1,1)+c(2,2)+c(3,1)*c(1,1)+c(3,1)*c(2,1)+c(3,2))*x^5*y"
    " + (c(3,1)*c(2,1)*c(1,1)+c(3,1)*c(2,2)+c(3,2)*c(1,1))*x^7",
}

# degree-4 Macaulay matrix of <x^6, x^4y, x^2y^2, xy^3, y^4> and its bar quotient
R_ROWS = ["x^4", "x^3*y", "x^2*y^2", "x*y^3", "y^4"]
R_COLS = ["x^2*y^2", "x*y^3", "y^4"]
R_PRINTED = [
    ["c(1,1)*c(2,1)+c(2,2)", "c(1,1)*c(3,2)", "c(1,1)*c(4,3)"],
    ["c(1,1)+c(2,1)", "c(1,1)*c(2,1)+c(2,2)+c(3,2)", "c(1,1)*c(3,2)+c(4,3)"],
    ["1", "c(1,1)+c(2,1)", "c(1,1)*c(2,1)+c(2,2)+c(3,2)"],
    ["0", "1", "c(1,1)+c(2,1)"],
    ["0", "0", "1"],
]
RBAR_PRINTED = [
    ["c(1,1)*c(2,1)+c(2,2)", "0", "0"],
    ["c(1,1)+c(2,1)", "c(1,1)*c(2,1)+c(2,2)", "0"],
    ["1", "c(1,1)+c(2,1)", "c(1,1)*c(2,1)+c(2,2)"],
    ["0", "1", "c(1,1)+c(2,1)"],
    ["0", "0", "1"],
]

# worked examples in the (2,3) grading
SMALL_235 = (7, 1, 1, 1)  # <x^7, xy, y^4>
MAJOR_235 = (10, 7, 7, 2, 2, 1)  # <x^10, x^7y, x^2y^3, xy^5, y^6>
MAJOR_235_CIRCUITS = [["x^3*y^4", "x^6*y^2"], ["x^9", "x^3*y^4", "y^6"], ["x^9", "x^6*y^2", "y^6"]]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title}: {self.detail}"


def _timed(number: int, title: str, fn: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return CriterionResult(number, title, ok, detail, time.perf_counter() - t0)


def standard_fibers(max_colength: int) -> Iterator[tuple[HilbertFunction, MonomialIdeal, MonomialIdeal]]:
    """``(h, M^-, M^+)`` for every (1,1)-graded Hilbert function with ``N <= max_colength``."""
    for N in range(1, max_colength + 1):
        for h, fiber in fibers(enumerate_ideals(N), STANDARD).items():
            lo, hi = lex_extremes(h, STANDARD)
            yield h, lo, hi


def _polys(rows: list[list[str]]) -> list[list[CPolynomial]]:
    return [[CPolynomial.parse(s) for s in row] for row in rows]


# ------------------------------------------------------------------ criteria


def criterion_1() -> CriterionResult:
    def run():
        from .cli import main

        buf = io.StringIO()
        t0 = time.perf_counter()
        with contextlib.redirect_stdout(buf):
            code = main(["spine", "--colength", "4", "--format", "json"])
        elapsed = time.perf_counter() - t0
        data = json.loads(buf.getvalue())
        verts = [tuple(v) for v in data["vertices"]]
        edges = {frozenset({verts[e["u"]], verts[e["v"]]}) for e in data["edges"]}
        ok = code == 0 and len(verts) == 5 and edges == SPINE_4_EDGES and elapsed < 1.0
        return ok, f"{len(verts)} vertices, {len(edges)} edges, exact={edges == SPINE_4_EDGES}, {elapsed:.3f}s"

    return _timed(1, "spine N=4 has exactly the six expected edges", run)


def criterion_2() -> CriterionResult:
    def run():
        got = {tuple(a) for a in positive_arrows(make_ideal(RUNNING_EXAMPLE), Grading(1, 2))}
        want = {(1, 1), (2, 1), (2, 2), (3, 1), (3, 2)}
        return got == want, f"T+ = {sorted(got)}"

    return _timed(2, "positive arrows of <x^11,x^8y,x^4y^2,xy^3,y^7> under (1,2)", run)


def criterion_3(max_colength: int = 8) -> CriterionResult:
    def run():
        t0 = time.perf_counter()
        F = universal_generators(make_ideal(RUNNING_EXAMPLE), Grading(1, 2))
        golden = all(F.format(i) == s for i, s in RUNNING_FAMILY.items())
        checked = 0
        mismatches = []
        for g in (Grading(1, 1), Grading(1, 2), Grading(2, 3), Grading(1, 3)):
            for N in range(1, max_colength + 1):
                for M in enumerate_ideals(N):
                    checked += 1
                    if universal_generators(M, g) != universal_generators_pathsum(M, g):
                        mismatches.append((str(M), str(g)))
        elapsed = time.perf_counter() - t0
        ok = golden and not mismatches and elapsed < 60
        return ok, (
            f"golden f1..f3={golden}, recursion==path-sum on {checked} (ideal, grading) pairs,"
            f" mismatches={mismatches[:3]}, {elapsed:.1f}s"
        )

    return _timed(3, "universal family golden strings and two constructions agree", run)


def criterion_4() -> CriterionResult:
    def run():
        R = macaulay_matrix(make_ideal((6, 4, 2, 1)), STANDARD, 4)
        Rb = bar_quotient(R)
        labels = [str(m) for m in R.rows] == R_ROWS and [str(m) for m in R.cols] == R_COLS
        same_r = sum(a == b for ra, rb in zip(R.entries, _polys(R_PRINTED)) for a, b in zip(ra, rb))
        same_b = sum(a == b for ra, rb in zip(Rb.entries, _polys(RBAR_PRINTED)) for a, b in zip(ra, rb))
        return labels and same_r == 15 and same_b == 15, f"R {same_r}/15, bar R {same_b}/15 entries match"

    return _timed(4, "degree-4 Macaulay matrix of <x^6,x^4y,x^2y^2,xy^3,y^4> and its bar quotient", run)


def criterion_5(max_colength: int = 8) -> CriterionResult:
    def run():
        t0 = time.perf_counter()
        minors = cases = 0
        zero, bad_cert, not_leading = [], [], []
        for h, lo, _ in standard_fibers(max_colength):
            for d in range(h.dmax + 1):
                if not 0 < h[d] < d + 1:
                    continue
                rep = verify_minors_nonzero(lo, d)
                cases += 1
                minors += rep.minor_count
                for r in rep.records:
                    tag = (str(lo), d, ",".join(map(str, r.rows)))
                    if not r.nonzero:
                        zero.append(tag)
                    if r.q_coefficient != 1:
                        bad_cert.append(tag)
                    if not r.q_is_leading:
                        not_leading.append(tag + (r.leading, r.Q))
        elapsed = time.perf_counter() - t0
        ok = not zero and not bad_cert and not not_leading and elapsed < 600
        return ok, (
            f"{minors} maximal minors over {cases} (h,d) cases: zero={len(zero)},"
            f" Q-coefficient!=1: {len(bad_cert)}, Q not lex-leading: {len(not_leading)}"
            + (f" e.g. {not_leading[0]}" if not_leading else "")
            + f", {elapsed:.1f}s"
        )

    return _timed(5, "every maximal minor nonzero; Q is the lex-leading monomial of each bar minor", run)


def _all_uniform(lo: MonomialIdeal, field: PrimeField, rng: random.Random) -> bool:
    fam = universal_generators(lo, STANDARD)
    J = specialize_ideal(lo, STANDARD, random_point(fam, field, rng), field, fam)
    return all(m.is_uniform for m in tropical_fingerprint(J).values())


def criterion_6(max_colength: int = 8, seeds: tuple[int, ...] = (1, 2, 3)) -> CriterionResult:
    def run():
        field = PrimeField(PRIME)
        failures, resampled = [], 0
        cells = 0
        for seed in seeds:
            rng = random.Random(seed)
            for h, lo, _ in standard_fibers(max_colength):
                cells += 1
                if _all_uniform(lo, field, rng):
                    continue
                resampled += 1
                if not _all_uniform(lo, field, rng):
                    failures.append((seed, str(h)))
        return not failures, (
            f"{cells} (seed, h) samples over GF({PRIME}), seeds={list(seeds)},"
            f" resampled={resampled}, failures={failures}"
        )

    return _timed(6, "random GF(32003) points give uniform matroids in every degree", run)


def criterion_7() -> CriterionResult:
    def run():
        g = Grading(2, 3)
        notes = []
        J = specialize_ideal(make_ideal(SMALL_235), g, {(2, 2): 1}, RationalField())
        m12, m8 = matroid_of_degree(J, 12), matroid_of_degree(J, 8)
        mono = Monomial.parse
        ok1 = (
            m12.circuit_sets() == {frozenset({mono("x^3*y^2")}), frozenset({mono("x^6"), mono("y^4")})}
            and m12.label(m12.loops) == [mono("x^3*y^2")]
            and m8.circuit_sets() == {frozenset({mono("x*y^2")})}
            and m8.label(m8.coloops) == [mono("x^4")]
        )
        notes.append(f"(i) degree 12 circuits/loop and degree 8 circuit/coloop: {ok1}")
        M = make_ideal(MAJOR_235)
        fam = universal_generators(M, g)
        field = PrimeField(PRIME)
        J = specialize_ideal(M, g, random_point(fam, field, random.Random(7)), field, fam)
        m18 = matroid_of_degree(J, 18)
        want = {frozenset(mono(s) for s in C) for C in MAJOR_235_CIRCUITS}
        ok2 = (
            m18.rank == 2
            and m18.circuit_sets() == want
            and not m18.loops
            and not m18.coloops
            and not m18.is_uniform
        )
        notes.append(f"(ii) degree 18 rank {m18.rank}, 3 circuits, no loops/coloops, non-uniform: {ok2}")
        return ok1 and ok2, "; ".join(notes)

    return _timed(7, "(2,3)-graded counterexamples to uniformity", run)


def criterion_8(max_colength: int = 6, trials: int = 10, seed: int = 0) -> CriterionResult:
    def run():
        field = PrimeField(PRIME)
        probes = edges = 0
        misses, bad = [], []
        for N in range(1, max_colength + 1):
            spine = spine_graph(N)
            edges += len(spine.edges)
            for ws in spine.edges.values():
                for w in ws:
                    probes += 1
                    res = edge_probe(w.hf, w.grading, field, trials, seed)
                    if not res.found:
                        misses.append((str(w.grading), str(w.hf)))
                        continue
                    J = specialize_ideal(res.M_minus, w.grading, res.witness, field)
                    if not (
                        initial_ideal(J, LEX_X_LT_Y, basis="multiples") == res.M_minus
                        and initial_ideal(J, LEX_Y_LT_X, basis="multiples") == res.M_plus
                    ):
                        bad.append((str(w.grading), str(w.hf)))
        return not misses and not bad, (
            f"{edges} spine edges ({probes} grading witnesses) for N<={max_colength}:"
            f" no witness={misses}, failed re-verification={bad}"
        )

    return _timed(8, "every spine edge realized by a GF(32003) point, re-verified", run)


def criterion_9(max_colength: int = 6, points: int = 100, seed: int = 0) -> CriterionResult:
    def run():
        field = PrimeField(PRIME)
        rng = random.Random(seed)
        cells = sampled = 0
        bad = []
        for N in range(1, max_colength + 1):
            for g in coprime_gradings(N):
                for M in enumerate_ideals(N):
                    fam = universal_generators(M, g)
                    cells += 1
                    # a cell without arrows is a single point: one check covers it
                    n = points if fam.arrows else 1
                    for _ in range(n):
                        J = specialize_ideal(M, g, random_point(fam, field, rng), field, fam)
                        sampled += 1
                        if specialized_hilbert_function(J) != J.hf:
                            bad.append((str(M), str(g)))
                            break
        return not bad, f"{cells} cells, {sampled} sampled points, failures={bad[:5]}"

    return _timed(9, "Hilbert function constant at random points of every cell", run)


def criterion_10(max_colength: int = 8) -> CriterionResult:
    def run():
        P = poset_hasse(HilbertFunction((1, 1, 2, 1, 1)), Grading(1, 2))
        lam = [M.lam for M in P.elements]
        covers = {(lam[i], lam[j]) for i, j in P.hasse}
        diamond = (
            len(lam) == 4
            and P.minimum.lam == (5, 1)
            and P.maximum.lam == (3, 2, 1)
            and covers
            == {((5, 1), (4, 1, 1)), ((5, 1), (3, 3)), ((4, 1, 1), (3, 2, 1)), ((3, 3), (3, 2, 1))}
        )
        fibers_checked = 0
        violations = []
        for N in range(1, max_colength + 1):
            ideals = enumerate_ideals(N)
            for g in coprime_gradings(N):
                for h, fiber in fibers(ideals, g).items():
                    if len(fiber) < 2:
                        continue
                    fibers_checked += 1
                    Q = poset_hasse(h, g)
                    rel, n = Q.relation, len(fiber)
                    refl = all(rel[i][i] for i in range(n))
                    anti = all(not (rel[i][j] and rel[j][i]) for i in range(n) for j in range(n) if i != j)
                    trans = all(
                        rel[i][k] or not (rel[i][j] and rel[j][k])
                        for i in range(n) for j in range(n) for k in range(n)
                    )
                    lo, hi = lex_extremes(h, g)
                    ext = all(rel[fiber.index(lo)][k] and rel[k][fiber.index(hi)] for k in range(n))
                    if not (refl and anti and trans and ext):
                        violations.append((str(g), str(h)))
        return diamond and not violations, (
            f"(1,2)-graded h=(1,1,2,1,1) diamond={diamond}; axioms on {fibers_checked} fibres with N<={max_colength}:"
            f" violations={violations[:3]}"
        )

    return _timed(10, "dominance poset: four-element diamond and partial-order axioms", run)


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
]


def run_all(progress: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    out = []
    for crit in CRITERIA:
        res = crit()
        if progress:
            progress(res)
        out.append(res)
    return out
