"""Command-line entry point: ``hilbspine <command> ...``.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage
error, 3 the minor-count guard tripped.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import serialize
from .arrows import negative_arrows, positive_arrows, universal_generators
from .macaulay import MinorGuardError, bar_quotient, macaulay_matrix, verify_minors_nonzero
from .polyring import PrimeField, RationalField
from .poset import EmptyFiberError, fibers, lex_extremes, poset_hasse, spine_graph
from .specialize import (
    RNG_NAME,
    edge_probe,
    matroid_of_degree,
    random_point,
    specialize_ideal,
    tropical_fingerprint,
)
from .staircase import STANDARD, Grading, HilbertFunction, MonomialIdeal, enumerate_ideals

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3
MAX_COLENGTH = 12


class UsageError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _emit(text: str, out: str | None, figure=None) -> None:
    """Print ``text`` or write it to ``out``; ``figure(path)`` draws a PNG next to it."""
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    if figure is not None:
        figure(path.with_suffix(".png"))


def _grading(text: str) -> Grading:
    try:
        g = Grading.parse(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad grading {text!r}: expected 'a,b' with a,b >= 1") from exc
    return g


def _ideal(text: str) -> MonomialIdeal:
    try:
        return MonomialIdeal.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad ideal {text!r}: {exc}") from exc


def _hf(text: str) -> HilbertFunction:
    try:
        return HilbertFunction.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad Hilbert function {text!r}") from exc


# ------------------------------------------------------------------ commands


def cmd_spine(args) -> int:
    N = args.colength
    if not 1 <= N <= MAX_COLENGTH:
        raise UsageError(f"--colength must be between 1 and {MAX_COLENGTH}")
    spine = spine_graph(N)
    if args.format == "json":
        text = _dump(serialize.spine_to_dict(spine))
    elif args.format == "dot":
        text = serialize.spine_to_dot(spine, edge_labels=True)
    else:
        lines = [f"colength\t{N}", f"vertices\t{len(spine.vertices)}", f"edges\t{len(spine.edges)}"]
        for (u, v), ws in spine.edges.items():
            grads = " ".join(f"({w.grading})" for w in ws)
            lines.append(f"[{spine.vertices[u]}]\t[{spine.vertices[v]}]\t{grads}")
        text = "\n".join(lines) + "\n"

    def fig(path):
        from .plotting import plot_spine

        plot_spine(spine, path)

    _emit(text, args.out, fig)
    return EXIT_OK


def cmd_poset(args) -> int:
    g, h = _grading(args.grading), _hf(args.hf)
    try:
        P = poset_hasse(h, g)
    except EmptyFiberError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        text = _dump(serialize.poset_to_dict(P))
    else:
        lines = [f"grading\t{g}", f"hf\t{h}", f"minimum\t[{P.minimum}]", f"maximum\t[{P.maximum}]"]
        lines += [f"element\t{k}\t[{M}]" for k, M in enumerate(P.elements)]
        lines += [f"cover\t[{P.elements[a]}]\t[{P.elements[b]}]" for a, b in P.hasse]
        text = "\n".join(lines) + "\n"

    def fig(path):
        from .plotting import plot_poset

        plot_poset(P, path)

    _emit(text, args.out, fig)
    return EXIT_OK


def cmd_arrows(args) -> int:
    M, g = _ideal(args.ideal), _grading(args.grading)
    pos, neg = positive_arrows(M, g), negative_arrows(M, g)
    if args.format == "json":
        text = _dump(serialize.arrows_to_dict(M, g, pos, neg))
    else:
        fmt = lambda arrows: "{" + ",".join(f"({i},{ell})" for i, ell in arrows) + "}"  # noqa: E731
        text = f"ideal\t{M.generator_string()}\ngrading\t{g}\nT+\t{fmt(pos)}\nT-\t{fmt(neg)}\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_universal(args) -> int:
    M, g = _ideal(args.ideal), _grading(args.grading)
    F = universal_generators(M, g)
    text = _dump(serialize.family_to_dict(F)) if args.format == "json" else str(F) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_macaulay(args) -> int:
    M, g = _ideal(args.ideal), _grading(args.grading)
    if args.degree is None:
        raise UsageError("--degree is required")
    R = macaulay_matrix(M, g, args.degree)
    if args.bar:
        try:
            R = bar_quotient(R)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    text = _dump(serialize.matrix_to_dict(R)) if args.format == "json" else R.bordered() + "\n"

    def fig(path):
        from .plotting import plot_macaulay

        plot_macaulay(R, path)

    _emit(text, args.out, fig)
    return EXIT_OK


def _matroid_lines(d: int, m) -> list[str]:
    def sets(cs):
        return " ".join("{" + ",".join(map(str, m.label(C))) + "}" for C in cs) or "-"

    kind = "uniform" if m.is_uniform else "non-uniform"
    return [
        f"degree\t{d}\trank {m.rank}\t{kind}\t{len(m.circuits)} circuits",
        f"circuits\t{d}\t{sets(m.circuits)}",
        f"loops\t{d}\t{','.join(map(str, m.label(m.loops))) or '-'}",
        f"coloops\t{d}\t{','.join(map(str, m.label(m.coloops))) or '-'}",
    ]


def cmd_matroids(args) -> int:
    M, g = _ideal(args.ideal), _grading(args.grading)
    F = universal_generators(M, g)
    header = []
    if args.point is not None:
        try:
            point = serialize.parse_point(args.point)
        except ValueError as exc:
            raise UsageError(f"bad --point {args.point!r}") from exc
        field = PrimeField(args.prime) if args.prime else RationalField()
    elif args.random or not F.variables():
        field = PrimeField(args.prime or 32003)
        point = random_point(F, field, random.Random(args.seed))
        header = [f"seed\t{args.seed}", f"rng\t{RNG_NAME}"]
    else:
        raise UsageError("the cell has coordinates: give --random or --point")
    try:
        J = specialize_ideal(M, g, point, field, F)
    except (KeyError, ValueError) as exc:
        raise UsageError(str(exc).strip("'\"")) from exc
    if args.degree is not None:
        ms = {args.degree: matroid_of_degree(J, args.degree)}
    else:
        ms = tropical_fingerprint(J)
    if args.format == "json":
        data = {
            "ideal": list(M.lam),
            "grading": [g.a, g.b],
            "field": field.name,
            "seed": args.seed if header else None,
            "rng": RNG_NAME if header else None,
            "point": serialize.point_to_dict(J.point),
            "matroids": {str(d): serialize.matroid_to_dict(m) for d, m in ms.items()},
        }
        text = _dump(data)
    else:
        lines = header + [f"field\t{field.name}", f"ideal\t{M.generator_string()}", f"grading\t{g}"]
        lines.append("point\t" + " ".join(f"{k}={v}" for k, v in serialize.point_to_dict(J.point).items()))
        for d, m in ms.items():
            lines += _matroid_lines(d, m)
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify_minors(args) -> int:
    g = _grading(args.grading)
    if g != STANDARD:
        raise UsageError(
            f"verify-minors needs the standard (1,1) grading, got ({g}): the nonvanishing"
            " theorem for maximal minors is stated only for the standard grading"
        )
    if not 1 <= args.max_colength <= MAX_COLENGTH:
        raise UsageError(f"--max-colength must be between 1 and {MAX_COLENGTH}")
    results = []
    for N in range(1, args.max_colength + 1):
        for h in fibers(enumerate_ideals(N), g):
            lo, _ = lex_extremes(h, g)
            for d in range(h.dmax + 1):
                if 0 < h[d] < d + 1:
                    results.append((h, verify_minors_nonzero(lo, d, args.max_minors)))
    all_nonzero = all(r.all_nonzero for _, r in results)
    certs = all(r.certificates_ok for _, r in results)
    leading = all(r.q_always_leading for _, r in results)
    verdict = "verified" if all_nonzero and certs else "COUNTEREXAMPLE"
    if args.format == "json":
        data = {
            "command": "verify-minors",
            "parameters": {"max_colength": args.max_colength, "grading": [g.a, g.b]},
            "results": [dict(serialize.minor_report_to_dict(r), hf=list(h.values)) for h, r in results],
            "all_nonzero": all_nonzero,
            "certificates_ok": certs,
            "q_always_leading": leading,
            "verdict": verdict,
        }
        text = _dump(data)
    else:
        lines = ["hf\tideal\tdegree\tminors\tall_nonzero\tq_coefficient_1\tq_leading"]
        for h, r in results:
            lines.append(
                f"{h}\t{r.M}\t{r.d}\t{r.minor_count}\t{str(r.all_nonzero).lower()}"
                f"\t{str(r.certificates_ok).lower()}\t{str(r.q_always_leading).lower()}"
            )
        total = sum(r.minor_count for _, r in results)
        lines.append(
            f"# {len(results)} cases, {total} minors: all_nonzero={str(all_nonzero).lower()}"
            f" certificates_ok={str(certs).lower()} q_always_leading={str(leading).lower()} verdict={verdict}"
        )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if verdict == "verified" else EXIT_COUNTEREXAMPLE


def cmd_edge_probe(args) -> int:
    g, h = _grading(args.grading), _hf(args.hf)
    field = PrimeField(args.prime) if args.prime else RationalField()
    try:
        res = edge_probe(h, g, field, args.trials, args.seed)
    except (ValueError, EmptyFiberError) as exc:
        raise UsageError(str(exc)) from exc
    data = serialize.probe_to_dict(res)
    data["rng"] = RNG_NAME
    if args.format == "json":
        text = _dump(data)
    else:
        pt = data["witness"]
        lines = [
            f"seed\t{res.seed}",
            f"rng\t{RNG_NAME}",
            f"field\t{res.field}",
            f"edge\t[{res.M_minus}]\t[{res.M_plus}]",
            f"status\t{data['status']}\tafter {res.attempts} of {res.trials} trials",
            "witness\t" + (" ".join(f"{k}={v}" for k, v in pt.items()) if pt is not None else "-"),
        ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify_all(args) -> int:
    from .acceptance import run_all

    out = Path(args.out) if args.out else None

    def progress(r):
        line = r.line() + (f" [{r.seconds:.2f}s]" if args.timing else "")
        print(line, flush=True)

    results = run_all(progress)
    passed = sum(r.passed for r in results)
    print(f"# {passed}/{len(results)} criteria passed")
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        rows = ["criterion\ttitle\tverdict\tdetail" + ("\tseconds" if args.timing else "")]
        for r in results:
            row = f"{r.number}\t{r.title}\t{'PASS' if r.passed else 'FAIL'}\t{r.detail}"
            rows.append(row + (f"\t{r.seconds:.3f}" if args.timing else ""))
        (out / "summary.tsv").write_text("\n".join(rows) + "\n")
        report = {
            "command": "verify-all",
            "parameters": {},
            "results": [
                {"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail}
                | ({"seconds": round(r.seconds, 3)} if args.timing else {})
                for r in results
            ],
            "verdict": "pass" if passed == len(results) else "fail",
        }
        (out / "report.json").write_text(_dump(report))
        _verify_all_figures(out)
    return EXIT_OK if passed == len(results) else EXIT_COUNTEREXAMPLE


def _verify_all_figures(out: Path) -> None:
    from .plotting import plot_macaulay, plot_poset, plot_spine

    plot_spine(spine_graph(4), out / "spine_4.png")
    plot_spine(spine_graph(6), out / "spine_6.png")
    plot_poset(poset_hasse(HilbertFunction((1, 1, 2, 1, 1)), Grading(1, 2)), out / "poset_1_2.png")
    R = macaulay_matrix(MonomialIdeal((6, 4, 2, 1)), STANDARD, 4)
    plot_macaulay(bar_quotient(R), out / "macaulay_bar.png")


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hilbspine",
        description="Spine of the T-graph of Hilb^N(A^2), universal families, Macaulay minors and matroids.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", help="write the report here (plus a .png figure where one applies)")
        return sp

    sp = add("spine", cmd_spine, "edges joining the extremes of every graded fibre", ("json", "dot", "text"))
    sp.add_argument("--colength", type=int, required=True)

    sp = add("poset", cmd_poset, "dominance order on one graded fibre")
    sp.add_argument("--hf", required=True, help="graded Hilbert function, e.g. 1,1,2,1,1")
    sp.add_argument("--grading", default="1,1")

    for name, fn, help_ in (
        ("arrows", cmd_arrows, "positive and negative significant arrows"),
        ("universal", cmd_universal, "universal family over the cell"),
    ):
        sp = add(name, fn, help_)
        sp.add_argument("--ideal", required=True, help="staircase rows, e.g. 6,4,2,1")
        sp.add_argument("--grading", default="1,1")

    sp = add("macaulay", cmd_macaulay, "symbolic Macaulay matrix in one degree")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--grading", default="1,1")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--bar", action="store_true", help="set high-index arrow variables to zero")

    sp = add("matroids", cmd_matroids, "per-degree matroids at a point of the cell")
    sp.add_argument("--ideal", required=True)
    sp.add_argument("--grading", default="1,1")
    sp.add_argument("--degree", type=int)
    pt = sp.add_mutually_exclusive_group()
    pt.add_argument("--random", action="store_true", help="seeded random point")
    pt.add_argument("--point", help="e.g. '(2,2)=1;(1,1)=-3/2'")
    sp.add_argument("--prime", type=int, help="work over GF(p); rationals if omitted with --point")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("verify-minors", cmd_verify_minors, "check every maximal Macaulay minor is nonzero")
    sp.add_argument("--max-colength", type=int, default=8)
    sp.add_argument("--grading", default="1,1")
    sp.add_argument("--max-minors", type=int, help="override the minor-count guard")

    sp = add("edge-probe", cmd_edge_probe, "search the cell of M^- for a point degenerating to M^+")
    sp.add_argument("--hf", required=True)
    sp.add_argument("--grading", default="1,1")
    sp.add_argument("--prime", type=int, default=32003, help="0 for rationals")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=10)

    sp = sub.add_parser("verify-all", help="run the acceptance suite")
    sp.set_defaults(func=cmd_verify_all)
    sp.add_argument("--out", help="directory for summary.tsv, report.json and figures")
    sp.add_argument("--timing", action="store_true", help="include wall-clock seconds")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hilbspine {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MinorGuardError as exc:
        print(f"hilbspine {args.command}: guard tripped: {exc} (raise HILB_SPINE_MAX_MINORS)", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
