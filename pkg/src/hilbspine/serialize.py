"""JSON/DOT/text encodings of the objects the CLI prints."""

from __future__ import annotations

from fractions import Fraction

from .arrows import Arrow, UniversalFamily
from .macaulay import MacaulayMatrix, MinorReport
from .matroid import Matroid
from .polyring import CPolynomial, Var
from .poset import DominancePoset, SpineGraph, Witness
from .specialize import ProbeResult
from .staircase import Grading, HilbertFunction, Monomial, MonomialIdeal


def spine_to_dict(spine: SpineGraph) -> dict:
    return {
        "colength": spine.colength,
        "vertices": [list(M.lam) for M in spine.vertices],
        "edges": [
            {
                "u": u,
                "v": v,
                "witnesses": [
                    {"grading": [w.grading.a, w.grading.b], "hf": list(w.hf.values)} for w in ws
                ],
            }
            for (u, v), ws in spine.edges.items()
        ],
    }


def spine_from_dict(data: dict) -> SpineGraph:
    vertices = [MonomialIdeal(tuple(lam)) for lam in data["vertices"]]
    edges = {
        (e["u"], e["v"]): [
            Witness(Grading(*w["grading"]), HilbertFunction(tuple(w["hf"]))) for w in e["witnesses"]
        ]
        for e in data["edges"]
    }
    return SpineGraph(data["colength"], vertices, edges)


def spine_to_dot(spine: SpineGraph, edge_labels: bool = False) -> str:
    lines = [f"graph spine_{spine.colength} {{"]
    for k, M in enumerate(spine.vertices):
        lines.append(f'  {k} [label="{M}"];')
    for (u, v), ws in spine.edges.items():
        if edge_labels:
            grads = " ".join(f"({w.grading})" for w in ws)
            lines.append(f'  {u} -- {v} [label="{grads}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def poset_to_dict(P: DominancePoset) -> dict:
    return {
        "grading": [P.grading.a, P.grading.b],
        "hf": list(P.hf.values),
        "elements": [list(M.lam) for M in P.elements],
        "hasse": [list(c) for c in P.hasse],
        "minimum": list(P.minimum.lam),
        "maximum": list(P.maximum.lam),
    }


def arrows_to_dict(M: MonomialIdeal, g: Grading, pos: tuple[Arrow, ...], neg: tuple[Arrow, ...]) -> dict:
    return {
        "ideal": list(M.lam),
        "grading": [g.a, g.b],
        "generators": [str(m) for m in M.generators],
        "positive": [list(a) for a in pos],
        "negative": [list(a) for a in neg],
    }


def family_to_dict(F: UniversalFamily) -> dict:
    return {
        "ideal": list(F.M.lam),
        "grading": [F.g.a, F.g.b],
        "arrows": [list(a) for a in F.arrows],
        "generators": [
            [{"carrier": str(m), "coefficient": str(c)} for m, c in F.terms(i)]
            for i in range(len(F.fs))
        ],
    }


def family_from_dict(data: dict) -> UniversalFamily:
    M = MonomialIdeal(tuple(data["ideal"]))
    g = Grading(*data["grading"])
    fs = []
    for i, terms in enumerate(data["generators"]):
        f = {}
        for t in terms:
            ell = g.shift_length(M.generators[i], Monomial.parse(t["carrier"]))
            f[ell] = CPolynomial.parse(t["coefficient"])
        fs.append(f)
    return UniversalFamily(M, g, tuple(Arrow(*a) for a in data["arrows"]), tuple(fs))


def matrix_to_dict(R: MacaulayMatrix) -> dict:
    return {
        "ideal": list(R.M.lam),
        "grading": [R.g.a, R.g.b],
        "degree": R.d,
        "rows": [str(m) for m in R.rows],
        "cols": [str(m) for m in R.cols],
        "entries": [[str(e) for e in row] for row in R.entries],
        "killed": [list(v) for v in sorted(R.killed)],
    }


def matrix_from_dict(data: dict) -> MacaulayMatrix:
    return MacaulayMatrix(
        MonomialIdeal(tuple(data["ideal"])),
        Grading(*data["grading"]),
        data["degree"],
        [Monomial.parse(s) for s in data["rows"]],
        [Monomial.parse(s) for s in data["cols"]],
        [[CPolynomial.parse(s) for s in row] for row in data["entries"]],
        frozenset(tuple(v) for v in data.get("killed", [])),
    )


def matroid_to_dict(m: Matroid) -> dict:
    return m.to_dict()


def matroid_from_dict(data: dict) -> Matroid:
    return Matroid.from_dict(data)


def scalar_str(x) -> str:
    return str(x) if not isinstance(x, Fraction) or x.denominator != 1 else str(x.numerator)


def point_to_dict(point: dict[Var, object] | None) -> dict | None:
    if point is None:
        return None
    return {f"c({i},{ell})": scalar_str(v) for (i, ell), v in sorted(point.items())}


def parse_point(text: str) -> dict[Var, Fraction]:
    """Parse ``"(2,2)=1;(1,1)=-3/2"`` (or with ``c(2,2)=1``) into a point."""
    out: dict[Var, Fraction] = {}
    for item in text.replace(" ", "").split(";"):
        if not item:
            continue
        lhs, _, rhs = item.partition("=")
        lhs = lhs.removeprefix("c").strip("()")
        i, ell = (int(t) for t in lhs.split(","))
        out[(i, ell)] = Fraction(rhs)
    return out


def probe_to_dict(p: ProbeResult) -> dict:
    return {
        "hf": list(p.hf.values),
        "grading": [p.grading.a, p.grading.b],
        "M_minus": list(p.M_minus.lam),
        "M_plus": list(p.M_plus.lam),
        "field": p.field,
        "seed": p.seed,
        "trials": p.trials,
        "attempts": p.attempts,
        "witness": point_to_dict(p.witness),
        "status": "witness found" if p.found else "no witness found",
    }


def minor_report_to_dict(rep: MinorReport) -> dict:
    return {
        "ideal": list(rep.M.lam),
        "degree": rep.d,
        "minor_count": rep.minor_count,
        "all_nonzero": rep.all_nonzero,
        "certificates_ok": rep.certificates_ok,
        "q_always_leading": rep.q_always_leading,
        "minors": [
            {
                "rows": [str(m) for m in r.rows],
                "nonzero": r.nonzero,
                "leading": r.leading,
                "Q": r.Q,
                "q_coefficient": r.q_coefficient,
                "q_is_leading": r.q_is_leading,
            }
            for r in rep.records
        ],
    }
