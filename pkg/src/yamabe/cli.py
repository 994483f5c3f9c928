"""Command-line front end.

Every command builds one :class:`OutputDocument`; the table and JSON views are
both rendered from it. Exit codes: 0 success, 2 bad input (including group
literals that do not parse), 3 well-formed but unsupported requests.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field

from . import __version__
from .analysis import TodaBoundParams, choose_parameters, toda_bound_terms
from .geometry import (
    RULES,
    ClassLabel,
    ManifoldQuery,
    SpinStatus,
    classify_manifold,
    enumerate_generators,
    span_check,
)
from .groups import GroupParseError, UnsupportedQuery
from .homology import (
    AbelianGroupSpec,
    Coeff,
    homology_of_abelian,
    poincare_series_closed,
    poincare_series_recursive,
)
from .structure import atoral_split

DEFAULT_MAX_DEGREE = 8


@dataclass
class OutputDocument:
    command: str
    input: dict
    results: dict
    version: str = __version__

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        return cls(**json.loads(text))


class UsageError(ValueError):
    pass


# --- commands ---------------------------------------------------------------


def cmd_homology(spec_text: str, coeff: Coeff, max_degree: int) -> OutputDocument:
    spec = AbelianGroupSpec.parse(spec_text)
    h = homology_of_abelian(spec, coeff, max_degree)
    primes = sorted(set(spec.primes()) | ({2} if coeff is Coeff.MOD2 else set()))
    rows = []
    for n, g in enumerate(h):
        rows.append(
            {
                "degree": n,
                "group": str(g),
                "free_rank": g.free_rank,
                "summands": g.rank,
                "p_ranks": {str(p): g.free_rank + sum(1 for q in g.torsion if q % p == 0) for p in primes},
            }
        )
    return OutputDocument(
        "homology",
        {"spec": spec_text, "group": str(spec), "coeff": coeff.value, "max_degree": max_degree},
        {"degrees": rows},
    )


def cmd_poincare(r: int, max_degree: int, method: str) -> OutputDocument:
    if r < 1:
        raise UsageError("rank must be at least 1")
    results: dict = {}
    if method in ("closed", "both"):
        results["closed"] = poincare_series_closed(r, max_degree)
    if method in ("recursive", "both"):
        results["recursive"] = poincare_series_recursive(r, max_degree)
    if method == "both":
        results["equal"] = results["closed"] == results["recursive"]
    return OutputDocument("poincare", {"rank": r, "max_degree": max_degree, "method": method}, results)


def cmd_split(spec_text: str, coeff: Coeff, max_degree: int) -> OutputDocument:
    spec = AbelianGroupSpec.parse(spec_text)
    basis = atoral_split(spec, coeff, max_degree)
    rows = [
        {
            "degree": b.degree,
            "group": str(b.group),
            "toral": b.toral_count,
            "atoral": b.atoral_count,
            "entries": [e.to_dict() for e in b.entries],
        }
        for b in basis
    ]
    return OutputDocument(
        "split",
        {"spec": spec_text, "group": str(spec), "coeff": coeff.value, "max_degree": max_degree},
        {"degrees": rows},
    )


def cmd_generators(spec_text: str, coeff: Coeff, degree: int) -> OutputDocument:
    spec = AbelianGroupSpec.parse(spec_text)
    gens = enumerate_generators(spec, coeff, degree)
    report = span_check(spec, coeff, degree)
    rows = [
        {
            "index": g.index,
            "generator": str(g.term),
            "tree": g.term.to_dict(),
            "dim": g.term.dim,
            "status": None if g.status is None else g.status.label,
            "summand": str(g.entry.summand),
            "label": g.entry.label.tag.value,
        }
        for g in gens
        if g.term.dim == degree and not (degree == 0 and g.entry.summand.is_trivial)
    ]
    return OutputDocument(
        "generators",
        {"spec": spec_text, "group": str(spec), "coeff": coeff.value, "degree": degree},
        {"generators": rows, "span_check": report.to_dict()},
    )


def cmd_classify(
    spec_text: str, dim: int, spin: SpinStatus, orientable: bool, label: ClassLabel
) -> OutputDocument:
    spec = AbelianGroupSpec.parse(spec_text)
    verdict = classify_manifold(ManifoldQuery(spec, dim, spin, orientable, label))
    results = verdict.to_dict()
    results["rules"] = {c: RULES[c] for c in verdict.citations}
    return OutputDocument(
        "classify",
        {
            "spec": spec_text,
            "group": str(spec),
            "dim": dim,
            "spin": spin.value,
            "orientable": orientable,
            "class": label.value,
        },
        results,
    )


def cmd_toda_bound(
    n0: int, n1: int, constants: list[float], delta: float | None = None, params: list[float] | None = None
) -> OutputDocument:
    c0, c1, d0, d1 = constants
    if delta is not None:
        p = choose_parameters(n0, n1, c0, c1, d0, d1, delta)
        mode = "schedule"
    else:
        t0, t1, l, eps = params
        p = TodaBoundParams(n0, n1, c0, c1, d0, d1, t0, t1, l, eps)
        mode = "evaluate"
    terms = toda_bound_terms(p)
    results = {
        "mode": mode,
        "params": {"t0": p.t0, "t1": p.t1, "l": p.l, "eps": p.eps},
        "terms": terms._asdict(),
        "bound": terms.total,
    }
    if delta is not None:
        results["delta"] = delta
        results["certified"] = terms.total < delta
    return OutputDocument(
        "toda-bound",
        {"n0": n0, "n1": n1, "constants": [c0, c1, d0, d1], "delta": delta, "params": params},
        results,
    )


# --- rendering --------------------------------------------------------------


def _table(headers: list[str], rows: list[list]) -> str:
    cells = [headers] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_table(doc: OutputDocument) -> str:
    r, inp = doc.results, doc.input
    if doc.command == "homology":
        head = f"H_*(B({inp['group']}); {inp['coeff']})"
        rows = [[d["degree"], d["group"], d["summands"]] for d in r["degrees"]]
        return head + "\n" + _table(["n", "H_n", "rank"], rows)
    if doc.command == "poincare":
        keys = [k for k in ("closed", "recursive") if k in r]
        rows = [[n] + [r[k][n] for k in keys] for n in range(len(r[keys[0]]))]
        out = f"P({inp['rank']}, t)\n" + _table(["n"] + keys, rows)
        if "equal" in r:
            out += f"\nequal: {r['equal']}"
        return out
    if doc.command == "split":
        rows = [[d["degree"], d["group"], d["toral"], d["atoral"]] for d in r["degrees"]]
        return f"toral/atoral splitting of H_*(B({inp['group']}); {inp['coeff']})\n" + _table(
            ["n", "H_n", "toral", "atoral"], rows
        )
    if doc.command == "generators":
        rows = [[g["index"], g["generator"], g["summand"], g["label"], g["status"]] for g in r["generators"]]
        sc = r["span_check"]
        tail = (
            f"\nspan check: {sc['generator_count']} generators, basis rank {sc['basis_rank']}, "
            f"bijection {sc['bijection']}, statuses {sc['statuses']}"
        )
        for m in sc["mismatches"]:
            tail += f"\n  mismatch: {m}"
        return (
            f"generators of H_{inp['degree']}(B({inp['group']}); {inp['coeff']})\n"
            + _table(["#", "generator", "summand", "label", "status"], rows)
            + tail
        )
    if doc.command == "classify":
        lines = [f"verdict: {r['status']}"]
        lines += [f"  [{c}] {desc}" for c, desc in r["rules"].items()]
        if r["notes"]:
            lines.append(f"  notes: {r['notes']}")
        return "\n".join(lines)
    if doc.command == "toda-bound":
        p, t = r["params"], r["terms"]
        lines = [f"t0={p['t0']:g} t1={p['t1']:g} l={p['l']:g} eps={p['eps']:.6g}"]
        lines += [f"  {k}: {v:.6e}" for k, v in t.items()]
        lines.append(f"bound: {r['bound']:.6e}")
        if "certified" in r:
            lines.append(f"certified < {r['delta']:g}: {r['certified']}")
        return "\n".join(lines)
    raise ValueError(f"unknown command {doc.command}")


# --- argument parsing -------------------------------------------------------


def _floats(text: str, n: int, name: str) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"{name} must be {n} comma-separated numbers") from None
    if len(vals) != n:
        raise UsageError(f"{name} must be {n} comma-separated numbers")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yamabe",
        description="Homology of abelian classifying spaces, toral splittings, "
        "generator curvature status, manifold verdicts and Toda-bracket bounds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["table", "json"], default="table")
    coeff = argparse.ArgumentParser(add_help=False)
    coeff.add_argument("--coeff", choices=["Z", "Z2"], default="Z")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[fmt, coeff], help="H_*(B pi) through a degree")
    p.add_argument("spec")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)

    p = sub.add_parser("poincare", parents=[fmt], help="Poincare series of B(Z/p)^r")
    p.add_argument("rank", type=int)
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--method", choices=["closed", "recursive", "both"], default="both")

    p = sub.add_parser("split", parents=[fmt, coeff], help="toral/atoral splitting")
    p.add_argument("spec")
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)

    p = sub.add_parser("generators", parents=[fmt, coeff], help="geometric generators in one degree")
    p.add_argument("spec")
    p.add_argument("--degree", type=int, default=DEFAULT_MAX_DEGREE)

    p = sub.add_parser("classify", parents=[fmt], help="psc / Yamabe verdict for a manifold")
    p.add_argument("spec")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--spin", choices=["spin", "nonspin-cover"], required=True)
    p.add_argument("--orientable", choices=["yes", "no"], default="yes")
    p.add_argument("--class", dest="klass", choices=["toral", "atoral"], default=None)

    p = sub.add_parser("toda-bound", parents=[fmt], help="Toda-bracket curvature bound")
    p.add_argument("--n0", type=int, required=True)
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--constants", required=True, help="c0,c1,d0,d1")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--delta", type=float)
    g.add_argument("--params", help="t0,t1,l,eps")
    return parser


def run(args: argparse.Namespace) -> OutputDocument:
    if args.command == "homology":
        return cmd_homology(args.spec, Coeff.parse(args.coeff), args.max_degree)
    if args.command == "poincare":
        return cmd_poincare(args.rank, args.max_degree, args.method)
    if args.command == "split":
        return cmd_split(args.spec, Coeff.parse(args.coeff), args.max_degree)
    if args.command == "generators":
        return cmd_generators(args.spec, Coeff.parse(args.coeff), args.degree)
    if args.command == "classify":
        label = ClassLabel(args.klass) if args.klass else ClassLabel.UNSPECIFIED
        return cmd_classify(args.spec, args.dim, SpinStatus(args.spin), args.orientable == "yes", label)
    if args.command == "toda-bound":
        constants = _floats(args.constants, 4, "--constants")
        params = _floats(args.params, 4, "--params") if args.params else None
        return cmd_toda_bound(args.n0, args.n1, constants, args.delta, params)
    raise UsageError(f"unknown command {args.command}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = run(args)
    except GroupParseError as e:
        print(f"error: cannot parse group: {e}", file=sys.stderr)
        return 2
    except UnsupportedQuery as e:
        print(f"error: unsupported: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    print(doc.to_json() if args.format == "json" else render_table(doc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
