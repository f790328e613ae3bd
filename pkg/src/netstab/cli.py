"""Command-line front end: ``netstab <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from .algebra.points import ProjPoint
from .atlas import EXPECTED_SEGRE, ROWS, enumerate_atlas, enumerate_triples, verify_atlas_row
from .errors import NetstabError, ParseError, UnclassifiedExtensionPoint, UnknownSymbol
from .gale import cubic_net_stability, gale_transform, verify_gale
from .hilbert_mumford import Certificate, OneParamSubgroup, pivot_weight_sum, verify_unstable_certificate
from .parsing import InputDocument, parse_document, parse_field, parse_int_vector, parse_vector
from .plane_curves import decide_quartic_stability, has_only_ADE, is_reduced
from .quadric_nets import QuadricNet, base_locus, decide_net_stability, discriminant
from .segre import intersection_type_lookup, segre_symbol

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_DOMAIN, EXIT_UNDECIDED = 0, 1, 2, 3, 4


class Report:
    def __init__(self, command: str, inputs: dict):
        self.command = command
        self.inputs = inputs
        self.result: dict = {}
        self.certificates: list = []
        self.diagnostics: dict = {}
        self.text: list[str] = []
        self.exit_code = EXIT_OK

    def as_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs, "result": self.result,
                "certificates": self.certificates, "diagnostics": self.diagnostics,
                "version": __version__}


# -- input helpers ------------------------------------------------------------

def _read(path: str) -> InputDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text)


def _net(doc: InputDocument) -> QuadricNet:
    names = [n for n in ("Q1", "Q2", "Q3") if n in doc.forms]
    forms = doc.polys("P3", 2, names if len(names) == 3 else None)
    if len(forms) != 3:
        raise ParseError(f"a net file declares three quadrics, found {len(forms)}")
    return QuadricNet.from_forms(forms)


def _quartic(doc: InputDocument):
    if len(doc.forms) != 1:
        raise ParseError("a quartic file declares exactly one form")
    try:
        return doc.polys("P2", 4)[0]
    except ParseError:
        return doc.polys("disc", 4)[0]


def _field(args, doc: InputDocument | None) -> int | None:
    if getattr(args, "field", None):
        return parse_field(args.field)
    return doc.field_d if doc else None


def _field_diagnostics(report: Report, d: int | None, points: Sequence[ProjPoint]):
    if d is None:
        return
    report.diagnostics["field"] = f"sqrt({d})"
    outside = [str(p) for p in points if p.field() not in (None, d)]
    if outside:
        report.diagnostics["points_outside_declared_field"] = outside


# -- subcommands ----------------------------------------------------------------

def cmd_discriminant(args, report: Report):
    net = _net(_read(args.net))
    D = discriminant(net)
    report.result = {"discriminant": str(D)}
    report.text.append(str(D))


def _verdict_text(v) -> list[str]:
    lines = [f"verdict: {v.status.value}"]
    lines += [f"  {r.type} at {r.point} (multiplicity {r.multiplicity}, Milnor {r.milnor})"
              for r in v.records]
    lines += [f"  reason: {r}" for r in v.reasons]
    return lines


def cmd_classify(args, report: Report):
    doc = _read(args.quartic)
    F = _quartic(doc)
    v = decide_quartic_stability(F, seed=args.seed, cap=args.degree_cap or 16)
    report.result = v.as_dict()
    report.result["reduced"] = is_reduced(F)
    _field_diagnostics(report, _field(args, doc), [r.point for r in v.records])
    report.text += _verdict_text(v)


def cmd_net_stability(args, report: Report):
    net = _net(_read(args.net))
    v = decide_net_stability(net, seed=args.seed)
    report.result = v.as_dict()
    report.result["discriminant"] = str(discriminant(net))
    report.text.append(f"discriminant: {report.result['discriminant']}")
    report.text += _verdict_text(v)


def cmd_good(args, report: Report):
    net = _net(_read(args.net))
    D = discriminant(net)
    reduced = not D.is_zero() and is_reduced(D)
    ok, recs = has_only_ADE(D, seed=args.seed) if reduced else (False, [])
    locus = base_locus(net, seed=args.seed, cap=args.degree_cap or 10)
    report.result = {"good": ok, "discriminant": str(D), "reduced": reduced,
                     "singularities": [r.as_dict() for r in recs],
                     "base_locus_finite": locus.finite}
    report.text.append(f"good: {ok}")
    report.text += [f"  {r.type} at {r.point}" for r in recs]


def cmd_baselocus(args, report: Report):
    doc = _read(args.net)
    rep = base_locus(_net(doc), seed=args.seed, cap=args.degree_cap or 10)
    report.result = rep.as_dict()
    if rep.residual:
        report.certificates = [{"residual_eliminant": r} for r in rep.residual]
    _field_diagnostics(report, _field(args, doc), [p for p, _m in rep.points])
    if not rep.finite:
        report.text.append("base locus is positive-dimensional")
        return
    report.text += [f"{p}  multiplicity {m}" for p, m in rep.points]
    report.text.append(f"accounted length: {rep.accounted_length} of 8")
    report.text += [f"unresolved points: roots of {r}" for r in rep.residual]


def cmd_segre(args, report: Report):
    doc = _read(args.pencil)
    forms = doc.polys("P3", 2)
    if len(forms) != 2:
        raise ParseError(f"a pencil file declares two quadrics, found {len(forms)}")
    sym = segre_symbol(forms[0], forms[1])
    try:
        meaning = intersection_type_lookup(sym)
    except UnknownSymbol:
        meaning = None
    report.result = {"symbol": str(sym), "intersection": meaning,
                     "factors": [{"factor": f, "bracket": list(b)} for f, b in sym.factors]}
    report.text.append(str(sym) + (f"  ({meaning})" if meaning else ""))


def cmd_gale(args, report: Report):
    doc = _read(args.net)
    net = _net(doc)
    point = parse_vector(args.point) if args.point else doc.point
    if point is None:
        raise ParseError("no point given (--point or 'point =' in the file)")
    if args.verify:
        cn, rep = verify_gale(net, point, seed=args.seed)
        report.result["verification"] = rep.as_dict()
        if not rep.passed:
            report.exit_code = EXIT_FAILED
    else:
        cn = gale_transform(net, point)
    report.result.update(cn.as_dict())
    report.text += [f"{k} = {v}" for k, v in cn.as_dict().items() if k.startswith("C")]
    if args.verify:
        rv = report.result["verification"]
        report.text.append(f"projection check: {'PASS' if rv['passed'] else 'FAIL'} "
                           f"(accounted {rv['accounted']} of {rv['expected']})")
    if args.stability:
        v = cubic_net_stability(cn, discriminant(net) if not args.no_provenance else None,
                                seed=args.seed)
        report.result["stability"] = v.as_dict()
        if v.certificate is not None:
            report.certificates.append(v.as_dict()["certificate"])
        report.text.append(f"cubic net verdict: {v.status}")
        if v.status == "Undecided":
            report.exit_code = EXIT_UNDECIDED


_AMBIENT_BY_LENGTH = {4: "P3", 3: "P2"}


def cmd_hm(args, report: Report):
    doc = _read(args.system)
    lam = parse_int_vector(args.lam) if args.lam else doc.lam
    if lam is None:
        raise ParseError("no weights given (--lambda or 'lambda =' in the file)")
    lam = OneParamSubgroup(lam)
    ambient = _AMBIENT_BY_LENGTH.get(len(lam))
    if ambient is None:
        raise ParseError("weights must have length 3 or 4")
    forms = doc.polys(ambient)
    g = _read(args.g).g if args.g else doc.g
    if g is None:
        value = pivot_weight_sum(forms, lam)
        ok = value < 0 if args.strict else value <= 0
        g_out = None
    else:
        cert = Certificate(g, lam)
        ok, value = verify_unstable_certificate(forms, cert, strict=args.strict)
        g_out = [[str(x) for x in row] for row in cert.g]
    report.result = {"value": value, "lambda": list(lam.weights), "strict": args.strict,
                     "destabilizing": ok}
    report.certificates.append({"g": g_out, "lambda": list(lam.weights), "value": value})
    relation = "< 0" if args.strict else "<= 0"
    report.text.append(f"pivot weight sum under {lam}: {value}")
    report.text.append(f"destabilizing ({relation}): {ok}")


def cmd_atlas_enumerate(args, report: Report):
    rep = enumerate_atlas()
    report.result = {"named_found": rep.named_found, "enumerated": rep.enumerated,
                     "rows": rep.rows, "subsumed": len(rep.subsumed),
                     "discrepancies": rep.discrepancies}
    if args.dump:
        report.result["triples"] = [
            {"sources": [name for name, _t in srcs], **srcs[0][1].as_dict()}
            for srcs in enumerate_triples().values()]
    for r in rep.rows:
        t = r["triple"]
        how = "enumerated" if r["enumerated"] else "contained in row " + ",".join(map(str, r["contained_in"]))
        report.text.append(f"row {r['row']:2d}  {r['source']:4s} I={t['I']:6s} J={t['J']:6s} "
                           f"sizes={r['sizes']}  {how}")
    report.text.append(f"{rep.enumerated} maximal triples enumerated, {len(rep.subsumed)} subsumed, "
                       f"{len(rep.discrepancies)} unmatched")
    if rep.discrepancies or rep.named_found != len(ROWS):
        report.exit_code = EXIT_FAILED


def cmd_atlas_verify(args, report: Report):
    rows = [args.row] if args.row else sorted(ROWS)
    out = []
    for row in rows:
        rr = verify_atlas_row(row, trials=args.trials, seed=args.seed)
        out.append(rr.as_dict())
        segre = "" if rr.row not in EXPECTED_SEGRE else \
            f"  segre {'PASS' if rr.segre_passed else 'MISMATCH'}"
        report.text.append(f"row {row:2d}: {'PASS' if rr.passed else 'FAIL'} "
                           f"({args.trials - len(rr.failures)}/{args.trials}){segre}")
        if not rr.passed:
            report.exit_code = EXIT_FAILED
    report.result = {"rows": out}
    report.diagnostics["seed"] = args.seed


def cmd_examples_run_all(args, report: Report):
    from .suite import run_all
    checks = run_all(seed=args.seed, trials=args.trials)
    report.result = {"criteria": [c.as_dict(args.timings) for c in checks],
                     "passed": all(c.passed for c in checks)}
    for c in checks:
        report.text.append(c.line())
        report.text += [f"    {d}" for d in c.details]
    if not report.result["passed"]:
        report.exit_code = EXIT_FAILED


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--degree-cap", type=int, default=None,
                        help="truncation cap for local algebra lengths")
    common.add_argument("--timings", action="store_true", help="add wall-clock timings")

    parser = argparse.ArgumentParser(prog="netstab", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("discriminant", parents=[common], help="discriminant quartic of a net")
    p.add_argument("--net", required=True)
    p.set_defaults(func=cmd_discriminant)

    p = sub.add_parser("classify", parents=[common], help="singularities and verdict of a quartic")
    p.add_argument("--quartic", required=True)
    p.add_argument("--field", help="sqrt:D")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("net-stability", parents=[common], help="stability verdict of a net")
    p.add_argument("--net", required=True)
    p.set_defaults(func=cmd_net_stability)

    p = sub.add_parser("good", parents=[common], help="reduced ADE discriminant test")
    p.add_argument("--net", required=True)
    p.set_defaults(func=cmd_good)

    p = sub.add_parser("baselocus", parents=[common], help="base points with multiplicities")
    p.add_argument("--net", required=True)
    p.add_argument("--field", help="sqrt:D")
    p.set_defaults(func=cmd_baselocus)

    p = sub.add_parser("segre", parents=[common], help="Segre symbol of a pencil")
    p.add_argument("--pencil", required=True)
    p.set_defaults(func=cmd_segre)

    p = sub.add_parser("gale", parents=[common], help="cubic net by projection from a base point")
    p.add_argument("--net", required=True)
    p.add_argument("--point", help="a,b,c,d")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--stability", action="store_true", help="verdict for the cubic net")
    p.add_argument("--no-provenance", action="store_true",
                   help="do not use the discriminant of the net for the verdict")
    p.set_defaults(func=cmd_gale)

    p = sub.add_parser("hm", parents=[common], help="pivot weight sum of a linear system")
    p.add_argument("--system", required=True)
    p.add_argument("--lambda", dest="lam", help="r0,r1,...")
    p.add_argument("--g", help="file with a 'g = ...' matrix line")
    p.add_argument("--strict", action="store_true", help="test S < 0 instead of S <= 0")
    p.set_defaults(func=cmd_hm)

    atlas = sub.add_parser("atlas", help="maximal destabilizing triples")
    asub = atlas.add_subparsers(dest="action", required=True)
    p = asub.add_parser("enumerate", parents=[common])
    p.add_argument("--dump", action="store_true", help="list every enumerated triple")
    p.set_defaults(func=cmd_atlas_enumerate)
    p = asub.add_parser("verify", parents=[common])
    p.add_argument("--row", type=int, choices=sorted(ROWS))
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_atlas_verify)

    ex = sub.add_parser("examples", help="built-in reproduction suite")
    esub = ex.add_subparsers(dest="action", required=True)
    p = esub.add_parser("run-all", parents=[common])
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_examples_run_all)
    return parser


def _inputs(args) -> dict:
    skip = {"func", "json", "timings"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


_VECTOR_FLAGS = ("--lambda", "--point")


def _attach_vector_values(argv: Sequence[str]) -> list[str]:
    """'--lambda -2,1,1' -> '--lambda=-2,1,1' so argparse does not read the value as a flag."""
    out, it = [], iter(argv)
    for a in it:
        if a in _VECTOR_FLAGS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_attach_vector_values(argv))
    name = args.command + (f" {args.action}" if getattr(args, "action", None) else "")
    report = Report(name, _inputs(args))
    start = time.perf_counter()
    try:
        args.func(args, report)
    except UnclassifiedExtensionPoint as exc:
        report.exit_code = exc.exit_code
        report.result = {"status": "Unclassified", "error": str(exc)}
        report.certificates = [{"residual_eliminant": f} for f in exc.factors]
        report.text.append(f"unclassified: {exc}")
        report.text += [f"  residual eliminant: {f}" for f in exc.factors]
    except NetstabError as exc:
        report.exit_code = exc.exit_code
        report.result = {"error": type(exc).__name__, "message": str(exc)}
        report.text.append(f"error: {type(exc).__name__}: {exc}")
    if args.timings:
        report.diagnostics["seconds"] = round(time.perf_counter() - start, 3)
    if args.json:
        print(json.dumps(report.as_dict(), indent=2, sort_keys=True, default=str))
    else:
        stream = sys.stderr if report.exit_code in (EXIT_PARSE, EXIT_DOMAIN) else sys.stdout
        print("\n".join(report.text), file=stream)
        if report.diagnostics:
            for k, v in sorted(report.diagnostics.items()):
                print(f"# {k}: {v}", file=stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
