"""Command-line front end: ``tracegenus <command> ... [--json]``.

Exit codes: 0 on success, 2 on invalid input (including usage errors),
1 on an internal error.
"""

import argparse
import io
import json
import sys
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass, field

from . import catalog as cat
from .errors import TranscriptionRequired, ValidationError
from .knots import parse_knot
from .oracle import GenusOracle, boundary_classify
from .params import admissible_types, euler_char, genus_lower_bound_from_heegaard, max_boundary_heegaard
from .surfaces import NECESSARY_ONLY, diagram_homology, diagram_validate, load_diagram
from .threemanifolds import MThreeParams, classify_M, m3_linking_matrix

SCHEMA_VERSION = "1.0"
COMPUTED = "computed exactly by this package"


@dataclass
class Report:
    command: list
    result: dict
    citations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    text: str = ""
    ok: bool = True

    def to_dict(self):
        return {
            "schema_version": SCHEMA_VERSION,
            "command": list(self.command),
            "ok": self.ok,
            "result": self.result,
            "citations": list(self.citations),
            "warnings": list(self.warnings),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d):
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValidationError(f"unsupported report schema {d.get('schema_version')!r}")
        return cls(d["command"], d["result"], d.get("citations", []), d.get("warnings", []), ok=d.get("ok", True))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}\n{self.format_usage().strip()}")


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    p.add_argument("--catalog-dir", default=argparse.SUPPRESS, help="directory of family JSON files")
    return p


def build_parser():
    common = _common()
    p = _Parser(prog="tracegenus", description="Trisection genus of knot traces.", parents=[common])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("types", parents=[common], help="admissible (g,k;p,b) types")
    s.add_argument("--genus", type=int, required=True)
    s.add_argument("--euler", type=int, required=True)

    s = sub.add_parser("genus", parents=[common], help="trisection genus of a knot trace")
    s.add_argument("--knot", required=True, help="U, T(p,q), P(p1,...,pr), 4_1, optional mirror: prefix")
    s.add_argument("--framing", type=int, required=True)

    s = sub.add_parser("boundary", parents=[common], help="boundary 3-manifolds")
    bsub = s.add_subparsers(dest="which", parser_class=_Parser)
    b = bsub.add_parser("m-three", parents=[common], help="classify M(a1,a2,a3)")
    for name in ("--a1", "--a2", "--a3"):
        b.add_argument(name, type=int, required=True)
    b = bsub.add_parser("knot", parents=[common], help="classify S^3_m(K)")
    b.add_argument("--knot", required=True)
    b.add_argument("--framing", type=int, required=True)

    s = sub.add_parser("diagram", parents=[common], help="relative trisection diagram files")
    dsub = s.add_subparsers(dest="which", parser_class=_Parser)
    d = dsub.add_parser("validate", parents=[common], help="run the homology-level checks")
    d.add_argument("file")

    s = sub.add_parser("family", parents=[common], help="catalog diagram families")
    s.add_argument("name", nargs="?", help="family name; omit to list families")
    s.add_argument("--params", default="", help="comma separated, e.g. k=2,l=3")
    s.add_argument("--check", action="store_true", help="run the family self-check")
    s.add_argument("--mirror", action="store_true", help="use the mirror image")

    s = sub.add_parser("heegaard-bound", parents=[common], help="genus bound from boundary Heegaard genus")
    s.add_argument("--heegaard", type=int, required=True)
    return p


def _parse_params(text):
    out = {}
    for item in filter(None, (x.strip() for x in text.split(","))):
        if "=" not in item:
            raise ValidationError(f"parameter {item!r} is not of the form name=value")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = int(v)
        except ValueError as exc:
            raise ValidationError(f"parameter {k.strip()} needs an integer value, got {v!r}") from exc
    return out


def _catalog(args):
    d = getattr(args, "catalog_dir", None)
    return tuple(cat.load_catalog(d)) if d else cat.default_catalog()


def cmd_types(args):
    types = admissible_types(args.genus, args.euler)
    rows = [{"type": list(t.as_tuple()), "text": str(t), "euler": euler_char(t),
             "page": [t.p, t.b], "heegaard": t.page.heegaard_genus} for t in types]
    result = {"genus": args.genus, "euler": args.euler, "types": rows,
              "max_boundary_heegaard": max_boundary_heegaard(args.genus, args.euler)}
    lines = [f"admissible types with g={args.genus}, chi={args.euler}: {len(rows)}"]
    lines += [f"  {r['text']}  page Sigma_({r['page'][0]},{r['page'][1]}), Heegaard genus {r['heegaard']}" for r in rows]
    return Report([], result, [COMPUTED], [], "\n".join(lines))


def cmd_genus(args):
    k = parse_knot(args.knot)
    r = GenusOracle(_catalog(args)).trace_genus(k, args.framing)
    warnings = []
    if r.upper is not None:
        warnings.append("upper bound from a reconstructed diagram family: homology-level checks only")
    if r.conditions:
        warnings.append("conditional result: " + "; ".join(r.conditions))
    lines = [str(r), f"  boundary: {r.boundary}"]
    lines += [f"  - {c}" for c in r.citations]
    return Report([], r.to_dict(), list(r.citations), warnings, "\n".join(lines))


def cmd_boundary(args):
    if args.which == "m-three":
        params = MThreeParams(args.a1, args.a2, args.a3)
        M = m3_linking_matrix(params)
        c = classify_M(params, M)
        result = {"params": list(params.as_tuple()), "linking": M.as_lists(), "class": c.to_dict()}
        warnings = ["the M(a1,a2,a3) surgery diagram is reconstructed, not transcribed"]
        text = f"M({args.a1},{args.a2},{args.a3}): {c}  [{c.tag.value}]  H_1 = {c.h1}"
        return Report([], result, [c.citation, COMPUTED], warnings, text)
    if args.which == "knot":
        k = parse_knot(args.knot)
        c = boundary_classify(k, args.framing)
        result = {"knot": str(k), "framing": args.framing, "class": c.to_dict()}
        cites = [c.citation] if c.citation else []
        warnings = list(c.conditions)
        if c.tag.value == "Unknown":
            warnings.append("no boundary fact recorded for this knot and framing")
        text = f"S^3_{args.framing}({k}): {c}  [{c.tag.value}]  H_1 = {c.h1}"
        return Report([], result, cites + [COMPUTED], warnings, text)
    raise ValidationError("boundary needs a subcommand: m-three or knot")


def cmd_diagram(args):
    if args.which != "validate":
        raise ValidationError("diagram needs a subcommand: validate")
    d = load_diagram(args.file)
    rep = diagram_validate(d)
    result = rep.to_dict()
    if rep.passed:
        result["homology"] = diagram_homology(d).to_dict()
    lines = [rep.summary]
    lines += [f"  [{'ok' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "") for c in rep.checks]
    return Report([], result, [COMPUTED], rep.warnings, "\n".join(lines), ok=rep.passed)


def cmd_family(args):
    catalog = _catalog(args)
    if not args.name:
        rows = [{"name": f.name, "title": f.title, "type": list(f.ttype.as_tuple()), "params": list(f.params),
                 "framing": f.framing_formula, "framings": cat.realized_framings(f).description} for f in catalog]
        text = "\n".join(f"{r['name']:15s} {str(tuple(r['type'])):14s} {r['title']}" for r in rows)
        return Report([], {"families": rows}, [f.citation for f in catalog], [], text)
    f = cat.get_family(args.name, catalog)
    inst = cat.instantiate(f, _parse_params(args.params), args.mirror)
    result = inst.to_dict()
    result["type"] = list(f.ttype.as_tuple())
    result["gamma"] = inst.diagram.gamma.vectors()
    result["framings"] = cat.realized_framings(f).to_dict()
    warnings = ["reconstructed diagram: coordinates are not transcribed from figures"] if f.reconstructed else []
    lines = [f"{f.name}: {f.ttype}-relative trisection diagram of the {inst.framing}-trace of {inst.knot}"]
    ok = True
    if args.check:
        sc = cat.self_check(f, dict(inst.params), args.mirror)
        result["self_check"] = sc.to_dict()
        ok = sc.passed
        warnings.append(NECESSARY_ONLY)
        lines += [f"  [{'ok' if p else 'FAIL'}] {n}: {d}" for n, p, d in sc.checks]
    return Report([], result, [f.citation], warnings, "\n".join(lines), ok=ok)


def cmd_heegaard(args):
    g = genus_lower_bound_from_heegaard(args.heegaard)
    result = {"heegaard": args.heegaard, "genus_lower_bound": g}
    text = f"boundary Heegaard genus {args.heegaard} forces trisection genus >= {g} (Euler characteristic 2)"
    return Report([], result, [COMPUTED], ["applies only to 4-manifolds with Euler characteristic 2"], text)


COMMANDS = {
    "types": cmd_types,
    "genus": cmd_genus,
    "boundary": cmd_boundary,
    "diagram": cmd_diagram,
    "family": cmd_family,
    "heegaard-bound": cmd_heegaard,
}


def run(argv, stdout=None, stderr=None):
    """Execute one command; returns ``(exit_code, report_or_None)``."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(argv)
    want_json = "--json" in argv
    parser = build_parser()
    try:
        buf = io.StringIO()
        try:
            with redirect_stderr(buf), redirect_stdout(buf):
                args = parser.parse_args(argv)
        except SystemExit as exc:
            # --help exits 0 through argparse
            stdout.write(buf.getvalue())
            return (0 if exc.code in (0, None) else 2), None
        if not args.command:
            raise ValidationError(parser.format_usage().strip())
        report = COMMANDS[args.command](args)
        report.command = argv
    except (ValidationError, TranscriptionRequired) as exc:
        if want_json:
            report = Report(argv, {"error": str(exc)}, [], [], ok=False)
            stdout.write(report.to_json() + "\n")
        else:
            stderr.write(f"error: {exc}\n")
        return 2, None
    except Exception as exc:  # pragma: no cover - last resort
        stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return 1, None
    if want_json:
        stdout.write(report.to_json() + "\n")
    else:
        stdout.write(report.text + "\n")
        for w in report.warnings:
            stdout.write(f"note: {w}\n")
    return (0 if report.ok else 2), report


def main(argv=None):
    code, _ = run(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
