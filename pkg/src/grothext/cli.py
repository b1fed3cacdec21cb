"""Command-line front end.

Exit codes: 0 success / check holds, 1 check failed or invalid presentation,
2 input error (unparsable file, bad relation text, bad generator
parameters), 3 missing optional data or an infinite / oversized quotient.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import artheory, catgen, classify, fileformat, k0
from .lattice import DEFAULT_MAX_ORDER, UnsupportedSize
from .model import validate

OK, FAILED, INPUT_ERROR, MISSING = 0, 1, 2, 3

_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?([^\s+*\-]+)\s*")


class RelationSyntaxError(ValueError):
    pass


def parse_relation(text: str, names) -> tuple[int, ...]:
    """Parse ``"2*S1 + S2 - P1"`` into a coefficient vector over ``names``."""
    index = {s: i for i, s in reversed(list(enumerate(names)))}
    v = [0] * len(names)
    pos = 0
    text = text.strip()
    if not text:
        raise RelationSyntaxError("empty relation")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise RelationSyntaxError(f"cannot parse relation at offset {pos}: {text[pos:]!r}")
        sign, coef, name = m.groups()
        if sign is None and pos > 0:
            raise RelationSyntaxError(f"missing '+' or '-' before {name!r}")
        if name not in index:
            raise RelationSyntaxError(f"unknown indecomposable {name!r}")
        k = int(coef) if coef else 1
        v[index[name]] += -k if sign == "-" else k
        pos = m.end()
    return tuple(v)


class Output:
    """Collects report fields; prints human lines as they come or JSON at the end."""

    def __init__(self, as_json: bool, command: list[str]):
        self.as_json = as_json
        self.doc: dict = {"command": command}

    def set(self, key, value, line=None):
        self.doc[key] = value
        if line is not None and not self.as_json:
            print(line)

    def line(self, text):
        if not self.as_json:
            print(text)

    def finish(self, code: int) -> int:
        self.doc["exit_code"] = code
        if self.as_json:
            print(json.dumps(self.doc, indent=2, sort_keys=True, ensure_ascii=False))
        return code


def _group_doc(g):
    return {"free_rank": g.free_rank, "torsion": list(g.torsion), "text": g.describe()}


def _load(args, out):
    try:
        return fileformat.load(args.path)
    except fileformat.ParseError as e:
        out.set("error", str(e), f"parse error: {e}")
        if e.line is not None:
            out.set("line", e.line)
            out.set("column", e.column)
        return None
    except OSError as e:
        out.set("error", str(e), f"cannot read {args.path}: {e.strerror}")
        return None


def _context(p, out):
    try:
        return k0.build_context(p)
    except k0.InvalidPresentation as e:
        out.set("violations", e.report.violations)
        out.line("invalid presentation:")
        for v in e.report.violations:
            out.line(f"  {v}")
        return None


def cmd_validate(args, out) -> int:
    p = _load(args, out)
    if p is None:
        return INPUT_ERROR
    report = validate(p)
    out.set("valid", report.ok)
    out.set("violations", report.violations)
    out.set("notices", report.notices)
    for v in report.violations:
        out.line(v)
    for note in report.notices:
        out.line(f"note: {note}")
    out.line("valid" if report.ok else f"{len(report.violations)} violation(s)")
    return OK if report.ok else FAILED


def cmd_k0(args, out) -> int:
    p = _load(args, out)
    if p is None:
        return INPUT_ERROR
    ctx = _context(p, out)
    if ctx is None:
        return FAILED
    out.set("k0", _group_doc(ctx.group_k0), f"K0: {ctx.group_k0.describe()}")
    if ctx.rel_indices:
        out.set("k0_relative", _group_doc(ctx.group_rel),
                f"K0 relative to T: {ctx.group_rel.describe()}")
    if p.is_truncation:
        out.set("is_truncation", True,
                "note: presentation is a truncation; groups describe the window only")
    return OK


def _witness_doc(p, res):
    if res.witness is None:
        return None
    return {"vector": list(res.witness), "text": p.describe_relation(res.witness),
            "conflation": res.witness_conflation}


def _report_check(out, p, key, label, res):
    out.set(key, {"holds": res.holds, "witness": _witness_doc(p, res), "notes": res.notes},
            f"{label}: {'holds' if res.holds else 'FAILS'}")
    if res.witness is not None:
        src = (f" (conflation {res.witness_conflation})"
               if res.witness_conflation is not None else "")
        out.line(f"  witness: {p.describe_relation(res.witness)} = {list(res.witness)}{src}")
    for note in res.notes:
        out.line(f"  note: {note}")


def cmd_check(args, out) -> int:
    p = _load(args, out)
    if p is None:
        return INPUT_ERROR
    ctx = _context(p, out)
    if ctx is None:
        return FAILED
    try:
        if args.which == "ar-gen":
            res = k0.check_ar_generation(ctx)
            _report_check(out, p, "ar_generation", "AR relations generate Ker(psi)", res)
            holds = res.holds
        elif args.which == "relative":
            res = k0.check_relative_generation(ctx)
            _report_check(out, p, "relative_generation",
                          "l_X (X not in T[1]) generate Ker(g)", res)
            holds = res.holds
        elif args.which == "flags":
            rep = k0.check_flag_consistency(ctx)
            out.set("flag_violations", rep.violations)
            for v in rep.violations:
                out.line(v)
            out.line("rel_t flags consistent" if rep.ok else
                     f"{len(rep.violations)} inconsistent rel_t flag(s)")
            holds = rep.ok
        elif args.which == "ar-homdim":
            missing = [f for f in ("hom", "shift") if getattr(p, f) is None]
            if missing:
                raise k0.MissingData(missing, "ar-homdim")
            rep = artheory.verify_ar_homdim(p)
            verdicts = []
            for v in rep.verdicts:
                verdicts.append({"conflation": v.conflation, "status": v.status,
                                 "at": None if v.at is None else p.indecomposables[v.at],
                                 "defect": v.defect})
                detail = f" ({v.reason})" if v.reason else ""
                out.line(f"conflation {v.conflation}: {v.status}{detail}")
            out.set("verdicts", verdicts)
            holds = rep.all_confirmed
            out.line("all AR triangles confirmed" if holds else "some AR triangles not confirmed")
        else:
            res = k0.check_corollary(ctx)
            _report_check(out, p, "relative_generation",
                          "(1) l_X (X not in T[1]) generate Ker(g)", res.relative)
            _report_check(out, p, "ar_generation", "(2) AR relations generate Ker(psi)", res.ar)
            lf = res.locally_finite
            out.set("locally_finite", lf, "(3) locally finite: " + (
                "yes (finite presentation)" if lf else "unknown (truncation; evidence only)"))
            holds = res.holds
            out.line("statements (1)-(3) agree" if holds else "statements (1)-(3) do NOT agree")
    except k0.MissingData as e:
        out.set("missing", list(e.fields), f"missing data: {', '.join(e.fields)}")
        return MISSING
    out.set("holds", holds)
    return OK if holds else FAILED


def cmd_decompose(args, out) -> int:
    p = _load(args, out)
    if p is None:
        return INPUT_ERROR
    try:
        rel = parse_relation(args.relation, p.indecomposables)
    except RelationSyntaxError as e:
        out.set("error", str(e), f"bad relation: {e}")
        return INPUT_ERROR
    ctx = _context(p, out)
    if ctx is None:
        return FAILED
    coeffs = ctx.lattice_ar.solve(rel)
    out.set("relation", list(rel))
    out.set("ar_conflations", list(ctx.ar_indices))
    out.set("coefficients", coeffs)
    if coeffs is None:
        out.line("not in AR lattice")
        return FAILED
    out.line(f"coefficients over AR conflations {list(ctx.ar_indices)}: {coeffs}")
    return OK


def cmd_classify(args, out) -> int:
    p = _load(args, out)
    if p is None:
        return INPUT_ERROR
    ctx = _context(p, out)
    if ctx is None:
        return FAILED
    try:
        q = classify.admissible_quotient(ctx)
    except k0.MissingData as e:
        out.set("missing", list(e.fields), f"missing data: {', '.join(e.fields)}")
        return MISSING
    out.set("quotient", _group_doc(q), f"K0/im(G): {q.describe()}")
    if not q.is_finite:
        out.set("order", "infinite", "quotient is infinite; use membership queries instead")
        return MISSING
    out.set("order", q.order)
    if q.order > args.max_order:
        out.line(f"quotient order {q.order} exceeds --max-order {args.max_order}")
        return MISSING
    try:
        rep = classify.verify_bijection(ctx, max_order=args.max_order)
    except UnsupportedSize as e:
        out.set("error", str(e), str(e))
        return MISSING
    subs = []
    for k, e in enumerate(rep.entries):
        subs.append({"structure": _group_doc(e.structure), "index": e.index,
                     "verified": e.verified,
                     "preimage_basis": [list(b) for b in e.preimage.basis]})
        out.line(f"  H{k}: {e.structure.describe()}, index {e.index}, "
                 f"f(g(H)) = H {'verified' if e.verified else 'FAILED'}")
    out.set("subgroups", subs)
    out.set("generator_witnesses",
            {p.indecomposables[i]: k for i, k in rep.generator.witnesses.items()})
    out.set("distinct", rep.distinct)
    out.set("failures", rep.failures)
    for f in rep.failures:
        out.line(f"  failure: {f}")
    n = len(rep.entries)
    verdict = "bijection verified" if rep.verified else "bijection NOT verified"
    out.set("verified", rep.verified,
            f"{n} subgroup{'' if n == 1 else 's'}; {verdict}")
    return OK if rep.verified else FAILED


def cmd_gen(args, out) -> int:
    try:
        n = int(args.n)
        if args.kind.lower() == "cluster":
            p = catgen.gen_cluster_A(n)
        else:
            p = catgen.gen_mod_dynkin(args.kind.upper(), n, args.orientation or "linear")
    except (ValueError, catgen.InvalidDynkinDatum) as e:
        out.set("error", str(e), f"invalid parameters: {e}")
        return INPUT_ERROR
    text = fileformat.dumps(p)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        out.set("written", args.out, f"wrote {p.name} ({p.n} indecomposables) to {args.out}")
    elif out.as_json:
        out.set("presentation", fileformat.to_dict(p))
    else:
        sys.stdout.write(text)
    out.set("name", p.name)
    out.set("indecomposables", p.n)
    return OK


def build_parser() -> argparse.ArgumentParser:
    glob = argparse.ArgumentParser(add_help=False)
    glob.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                      help="emit one JSON document")
    glob.add_argument("--max-order", type=int, default=argparse.SUPPRESS,
                      help=f"largest K0/im(G) to enumerate (default {DEFAULT_MAX_ORDER})")
    glob.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                      help="print elapsed time to stderr")

    parser = argparse.ArgumentParser(prog="grothext", parents=[glob],
                                     description="Grothendieck groups of presented "
                                                 "extriangulated categories")
    sub = parser.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("validate", parents=[glob], help="check presentation invariants")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("k0", parents=[glob], help="print K0 and the relative K0")
    s.add_argument("path")
    s.set_defaults(func=cmd_k0)

    s = sub.add_parser("check", parents=[glob], help="run a generation check")
    s.add_argument("which", choices=["ar-gen", "relative", "ar-homdim", "corollary", "flags"])
    s.add_argument("path")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("decompose", parents=[glob],
                       help="write a relation as a combination of AR relations")
    s.add_argument("path")
    s.add_argument("relation", help='e.g. "S1 + S2 - P1"')
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("classify", parents=[glob],
                       help="enumerate subgroups between im(G) and K0 and verify f(g(H)) = H")
    s.add_argument("path")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("gen", parents=[glob], help="generate an example presentation")
    s.add_argument("kind", help="A, D, E or cluster")
    s.add_argument("n")
    s.add_argument("orientation", nargs="?",
                   help="linear (default), alternating, or one of '<>' per edge")
    s.add_argument("-o", "--out", help="output file (default: stdout)")
    s.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return INPUT_ERROR if e.code else OK
    args.json = getattr(args, "json", False)
    args.max_order = getattr(args, "max_order", DEFAULT_MAX_ORDER)
    out = Output(args.json, argv)
    start = time.perf_counter()
    code = args.func(args, out)
    if getattr(args, "timing", False):
        print(f"time: {time.perf_counter() - start:.3f} s", file=sys.stderr)
    return out.finish(code)


if __name__ == "__main__":
    sys.exit(main())
