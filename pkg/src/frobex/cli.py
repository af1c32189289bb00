"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a check fails (or a
classification leaves unresolved pairs), 2 on usage, parse, capacity or
precondition errors.
"""

import argparse
import json
import os
import sys
from typing import List, Optional

from . import __version__
from .acceptance import CRITERIA, run_all
from .catalog import families, get_family, listed_extensions, standard_groups
from .errors import FrobexError, FrobexParseError
from .extended import CandidateLattice, ExtFrobAlgebra, check_extended, classify_extended
from .frobenius import AxiomResult, FrobAlgebra, Report, check_frobenius
from .functors import (
    check_extended_functor,
    check_frobenius_functor,
    check_separable_functor,
    make_sample,
    realize_functor,
)
from .hopf import HopfAlgebra, check_hopf, check_lemma_A1, group_hopf_algebra, psi
from .io import dumps, ext_to_dict, frob_to_dict, hopf_to_dict, load, load_lattice
from .scalars import field_make, sqrt_conductor

GOLDEN_CLASSIFY = ("k", "CoverR", "kC2", "kC3", "kC4", "klein", "T2", "x2", "x3", "x4", "x5", "x6")


class Output:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, doc, table: str):
        self.stream.write(dumps(doc) if self.fmt == "json" else table.rstrip("\n") + "\n")


# -- helpers ------------------------------------------------------------------


def _field(args):
    return field_make(args.field_conductor) if args.field_conductor else None


def _parse_dims(text: str) -> List[int]:
    try:
        dims = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dims {text!r}; expected e.g. 1,2,3") from None
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError("dims must be positive integers")
    return dims


def lattice_names():
    """name -> factory taking a field, collected from the family catalog."""
    out = {}
    for fam in families().values():
        F = fam.field()
        for factory in (fam.lattice, fam.witness_lattice):
            if factory is not None:
                out.setdefault(factory(F).name, factory)
    return out


def resolve_lattice(source: str, F) -> CandidateLattice:
    if os.path.exists(source):
        return load_lattice(source, F)
    names = lattice_names()
    if source not in names:
        raise FrobexError(f"unknown lattice {source!r}; known: {', '.join(sorted(names))} (or a JSON file)")
    return names[source](F)


def _report_table(title: str, rep: Report, seed) -> str:
    lines = [f"{title}  seed={seed}"]
    lines += ["  " + str(r) for r in rep.results]
    lines.append(f"result: {'PASS' if rep.ok else 'FAIL'}")
    return "\n".join(lines)


def _report_doc(title: str, rep: Report, seed, **extra):
    doc = {"command": title, "seed": seed, "ok": rep.ok}
    doc.update(extra)
    doc["checks"] = [r.to_dict() for r in rep.results]
    return doc


# -- commands ----------------------------------------------------------------


def cmd_verify(args, out: Output) -> int:
    obj = load(args.file, _field(args))
    rep = Report()
    if isinstance(obj, HopfAlgebra):
        kind = "hopf"
        rep.extend(check_hopf(obj))
        if rep.ok:
            rep.extend(check_frobenius(psi(obj, check=False)), "psi.")
    elif isinstance(obj, ExtFrobAlgebra):
        kind = "extended"
        rep.extend(check_frobenius(obj.frob))
        rep.extend(check_extended(obj))
    else:
        kind = "frobenius"
        rep.extend(check_frobenius(obj))
    out.emit(_report_doc("verify", rep, args.seed, file=args.file, kind=kind),
             _report_table(f"verify {args.file} ({kind})", rep, args.seed))
    return 0 if rep.ok else 1


def _describe(s) -> str:
    phi = "phi trivial" if s.phi.is_identity() else "phi nontrivial"
    theta = "theta trivial" if s.theta.is_zero() and not s.directions else "theta nontrivial"
    return f"{phi}, {theta}"


def classification_table(header: str, cl, seed) -> str:
    lines = [f"{header}  seed={seed}", "scalars are polynomials in z, a primitive root of unity of the conductor",
             f"structures: {len(cl.structures)}"]
    for k, s in enumerate(cl.structures):
        phi = "I" if s.phi.is_identity() else json.dumps(s.phi.to_strings())
        extra = f" + span{json.dumps([v.to_strings() for v in s.directions])}" if s.directions else ""
        lines.append(f"  [{k}] phi={phi} theta={json.dumps(s.theta.to_strings())}{extra}")
    lines.append(f"isomorphism classes: {len(cl.classes)}")
    for c in cl.classes:
        lines.append(f"  {{{', '.join(map(str, c))}}}: {_describe(cl.structures[c[0]])}")
    if cl.unresolved:
        lines.append("unresolved pairs: " + ", ".join(f"({i},{j})" for i, j in cl.unresolved))
    else:
        lines.append("unresolved pairs: none")
    return "\n".join(lines)


def classify_doc(header: dict, cl, seed) -> dict:
    doc = dict(header)
    doc["seed"] = seed
    doc.update(cl.to_dict())
    return doc


def _classify(fam_name: Optional[str], algebra: Optional[str], lattice: Optional[str],
              witness_lattice: Optional[str], conductor: Optional[int]):
    if fam_name:
        fam = get_family(fam_name)
        F = fam.field(conductor)
        fa = fam.build(F)
        lat = resolve_lattice(lattice, F) if lattice else fam.lattice(F)
        witnesses = fam.witnesses(F)
        wl = fam.witness_lattice(F) if fam.witness_lattice else None
    else:
        obj = load(algebra, field_make(conductor) if conductor else None)
        fa = obj.frob if isinstance(obj, ExtFrobAlgebra) else obj
        if not isinstance(fa, FrobAlgebra):
            raise FrobexError("classify needs a Frobenius or extended Frobenius algebra")
        F = fa.field
        if not lattice:
            raise FrobexError("--lattice is required with --algebra")
        lat = resolve_lattice(lattice, F)
        witnesses, wl = [], None
    if witness_lattice:
        wl = resolve_lattice(witness_lattice, F)
    cl = classify_extended(fa, lat, witnesses, wl)
    header = {
        "command": "classify",
        "family": fam_name or "",
        "algebra": algebra or "",
        "conductor": F.conductor,
        "lattice": lat.name,
        "witness_lattice": wl.name if wl is not None else "",
    }
    return header, cl


def cmd_classify(args, out: Output) -> int:
    if bool(args.family) == bool(args.algebra):
        raise FrobexError("give exactly one of --family or --algebra")
    header, cl = _classify(args.family, args.algebra, args.lattice, args.witness_lattice, args.field_conductor)
    title = f"classify {header['family'] or header['algebra']} (lattice {header['lattice']}, conductor {header['conductor']})"
    out.emit(classify_doc(header, cl, args.seed), classification_table(title, cl, args.seed))
    return 1 if cl.unresolved else 0


def catalog_doc(name: str, conductor: Optional[int] = None, with_checks: bool = True) -> dict:
    fam = get_family(name)
    F = fam.field(conductor)
    fa = fam.build(F)
    exts = listed_extensions(name, F)
    doc = {
        "family": name,
        "description": fam.description,
        "lattice": fam.lattice(F).to_dict(),
        "algebra": frob_to_dict(fa),
        "extensions": [ext_to_dict(e) for e in exts],
    }
    if with_checks:
        doc["algebra_ok"] = check_frobenius(fa).ok
        doc["extensions_ok"] = [check_extended(e).ok for e in exts]
    return doc


def cmd_catalog(args, out: Output) -> int:
    if args.family is None:
        rows = [f"{n:8s} conductor {f.conductor:3d}  {f.description}" for n, f in families().items()]
        doc = {"families": {n: {"conductor": f.conductor, "description": f.description} for n, f in families().items()}}
        out.emit(doc, "\n".join(rows))
        return 0
    doc = catalog_doc(args.family, args.field_conductor)
    doc["seed"] = args.seed
    lines = [f"family {args.family}: {doc['description']}  seed={args.seed}",
             f"algebra dim {doc['algebra']['dim']}, conductor {doc['algebra']['conductor']}: "
             f"{'PASS' if doc['algebra_ok'] else 'FAIL'}"]
    for e, ok in zip(doc["extensions"], doc["extensions_ok"]):
        lines.append(f"  {'PASS' if ok else 'FAIL'} {e['name']}  theta={json.dumps(e['theta'])}")
    out.emit(doc, "\n".join(lines))
    return 0 if doc["algebra_ok"] and all(doc["extensions_ok"]) else 1


def cmd_functor(args, out: Output) -> int:
    B = load(args.algebra, _field(args))
    if isinstance(B, HopfAlgebra):
        B = psi(B)
    Fn = realize_functor(args.kind, B)
    sample = make_sample(Fn.field, args.dims, args.seed)
    which = args.check or ("extended" if isinstance(B, ExtFrobAlgebra) else "frobenius")
    if which == "separable":
        rep = check_frobenius_functor(Fn, sample)
        ok = check_separable_functor(Fn, sample)
        rep.add(AxiomResult("separable", ok))
    elif which == "extended":
        rep = check_extended_functor(Fn, sample)
    else:
        rep = check_frobenius_functor(Fn, sample)
    dims = ",".join(map(str, sample.dims))
    out.emit(_report_doc("functor check", rep, args.seed, kind=args.kind, algebra=args.algebra, check=which,
                         dims=list(sample.dims)),
             _report_table(f"functor check {args.kind} with {args.algebra} ({which}, dims {dims})", rep, args.seed))
    return 0 if rep.ok else 1


def cmd_hopf(args, out: Output) -> int:
    if bool(args.group) == bool(args.file):
        raise FrobexError("give exactly one of --group or FILE")
    if args.group:
        groups = standard_groups()
        if args.group not in groups:
            raise FrobexError(f"unknown group {args.group!r}; known: {', '.join(groups)}")
        G = groups[args.group]
        h = group_hopf_algebra(G, field_make(args.field_conductor or sqrt_conductor(G.order)))
        source = args.group
    else:
        h = load(args.file, _field(args))
        if not isinstance(h, HopfAlgebra):
            raise FrobexError(f"{args.file} does not hold a Hopf algebra")
        source = args.file
    rep = check_hopf(h)
    if rep.ok:
        rep.extend(check_lemma_A1(h))
        rep.extend(check_frobenius(psi(h, check=False)), "psi.")
    out.emit(_report_doc("hopf-check", rep, args.seed, source=source),
             _report_table(f"hopf-check {source}", rep, args.seed))
    return 0 if rep.ok else 1


def cmd_acceptance(args, out: Output) -> int:
    numbers = args.only or None
    echo = None if args.format == "json" else (lambda line: (out.stream.write(line + "\n"), out.stream.flush()))
    results = run_all(numbers, echo)
    blocking = [r for r in results if r.blocking]
    passed = sum(r.passed for r in blocking)
    if args.format == "json":
        out.emit({"command": "acceptance", "seed": args.seed, "results": [r.to_dict() for r in results],
                  "passed": passed, "blocking": len(blocking)}, "")
    else:
        out.stream.write(f"{passed}/{len(blocking)} blocking criteria pass  seed={args.seed}\n")
    return 0 if passed == len(blocking) else 1


def write_goldens(outdir: str, echo=None) -> List[str]:
    os.makedirs(outdir, exist_ok=True)
    written = []

    def put(name, doc):
        path = os.path.join(outdir, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(doc))
        written.append(path)
        if echo:
            echo(path)

    for name in families():
        put(f"catalog_{name}.json", catalog_doc(name, with_checks=False))
    for name in GOLDEN_CLASSIFY:
        header, cl = _classify(name, None, None, None, None)
        put(f"classify_{name}.json", classify_doc(header, cl, 0))
    for gname, G in standard_groups().items():
        put(f"hopf_{gname}.json", hopf_to_dict(group_hopf_algebra(G, field_make(sqrt_conductor(G.order)))))
    return written


def cmd_goldens(args, out: Output) -> int:
    paths = write_goldens(args.out)
    out.emit({"command": "goldens", "seed": args.seed, "written": paths}, "\n".join(paths))
    return 0


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_flags(defaults: bool):
        # subcommands repeat the flags without defaults so they never clobber
        # values given before the subcommand name
        g = argparse.ArgumentParser(add_help=False)
        d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
        g.add_argument("--field-conductor", type=int, metavar="N", default=d(None), help="work in Q(zeta_N)")
        g.add_argument("--format", choices=("json", "table"), default=d("table"))
        g.add_argument("--seed", type=int, default=d(0), help="seed for randomized samples (printed in reports)")
        return g

    common = global_flags(False)
    p = argparse.ArgumentParser(prog="frobex", description="Exact extended Frobenius algebra toolkit.",
                                parents=[global_flags(True)])
    p.add_argument("--version", action="version", version=f"frobex {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="check the axioms of an algebra file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("classify", parents=[common], help="classify extended structures within a lattice")
    s.add_argument("--family", help="catalog family name")
    s.add_argument("--algebra", help="Frobenius algebra JSON file")
    s.add_argument("--lattice", help="lattice name or JSON file")
    s.add_argument("--witness-lattice", help="lattice for the automorphism search")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("catalog", parents=[common], help="dump a catalog family with its listed extensions")
    s.add_argument("family", nargs="?")
    s.set_defaults(func=cmd_catalog)

    def functor_args(s):
        s.add_argument("--kind", choices=("tensor", "biproduct"), required=True)
        s.add_argument("--algebra", required=True, help="the algebra B as JSON")
        s.add_argument("--dims", type=_parse_dims, default=[1, 2, 3])
        s.add_argument("--check", choices=("frobenius", "extended", "separable"))
        s.set_defaults(func=cmd_functor)

    s = sub.add_parser("functor", parents=[common], help="realized functor checks")
    fsub = s.add_subparsers(dest="action", required=True)
    functor_args(fsub.add_parser("check", parents=[common]))
    functor_args(sub.add_parser("functor-check", parents=[common]))

    s = sub.add_parser("hopf-check", parents=[common], help="Hopf axioms, integrals and the induced Frobenius algebra")
    s.add_argument("file", nargs="?")
    s.add_argument("--group", help="one of " + ", ".join(standard_groups()))
    s.set_defaults(func=cmd_hopf)

    s = sub.add_parser("acceptance", parents=[common], help="run the acceptance criteria")
    s.add_argument("--only", type=_parse_dims, help=f"comma-separated criterion numbers (1..{len(CRITERIA)})")
    s.set_defaults(func=cmd_acceptance)

    s = sub.add_parser("goldens", parents=[common], help="regenerate golden files")
    s.add_argument("--out", default=os.path.join("tests", "golden"))
    s.set_defaults(func=cmd_goldens)
    return p


def main(argv: Optional[List[str]] = None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format, stdout)
    try:
        return args.func(args, out)
    except FrobexParseError as exc:
        stderr.write(f"frobex: parse error: {exc}\n")
    except (FrobexError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"frobex: error: {msg}\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
