"""Command-line front end: pipelines, censuses, table ingestion.

Exit codes: 0 when every certificate clause passes, 1 when a clause fails,
2 on usage errors.  Certificates are emitted as deterministic JSON (default)
or a text summary; --out writes atomically.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import acceptance
from .cert import Certificate
from .errors import ChernlabError, SchemaError, UsageError, ValidationError
from .fgl import honda_fgl, multiplicative_fgl
from .field import GF
from .groebner import buchberger, standard_monomials
from .groups import builtin_model
from .omega import (
    enumerate_omega,
    enumerate_omega_ch,
    enumerate_omega_dprime,
    enumerate_omega_prime,
    kappa,
    xi_class_map,
)
from .pipelines import nonpositive_divisor_witness, sdiv_checks, sigma4_pipeline
from .poly import PolyRing, grlex_order, lex_order, parse_poly
from .presentation import build_presentation
from .repring import RepRing, builtin_group
from .table_io import ingest_table, table_to_dict
from .xspec import extraspecial_table_checks, xspec_census


def _emit(doc: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(doc)
        return
    directory = os.path.dirname(os.path.abspath(out)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".chernlab-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(doc)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _finish(cert: Certificate, args) -> int:
    doc = cert.to_json() if args.format == "json" else cert.summary() + "\n"
    _emit(doc, args.out)
    return 0 if cert.status == "pass" else 1


def _table_or_builtin(args) -> RepRing:
    if getattr(args, "table", None):
        return RepRing(ingest_table(args.table))
    if not args.group:
        raise UsageError("need --group or --table")
    return RepRing(builtin_group(args.group))


def cmd_fgl(args) -> int:
    if args.multiplicative:
        law = multiplicative_fgl(args.p, args.prec)
    else:
        law = honda_fgl(args.p, args.n, args.prec)
    cert = Certificate(
        "fgl", {"p": args.p, "n": args.n, "prec": args.prec, "series": args.series}
    )
    text = law.series_text(args.series)
    cert.add("series", True, {f"[{args.series}](x)": text})
    if args.format == "text":
        _emit(text + "\n", args.out)
        return 0
    return _finish(cert, args)


def cmd_groebner(args) -> int:
    field = GF(args.q)
    names = [v.strip() for v in args.vars.split(",") if v.strip()]
    ring = PolyRing(field, names)
    order = lex_order(ring.nvars) if args.order == "lex" else grlex_order(ring.nvars)
    gens = [parse_poly(ring, g) for g in args.gens.split(";") if g.strip()]
    gb = buchberger(gens, order)
    cert = Certificate(
        "groebner",
        {"q": args.q, "vars": names, "order": args.order},
    )
    cert.add("reduced_basis", True, {"basis": [p.text(order) for p in gb.polys]})
    try:
        std = standard_monomials(gb)
        cert.add("standard_monomials", True,
                 {"dimension": len(std), "monomials": [list(m) for m in std]})
    except ChernlabError as exc:
        cert.add("standard_monomials", True, {"dimension": "infinite", "detail": str(exc)})
    return _finish(cert, args)


def cmd_omega(args) -> int:
    cert = Certificate(
        "omega",
        {"group": args.group or args.table, "p": args.p, "n": args.n,
         "v": args.v, "variant": args.variant},
    )
    if args.variant in (None, "plain", "prime", "dprime"):
        model = builtin_model(args.group)
        if args.variant in (None, "plain"):
            om = enumerate_omega(model, args.p, args.n)
            reps = [[list(model.elements[i]) if isinstance(model.elements[i], tuple)
                     else model.elements[i] for i in rep] for rep in om.reps]
            cert.add("census", True, {"count": len(om), "representatives": reps})
        elif args.variant == "prime":
            om, sigs, proj = enumerate_omega_prime(model, args.p, args.n, args.v)
            cert.add("census", True,
                     {"count": len(sigs), "omega_count": len(om),
                      "projection": proj})
        else:
            pts, results = enumerate_omega_dprime(model, args.p, args.n, args.v)
            cert.add("census", True,
                     {"count": len(results), "points": [list(a) for a in pts],
                      "maps": [list(r) for r in results]})
        return _finish(cert, args)
    if args.variant == "ch":
        ring = _table_or_builtin(args)
        och = enumerate_omega_ch(ring, args.p, args.n, args.v)
        witness = {"count": len(och),
                   "representatives": [e.text() for e in och]}
        try:
            model = builtin_model(args.group) if args.group else None
        except ChernlabError:
            model = None
        if model is not None and ring.table.model is not None:
            om = enumerate_omega(model, args.p, args.n)
            kmap = []
            elems = sorted(och)
            for rep in om.reps:
                kmap.append(elems.index(kappa(ring.table, model, rep, args.p, args.n,
                                              args.v)))
            witness["maps"] = {
                "kappa": kmap,
                "xi": [list(xi_class_map(e, ring.table, model, args.p, args.n))
                       for e in elems],
            }
        cert.add("census", True, witness)
        return _finish(cert, args)
    raise UsageError(f"unknown variant {args.variant!r}")


def cmd_chern(args) -> int:
    ring = _table_or_builtin(args)
    law = honda_fgl(args.p, args.n, args.prec)
    pres = build_presentation(ring, law, args.v)
    cert = Certificate(
        "chern", {"group": args.group or args.table, "p": args.p, "n": args.n,
                  "v": args.v, "prec": args.prec},
    )
    subs, core, rels, iso = pres.elimination_summary()
    cert.add(
        "presentation",
        True,
        {
            "dimension": pres.dimension(),
            "generators": pres.generators,
            "eliminated": sorted(pres.killed),
            "groebner_basis": [g.text(pres.qring.order) for g in pres.qring.basis.polys],
            "standard_monomials": pres.std_monomial_texts(),
            "isomorphism": (f"F_{iso[0]}[{iso[1]}]/({iso[1]}^{iso[2]})" if iso else None),
        },
    )
    return _finish(cert, args)


def cmd_sigma4(args) -> int:
    return _finish(sigma4_pipeline(), args)


def cmd_sdiv(args) -> int:
    return _finish(sdiv_checks(), args)


def cmd_witness(args) -> int:
    return _finish(nonpositive_divisor_witness(args.n), args)


def cmd_xspec(args) -> int:
    return _finish(xspec_census(args.p, args.d, args.n), args)


def cmd_table_check(args) -> int:
    if args.table:
        cert = Certificate("table-check", {"table": os.path.basename(args.table)})
        try:
            table = ingest_table(args.table)
            RepRing(table)
            cert.add("valid_character_table", True,
                     {"name": table.name, "classes": table.nclasses})
        except SchemaError:
            raise  # malformed input file: usage error
        except ChernlabError as exc:
            cert.add("valid_character_table", False, {"error": str(exc)})
        return _finish(cert, args)
    if args.p and args.d:
        return _finish(extraspecial_table_checks(args.p, args.d), args)
    raise UsageError("table-check needs --table PATH or --p/--d")


def cmd_export_table(args) -> int:
    table = builtin_group(args.group)
    _emit(json.dumps(table_to_dict(table), sort_keys=True, indent=2) + "\n", args.out)
    return 0


def cmd_all(args) -> int:
    certs = acceptance.run_all()
    overall = all(c.status == "pass" for c in certs)
    if args.format == "text":
        doc = "\n".join(c.summary() for c in certs)
        doc += f"\noverall: {'pass' if overall else 'fail'}\n"
    else:
        doc = json.dumps(
            {
                "schema": "chernlab/1",
                "pipeline": "all",
                "status": "pass" if overall else "fail",
                "certificates": [c.as_dict() for c in certs],
            },
            sort_keys=True,
            indent=2,
        ) + "\n"
    _emit(doc, args.out)
    return 0 if overall else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernlab",
        description="Exact formal-group / divisor / representation-ring computations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, p=False, n=False, v=False, prec=False, group=False, table=False):
        if p:
            sp.add_argument("--p", type=int, required=True)
        if n:
            sp.add_argument("--n", type=int, required=True)
        if v:
            sp.add_argument("--v", type=int, default=None)
        if prec:
            sp.add_argument("--prec", type=int, default=32)
        if group:
            sp.add_argument("--group", type=str, default=None)
        if table:
            sp.add_argument("--table", type=str, default=None)
        sp.add_argument("--out", type=str, default=None)
        sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("fgl", help="print a [k]-series of a formal group law")
    common(sp, p=True, n=True, prec=True)
    sp.add_argument("--series", type=int, required=True)
    sp.add_argument("--multiplicative", action="store_true")
    sp.set_defaults(fn=cmd_fgl)

    sp = sub.add_parser("groebner", help="reduced Groebner basis of given generators")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--vars", type=str, required=True)
    sp.add_argument("--gens", type=str, required=True,
                    help="semicolon-separated polynomials")
    sp.add_argument("--order", choices=("lex", "grlex"), default="lex")
    common(sp)
    sp.set_defaults(fn=cmd_groebner)

    sp = sub.add_parser("omega", help="homomorphism censuses")
    common(sp, p=True, n=True, v=True, group=True, table=True)
    sp.add_argument("--variant", choices=("plain", "ch", "prime", "dprime"),
                    default="plain")
    sp.set_defaults(fn=cmd_omega)

    sp = sub.add_parser("chern", help="presentation of the Chern-class ring")
    common(sp, p=True, n=True, v=True, prec=True, group=True, table=True)
    sp.set_defaults(fn=cmd_chern)

    for name, fn in (("sigma4", cmd_sigma4), ("sdiv", cmd_sdiv)):
        sp = sub.add_parser(name)
        common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("witness")
    sp.add_argument("--n", type=int, default=2)
    common(sp)
    sp.set_defaults(fn=cmd_witness)

    sp = sub.add_parser("xspec")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_xspec)

    sp = sub.add_parser("table-check")
    sp.add_argument("--table", type=str, default=None)
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--d", type=int, default=None)
    common(sp)
    sp.set_defaults(fn=cmd_table_check)

    sp = sub.add_parser("export-table", help="emit a builtin table as JSON")
    sp.add_argument("--group", type=str, required=True)
    common(sp)
    sp.set_defaults(fn=cmd_export_table)

    sp = sub.add_parser("all", help="run the full acceptance suite")
    common(sp)
    sp.set_defaults(fn=cmd_all)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (UsageError, SchemaError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ChernlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
