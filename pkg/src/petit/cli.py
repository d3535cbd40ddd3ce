"""Command-line front end: every verb prints one JSON report on stdout.

Exit codes: 0 on success, 1 on malformed input, 2 when the requested
criterion or computation does not apply (including exhaustion caps).
"""

import argparse
import json
import os
import sys
import time

from . import __version__
from .algebra import (
    PetitAlgebra,
    division_status,
    eigenring,
    nuclei_bounded,
    nuclei_brute,
    semi_mult,
    span_elements,
)
from .expr import ParseError
from .fields import parse_deriv, parse_endo, parse_field
from .irreducibility import (
    Inapplicable,
    count_irreducible_exhaustive,
    count_irreducible_tma,
    exists_irreducible_tma,
    irreducible,
    irreducible_witness_tma,
)
from .limits import BoundExceeded
from .morphisms import aut_group, inner_auts, iso_classes, iso_test
from .skew import SkewRing

SCHEMA_VERSION = 1


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(message)


def _poly_key(ring):
    key = ring.base.key
    return lambda a: (len(a), tuple(key(c) for c in reversed(a)))


def _fmt_set(ring, elements):
    return [ring.fmt(x) for x in sorted(elements, key=_poly_key(ring))]


def _ring(args):
    base = parse_field(args.field)
    sigma = parse_endo(base, args.sigma)
    delta = parse_deriv(base, sigma, args.delta)
    return SkewRing(base, sigma, delta)


def _algebra(ring, text):
    f = ring.parse(text)
    if ring.deg(f) < 2:
        raise ValueError(f"f must have degree at least 2, got {ring.deg(f)}")
    return PetitAlgebra(ring, f)


def _context(ring, f=None):
    ctx = ring.spec()
    if f is not None:
        ctx["f"] = ring.fmt(f)
    return ctx


def _verdict_cert(v):
    if v.oracle_agrees and v.certificate != "factor search":
        return "both"
    if v.certificate == "factor search":
        return "exhaustion"
    return v.certificate or "theorem"


def cmd_irred(args):
    ring = _ring(args)
    f = ring.monic(ring.parse(args.poly))
    v = irreducible(ring, f, oracle=args.oracle or None)
    results = {
        "verdict": v.verdict,
        "criterion": v.certificate,
        "witness": ring.fmt(v.witness) if v.witness is not None else None,
        "oracle_agrees": v.oracle_agrees,
    }
    if v.factorization is not None:
        results["factorization"] = [ring.fmt(v.factorization.left), ring.fmt(v.factorization.right)]
    if v.notes:
        results["notes"] = list(v.notes)
    code = 2 if v.verdict == "Inapplicable" else 0
    return code, _context(ring, f), results, _verdict_cert(v)


def _counting_context(args):
    return {"p": args.p, "h": args.h, "r": args.r, "m": args.m,
            "field": f"Fq({args.p},{args.h})", "sigma": f"frob({args.r})", "delta": "zero"}


def cmd_count_irred(args):
    count = count_irreducible_tma(args.p, args.h, args.r, args.m, verify=args.oracle or None)
    results = {"count": count, "formula": "p^h - p^gcd(r,h)"}
    cert = "count formula"
    if args.oracle:
        results["exhaustive"] = count_irreducible_exhaustive(args.p, args.h, args.r, args.m)
        results["oracle_agrees"] = results["exhaustive"] == count
        cert = "both"
    return 0, _counting_context(args), results, cert


def cmd_exists_irred(args):
    exists = exists_irreducible_tma(args.p, args.h, args.r, args.m, verify=args.oracle or None)
    results = {"exists": exists, "witness": None}
    witness = irreducible_witness_tma(args.p, args.h, args.r, args.m)
    if witness is not None:
        base = parse_field(f"Fq({args.p},{args.h})")
        results["witness"] = base.fmt(witness)
    return 0, _counting_context(args), results, "norm exponent gcd"


def cmd_mul(args):
    ring = _ring(args)
    A = _algebra(ring, args.poly)
    x, y = A.parse(args.x), A.parse(args.y)
    results = {"x": ring.fmt(x), "y": ring.fmt(y), "product": ring.fmt(A.mul(x, y))}
    return 0, _context(ring, A.f), results, "theorem"


def cmd_divmod(args):
    ring = _ring(args)
    g, f = ring.parse(args.poly), ring.parse(args.by)
    if args.side == "right":
        q, r = ring.right_divmod(g, f)
        check = ring.add(ring.mul(q, f), r)
    else:
        q, r = ring.left_divmod(g, f)
        check = ring.add(ring.mul(f, q), r)
    assert check == ring.trim(g), "division does not reconstruct the dividend"
    results = {"side": args.side, "divisor": ring.fmt(f), "quotient": ring.fmt(q), "remainder": ring.fmt(r)}
    return 0, _context(ring, ring.trim(g)), results, "theorem"


def cmd_nuclei(args):
    ring = _ring(args)
    A = _algebra(ring, args.poly)
    if A.is_finite:
        N = nuclei_brute(A)
        results = {"associative": A.associative, "sizes": N.sizes()}
        for name in ("left", "middle", "right", "nucleus", "center", "commutator"):
            results[name] = _fmt_set(ring, getattr(N, name))
        return 0, _context(ring, A.f), results, "exhaustion"
    bases = nuclei_bounded(A, max_deg=args.max_deg)
    results = {"max_deg": args.max_deg,
               "bases": {name: [ring.fmt(b) for b in basis] for name, basis in sorted(bases.items())}}
    return 0, _context(ring, A.f), results, "exhaustion"


def cmd_eigenring(args):
    ring = _ring(args)
    A = _algebra(ring, args.poly)
    basis = eigenring(A)
    results = {"basis": [ring.fmt(b) for b in basis], "size": A.p ** len(basis)}
    if args.oracle:
        results["elements"] = _fmt_set(ring, span_elements(A, basis))
    return 0, _context(ring, A.f), results, "theorem"


def cmd_division_status(args):
    ring = _ring(args)
    A = _algebra(ring, args.poly)
    st = division_status(A, oracle=args.oracle or None)
    witness = [ring.fmt(w) for w in st.witness] if st.witness else None
    results = {"kind": st.kind, "criterion": st.criterion, "witness": witness}
    cert = st.certified_by if st.certified_by != "theorem" else st.criterion
    return 0, _context(ring, A.f), results, cert


def cmd_semimult(args):
    ring = _ring(args)
    A = _algebra(ring, args.poly)
    g = A.parse(args.g)
    return 0, _context(ring, A.f), {"g": ring.fmt(g), "value": ring.base.fmt(semi_mult(A, g))}, "theorem"


def _group_report(ring, res):
    st = res.structure
    names = "x" if len(st.generators) == 1 else "xy"
    by_elem = {(phi.j, phi.k): phi for phi in res.maps}
    gens = {name: by_elem[elem].describe() for name, elem in zip(names, st.generators)}
    return {
        "order": res.order,
        "classification": st.tag(),
        "params": st.params,
        "generators": gens,
        "relations": st.relations,
        "cayley_hash": st.cayley_hash,
        "partial": res.partial,
        "oracle_agrees": res.oracle_agrees,
        "maps": [phi.describe() for phi in res.maps],
    }


def cmd_aut(args):
    ring = _ring(args)
    A = _algebra(ring, args.poly)
    res = aut_group(A, oracle=args.oracle or None)
    cert = "both" if res.oracle_agrees else "theorem"
    return 0, _context(ring, A.f), _group_report(ring, res), cert


def cmd_inner(args):
    ring = _ring(args)
    A = _algebra(ring, args.poly)
    maps = inner_auts(A)
    results = {"order": len(maps), "maps": [phi.describe() for phi in maps]}
    return 0, _context(ring, A.f), results, "theorem"


def cmd_iso(args):
    ring = _ring(args)
    A, T = _algebra(ring, args.poly), _algebra(ring, args.poly2)
    phi = iso_test(A, T, oracle=args.oracle or None)
    ctx = _context(ring, A.f)
    ctx["g"] = ring.fmt(T.f)
    results = {"isomorphic": phi is not None, "map": phi.describe() if phi is not None else None}
    return 0, ctx, results, "theorem"


def cmd_iso_classes(args):
    ring = _ring(args)
    classes = iso_classes(ring, args.m)
    fmt = ring.base.fmt
    results = {"m": args.m, "count": len(classes), "classes": [[fmt(a) for a in cls] for cls in classes]}
    return 0, _context(ring), results, "theorem"


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle", action="store_true", help="force exhaustive cross-checks (hard caps still apply)")
    common.add_argument("--pretty", action="store_true", help="also print a human-readable table on stderr")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    common.add_argument("--timing", action="store_true", help="record wall time in the report")
    return common


def _ring_options():
    opts = argparse.ArgumentParser(add_help=False)
    opts.add_argument("--field", required=True, help="Fq(p,h), Poly(p,h) or Rat(p,h)")
    opts.add_argument("--sigma", default="id", help="frob(r), ysq, yscale(c) or id")
    opts.add_argument("--delta", default="zero", help="zero, ddy or inner(c)")
    return opts


def build_parser():
    parser = _Parser(prog="petit", description="Skew polynomial rings and Petit algebras.")
    parser.add_argument("--version", action="version", version=f"petit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common, ring_opts = _common(), _ring_options()
    algebra = [common, ring_opts]

    def verb(name, func, parents, help_text):
        p = sub.add_parser(name, parents=parents, help=help_text)
        p.set_defaults(func=func)
        return p

    p = verb("irred", cmd_irred, algebra, "irreducibility verdict for f")
    p.add_argument("--poly", required=True)
    for name, func, text in (("count-irred", cmd_count_irred, "count irreducible t^m - a"),
                             ("exists-irred", cmd_exists_irred, "does some t^m - a lack a right linear divisor")):
        p = verb(name, func, [common], text)
        for arg in ("p", "h", "r", "m"):
            p.add_argument(arg, type=int)
    p = verb("mul", cmd_mul, algebra, "product x o y in S_f")
    p.add_argument("--poly", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p = verb("divmod", cmd_divmod, algebra, "right or left division of --poly by --by")
    p.add_argument("--poly", required=True)
    p.add_argument("--by", required=True)
    p.add_argument("--side", choices=("right", "left"), default="right")
    p = verb("nuclei", cmd_nuclei, algebra, "nuclei, center and commutator")
    p.add_argument("--poly", required=True)
    p.add_argument("--max-deg", type=int, default=1, help="y-degree bound over F_q[y] or F_q(y)")
    for name, func, text in (("eigenring", cmd_eigenring, "eigenring basis"),
                             ("division-status", cmd_division_status, "division algebra status"),
                             ("aut", cmd_aut, "automorphism group"),
                             ("inner", cmd_inner, "inner automorphisms G_c")):
        p = verb(name, func, algebra, text)
        p.add_argument("--poly", required=True)
    p = verb("semimult", cmd_semimult, algebra, "semi-multiplicative map M_f(g)")
    p.add_argument("--poly", required=True)
    p.add_argument("--g", required=True)
    p = verb("iso", cmd_iso, algebra, "isomorphism test between S_f and S_g")
    p.add_argument("--poly", required=True)
    p.add_argument("--poly2", required=True)
    p = verb("iso-classes", cmd_iso_classes, algebra, "isomorphism classes of t^m - a")
    p.add_argument("--m", type=int, required=True)
    return parser


def _dump(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def _error_report(command, kind, message, parse_error=None):
    err = {"kind": kind, "message": message}
    if parse_error is not None:
        err.update(text=parse_error.text, position=parse_error.position)
    return {"schema_version": SCHEMA_VERSION, "command": command, "error": err}


def _pretty(report, stream):
    body = report.get("results") or report.get("error") or {}
    width = max((len(k) for k in body), default=0)
    for key in sorted(body):
        value = body[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True, ensure_ascii=False)
        print(f"{key:<{width}}  {value}", file=stream)


def run(argv=None, stdout=None, stderr=None):
    """Run one verb; writes the JSON report and returns the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        print(_dump(_error_report(None, "usage", str(exc))), file=stdout)
        return 1
    start = time.perf_counter()
    try:
        code, context, results, cert = args.func(args)
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "context": context,
            "results": results,
            "certification": cert,
            "timing": None,
        }
        if args.timing:
            report["timing"] = {"ms": round((time.perf_counter() - start) * 1000, 3)}
    except ParseError as exc:
        report, code = _error_report(args.command, "parse", exc.message, exc), 1
    except (Inapplicable, BoundExceeded) as exc:
        report, code = _error_report(args.command, "inapplicable", str(exc)), 2
    except (ValueError, ZeroDivisionError) as exc:
        report, code = _error_report(args.command, "input", str(exc)), 1
    print(_dump(report), file=stdout)
    if args.pretty:
        _pretty(report, stderr)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
