"""Command-line interface.

Every operation of the library is reachable as a subcommand. Fields are
selected with ``--field P`` or ``--field P^N`` (plus an optional
``--modulus``; a deterministic smallest irreducible is picked otherwise).
Elements use decimal or generator syntax, polynomials the usual
``3*x^2 + x + 1`` form with parenthesized extension coefficients.

Exit codes: 0 on success, 1 on verification failure, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import boomerang, groebner, polytope, tightness, upoly
from .bpoly import format_bipoly, parse_bipoly
from .dickson import dickson as dickson_poly
from .errors import FixtureMismatch, ToolkitError
from .gf import ctx_extension, ctx_prime
from .upoly import format_poly, parse_poly


def _field_ctx(args):
    spec = args.field
    if "^" in spec:
        p_text, n_text = spec.split("^", 1)
        p, n = int(p_text), int(n_text)
        base = ctx_prime(p)
        if args.modulus:
            text = args.modulus.replace("Y", "x").replace("y", "x").replace("X", "x")
            modulus = parse_poly(base, text)
            if modulus.degree != n:
                raise ToolkitError(
                    f"--modulus has degree {modulus.degree}, --field asks for {n}"
                )
        else:
            modulus = upoly.find_irreducible(base, n)
        return ctx_extension(base, modulus)
    return ctx_prime(int(spec))


def _emit(args, payload: dict, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _add_common(sub, poly=False, abc=()):
    sub.add_argument("--field", required=True, help="P for a prime field, P^N for an extension")
    sub.add_argument("--modulus", help="defining polynomial for P^N (default: smallest irreducible)")
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    if poly:
        sub.add_argument("--f", required=True, help="univariate polynomial in x")
    for name in abc:
        sub.add_argument(f"--{name}", required=True, help=f"field element {name}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cboomerang",
        description="c-boomerang uniformity toolkit over finite fields",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("bct", help="connectivity-table entry, row or full grid")
    _add_common(p, poly=True, abc=("c",))
    p.add_argument("--a", help="row difference; omit for the full unit grid")
    p.add_argument("--b", help="column value; omit for a whole row")
    p.add_argument("--permutation-form", action="store_true",
                   help="count through the inverse-table formula instead")

    p = subs.add_parser("ddt", help="difference-distribution entry")
    _add_common(p, poly=True, abc=("a", "b"))

    p = subs.add_parser("uniformity", help="maximum connectivity count over nonzero (a, b)")
    _add_common(p, poly=True, abc=("c",))
    p.add_argument("--threads", type=int, default=None, help="worker threads over the a axis")
    p.add_argument("--full-grid", action="store_true",
                   help="also emit the complete (a, b) table, b = 0 column included")
    p.add_argument("--budget", type=int, default=boomerang.DEFAULT_BUDGET_Q,
                   help="largest field size accepted for the exhaustive scan")

    p = subs.add_parser("system", help="build the bivariate counting system")
    _add_common(p, poly=True, abc=("c", "a", "b"))

    p = subs.add_parser("groebner", help="reduced basis of a system or explicit generators")
    _add_common(p, poly=False)
    p.add_argument("--polys", help="semicolon-separated bivariate generators in x, z")
    p.add_argument("--f", help="univariate polynomial (with --c/--a/--b)")
    p.add_argument("--c")
    p.add_argument("--a")
    p.add_argument("--b")
    p.add_argument("--order", choices=("drl", "lex"), default="drl")

    p = subs.add_parser("fglm", help="degree-reverse-lex basis converted to lex")
    _add_common(p, poly=False)
    p.add_argument("--polys", help="semicolon-separated bivariate generators in x, z")
    p.add_argument("--f", help="univariate polynomial (with --c/--a/--b)")
    p.add_argument("--c")
    p.add_argument("--a")
    p.add_argument("--b")

    p = subs.add_parser("factor", help="irreducible factorization of a univariate polynomial")
    _add_common(p, poly=True)
    p.add_argument("--seed", type=int, default=0, help="equal-degree splitting seed")

    p = subs.add_parser("roots-ext", help="distinct roots of f in F_(q^n)")
    _add_common(p, poly=True)
    p.add_argument("--n", type=int, required=True, help="extension degree")

    p = subs.add_parser("dickson", help="Dickson polynomial of the first kind")
    _add_common(p, poly=False, abc=("a",))
    p.add_argument("--n", type=int, required=True, help="index")

    p = subs.add_parser("polytope-cert", help="triangle irreducibility certificate for f(x)-f(y)+a")
    _add_common(p, poly=True, abc=("a",))

    p = subs.add_parser("tight-search", help="search (a, b) pairs attaining the degree bound")
    _add_common(p, poly=True, abc=("c",))
    p.add_argument("--a", help="restrict the scan to one explicit pair")
    p.add_argument("--b", help="restrict the scan to one explicit pair")
    p.add_argument("--budget", type=int, default=None, help="max candidate pairs examined")
    p.add_argument("--seed", type=int, default=0, help="factorization seed")

    p = subs.add_parser("verify", help="recompute an embedded fixture and diff it")
    p.add_argument("--fixture", required=True,
                   help="one of %s or 'all'" % (", ".join(tightness.FIXTURE_NAMES)))
    p.add_argument("--json", action="store_true")

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except FixtureMismatch as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return 1
    except (ToolkitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    if args.command == "verify":
        return _cmd_verify(args)
    ctx = _field_ctx(args)
    handler = {
        "bct": _cmd_bct,
        "ddt": _cmd_ddt,
        "uniformity": _cmd_uniformity,
        "system": _cmd_system,
        "groebner": _cmd_groebner,
        "fglm": _cmd_fglm,
        "factor": _cmd_factor,
        "roots-ext": _cmd_roots_ext,
        "dickson": _cmd_dickson,
        "polytope-cert": _cmd_polytope_cert,
        "tight-search": _cmd_tight_search,
    }[args.command]
    return handler(args, ctx)


def _cmd_bct(args, ctx):
    f = parse_poly(ctx, args.f)
    c = ctx.parse_elt(args.c)
    counter = (
        boomerang.bct_entry_permutation_form
        if args.permutation_form
        else boomerang.bct_entry
    )
    if args.a is not None and args.b is not None:
        a, b = ctx.parse_elt(args.a), ctx.parse_elt(args.b)
        n = counter(f, c, a, b)
        _emit(args, {"a": args.a, "b": args.b, "count": n}, [str(n)])
        return 0
    a_values = (ctx.parse_elt(args.a),) if args.a is not None else None
    table = boomerang.bct_table(f, c, a_values=a_values)
    if args.permutation_form:
        for i, a in enumerate(table.a_values):
            for j, b in enumerate(table.b_values):
                if counter(f, c, a, b) != int(table.counts[i, j]):
                    raise ToolkitError("permutation-form table disagrees with the direct count")
    lines = [
        f"a={ctx.format_elt(a)}: " + " ".join(str(int(v)) for v in row)
        for a, row in zip(table.a_values, table.counts)
    ]
    _emit(args, table.to_json(), lines)
    return 0


def _cmd_ddt(args, ctx):
    f = parse_poly(ctx, args.f)
    n = boomerang.ddt_entry(f, ctx.parse_elt(args.a), ctx.parse_elt(args.b))
    _emit(args, {"a": args.a, "b": args.b, "count": n}, [str(n)])
    return 0


def _cmd_uniformity(args, ctx):
    f = parse_poly(ctx, args.f)
    c = ctx.parse_elt(args.c)
    report = boomerang.uniformity(f, c, budget_q=args.budget, threads=args.threads)
    payload = report.to_json()
    if args.full_grid:
        payload["grid"] = boomerang.bct_table(f, c, budget_q=args.budget).to_json()
    lines = [
        f"beta = {report.beta}",
        f"bound = {report.bound} ({report.bound_source})"
        if report.bound is not None
        else "bound = none (degree shares a factor with q)",
        "witnesses: "
        + ", ".join(
            f"(a={ctx.format_elt(a)}, b={ctx.format_elt(b)})" for a, b, _ in report.witnesses
        ),
    ]
    if report.passed is not None:
        lines.append("within bound" if report.passed else "BOUND VIOLATED")
    _emit(args, payload, lines)
    return 0


def _cmd_system(args, ctx):
    f = parse_poly(ctx, args.f)
    system = boomerang.build_system(
        f, ctx.parse_elt(args.c), ctx.parse_elt(args.a), ctx.parse_elt(args.b)
    )
    payload = {
        "mode": system.mode,
        "f1": format_bipoly(system.f1),
        "f2": format_bipoly(system.f2),
        "g2": format_bipoly(system.g2),
    }
    _emit(args, payload, [
        f"mode: {system.mode}",
        f"F1 = {payload['f1']}",
        f"F2 = {payload['f2']}",
        f"G2 = {payload['g2']}",
    ])
    return 0


def _system_generators(args, ctx):
    if args.polys:
        return [parse_bipoly(ctx, part) for part in args.polys.split(";")]
    if not (args.f and args.c and args.a and args.b):
        raise ToolkitError("provide either --polys or all of --f/--c/--a/--b")
    f = parse_poly(ctx, args.f)
    system = boomerang.build_system(
        f, ctx.parse_elt(args.c), ctx.parse_elt(args.a), ctx.parse_elt(args.b)
    )
    return list(system.generators())


def _cmd_groebner(args, ctx):
    gens = _system_generators(args, ctx)
    basis = groebner.buchberger(gens, groebner.ORDERS[args.order])
    sc = groebner.staircase(basis)
    payload = basis.to_json()
    payload["dimension"] = sc.count
    lines = [format_bipoly(g, sort_key=basis.order.key) for g in basis] + [f"dimension: {sc.count}"]
    _emit(args, payload, lines)
    return 0


def _cmd_fglm(args, ctx):
    gens = _system_generators(args, ctx)
    drl_basis = groebner.buchberger(gens, groebner.DRL)
    lex_basis = groebner.fglm(drl_basis, groebner.LEX)
    payload = lex_basis.to_json()
    lines = [format_bipoly(g, sort_key=groebner.LEX.key) for g in lex_basis]
    _emit(args, payload, lines)
    return 0


def _cmd_factor(args, ctx):
    f = parse_poly(ctx, args.f)
    fl = upoly.factor(f, seed=args.seed)
    payload = {
        "unit": ctx.format_elt(fl.unit),
        "factors": [
            {"poly": format_poly(p), "multiplicity": m} for p, m in fl
        ],
    }
    lines = [
        f"({format_poly(p)})" + (f"^{m}" if m > 1 else "") for p, m in fl
    ]
    if fl.unit != 1:
        lines.insert(0, ctx.format_elt(fl.unit))
    _emit(args, payload, lines)
    return 0


def _cmd_roots_ext(args, ctx):
    f = parse_poly(ctx, args.f)
    n = upoly.count_roots_in_extension(f, args.n)
    _emit(args, {"n": args.n, "roots": n}, [str(n)])
    return 0


def _cmd_dickson(args, ctx):
    poly = dickson_poly(ctx, args.n, ctx.parse_elt(args.a))
    _emit(args, {"poly": format_poly(poly)}, [format_poly(poly)])
    return 0


def _cmd_polytope_cert(args, ctx):
    f = parse_poly(ctx, args.f)
    cert = polytope.certify_absolutely_irreducible_difference(f, ctx.parse_elt(args.a))
    payload = cert.to_json(ctx)
    lines = [
        f"triangle: {list(cert.vertices)}",
        f"gcd witness: {list(cert.gcd_witness)}",
        "anchors: " + ", ".join(f"{k}={ctx.format_elt(v)}" for k, v in cert.anchors.items()),
        "absolutely irreducible: certified",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_tight_search(args, ctx):
    f = parse_poly(ctx, args.f)
    c = ctx.parse_elt(args.c)
    pairs = None
    if args.a is not None and args.b is not None:
        pairs = ((ctx.parse_elt(args.a), ctx.parse_elt(args.b)),)
    config = tightness.SearchConfig(
        f=f, c=c, pairs=pairs, budget=args.budget, seed=args.seed
    )
    witness = tightness.search(config)
    if witness is None:
        _emit(args, {"found": False}, ["exhausted: no pair attains the bound"])
        return 0
    payload = {
        "found": True,
        "a": ctx.format_elt(witness.a),
        "b": ctx.format_elt(witness.b),
        "dimension": witness.dimension,
        "g1": format_poly(witness.g1),
        "g2": format_poly(witness.g2),
        "factor_degrees": witness.factors.degrees(),
        "splitting_degree": witness.splitting_degree,
        "certified": witness.certified,
    }
    lines = [
        f"witness: a={payload['a']}, b={payload['b']}",
        f"dimension: {witness.dimension}",
        f"factor degrees: {witness.factors.degrees()}",
        f"splitting degree: {witness.splitting_degree}",
        f"certified: {witness.certified}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_verify(args) -> int:
    names = tightness.FIXTURE_NAMES if args.fixture == "all" else (args.fixture,)
    failures = []
    reports = []
    for name in names:
        try:
            report = tightness.verify_fixture(name)
            reports.append({"name": name, "ok": True, "details": report.details})
            print(f"{name}: OK")
        except FixtureMismatch as exc:
            failures.append(name)
            reports.append({"name": name, "ok": False, "diffs": exc.diffs})
            print(f"{name}: FAIL")
            for diff in exc.diffs:
                print(f"  {diff}")
    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True))
    return 1 if failures else 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
