"""Tight-example search and the embedded regression fixtures.

The search walks candidate pairs (a, b) through the four-stage pipeline:
build the system, take the degree-reverse-lexicographic basis and the
quotient dimension D (reject when D misses the applicable bound), convert
to the lexicographic basis and demand the two-element shape
{z - g1(x), g2(x)}, then factor g2 and demand squarefreeness. A witness
records the full evidence chain, including the extension degree that
makes every root rational.

Fixtures embed externally computed data for five worked instances plus a
3 x 10 uniformity grid; ``verify_fixture`` recomputes each end to end and
diffs field by field.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from importlib import resources

from . import boomerang
from .bpoly import BiPoly, parse_bipoly
from .dickson import dickson
from .errors import FixtureMismatch
from .gf import Elt, FieldCtx, ctx_extension, ctx_prime
from .groebner import DRL, LEX, GroebnerBasis, buchberger, fglm, interreduce, lex_shape, staircase
from .upoly import (
    UniPoly,
    count_roots_in_extension,
    factor,
    parse_poly,
    splitting_degree,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    """Inputs for the tight-example search.

    ``pairs`` is an explicit (a, b) list or None for the exhaustive
    row-major scan of F_q^x times F_q^x starting at (1, 1); ``target``
    defaults to the applicable degree bound; ``budget`` caps the number
    of candidate pairs examined.
    """

    f: UniPoly
    c: Elt
    pairs: tuple | None = None
    target: int | None = None
    budget: int | None = None
    seed: int = 0


@dataclass(frozen=True)
class TightnessWitness:
    """Evidence that the bound is attained at (a, b) over F_{q^n}."""

    a: Elt
    b: Elt
    drl_basis: GroebnerBasis
    dimension: int
    lex_basis: GroebnerBasis
    g1: UniPoly
    g2: UniPoly
    factors: object  # FactorList
    splitting_degree: int
    certified: bool


def default_scan(ctx: FieldCtx):
    """Row-major (a, b) candidates over the unit grid, from (1, 1)."""
    for a in ctx.units():
        for b in ctx.units():
            yield (a, b)


def search(config: SearchConfig) -> TightnessWitness | None:
    """First candidate pair surviving all four stages, or None.

    Candidates whose quotient dimension exceeds the target are rejected
    too, with a warning: the bound says that cannot happen unless its
    hypotheses fail, so it marks a configuration error worth seeing.
    """
    f = config.f
    ctx = f.ctx
    ctx.check(config.c)
    target = config.target
    if target is None:
        target, _ = boomerang.applicable_bound(f.degree, config.c, ctx)
    pairs = config.pairs if config.pairs is not None else default_scan(ctx)
    examined = 0
    for a, b in pairs:
        if config.budget is not None and examined >= config.budget:
            return None
        examined += 1
        witness = _try_pair(f, config.c, a, b, target, config.seed)
        if witness is not None:
            return witness
    return None


def _try_pair(f, c, a, b, target, seed) -> TightnessWitness | None:
    system = boomerang.build_system(f, c, a, b)
    gb = buchberger(system.generators(), DRL)
    sc = staircase(gb)
    if not sc.zero_dimensional:
        return None
    dim = sc.count
    if dim < target:
        return None
    if dim > target:
        log.warning(
            "candidate (a=%s, b=%s) has dimension %d above the bound %d",
            f.ctx.format_elt(a), f.ctx.format_elt(b), dim, target,
        )
        return None
    lexb = fglm(gb, LEX)
    shape = lex_shape(lexb)
    if shape is None:
        return None
    g1, g2 = shape
    fl = factor(g2, seed=seed)
    if not fl.is_squarefree():
        return None
    n = splitting_degree(fl)
    certified = (
        g2.degree == dim and count_roots_in_extension(g2, n) == dim
    )
    return TightnessWitness(
        a=a, b=b, drl_basis=gb, dimension=dim, lex_basis=lexb,
        g1=g1, g2=g2, factors=fl, splitting_degree=n, certified=certified,
    )


# ----------------------------------------------------------------------
# Embedded fixtures
# ----------------------------------------------------------------------

FIXTURE_NAMES = ("q11", "q16", "q257", "q89", "q191", "d7table")


@dataclass(frozen=True)
class FixtureReport:
    name: str
    ok: bool
    details: dict


def _load_fixture(name: str) -> dict:
    if name not in FIXTURE_NAMES:
        raise ValueError(f"unknown fixture {name!r}; known: {FIXTURE_NAMES}")
    path = resources.files("cboomerang").joinpath("fixtures").joinpath(f"{name}.json")
    return json.loads(path.read_text())


def _fixture_ctx(spec: dict) -> FieldCtx:
    if spec["n"] == 1:
        return ctx_prime(spec["p"])
    return ctx_extension(ctx_prime(spec["p"]), spec["modulus"])


def _fixture_poly(ctx, spec: dict) -> UniPoly:
    if spec["kind"] == "dickson":
        return dickson(ctx, spec["n"], ctx.parse_elt(spec["a"]))
    return parse_poly(ctx, spec["text"])


def verify_fixture(name: str) -> FixtureReport:
    """Recompute a fixture and diff it against the embedded data.

    Returns a report on success and raises FixtureMismatch (listing the
    differing fields) otherwise.
    """
    data = _load_fixture(name)
    if name == "d7table":
        return _verify_uniformity_table(data)
    return _verify_boomerang_fixture(data)


def _verify_boomerang_fixture(data: dict) -> FixtureReport:
    ctx = _fixture_ctx(data["field"])
    f = _fixture_poly(ctx, data["f"])
    c = ctx.parse_elt(data["c"])
    a = ctx.parse_elt(data["a"])
    b = ctx.parse_elt(data["b"])
    diffs = []
    details = {}

    system = boomerang.build_system(f, c, a, b)
    gb = buchberger(system.generators(), DRL)
    dim = staircase(gb).count
    details["dimension"] = dim
    if dim != data["dimension"]:
        diffs.append(f"dimension: computed {dim}, expected {data['dimension']}")

    if data.get("drl_basis"):
        expected = interreduce(
            [parse_bipoly(ctx, text) for text in data["drl_basis"]], DRL
        )
        if tuple(gb.polys) != expected:
            diffs.append("drl_basis: computed basis differs from the printed one")

    lexb = fglm(gb, LEX)
    shape = lex_shape(lexb)
    if shape is None:
        diffs.append("lex basis is not in the {z - g1(x), g2(x)} shape")
        raise FixtureMismatch(data["name"], diffs)
    g1, g2 = shape
    details["g1_degree"] = g1.degree
    details["g2_degree"] = g2.degree
    if "g1_degree" in data and g1.degree != data["g1_degree"]:
        diffs.append(f"g1 degree: computed {g1.degree}, expected {data['g1_degree']}")
    if "g2_degree" in data and g2.degree != data["g2_degree"]:
        diffs.append(f"g2 degree: computed {g2.degree}, expected {data['g2_degree']}")

    if data.get("lex_h1"):
        expected_h1 = parse_bipoly(ctx, data["lex_h1"])
        computed_h1 = BiPoly(ctx, {(0, 1): 1}) - _embed_x(g1)
        if computed_h1 != expected_h1:
            diffs.append("lex h1: computed polynomial differs from the printed one")

    if data.get("h2_factors"):
        expected_factors = [parse_poly(ctx, t) for t in data["h2_factors"]]
        prod = UniPoly.one(ctx)
        for p in expected_factors:
            prod = prod * p
        if g2 != prod.monic():
            diffs.append("lex h2: computed polynomial differs from the printed product")

    fl = factor(g2)
    details["factor_degrees"] = fl.degrees()
    if fl.degrees() != sorted(data["factor_degrees"]):
        diffs.append(
            f"factor degrees: computed {fl.degrees()}, expected {sorted(data['factor_degrees'])}"
        )
    if data.get("h2_factors"):
        ours = sorted(p.coeffs for p, _ in fl)
        theirs = sorted(parse_poly(ctx, t).monic().coeffs for t in data["h2_factors"])
        if ours != theirs:
            diffs.append("h2 factors: computed set differs from the printed set")

    if fl.is_squarefree():
        n = splitting_degree(fl)
        details["splitting_degree"] = n
        if n != data["splitting_degree"]:
            diffs.append(
                f"splitting degree: computed {n}, expected {data['splitting_degree']}"
            )
        roots = count_roots_in_extension(g2, n)
        details["roots_in_splitting_field"] = roots
        if roots != dim:
            diffs.append(f"roots over F_(q^{n}): computed {roots}, expected {dim}")
    else:
        diffs.append("g2 unexpectedly fails to be squarefree")

    if data.get("bct_entry") is not None:
        entry = boomerang.bct_entry(f, c, a, b)
        details["bct_entry"] = entry
        if entry != data["bct_entry"]:
            diffs.append(f"bct entry: computed {entry}, expected {data['bct_entry']}")

    if diffs:
        raise FixtureMismatch(data["name"], diffs)
    return FixtureReport(name=data["name"], ok=True, details=details)


def _verify_uniformity_table(data: dict) -> FixtureReport:
    ctx = _fixture_ctx(data["field"])
    n = data["dickson_n"]
    diffs = []
    details = {}
    for row_name, alpha_text in data["alphas"].items():
        alpha = ctx.parse_elt(alpha_text)
        f = dickson(ctx, n, alpha)
        row = [
            boomerang.uniformity(f, ctx.parse_elt(c_text)).beta
            for c_text in data["c_values"]
        ]
        details[row_name] = row
        expected = data["table"][row_name]
        if row != expected:
            diffs.append(f"row {row_name}: computed {row}, expected {expected}")
    if diffs:
        raise FixtureMismatch(data["name"], diffs)
    return FixtureReport(name=data["name"], ok=True, details=details)


def _embed_x(f: UniPoly) -> BiPoly:
    from .bpoly import from_uni_in

    return from_uni_in("x", f)
