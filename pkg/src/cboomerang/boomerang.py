"""Boomerang polynomial systems, c-BCT counting and uniformity bounds.

The paired counting equations for a function f, scaling constant c and
differences (a, b) are

    f(x + y) - c * f(x) = b
    c * f(x + y + a) - f(x + a) = c * b

counted over (x, y). With the substitution z = x + y they become the
bivariate system (F1, F2); after scaling F2 by c^-1 and, for c = 1,
dividing F2 - F1 by the exact factor (z - x), the pair (F1, G2) drives
all symbolic work. Exhaustive counting runs on numpy value tables, one
(a)-row of the connectivity table at a time.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd

import numpy as np

from .bpoly import BiPoly, from_uni_in
from .errors import AZero, BudgetExceeded, CZero, NoBound, NotAPermutation
from .gf import Elt, FieldCtx
from .upoly import UniPoly, format_poly

#: Largest field size the exhaustive kernels accept by default.
DEFAULT_BUDGET_Q = 512


@dataclass(frozen=True)
class BoomerangSystem:
    """The bivariate system for one (f, c, a, b) instance.

    ``f1`` and ``f2`` are the literal counting polynomials; ``g2`` is the
    preprocessed second generator (c^-1 * f2 - f1, additionally divided
    by z - x when c = 1) so that (f1, g2) generates the solution ideal.
    ``mode`` is one of "c1", "cm1", "c2ne1".
    """

    f: UniPoly
    c: Elt
    a: Elt
    b: Elt
    mode: str
    f1: BiPoly
    f2: BiPoly
    g2: BiPoly

    def generators(self):
        return (self.f1, self.g2)


def classify_c(ctx: FieldCtx, c: Elt) -> str:
    if c == 0:
        raise CZero("the scaling constant c must be nonzero")
    if c == 1:
        return "c1"
    if c == ctx.neg(1):
        return "cm1"
    return "c2ne1"


def build_system(f: UniPoly, c: Elt, a: Elt, b: Elt) -> BoomerangSystem:
    """Construct (F1, F2) and the reduced second generator G2."""
    ctx = f.ctx
    for e in (c, a, b):
        ctx.check(e)
    mode = classify_c(ctx, c)
    if a == 0:
        raise AZero("the input difference a must be nonzero")
    fz = from_uni_in("z", f)
    fx = from_uni_in("x", f)
    f1 = fz - fx.scale(c) - BiPoly.constant(ctx, b)
    f2 = (
        fz.shift("z", a).scale(c)
        - fx.shift("x", a)
        - BiPoly.constant(ctx, ctx.mul(c, b))
    )
    aux = f2.scale(ctx.inv(c)) - f1
    g2 = aux.divide_exact_by_z_minus_x() if mode == "c1" else aux
    return BoomerangSystem(f=f, c=c, a=a, b=b, mode=mode, f1=f1, f2=f2, g2=g2)


# ----------------------------------------------------------------------
# Exhaustive kernels
# ----------------------------------------------------------------------

def value_table(f: UniPoly) -> np.ndarray:
    """f evaluated on every field element, indexed by encoding."""
    return np.array([f.eval(x) for x in f.ctx.elements()], dtype=np.int64)


def _kernel_tables(ctx: FieldCtx):
    """Cached q x q numpy ADD, SUB and MUL tables for the context."""
    cached = getattr(ctx, "_np_tables", None)
    if cached is not None:
        return cached
    q = ctx.q
    if ctx.n == 1:
        idx = np.arange(q, dtype=np.int64)
        add = (idx[:, None] + idx[None, :]) % q
        sub = (idx[:, None] - idx[None, :]) % q
        mul = (idx[:, None] * idx[None, :]) % q
    elif ctx.p == 2:
        idx = np.arange(q, dtype=np.int64)
        add = sub = idx[:, None] ^ idx[None, :]
        mul = np.array(ctx._mul_table, dtype=np.int64)
    else:
        add = np.array(ctx._add_table, dtype=np.int64)
        mul = np.array(ctx._mul_table, dtype=np.int64)
        neg = np.array([ctx.neg(e) for e in range(q)], dtype=np.int64)
        sub = add[:, neg]
    tables = (add, sub, mul)
    ctx._np_tables = tables
    return tables


def _check_budget(ctx, budget_q):
    if ctx.q > budget_q:
        raise BudgetExceeded(
            f"field size {ctx.q} exceeds the exhaustive budget {budget_q}"
        )


def bct_row(f: UniPoly, c: Elt, a: Elt, table=None) -> np.ndarray:
    """One row of the connectivity table: counts for all b at fixed a."""
    ctx = f.ctx
    if c == 0:
        raise CZero("the scaling constant c must be nonzero")
    add, sub, mul = _kernel_tables(ctx)
    t = value_table(f) if table is None else table
    ct = mul[c][t]  # c * f(.)
    # First equation: b = f(z) - c f(x) on the (x, z) grid.
    required_b = sub[t[None, :], ct[:, None]]
    # Second equation: c f(z + a) - f(x + a) must equal c * b.
    shifted = add[:, a]
    lhs = sub[ct[shifted][None, :], t[shifted][:, None]]
    mask = lhs == mul[c][required_b]
    return np.bincount(required_b[mask].ravel(), minlength=ctx.q)


def bct_entry(f: UniPoly, c: Elt, a: Elt, b: Elt, budget_q: int = DEFAULT_BUDGET_Q) -> int:
    """Number of (x, y) pairs satisfying both counting equations."""
    ctx = f.ctx
    for e in (c, a, b):
        ctx.check(e)
    _check_budget(ctx, budget_q)
    return int(bct_row(f, c, a)[b])


def ddt_entry(f: UniPoly, a: Elt, b: Elt, budget_q: int = DEFAULT_BUDGET_Q) -> int:
    """|{x : f(x + a) - f(x) = b}|."""
    ctx = f.ctx
    ctx.check(a)
    ctx.check(b)
    _check_budget(ctx, budget_q)
    add, sub, _ = _kernel_tables(ctx)
    t = value_table(f)
    return int(np.count_nonzero(sub[t[add[:, a]], t] == b))


def _permutation_tables(f: UniPoly):
    t = value_table(f)
    if len(set(t.tolist())) != f.ctx.q:
        raise NotAPermutation(f"{format_poly(f)} is not a bijection of {f.ctx!r}")
    inv = np.empty_like(t)
    inv[t] = np.arange(f.ctx.q, dtype=np.int64)
    return t, inv


def bct_entry_permutation_form(
    f: UniPoly, c: Elt, a: Elt, b: Elt, budget_q: int = DEFAULT_BUDGET_Q
) -> int:
    """Inverse-table count: f^-1(c^-1 f(x+a) + b) - f^-1(c f(x) + b) = a.

    Defined for permutations only; agrees with ``bct_entry`` there and
    exists as an independent cross-check of it.
    """
    ctx = f.ctx
    for e in (c, a, b):
        ctx.check(e)
    if c == 0:
        raise CZero("the scaling constant c must be nonzero")
    _check_budget(ctx, budget_q)
    add, sub, mul = _kernel_tables(ctx)
    t, finv = _permutation_tables(f)
    cinv = ctx.inv(c)
    left = finv[add[mul[cinv][t[add[:, a]]], b]]
    right = finv[add[mul[c][t], b]]
    return int(np.count_nonzero(sub[left, right] == a))


@dataclass(frozen=True)
class BctTable:
    """Dense grid of counts, indexed by the rows in ``a_values`` and the
    columns in ``b_values``."""

    f: UniPoly
    c: Elt
    a_values: tuple
    b_values: tuple
    counts: np.ndarray

    def entry(self, a: Elt, b: Elt) -> int:
        return int(self.counts[self.a_values.index(a), self.b_values.index(b)])

    def to_json(self):
        ctx = self.f.ctx
        return {
            "field": _field_json(ctx),
            "f": format_poly(self.f),
            "c": ctx.format_elt(self.c),
            "a_values": [ctx.format_elt(a) for a in self.a_values],
            "b_values": [ctx.format_elt(b) for b in self.b_values],
            "counts": self.counts.tolist(),
        }


def bct_table(
    f: UniPoly,
    c: Elt,
    a_values=None,
    b_values=None,
    budget_q: int = DEFAULT_BUDGET_Q,
) -> BctTable:
    """Connectivity table over F_q^x rows and all b columns by default."""
    ctx = f.ctx
    ctx.check(c)
    _check_budget(ctx, budget_q)
    a_values = tuple(a_values) if a_values is not None else tuple(ctx.units())
    b_values = tuple(b_values) if b_values is not None else tuple(ctx.elements())
    if any(a == 0 for a in a_values):
        raise AZero("connectivity rows need a != 0")
    table = value_table(f)
    rows = [bct_row(f, c, a, table)[list(b_values)] for a in a_values]
    return BctTable(
        f=f, c=c, a_values=a_values, b_values=b_values,
        counts=np.array(rows, dtype=np.int64),
    )


# ----------------------------------------------------------------------
# Uniformity and bounds
# ----------------------------------------------------------------------

BOUND_RULES = {
    "c2ne1": ("d^2", lambda d: d * d),
    "cm1": ("d*(d-1)", lambda d: d * (d - 1)),
    "c1": ("d*(d-2)", lambda d: d * (d - 2)),
    "c1-char2": ("d*(d-2)-1", lambda d: d * (d - 2) - 1),
}


def applicable_bound(d: int, c: Elt, ctx: FieldCtx):
    """(bound, rule name) for degree d; NoBound when gcd(d, q) > 1."""
    if d < 1:
        raise ValueError("the degree must be positive")
    mode = classify_c(ctx, c)
    if gcd(d, ctx.q) != 1:
        raise NoBound(f"no bound applies: gcd({d}, {ctx.q}) != 1")
    if mode == "c1" and ctx.p == 2:
        mode = "c1-char2"
    name, rule = BOUND_RULES[mode]
    return rule(d), name


@dataclass(frozen=True)
class UniformityReport:
    """Maximum connectivity count over nonzero (a, b), its witnesses and
    the applicable degree bound (None when no bound applies)."""

    f: UniPoly
    c: Elt
    beta: int
    witnesses: tuple  # of (a, b, count), every argmax pair
    bound: int | None
    bound_source: str | None

    @property
    def passed(self):
        return None if self.bound is None else self.beta <= self.bound

    def to_json(self):
        ctx = self.f.ctx
        return {
            "field": _field_json(ctx),
            "f": format_poly(self.f),
            "c": ctx.format_elt(self.c),
            "beta": self.beta,
            "bound": self.bound,
            "bound_source": self.bound_source,
            "passed": self.passed,
            "witnesses": [
                {"a": ctx.format_elt(a), "b": ctx.format_elt(b), "count": n}
                for a, b, n in self.witnesses
            ],
        }


def uniformity(
    f: UniPoly,
    c: Elt,
    budget_q: int = DEFAULT_BUDGET_Q,
    threads: int | None = None,
) -> UniformityReport:
    """Exhaustive c-boomerang uniformity: max over a, b in F_q^x.

    Scans one a-row at a time on the numpy kernel; rows b = 0 are
    computed but excluded from the maximum. Ties are reported with every
    attaining (a, b), smallest encodings first.
    """
    ctx = f.ctx
    ctx.check(c)
    if c == 0:
        raise CZero("the scaling constant c must be nonzero")
    _check_budget(ctx, budget_q)
    table = value_table(f)
    a_values = list(ctx.units())
    if threads and threads > 1:
        _kernel_tables(ctx)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda a: bct_row(f, c, a, table), a_values))
    else:
        rows = [bct_row(f, c, a, table) for a in a_values]
    beta = 0
    witnesses = []
    for a, row in zip(a_values, rows):
        inner = row[1:]
        m = int(inner.max()) if inner.size else 0
        if m > beta:
            beta = m
            witnesses = [(a, int(b) + 1, m) for b in np.flatnonzero(inner == m)]
        elif m == beta and beta > 0:
            witnesses.extend((a, int(b) + 1, m) for b in np.flatnonzero(inner == m))
    try:
        bound, source = applicable_bound(f.degree, c, ctx)
    except NoBound:
        bound, source = None, None
    return UniformityReport(
        f=f, c=c, beta=beta, witnesses=tuple(witnesses), bound=bound,
        bound_source=source,
    )


def _field_json(ctx: FieldCtx):
    if ctx.n == 1:
        return {"p": ctx.p, "n": 1}
    return {"p": ctx.p, "n": ctx.n, "modulus": list(ctx.modulus)}
