"""Sparse bivariate polynomials in (x, z) over a field context.

Monomials are exponent pairs (i, j) standing for x^i * z^j; the global
variable order is z > x throughout the package. Supports the shift
substitution var -> var + a, homogeneous top-component extraction and
exact division by (z - x).
"""

from __future__ import annotations

from .errors import CtxMismatch, NotDivisible, ZeroPolynomial
from .gf import Elt, FieldCtx
from .upoly import UniPoly

Mono = tuple  # (i, j) exponent pair


class BiPoly:
    """Immutable sparse polynomial: {(i, j): nonzero coefficient}."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldCtx, terms=None):
        data = {}
        if terms:
            for mono, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    data[(int(mono[0]), int(mono[1]))] = c
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx)

    @classmethod
    def constant(cls, ctx, e: Elt):
        return cls(ctx, {(0, 0): e})

    @classmethod
    def variable(cls, ctx, var: str):
        return cls(ctx, {_var_mono(var): 1})

    # -- basics -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def coeff(self, mono: Mono) -> Elt:
        return self.terms.get(tuple(mono), 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.ctx == other.ctx
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def __repr__(self):
        return f"BiPoly({self.ctx!r}, {format_bipoly(self)})"

    def _same_ctx(self, other):
        if self.ctx != other.ctx:
            raise CtxMismatch("polynomials over different fields")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._same_ctx(other)
        ctx = self.ctx
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = ctx.add(out.get(mono, 0), c)
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return BiPoly(ctx, out)

    def __neg__(self):
        ctx = self.ctx
        return BiPoly(ctx, {m: ctx.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._same_ctx(other)
        ctx = self.ctx
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                mono = (i1 + i2, j1 + j2)
                s = ctx.add(out.get(mono, 0), ctx.mul(c1, c2))
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return BiPoly(ctx, out)

    def scale(self, e: Elt):
        ctx = self.ctx
        if e == 0:
            return BiPoly.zero(ctx)
        return BiPoly(ctx, {m: ctx.mul(c, e) for m, c in self.terms.items()})

    def mul_term(self, coeff: Elt, mono: Mono):
        """Multiply by the single term coeff * x^i z^j."""
        ctx = self.ctx
        if coeff == 0:
            return BiPoly.zero(ctx)
        di, dj = mono
        return BiPoly(
            ctx, {(i + di, j + dj): ctx.mul(c, coeff) for (i, j), c in self.terms.items()}
        )

    # -- substitutions -------------------------------------------------------

    def eval2(self, x: Elt, z: Elt) -> Elt:
        ctx = self.ctx
        ctx.check(x)
        ctx.check(z)
        acc = 0
        for (i, j), c in self.terms.items():
            acc = ctx.add(acc, ctx.mul(c, ctx.mul(ctx.pow(x, i), ctx.pow(z, j))))
        return acc

    def shift(self, var: str, a: Elt):
        """Substitute var -> var + a by binomial expansion."""
        ctx = self.ctx
        ctx.check(a)
        if a == 0:
            return self
        axis = 0 if _var_mono(var) == (1, 0) else 1
        rows = _binomial_rows(ctx)
        out = {}
        powers = {0: 1}
        for (i, j), c in self.terms.items():
            e = (i, j)[axis]
            row = rows(e)
            for k in range(e + 1):
                if e - k not in powers:
                    powers[e - k] = ctx.pow(a, e - k)
                w = ctx.mul(c, ctx.mul(row[k], powers[e - k]))
                if not w:
                    continue
                mono = (k, j) if axis == 0 else (i, k)
                s = ctx.add(out.get(mono, 0), w)
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return BiPoly(ctx, out)

    def top_component(self):
        """Highest homogeneous component; undefined for zero."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no top component")
        d = self.total_degree
        return BiPoly(self.ctx, {m: c for m, c in self.terms.items() if m[0] + m[1] == d})

    def substitute_z_equals_x(self) -> UniPoly:
        """The univariate image under z -> x."""
        ctx = self.ctx
        coeffs = [0] * (self.total_degree + 1) if self.terms else []
        for (i, j), c in self.terms.items():
            coeffs[i + j] = ctx.add(coeffs[i + j], c)
        return UniPoly(ctx, coeffs)

    def divide_exact_by_z_minus_x(self):
        """Quotient q with (z - x) * q == self; checks divisibility first."""
        if not self.substitute_z_equals_x().is_zero():
            raise NotDivisible("polynomial does not vanish on z = x")
        ctx = self.ctx
        # Treat self as a polynomial in z with UniPoly coefficients and run
        # synthetic division by (z - x); the remainder is zero by the check.
        by_j = {}
        for (i, j), c in self.terms.items():
            by_j.setdefault(j, {})[i] = c
        if not by_j:
            return BiPoly.zero(ctx)
        top = max(by_j)
        out = {}
        carry = {}  # coefficient of z^j in the quotient, as {i: c}
        for j in range(top - 1, -1, -1):
            # quotient coeff at z^j equals c_{j+1} + x * carry_{j+1}
            cur = dict(by_j.get(j + 1, {}))
            for i, c in carry.items():
                s = ctx.add(cur.get(i + 1, 0), c)
                if s:
                    cur[i + 1] = s
                else:
                    cur.pop(i + 1, None)
            for i, c in cur.items():
                if c:
                    out[(i, j)] = c
            carry = cur
        return BiPoly(ctx, out)


def _var_mono(var: str) -> Mono:
    if var == "x":
        return (1, 0)
    if var == "z":
        return (0, 1)
    raise ValueError(f"unknown variable {var!r}; expected 'x' or 'z'")


def _binomial_rows(ctx):
    """Per-context cache of Pascal rows reduced into the field."""
    cache = getattr(ctx, "_binom_rows", None)
    if cache is None:
        cache = {0: (1,)}
        ctx._binom_rows = cache

    def row(n: int):
        if n not in cache:
            prev = row(n - 1)
            p = ctx.p
            cache[n] = tuple(
                ((prev[k - 1] if k else 0) + (prev[k] if k < n else 0)) % p
                for k in range(n + 1)
            )
        return cache[n]

    return row


def from_uni_in(var: str, f: UniPoly) -> BiPoly:
    """Embed a univariate polynomial as f(x) or f(z)."""
    axis = _var_mono(var)
    terms = {}
    for i, c in enumerate(f.coeffs):
        if c:
            terms[(i * axis[0], i * axis[1])] = c
    return BiPoly(f.ctx, terms)


def compose_uni(f: UniPoly, inner: BiPoly) -> BiPoly:
    """f(inner) for univariate f and bivariate inner, by Horner."""
    ctx = f.ctx
    acc = BiPoly.zero(ctx)
    for c in reversed(f.coeffs):
        acc = acc * inner + BiPoly.constant(ctx, c)
    return acc


def parse_bipoly(ctx, text: str) -> BiPoly:
    from .textio import parse_terms

    return BiPoly(ctx, parse_terms(ctx, text, ["x", "z"]))


def format_bipoly(f: BiPoly, sort_key=None) -> str:
    """Display terms descending by sort_key (total degree by default)."""
    from .textio import format_coeff_prefix, format_constant

    if f.is_zero():
        return "0"
    ctx = f.ctx
    key = sort_key if sort_key is not None else (lambda m: (m[0] + m[1], m[1]))
    monos = sorted(f.terms, key=key, reverse=True)
    parts = []
    for i, j in monos:
        c = f.terms[(i, j)]
        factors = []
        if j:
            factors.append("z" if j == 1 else f"z^{j}")
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if not factors:
            parts.append(format_constant(ctx, c))
        else:
            parts.append(format_coeff_prefix(ctx, c) + "*".join(factors))
    return " + ".join(parts)


def bipoly_to_json(f: BiPoly) -> list:
    monos = sorted(f.terms, key=lambda m: (m[0] + m[1], m[1]), reverse=True)
    return [[i, j, f.ctx.elt_to_json(f.terms[(i, j)])] for i, j in monos]


def bipoly_from_json(ctx, data) -> BiPoly:
    return BiPoly(ctx, {(i, j): ctx.elt_from_json(v) for i, j, v in data})
