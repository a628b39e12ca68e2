"""Dickson polynomials of the first kind and their standard identities.

The recurrence D_0 = 2, D_1 = X, D_n = X * D_{n-1} - a * D_{n-2} is the
constructor; the binomial closed form is kept alongside as an
independent oracle (its integer factor n/(n-i) * C(n-i, i) is computed
exactly before reduction, so characteristic divisions never occur).
"""

from __future__ import annotations

from math import comb, gcd

from .gf import Elt, FieldCtx
from .upoly import UniPoly


def dickson(ctx: FieldCtx, n: int, a: Elt) -> UniPoly:
    """D_n(X, a) by the three-term recurrence."""
    if n < 0:
        raise ValueError("the Dickson index must be non-negative")
    ctx.check(a)
    prev = UniPoly.constant(ctx, ctx.from_int(2))
    if n == 0:
        return prev
    cur = UniPoly.x(ctx)
    x = UniPoly.x(ctx)
    neg_a = ctx.neg(a)
    for _ in range(n - 1):
        prev, cur = cur, x * cur + prev.scale(neg_a)
    return cur


def dickson_closed_form(ctx: FieldCtx, n: int, a: Elt) -> UniPoly:
    """The binomial-sum form of D_n(X, a); oracle for the recurrence."""
    if n < 0:
        raise ValueError("the Dickson index must be non-negative")
    ctx.check(a)
    if n == 0:
        return UniPoly.constant(ctx, ctx.from_int(2))
    coeffs = [0] * (n + 1)
    for i in range(n // 2 + 1):
        scalar = n * comb(n - i, i)
        assert scalar % (n - i) == 0
        w = ctx.from_int(scalar // (n - i))
        coeffs[n - 2 * i] = ctx.mul(w, ctx.pow(ctx.neg(a), i))
    return UniPoly(ctx, coeffs)


def is_permutation_dickson(ctx: FieldCtx, n: int) -> bool:
    """D_n(X, a) permutes F_q iff gcd(n, q^2 - 1) = 1 (any a != 0; for
    a = 0 the usual monomial criterion gcd(n, q - 1) = 1 applies)."""
    if n < 1:
        raise ValueError("the permutation criterion needs n >= 1")
    return gcd(n, ctx.q * ctx.q - 1) == 1


def check_commutation(ctx: FieldCtx, m: int, n: int, a: Elt) -> bool:
    """D_{m n}(X, a) == D_m(D_n(X, a), a^n), as polynomials."""
    lhs = dickson(ctx, m * n, a)
    rhs = dickson(ctx, m, ctx.pow(a, n)).compose(dickson(ctx, n, a))
    return lhs == rhs


def check_scaling(ctx: FieldCtx, n: int, a: Elt, b: Elt) -> bool:
    """b^n * D_n(X, a) == D_n(b X, b^2 a), as polynomials."""
    lhs = dickson(ctx, n, a).scale(ctx.pow(b, n))
    scaled_x = UniPoly(ctx, (0, b))
    rhs = dickson(ctx, n, ctx.mul(ctx.mul(b, b), a)).compose(scaled_x)
    return lhs == rhs


def frobenius_index_identity(ctx: FieldCtx, n: int, a: Elt) -> bool:
    """D_{p n}(X, a) == D_n(X, a)^p in characteristic p."""
    lhs = dickson(ctx, ctx.p * n, a)
    rhs = UniPoly.one(ctx)
    base = dickson(ctx, n, a)
    for _ in range(ctx.p):
        rhs = rhs * base
    return lhs == rhs


def parity_of_terms(ctx: FieldCtx, n: int, a: Elt) -> str:
    """'odd' or 'even' when every exponent matches n's parity, else 'mixed'."""
    if n < 1:
        raise ValueError("term parity needs n >= 1")
    poly = dickson(ctx, n, a)
    exps = [i for i, c in enumerate(poly.coeffs) if c]
    if all(e % 2 == 1 for e in exps):
        return "odd"
    if all(e % 2 == 0 for e in exps):
        return "even"
    return "mixed"


def half_power(ctx: FieldCtx, gamma: Elt, n: int) -> Elt:
    """gamma^(n/2) for a square gamma: (sqrt(gamma))^n when n is odd."""
    if n % 2 == 0:
        return ctx.pow(gamma, n // 2)
    return ctx.pow(ctx.sqrt(gamma), n)
