"""Term orders, Buchberger's algorithm, staircases and FGLM conversion.

Everything is specialized to the bivariate ring k[x, z] with z > x. The
two supported orders are degree reverse lexicographic and lexicographic.
Buchberger runs the normal selection strategy (smallest pair lcm first)
with the coprime-leading-monomial skip and full inter-reduction at the
end, so bases come out reduced, monic and deterministically sorted.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

from .bpoly import BiPoly, bipoly_to_json
from .errors import DivisionByZero, NotZeroDimensional, ZeroPolynomial
from .upoly import UniPoly


class TermOrder:
    """A monomial order given by an ascending sort key."""

    __slots__ = ("name", "key")

    def __init__(self, name, key):
        self.name = name
        self.key = key

    def __repr__(self):
        return f"TermOrder({self.name})"


#: Degree reverse lexicographic with z > x: total degree first, then the
#: smaller x-exponent (equivalently larger z-exponent) wins the tie.
DRL = TermOrder("drl", lambda m: (m[0] + m[1], m[1]))

#: Lexicographic with z > x: any power of z beats any power of x.
LEX = TermOrder("lex", lambda m: (m[1], m[0]))

ORDERS = {"drl": DRL, "lex": LEX}


def compare(order: TermOrder, m1, m2) -> int:
    """-1, 0 or 1 as m1 is less than, equal to or greater than m2."""
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


def leading_monomial(f: BiPoly, order: TermOrder):
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no leading monomial")
    return max(f.terms, key=order.key)


def leading_coefficient(f: BiPoly, order: TermOrder):
    return f.terms[leading_monomial(f, order)]


def monic(f: BiPoly, order: TermOrder) -> BiPoly:
    lc = leading_coefficient(f, order)
    return f if lc == 1 else f.scale(f.ctx.inv(lc))


def _divides(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def divide(f: BiPoly, divisors, order: TermOrder):
    """Multivariate division: f = sum(q_i * d_i) + r.

    No term of r is divisible by any divisor's leading monomial; the
    result is deterministic for a fixed divisor list order.
    """
    divisors = list(divisors)
    if any(d.is_zero() for d in divisors):
        raise DivisionByZero("zero divisor in multivariate division")
    ctx = f.ctx
    key = order.key
    ddata = [
        (d, leading_monomial(d, order), ctx.inv(leading_coefficient(d, order)))
        for d in divisors
    ]
    work = dict(f.terms)
    quots = [dict() for _ in divisors]
    rem = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for idx, (d, dlm, dinv) in enumerate(ddata):
            if _divides(dlm, m):
                t = (m[0] - dlm[0], m[1] - dlm[1])
                q = ctx.mul(c, dinv)
                quots[idx][t] = ctx.add(quots[idx].get(t, 0), q)
                for (i, j), dc in d.terms.items():
                    mono = (i + t[0], j + t[1])
                    s = ctx.sub(work.get(mono, 0), ctx.mul(q, dc))
                    if s:
                        work[mono] = s
                    else:
                        work.pop(mono, None)
                break
        else:
            rem[m] = c
            del work[m]
    return [BiPoly(ctx, q) for q in quots], BiPoly(ctx, rem)


def normal_form(f: BiPoly, divisors, order: TermOrder) -> BiPoly:
    """Division remainder without quotient bookkeeping."""
    divisors = list(divisors)
    if any(d.is_zero() for d in divisors):
        raise DivisionByZero("zero divisor in multivariate division")
    ctx = f.ctx
    key = order.key
    ddata = [
        (d, leading_monomial(d, order), ctx.inv(leading_coefficient(d, order)))
        for d in divisors
    ]
    work = dict(f.terms)
    rem = {}
    while work:
        m = max(work, key=key)
        c = work[m]
        for d, dlm, dinv in ddata:
            if _divides(dlm, m):
                t = (m[0] - dlm[0], m[1] - dlm[1])
                q = ctx.mul(c, dinv)
                for (i, j), dc in d.terms.items():
                    mono = (i + t[0], j + t[1])
                    s = ctx.sub(work.get(mono, 0), ctx.mul(q, dc))
                    if s:
                        work[mono] = s
                    else:
                        work.pop(mono, None)
                break
        else:
            rem[m] = c
            del work[m]
    return BiPoly(ctx, rem)


def s_polynomial(f: BiPoly, g: BiPoly, order: TermOrder) -> BiPoly:
    """lcm(LM f, LM g)/LT(f) * f - lcm(LM f, LM g)/LT(g) * g."""
    ctx = f.ctx
    lf = leading_monomial(f, order)
    lg = leading_monomial(g, order)
    lcm = (max(lf[0], lg[0]), max(lf[1], lg[1]))
    tf = (lcm[0] - lf[0], lcm[1] - lf[1])
    tg = (lcm[0] - lg[0], lcm[1] - lg[1])
    left = f.mul_term(ctx.inv(f.terms[lf]), tf)
    right = g.mul_term(ctx.inv(g.terms[lg]), tg)
    return left - right


@dataclass(frozen=True)
class GroebnerBasis:
    """Ordered basis; ``polys`` sorted descending by leading monomial."""

    polys: tuple
    order: TermOrder
    reduced: bool

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def leading_monomials(self):
        return tuple(leading_monomial(g, self.order) for g in self.polys)

    def contains(self, f: BiPoly) -> bool:
        """Ideal membership through the division remainder."""
        return normal_form(f, self.polys, self.order).is_zero()

    def to_json(self):
        return {
            "order": self.order.name,
            "polys": [bipoly_to_json(g) for g in self.polys],
        }


def interreduce(polys, order: TermOrder) -> tuple:
    """Minimalize and tail-reduce a basis; returns monic polynomials
    sorted descending by leading monomial."""
    nonzero = sorted(
        (monic(p, order) for p in polys if not p.is_zero()),
        key=lambda p: order.key(leading_monomial(p, order)),
    )
    minimal = []
    for p in nonzero:
        pl = leading_monomial(p, order)
        if not any(_divides(leading_monomial(q, order), pl) for q in minimal):
            minimal.append(p)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others, order) if others else g
        out.append(monic(r, order))
    out.sort(key=lambda p: order.key(leading_monomial(p, order)), reverse=True)
    return tuple(out)


def buchberger(generators, order: TermOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the given generators.

    Normal selection strategy: the pair with the smallest leading-monomial
    lcm is processed first; pairs with coprime leading monomials are
    skipped outright.
    """
    gens = [g for g in generators]
    if not gens or any(g.is_zero() for g in gens):
        raise ValueError("buchberger requires nonzero generators")
    basis = [monic(g, order) for g in gens]
    lms = [leading_monomial(g, order) for g in basis]

    heap = []

    def push_pairs(j):
        for i in range(j):
            li, lj = lms[i], lms[j]
            if min(li[0], lj[0]) == 0 and min(li[1], lj[1]) == 0:
                continue  # coprime leading monomials reduce to zero
            lcm = (max(li[0], lj[0]), max(li[1], lj[1]))
            heapq.heappush(heap, (order.key(lcm), i, j))

    for j in range(len(basis)):
        push_pairs(j)
    while heap:
        _, i, j = heapq.heappop(heap)
        s = s_polynomial(basis[i], basis[j], order)
        if s.is_zero():
            continue
        r = normal_form(s, basis, order)
        if r.is_zero():
            continue
        basis.append(monic(r, order))
        lms.append(leading_monomial(r, order))
        push_pairs(len(basis) - 1)
    return GroebnerBasis(polys=interreduce(basis, order), order=order, reduced=True)


def verify_buchberger_criterion(polys, order: TermOrder) -> bool:
    """True iff every pairwise S-polynomial reduces to zero."""
    polys = list(getattr(polys, "polys", polys))
    for i in range(len(polys)):
        for j in range(i):
            s = s_polynomial(polys[i], polys[j], order)
            if not s.is_zero() and not normal_form(s, polys, order).is_zero():
                return False
    return True


@dataclass(frozen=True)
class Staircase:
    """Minimal generators of the leading-monomial ideal plus the standard
    monomials below them (None when the quotient is infinite)."""

    generators: tuple
    zero_dimensional: bool
    standard_monomials: tuple | None
    count: int | None


def staircase(basis: GroebnerBasis) -> Staircase:
    """Leading-monomial staircase of a reduced basis.

    The quotient is finite iff pure powers of both x and z occur among
    the minimal generators (a constant generator means the whole ring).
    """
    order = basis.order
    lms = sorted(set(basis.leading_monomials()), key=order.key)
    minimal = []
    for m in lms:
        if not any(_divides(g, m) for g in minimal):
            minimal.append(m)
    minimal = tuple(minimal)
    if (0, 0) in minimal:
        return Staircase(minimal, True, (), 0)
    pure_x = min((i for i, j in minimal if j == 0), default=None)
    pure_z = min((j for i, j in minimal if i == 0), default=None)
    if pure_x is None or pure_z is None:
        return Staircase(minimal, False, None, None)
    std = [
        (i, j)
        for i in range(pure_x)
        for j in range(pure_z)
        if not any(_divides(g, (i, j)) for g in minimal)
    ]
    std.sort(key=order.key)
    return Staircase(minimal, True, tuple(std), len(std))


def dimension_bound_via_top_components(system, order: TermOrder = DRL):
    """Quotient dimension of the highest-degree-component ideal.

    This bounds the affine solution count of the original system from
    above; returns math.inf when that ideal is not zero-dimensional.
    """
    tops = [f.top_component() for f in system if not f.is_zero()]
    if not tops:
        return math.inf
    sc = staircase(buchberger(tops, order))
    return sc.count if sc.zero_dimensional else math.inf


def fglm(basis: GroebnerBasis, target: TermOrder) -> GroebnerBasis:
    """Convert a reduced basis to the target order.

    Runs the usual linear-algebra conversion over the standard-monomial
    space. As a fast path, a basis that already satisfies Buchberger's
    criterion under the target order is only re-reduced. Raises
    NotZeroDimensional otherwise for infinite quotients.
    """
    if basis.order.name == target.name:
        return basis
    if verify_buchberger_criterion(basis.polys, target):
        return GroebnerBasis(interreduce(basis.polys, target), target, True)
    sc = staircase(basis)
    if not sc.zero_dimensional:
        raise NotZeroDimensional("term order conversion needs a finite quotient")
    ctx = basis.polys[0].ctx
    std = list(sc.standard_monomials)
    dim = len(std)
    index = {m: k for k, m in enumerate(std)}
    by_lm = {leading_monomial(g, basis.order): g for g in basis.polys}
    lms = list(by_lm)
    memo = {}

    def nf_mono(m0):
        """Normal form of a monomial as a dense vector over ``std``."""
        stack = [m0]
        while stack:
            m = stack[-1]
            if m in memo:
                stack.pop()
                continue
            if m in index:
                v = [0] * dim
                v[index[m]] = 1
                memo[m] = v
                stack.pop()
                continue
            glm = next(l for l in lms if _divides(l, m))
            g = by_lm[glm]
            t = (m[0] - glm[0], m[1] - glm[1])
            deps = [
                (i + t[0], j + t[1]) for (i, j) in g.terms if (i, j) != glm
            ]
            missing = [d for d in deps if d not in memo]
            if missing:
                stack.extend(missing)
                continue
            v = [0] * dim
            for (i, j), c in g.terms.items():
                if (i, j) == glm:
                    continue
                w = memo[(i + t[0], j + t[1])]
                for k in range(dim):
                    if w[k]:
                        v[k] = ctx.sub(v[k], ctx.mul(c, w[k]))
            memo[m] = v
            stack.pop()
        return memo[m0]

    tkey = target.key
    heap = [(tkey((0, 0)), (0, 0))]
    seen = {(0, 0)}
    chosen = []       # target-standard monomials, in insertion order
    rows = []         # echelon rows: (pivot, vector, expression over chosen)
    out_polys = []
    out_lms = []
    while heap:
        _, m = heapq.heappop(heap)
        if any(_divides(l, m) for l in out_lms):
            continue
        v = list(nf_mono(m))
        expr = [0] * len(chosen)  # current v == nf(m) - sum expr[k] * nf(chosen[k])
        for piv, rvec, rexpr in rows:
            c = v[piv]
            if c:
                for k in range(dim):
                    if rvec[k]:
                        v[k] = ctx.sub(v[k], ctx.mul(c, rvec[k]))
                for k, rc in enumerate(rexpr):
                    if rc:
                        expr[k] = ctx.add(expr[k], ctx.mul(c, rc))
        if any(v):
            piv = next(k for k in range(dim) if v[k])
            inv = ctx.inv(v[piv])
            rvec = [ctx.mul(inv, c) for c in v]
            rexpr = [ctx.neg(ctx.mul(inv, c)) for c in expr] + [inv]
            chosen.append(m)
            rows.append((piv, rvec, rexpr))
            for nxt in ((m[0] + 1, m[1]), (m[0], m[1] + 1)):
                if nxt not in seen:
                    seen.add(nxt)
                    heapq.heappush(heap, (tkey(nxt), nxt))
        else:
            terms = {m: 1}
            for k, c in enumerate(expr):
                if c:
                    terms[chosen[k]] = ctx.neg(c)
            out_polys.append(BiPoly(ctx, terms))
            out_lms.append(m)
    out_polys.sort(key=lambda p: target.key(leading_monomial(p, target)), reverse=True)
    return GroebnerBasis(polys=tuple(out_polys), order=target, reduced=True)


def lex_shape(basis: GroebnerBasis):
    """Extract (g1, g2) when the basis is exactly {z - g1(x), g2(x)}.

    Returns None when the basis is not in that shape.
    """
    if basis.order.name != "lex":
        raise ValueError("shape extraction expects a lexicographic basis")
    if len(basis.polys) != 2:
        return None
    ctx = basis.polys[0].ctx
    uni = [p for p in basis.polys if all(j == 0 for _, j in p.terms)]
    mixed = [p for p in basis.polys if p not in uni]
    if len(uni) != 1 or len(mixed) != 1:
        return None
    g2_poly = uni[0]
    zx = mixed[0]
    if leading_monomial(zx, basis.order) != (0, 1):
        return None
    if any(mono != (0, 1) and mono[1] != 0 for mono in zx.terms):
        return None
    g2 = UniPoly(ctx, _uni_coeffs(g2_poly))
    tail = BiPoly(ctx, {m: c for m, c in zx.terms.items() if m != (0, 1)})
    g1 = UniPoly(ctx, _uni_coeffs(-tail))
    return g1, g2


def _uni_coeffs(f: BiPoly):
    if f.is_zero():
        return ()
    coeffs = [0] * (max(i for i, _ in f.terms) + 1)
    for (i, _), c in f.terms.items():
        coeffs[i] = c
    return coeffs
