"""Dense univariate polynomial arithmetic over a field context.

Provides ring operations, gcd, modular exponentiation, irreducibility
testing (Rabin), full factorization (squarefree split, distinct-degree,
Cantor-Zassenhaus equal-degree with the trace variant in characteristic
2) and Frobenius-based root counting in extensions without ever
enumerating the extension field.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import CtxMismatch, DivisionByZero, NotSquarefree
from .gf import Elt, FieldCtx


class UniPoly:
    """Immutable dense polynomial; coefficients low-to-high."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        k = len(coeffs)
        while k and coeffs[k - 1] == 0:
            k -= 1
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(coeffs[:k]))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, ())

    @classmethod
    def one(cls, ctx):
        return cls(ctx, (1,))

    @classmethod
    def constant(cls, ctx, e: Elt):
        return cls(ctx, (e,))

    @classmethod
    def x(cls, ctx):
        return cls(ctx, (0, 1))

    @classmethod
    def from_coeffs(cls, ctx, coeffs):
        return cls(ctx, tuple(ctx.check(c) for c in coeffs))

    # -- basics ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lc(self) -> Elt:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def coeff(self, i: int) -> Elt:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        return f"UniPoly({self.ctx!r}, {format_poly(self)})"

    def _same_ctx(self, other):
        if self.ctx != other.ctx:
            raise CtxMismatch("polynomials over different fields")

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        self._same_ctx(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = ctx.add(out[i], c)
        return UniPoly(ctx, out)

    def __neg__(self):
        ctx = self.ctx
        return UniPoly(ctx, [ctx.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._same_ctx(other)
        ctx = self.ctx
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly.zero(ctx)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
        return UniPoly(ctx, out)

    def scale(self, e: Elt):
        ctx = self.ctx
        if e == 0:
            return UniPoly.zero(ctx)
        return UniPoly(ctx, [ctx.mul(c, e) for c in self.coeffs])

    def square(self):
        """self * self, with the cheap spread formula in characteristic 2."""
        ctx = self.ctx
        if ctx.p == 2 and self.coeffs:
            out = [0] * (2 * len(self.coeffs) - 1)
            for i, c in enumerate(self.coeffs):
                if c:
                    out[2 * i] = ctx.mul(c, c)
            return UniPoly(ctx, out)
        return self * self

    def __divmod__(self, other):
        self._same_ctx(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        ctx = self.ctx
        db = other.degree
        inv_lb = ctx.inv(other.lc())
        rem = list(self.coeffs)
        if self.degree < db:
            return UniPoly.zero(ctx), self
        quot = [0] * (self.degree - db + 1)
        bc = other.coeffs
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                q = ctx.mul(c, inv_lb)
                quot[i - db] = q
                for j in range(db + 1):
                    if bc[j]:
                        rem[i - db + j] = ctx.sub(rem[i - db + j], ctx.mul(q, bc[j]))
        return UniPoly(ctx, quot), UniPoly(ctx, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero() or self.lc() == 1:
            return self
        return self.scale(self.ctx.inv(self.lc()))

    # -- analysis ----------------------------------------------------------

    def eval(self, x: Elt) -> Elt:
        """Horner evaluation; raises CtxMismatch for a foreign element."""
        ctx = self.ctx
        ctx.check(x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), c)
        return acc

    def derivative(self):
        ctx = self.ctx
        out = [ctx.mul(c, ctx.from_int(i)) for i, c in enumerate(self.coeffs)][1:]
        return UniPoly(ctx, out)

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """self(inner(X)) by Horner."""
        self._same_ctx(inner)
        ctx = self.ctx
        acc = UniPoly.zero(ctx)
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly.constant(ctx, c)
        return acc


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def pow_mod(base: UniPoly, e: int, modulus: UniPoly) -> UniPoly:
    """base**e mod modulus by square-and-multiply; e may be a big int."""
    if e < 0:
        raise ValueError("negative exponents are not supported")
    result = UniPoly.one(base.ctx) % modulus
    b = base % modulus
    while e:
        if e & 1:
            result = (result * b) % modulus
        e >>= 1
        if e:
            b = b.square() % modulus
    return result


# ----------------------------------------------------------------------
# Factorization
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FactorList:
    """Complete factorization: unit * prod(factor**multiplicity)."""

    unit: Elt
    factors: tuple  # of (UniPoly, int), canonically sorted

    def __iter__(self):
        return iter(self.factors)

    def degrees(self):
        """Multiset of irreducible factor degrees, with multiplicity."""
        out = []
        for poly, mult in self.factors:
            out.extend([poly.degree] * mult)
        return sorted(out)

    def expand(self) -> UniPoly:
        ctx = self.factors[0][0].ctx if self.factors else None
        if ctx is None:
            raise ValueError("cannot expand an empty factor list")
        acc = UniPoly.constant(ctx, self.unit)
        for poly, mult in self.factors:
            for _ in range(mult):
                acc = acc * poly
        return acc

    def is_squarefree(self) -> bool:
        return all(mult == 1 for _, mult in self.factors)


def _pth_root(f: UniPoly) -> UniPoly:
    """Inverse of x -> x^p on a polynomial whose derivative vanishes."""
    ctx = f.ctx
    p = ctx.p
    root_exp = ctx.q // p  # a -> a**(q/p) inverts the Frobenius
    out = [ctx.pow(f.coeff(i * p), root_exp) for i in range(f.degree // p + 1)]
    return UniPoly(ctx, out)


def _squarefree_list(f: UniPoly):
    """Pairwise coprime monic squarefree parts with multiplicities."""
    out = []
    scale = 1
    p = f.ctx.p
    while f.degree >= 1:
        df = f.derivative()
        if df.is_zero():
            f = _pth_root(f)
            scale *= p
            continue
        g = poly_gcd(f, df)
        w = (f // g).monic()
        i = 1
        while not w.is_one():
            y = poly_gcd(w, g)
            z = (w // y).monic()
            if z.degree >= 1:
                out.append((z, i * scale))
            w = y
            g = (g // y).monic()
            i += 1
        if g.is_one():
            break
        f = _pth_root(g)
        scale *= p
    return out


def _distinct_degree(f: UniPoly):
    """Split a monic squarefree f into (product, factor degree) pieces."""
    ctx = f.ctx
    q = ctx.q
    out = []
    h = UniPoly.x(ctx) % f
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = pow_mod(h, q, f)
        g = poly_gcd(h - UniPoly.x(ctx), f)
        if not g.is_one():
            out.append((g, d))
            f = (f // g).monic()
            h = h % f
    if f.degree >= 1:
        out.append((f, f.degree))
    return out


def _random_poly_below(ctx, degree_bound, rng):
    """Uniformly random polynomial of degree < degree_bound."""
    return UniPoly(ctx, [rng.randrange(ctx.q) for _ in range(degree_bound)])


def _equal_degree(f: UniPoly, d: int, rng) -> list:
    """Cantor-Zassenhaus split of a product of degree-d irreducibles.

    The splitting element must be uniform over all residues mod f; any
    bias (say, always-monic choices) can make the character split
    constant across the factors and the loop non-terminating.
    """
    if f.degree == d:
        return [f]
    ctx = f.ctx
    q = ctx.q
    while True:
        t = _random_poly_below(ctx, f.degree, rng)
        if t.degree < 1:
            continue
        if ctx.p == 2:
            # trace map over F_2 of the degree-d factor fields
            m = d * (q.bit_length() - 1)
            acc = t
            cur = t
            for _ in range(m - 1):
                cur = cur.square() % f
                acc = acc + cur
            h = poly_gcd(acc, f)
        else:
            s = pow_mod(t, (q ** d - 1) // 2, f)
            h = poly_gcd(s - UniPoly.one(ctx), f)
        if 0 < h.degree < f.degree:
            return _equal_degree(h, d, rng) + _equal_degree((f // h).monic(), d, rng)


def factor(f: UniPoly, seed: int = 0) -> FactorList:
    """Complete irreducible factorization, deterministic output order.

    The internal equal-degree splitting randomness comes from ``seed``;
    the returned list is sorted by (degree, coefficients) either way.
    """
    if f.degree < 1:
        raise ValueError("factor requires degree >= 1")
    rng = random.Random(seed)
    unit = f.lc()
    work = f.monic()
    found = []
    for part, mult in _squarefree_list(work):
        for prod, d in _distinct_degree(part):
            for irr in _equal_degree(prod, d, rng):
                found.append((irr, mult))
    found.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return FactorList(unit=unit, factors=tuple(found))


def is_irreducible(f: UniPoly) -> bool:
    """Rabin's irreducibility test."""
    d = f.degree
    if d < 1:
        return False
    if d == 1:
        return True
    ctx = f.ctx
    q = ctx.q
    fm = f.monic()
    x = UniPoly.x(ctx)
    if pow_mod(x, q ** d, fm) != x % fm:
        return False
    primes = set()
    m, t = d, 2
    while t * t <= m:
        if m % t == 0:
            primes.add(t)
            while m % t == 0:
                m //= t
        t += 1
    if m > 1:
        primes.add(m)
    for r in primes:
        g = poly_gcd(pow_mod(x, q ** (d // r), fm) - x, fm)
        if not g.is_one():
            return False
    return True


def squarefree_part(f: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of f."""
    acc = UniPoly.one(f.ctx)
    for part, _ in _squarefree_list(f.monic()):
        acc = acc * part
    return acc


def count_roots_in_extension(f: UniPoly, n: int = 1) -> int:
    """Number of distinct roots of f in F_{q^n}.

    Computed as deg gcd(X^{q^n} - X mod f, f) on the squarefree part;
    the extension field itself is never constructed.
    """
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if f.degree < 1:
        raise ValueError("root counting requires degree >= 1")
    fs = squarefree_part(f)
    ctx = f.ctx
    x = UniPoly.x(ctx)
    frob = pow_mod(x, ctx.q ** n, fs)
    return poly_gcd(frob - x, fs).degree


def splitting_degree(fl: FactorList) -> int:
    """Least n putting all roots in F_{q^n}: lcm of the factor degrees."""
    if not fl.is_squarefree():
        raise NotSquarefree("splitting degree is defined for squarefree polynomials")
    return math.lcm(*(poly.degree for poly, _ in fl.factors))


def find_irreducible(ctx, degree: int) -> UniPoly:
    """Smallest (by coefficient encoding) monic irreducible of given degree."""
    if degree == 1:
        return UniPoly.x(ctx)
    q = ctx.q
    for k in range(q ** degree):
        coeffs = []
        v = k
        for _ in range(degree):
            v, r = divmod(v, q)
            coeffs.append(r)
        coeffs.append(1)
        cand = UniPoly(ctx, coeffs)
        if is_irreducible(cand):
            return cand
    raise ValueError("no irreducible polynomial found")  # unreachable


# ----------------------------------------------------------------------
# Text and JSON forms
# ----------------------------------------------------------------------

def parse_poly(ctx, text: str, var: str = "x") -> UniPoly:
    from .textio import parse_terms

    terms = parse_terms(ctx, text, [var])
    if not terms:
        return UniPoly.zero(ctx)
    coeffs = [0] * (max(e for (e,) in terms) + 1)
    for (e,), c in terms.items():
        coeffs[e] = c
    return UniPoly(ctx, coeffs)


def format_poly(f: UniPoly, var: str = "x") -> str:
    from .textio import format_coeff_prefix, format_constant

    if f.is_zero():
        return "0"
    ctx = f.ctx
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeff(i)
        if not c:
            continue
        if i == 0:
            parts.append(format_constant(ctx, c))
        else:
            v = var if i == 1 else f"{var}^{i}"
            parts.append(format_coeff_prefix(ctx, c) + v)
    return " + ".join(parts)


def poly_to_json(f: UniPoly) -> list:
    return [f.ctx.elt_to_json(c) for c in f.coeffs]


def poly_from_json(ctx, data) -> UniPoly:
    return UniPoly(ctx, [ctx.elt_from_json(v) for v in data])
