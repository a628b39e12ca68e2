"""Arithmetic contexts for prime fields F_p and extensions F_{p^n}.

Elements are plain Python ints in a canonical encoding: the residue itself
for a prime field, and sum(c_i * p**i) for an extension element with
coefficient vector (c_0, ..., c_{n-1}) relative to the defining modulus.
All arithmetic goes through the context object, in the style of the usual
table-driven GF implementations.

Small extension fields (q <= 512) precompute multiplication and addition
tables; mid-size ones (q <= 2**20) keep discrete log/antilog tables; very
large ones fall back to coefficient-vector arithmetic on demand.
"""

from __future__ import annotations

import math

from .errors import (
    CompositeModulus,
    CtxMismatch,
    DivisionByZero,
    NotASquare,
    ReducibleModulus,
)

Elt = int

# Largest q for which dense q x q scalar tables are kept.
_SCALAR_TABLE_MAX = 512
# Largest q for which log/antilog tables are built.
_LOG_TABLE_MAX = 1 << 20

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all n < 3.3 * 10**24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ----------------------------------------------------------------------
# Coefficient-vector helpers over F_p (used by the extension slow path
# and for bootstrapping the tables; little-endian digit tuples).
# ----------------------------------------------------------------------

def _vec_trim(v):
    k = len(v)
    while k and v[k - 1] == 0:
        k -= 1
    return tuple(v[:k])


def _vec_mulmod(a, b, modulus, p):
    """(a * b) mod modulus over F_p; inputs little-endian digit tuples."""
    if not a or not b:
        return ()
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce by the monic modulus
    n = len(modulus) - 1
    for i in range(len(prod) - 1, n - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(n):
                prod[i - n + j] = (prod[i - n + j] - c * modulus[j]) % p
    return _vec_trim(prod[:n])


def _vec_divmod(a, b, p):
    """Polynomial divmod over F_p on digit tuples; b must be nonzero."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, p - 2, p)
    if len(a) - 1 < db:
        return (), _vec_trim(a)
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q = c * inv_lb % p
            quot[i - db] = q
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - q * b[j]) % p
    return _vec_trim(quot), _vec_trim(a)


def _vec_invmod(a, modulus, p):
    """Inverse of a modulo the defining polynomial, by extended Euclid."""
    if not a:
        raise DivisionByZero("zero has no inverse")
    r0, r1 = tuple(modulus), tuple(a)
    t0, t1 = (), (1,)
    while r1:
        q, r = _vec_divmod(r0, r1, p)
        r0, r1 = r1, r
        # t0 - q * t1
        qt = ()
        if q and t1:
            prod = [0] * (len(q) + len(t1) - 1)
            for i, qi in enumerate(q):
                if qi:
                    for j, tj in enumerate(t1):
                        prod[i + j] = (prod[i + j] + qi * tj) % p
            qt = _vec_trim(prod)
        m = max(len(t0), len(qt))
        diff = [( (t0[i] if i < len(t0) else 0) - (qt[i] if i < len(qt) else 0) ) % p for i in range(m)]
        t0, t1 = t1, _vec_trim(diff)
    # r0 is now gcd(a, modulus); a unit constant for an irreducible modulus
    if len(r0) != 1:
        raise DivisionByZero("element is not invertible")
    scale = pow(r0[0], p - 2, p)
    return _vec_trim([c * scale % p for c in t0])


class FieldCtx:
    """Shared interface of prime and extension field contexts.

    Attributes: ``p`` (characteristic), ``n`` (extension degree), ``q``
    (field size), ``modulus`` (digit tuple of the defining polynomial,
    None for prime fields) and ``gen_name`` (display symbol).
    """

    p: int
    n: int
    q: int
    modulus: tuple | None
    gen_name: str

    # -- basics -------------------------------------------------------

    def elements(self):
        return range(self.q)

    def units(self):
        return range(1, self.q)

    def from_int(self, k: int) -> Elt:
        """Embed an ordinary integer as a field constant."""
        return k % self.p

    def check(self, e: Elt) -> Elt:
        if not isinstance(e, int) or not 0 <= e < self.q:
            raise CtxMismatch(f"{e!r} is not an element of {self}")
        return e

    def sub(self, a: Elt, b: Elt) -> Elt:
        return self.add(a, self.neg(b))

    def div(self, a: Elt, b: Elt) -> Elt:
        return self.mul(a, self.inv(b))

    def pow(self, a: Elt, e: int) -> Elt:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def frobenius(self, a: Elt) -> Elt:
        return self.pow(a, self.p)

    # -- squares ------------------------------------------------------

    def is_square(self, e: Elt) -> bool:
        """True iff e is a square; in characteristic 2 everything is."""
        if self.p == 2 or e == 0:
            return True
        return self.pow(e, (self.q - 1) // 2) == 1

    def sqrt(self, e: Elt) -> Elt:
        """Deterministic square root (smaller coefficient vector wins)."""
        if e == 0:
            return 0
        if self.p == 2:
            return self.pow(e, self.q // 2)
        if not self.is_square(e):
            raise NotASquare(f"{self.format_elt(e)} is not a square in {self}")
        q = self.q
        if q % 4 == 3:
            r = self.pow(e, (q + 1) // 4)
        else:
            r = self._tonelli_shanks(e)
        s = self.neg(r)
        return r if self.coeff_vector(r) <= self.coeff_vector(s) else s

    def _tonelli_shanks(self, e: Elt) -> Elt:
        q = self.q
        t, s = q - 1, 0
        while t % 2 == 0:
            t //= 2
            s += 1
        nr = next(z for z in range(2, q) if not self.is_square(z))
        c = self.pow(nr, t)
        r = self.pow(e, (t + 1) // 2)
        u = self.pow(e, t)
        m = s
        while u != 1:
            k, uu = 0, u
            while uu != 1:
                uu = self.mul(uu, uu)
                k += 1
            b = self.pow(c, 1 << (m - k - 1))
            r = self.mul(r, b)
            c = self.mul(b, b)
            u = self.mul(u, c)
            m = k
        return r

    # -- encoding and text --------------------------------------------

    def coeff_vector(self, e: Elt) -> tuple:
        """Little-endian coefficient vector of length n."""
        raise NotImplementedError

    def encode(self, vec) -> Elt:
        raise NotImplementedError

    def format_elt(self, e: Elt) -> str:
        raise NotImplementedError

    def parse_elt(self, text: str) -> Elt:
        from .textio import parse_element
        return parse_element(self, text)

    def elt_to_json(self, e: Elt):
        """int for prime fields, little-endian coefficient list otherwise."""
        return e if self.n == 1 else list(self.coeff_vector(e))

    def elt_from_json(self, v) -> Elt:
        if isinstance(v, int):
            return self.check(v % self.q if self.n == 1 else v)
        return self.encode(v)


class PrimeField(FieldCtx):
    def __init__(self, p: int):
        if not is_prime(p):
            raise CompositeModulus(f"{p} is not prime")
        self.p = p
        self.n = 1
        self.q = p
        self.modulus = None
        self.gen_name = "x"

    def __repr__(self):
        return f"F_{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in " + repr(self))
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        if a == 0 and e < 0:
            raise DivisionByZero("division by zero in " + repr(self))
        return pow(a, e, self.p)

    def frobenius(self, a):
        return a

    def coeff_vector(self, e):
        return (e,)

    def encode(self, vec):
        vec = tuple(vec)
        if len(vec) > 1 and any(vec[1:]):
            raise CtxMismatch("prime field element has a single coefficient")
        return (vec[0] if vec else 0) % self.p

    def format_elt(self, e):
        return str(e)


class ExtensionField(FieldCtx):
    """F_{p^n} = F_p[Y]/(modulus), elements encoded base p."""

    def __init__(self, p: int, modulus, gen_name: str = "g"):
        if not is_prime(p):
            raise CompositeModulus(f"{p} is not prime")
        digits = tuple(int(c) % p for c in modulus)
        digits = _vec_trim(digits)
        n = len(digits) - 1
        if n < 2:
            raise ReducibleModulus("extension modulus must have degree >= 2")
        if digits[-1] != 1:
            raise ReducibleModulus("extension modulus must be monic")
        from . import upoly

        base = PrimeField(p)
        if not upoly.is_irreducible(upoly.UniPoly(base, digits)):
            raise ReducibleModulus(
                f"{upoly.format_poly(upoly.UniPoly(base, digits))} factors over {base!r}"
            )
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = digits
        self.gen_name = gen_name
        self._powers = [p ** i for i in range(n)]
        self._log = None
        self._exp = None
        self._mul_table = None
        self._add_table = None
        if self.q <= _LOG_TABLE_MAX:
            self._build_log_tables()
        if self.q <= _SCALAR_TABLE_MAX:
            self._build_scalar_tables()

    def __repr__(self):
        return f"F_{self.p}^{self.n}"

    def __eq__(self, other):
        return (
            isinstance(other, ExtensionField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ext", self.p, self.modulus))

    # -- encoding -----------------------------------------------------

    def coeff_vector(self, e):
        p = self.p
        out = []
        for _ in range(self.n):
            e, r = divmod(e, p)
            out.append(r)
        return tuple(out)

    def encode(self, vec):
        vec = tuple(int(c) % self.p for c in vec)
        if len(vec) > self.n and any(vec[self.n:]):
            raise CtxMismatch("coefficient vector longer than the extension degree")
        return sum(c * w for c, w in zip(vec, self._powers))

    # -- table construction -------------------------------------------

    def _raw_mul(self, a, b):
        return self.encode(
            _vec_mulmod(_vec_trim(self.coeff_vector(a)), _vec_trim(self.coeff_vector(b)),
                        self.modulus, self.p)
        )

    def _raw_pow(self, a, e):
        result = 1
        while e:
            if e & 1:
                result = self._raw_mul(result, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return result

    def _build_log_tables(self):
        order = self.q - 1
        prime_factors = []
        m = order
        d = 2
        while d * d <= m:
            if m % d == 0:
                prime_factors.append(d)
                while m % d == 0:
                    m //= d
            d += 1
        if m > 1:
            prime_factors.append(m)
        gen = None
        for cand in range(2, self.q):
            if all(self._raw_pow(cand, order // r) != 1 for r in prime_factors):
                gen = cand
                break
        assert gen is not None, "multiplicative group of a field is cyclic"
        exp = [1] * order
        for i in range(1, order):
            exp[i] = self._raw_mul(exp[i - 1], gen)
        log = [0] * self.q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    def _build_scalar_tables(self):
        q, order = self.q, self.q - 1
        exp, log = self._exp, self._log
        mul = [[0] * q for _ in range(q)]
        for a in range(1, q):
            la = log[a]
            row = mul[a]
            for b in range(1, q):
                row[b] = exp[(la + log[b]) % order]
        self._mul_table = mul
        if self.p != 2:
            add = [[0] * q for _ in range(q)]
            for a in range(q):
                va = self.coeff_vector(a)
                row = add[a]
                for b in range(q):
                    vb = self.coeff_vector(b)
                    row[b] = self.encode([(x + y) % self.p for x, y in zip(va, vb)])
            self._add_table = add

    # -- arithmetic ----------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        va, vb = self.coeff_vector(a), self.coeff_vector(b)
        return self.encode([(x + y) % self.p for x, y in zip(va, vb)])

    def neg(self, a):
        if self.p == 2:
            return a
        if self._mul_table is not None:
            return self._mul_table[a][self.p - 1]
        return self.encode([-c % self.p for c in self.coeff_vector(a)])

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a][b]
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._raw_mul(a, b)

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in " + repr(self))
        if self._log is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.encode(_vec_invmod(_vec_trim(self.coeff_vector(a)), self.modulus, self.p))

    def pow(self, a, e):
        if self._log is not None:
            if a == 0:
                if e < 0:
                    raise DivisionByZero("division by zero in " + repr(self))
                return 0 if e else 1
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        if e < 0:
            a, e = self.inv(a), -e
        return self._raw_pow(a, e)

    # -- text -----------------------------------------------------------

    def format_elt(self, e):
        if e == 0:
            return "0"
        vec = self.coeff_vector(e)
        parts = []
        for i in range(self.n - 1, -1, -1):
            c = vec[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                var = self.gen_name if i == 1 else f"{self.gen_name}^{i}"
                parts.append(var if c == 1 else f"{c}*{var}")
        return "+".join(parts)


def ctx_prime(p: int) -> PrimeField:
    """Context for F_p; raises CompositeModulus unless p is prime."""
    return PrimeField(p)


def ctx_extension(base: FieldCtx, modulus, gen_name: str = "g") -> ExtensionField:
    """Context for F_{p^deg(modulus)} over a prime base field.

    ``modulus`` may be a UniPoly over ``base`` or a little-endian
    coefficient sequence. It must be monic and irreducible; otherwise
    ReducibleModulus is raised.
    """
    if base.n != 1:
        raise CtxMismatch("towers are not supported; extend a prime field directly")
    coeffs = tuple(getattr(modulus, "coeffs", modulus))
    return ExtensionField(base.p, coeffs, gen_name=gen_name)
