import random

import pytest

from cboomerang.errors import (
    CompositeModulus,
    CtxMismatch,
    DivisionByZero,
    NotASquare,
    ReducibleModulus,
)
from cboomerang.gf import ctx_extension, ctx_prime, is_prime

from conftest import field


def test_ctx_prime_examples():
    assert ctx_prime(11).q == 11
    assert ctx_prime(2).q == 2
    with pytest.raises(CompositeModulus):
        ctx_prime(15)
    with pytest.raises(CompositeModulus):
        ctx_prime(1)


def test_is_prime_against_sieve():
    sieve = [True] * 2000
    sieve[0] = sieve[1] = False
    for i in range(2, 2000):
        if sieve[i]:
            for j in range(2 * i, 2000, i):
                sieve[j] = False
    for n in range(2000):
        assert is_prime(n) == sieve[n]


def test_ctx_extension_examples():
    F16 = field(2, 4, (1, 1, 0, 0, 1))
    assert F16.q == 16
    with pytest.raises(ReducibleModulus):
        ctx_extension(ctx_prime(2), (1, 0, 1))  # (Y+1)^2

    # oracle first: Y^2 + 1 has no root mod 11, so it is irreducible
    assert all((y * y + 1) % 11 != 0 for y in range(11))
    F121 = field(11, 2, (1, 0, 1))
    assert F121.q == 121


def test_arithmetic_examples():
    F11 = field(11)
    assert F11.inv(7) == 8
    F16 = field(2, 4, (1, 1, 0, 0, 1))
    g = F16.encode([0, 1])
    assert F16.pow(g, 4) == F16.parse_elt("g+1")


def test_lagrange_pow():
    for ctx in (field(11), field(13), field(2, 4, (1, 1, 0, 0, 1)), field(5, 2)):
        for x in ctx.units():
            assert ctx.pow(x, ctx.q - 1) == 1


def test_inverse_of_zero_raises():
    for ctx in (field(7), field(2, 4, (1, 1, 0, 0, 1))):
        with pytest.raises(DivisionByZero):
            ctx.inv(0)


def test_random_inverses():
    rng = random.Random(7)
    for ctx in (field(11), field(257), field(2, 4, (1, 1, 0, 0, 1)), field(11, 2, (1, 0, 1))):
        for _ in range(1000):
            e = rng.randrange(1, ctx.q)
            assert ctx.mul(e, ctx.inv(e)) == 1


def test_frobenius_is_additive_and_multiplicative():
    rng = random.Random(5)
    for ctx in (field(11), field(2, 4, (1, 1, 0, 0, 1)), field(3, 3), field(11, 2, (1, 0, 1))):
        for _ in range(200):
            x, y = rng.randrange(ctx.q), rng.randrange(ctx.q)
            assert ctx.frobenius(ctx.add(x, y)) == ctx.add(ctx.frobenius(x), ctx.frobenius(y))
            assert ctx.frobenius(ctx.mul(x, y)) == ctx.mul(ctx.frobenius(x), ctx.frobenius(y))


def test_is_square_examples():
    F11 = field(11)
    squares = {F11.mul(s, s) for s in F11.elements()}
    assert squares == {0, 1, 3, 4, 5, 9}
    assert F11.is_square(3)
    assert not F11.is_square(2)
    assert F11.is_square(0)


def test_is_square_matches_enumeration_small_fields():
    ctxs = [field(p) for p in (3, 5, 7, 11, 13, 17, 283)]
    ctxs += [field(3, 2), field(5, 2), field(3, 3), field(7, 2), field(11, 2), field(13, 2), field(17, 2)]
    ctxs += [field(2, 4, (1, 1, 0, 0, 1)), field(2, 3)]
    for ctx in ctxs:
        assert ctx.q <= 289 or ctx.p == 283
        squares = {ctx.mul(e, e) for e in ctx.elements()}
        for e in ctx.elements():
            assert ctx.is_square(e) == (e in squares or ctx.p == 2)


def test_sqrt_examples():
    F11 = field(11)
    assert F11.sqrt(3) == 5  # the smaller of the two roots 5 and 6
    with pytest.raises(NotASquare):
        F11.sqrt(2)
    F16 = field(2, 4, (1, 1, 0, 0, 1))
    for e in F16.elements():
        assert F16.sqrt(e) == F16.pow(e, 8)


def test_sqrt_squares_back():
    for ctx in (field(11), field(13), field(17), field(257), field(5, 2), field(11, 2), field(2, 4, (1, 1, 0, 0, 1))):
        for e in ctx.elements():
            if ctx.is_square(e):
                r = ctx.sqrt(e)
                assert ctx.mul(r, r) == e


def test_sqrt_canonical_choice():
    # of the two roots r and -r, the smaller coefficient vector is returned
    for ctx in (field(13), field(17), field(11, 2)):
        for e in ctx.elements():
            if e and ctx.is_square(e):
                r = ctx.sqrt(e)
                assert ctx.coeff_vector(r) <= ctx.coeff_vector(ctx.neg(r))


def test_tonelli_shanks_branch():
    # 17 = 1 mod 4 exercises the general Tonelli-Shanks loop
    F17 = field(17)
    for e in range(17):
        if F17.is_square(e):
            r = F17.sqrt(e)
            assert F17.mul(r, r) == e


def test_encoding_round_trip():
    F121 = field(11, 2, (1, 0, 1))
    for e in F121.elements():
        assert F121.encode(F121.coeff_vector(e)) == e


def test_element_text_round_trip():
    F16 = field(2, 4, (1, 1, 0, 0, 1))
    for e in F16.elements():
        assert F16.parse_elt(F16.format_elt(e)) == e
    F11 = field(11)
    assert F11.parse_elt("-1") == 10
    assert F16.parse_elt("g^3+g^2+g") == F16.encode([0, 1, 1, 1])


def test_element_json_round_trip():
    for ctx in (field(11), field(2, 4, (1, 1, 0, 0, 1))):
        for e in ctx.elements():
            assert ctx.elt_from_json(ctx.elt_to_json(e)) == e


def test_check_rejects_foreign_values():
    F11 = field(11)
    with pytest.raises(CtxMismatch):
        F11.check(11)
    with pytest.raises(CtxMismatch):
        F11.check(-1)


def test_large_extension_generic_path():
    # q = 11^7 is past the log-table limit, forcing coefficient arithmetic
    ctx = field(11, 7)
    assert ctx.q == 11 ** 7
    rng = random.Random(1)
    for _ in range(20):
        x, y = rng.randrange(1, ctx.q), rng.randrange(ctx.q)
        assert ctx.mul(x, ctx.inv(x)) == 1
        assert ctx.frobenius(ctx.add(x, y)) == ctx.add(ctx.frobenius(x), ctx.frobenius(y))
    assert ctx.pow(ctx.encode([0, 1]), ctx.q - 1) == 1
