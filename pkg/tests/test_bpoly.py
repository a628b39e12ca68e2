import random

import pytest

from cboomerang.bpoly import (
    BiPoly,
    bipoly_from_json,
    bipoly_to_json,
    compose_uni,
    format_bipoly,
    from_uni_in,
    parse_bipoly,
)
from cboomerang.errors import NotDivisible, ZeroPolynomial
from cboomerang.upoly import UniPoly, parse_poly

from conftest import field


def _random_bipoly(ctx, rng, max_deg=5, terms=6):
    data = {}
    for _ in range(terms):
        mono = (rng.randrange(max_deg + 1), rng.randrange(max_deg + 1))
        data[mono] = rng.randrange(ctx.q)
    return BiPoly(ctx, data)


def test_from_uni_examples():
    F7 = field(7)
    cubed = parse_poly(F7, "x^3")
    assert from_uni_in("z", cubed) == parse_bipoly(F7, "z^3")
    assert from_uni_in("x", cubed) == parse_bipoly(F7, "x^3")
    assert from_uni_in("z", UniPoly.zero(F7)).is_zero()


def test_shift_examples():
    F7 = field(7)
    sq = parse_bipoly(F7, "x^2")
    assert sq.shift("x", 1) == parse_bipoly(F7, "x^2+2*x+1")
    f = parse_bipoly(F7, "z^2*x + 3*x + 5")
    assert f.shift("x", 0) == f
    F5 = field(5)
    fifth = parse_bipoly(F5, "x^5")
    assert fifth.shift("x", 2) == parse_bipoly(F5, "x^5+2")  # Frobenius: (x+2)^5 = x^5 + 2^5


def test_shift_round_trip():
    rng = random.Random(2)
    for ctx in (field(7), field(2, 4, (1, 1, 0, 0, 1))):
        for _ in range(60):
            f = _random_bipoly(ctx, rng)
            a = rng.randrange(ctx.q)
            for var in ("x", "z"):
                assert f.shift(var, a).shift(var, ctx.neg(a)) == f


def test_top_component_examples():
    F257 = field(257)
    f5 = parse_poly(F257, "x^5")
    f1 = from_uni_in("z", f5) + from_uni_in("x", f5) - BiPoly.constant(F257, 48)
    assert f1.top_component() == parse_bipoly(F257, "z^5+x^5")
    hom = parse_bipoly(F257, "x^2 + x*z + z^2")
    assert hom.top_component() == hom
    assert parse_bipoly(F257, "x^3 + 1").top_component() == parse_bipoly(F257, "x^3")
    with pytest.raises(ZeroPolynomial):
        BiPoly.zero(F257).top_component()


def test_top_component_is_homogeneous():
    rng = random.Random(3)
    ctx = field(11)
    for _ in range(80):
        f = _random_bipoly(ctx, rng)
        if f.is_zero():
            continue
        top = f.top_component()
        d = f.total_degree
        assert top.total_degree == d
        assert all(i + j == d for i, j in top.terms)


def test_divide_exact_examples():
    F7 = field(7)
    assert parse_bipoly(F7, "z^2-x^2").divide_exact_by_z_minus_x() == parse_bipoly(F7, "z+x")
    assert parse_bipoly(F7, "z^3-x^3").divide_exact_by_z_minus_x() == parse_bipoly(
        F7, "z^2+z*x+x^2"
    )
    with pytest.raises(NotDivisible):
        parse_bipoly(F7, "z^2+x^2").divide_exact_by_z_minus_x()


def test_divide_exact_round_trip():
    rng = random.Random(5)
    for ctx in (field(7), field(2, 4, (1, 1, 0, 0, 1))):
        z_minus_x = parse_bipoly(ctx, "z-x")
        for _ in range(60):
            f = _random_bipoly(ctx, rng)
            assert (z_minus_x * f).divide_exact_by_z_minus_x() == f


def test_eval2_examples():
    F7 = field(7)
    assert parse_bipoly(F7, "z-x").eval2(3, 3) == 0
    assert BiPoly.constant(F7, 5).eval2(2, 6) == 5
    f = parse_bipoly(F7, "z^2*x + 3*z + 1")
    assert f.eval2(2, 3) == (9 * 2 + 9 + 1) % 7


def test_difference_degree_drop():
    # deg(f(x+a) - f(x)) = d - 1 whenever gcd(d, q) = 1 and a != 0
    rng = random.Random(11)
    for ctx in (field(11), field(13), field(2, 4, (1, 1, 0, 0, 1))):
        for _ in range(40):
            d = rng.randrange(2, 9)
            if d % ctx.p == 0:
                continue
            coeffs = [rng.randrange(ctx.q) for _ in range(d)] + [rng.randrange(1, ctx.q)]
            f = from_uni_in("x", UniPoly(ctx, coeffs))
            a = rng.randrange(1, ctx.q)
            assert (f.shift("x", a) - f).total_degree == d - 1


def test_compose_uni():
    F11 = field(11)
    f = parse_poly(F11, "x^3 + 2*x + 5")
    inner = parse_bipoly(F11, "x+z")
    g = compose_uni(f, inner)
    rng = random.Random(1)
    for _ in range(30):
        x, z = rng.randrange(11), rng.randrange(11)
        assert g.eval2(x, z) == f.eval((x + z) % 11)


def test_text_and_json_round_trip():
    rng = random.Random(9)
    for ctx in (field(11), field(2, 4, (1, 1, 0, 0, 1))):
        for _ in range(50):
            f = _random_bipoly(ctx, rng)
            assert parse_bipoly(ctx, format_bipoly(f)) == f or f.is_zero()
            assert bipoly_from_json(ctx, bipoly_to_json(f)) == f
