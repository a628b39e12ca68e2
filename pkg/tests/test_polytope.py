import random
from itertools import combinations, product
from math import gcd

import pytest

from cboomerang.bpoly import BiPoly, compose_uni, from_uni_in, parse_bipoly
from cboomerang.errors import CtxMismatch, DegenerateTriangle, Inapplicable
from cboomerang.polytope import (
    LatticePolytope,
    certify_absolutely_irreducible_difference,
    convex_hull,
    minkowski_sum,
    newton_polytope,
    point_in_triangle,
    triangle_area2,
    triangle_indecomposable,
)
from cboomerang.upoly import UniPoly, is_irreducible, parse_poly

from conftest import field


def _random_bipoly(ctx, rng, max_deg=4, terms=5):
    data = {}
    for _ in range(rng.randrange(1, terms)):
        data[(rng.randrange(max_deg + 1), rng.randrange(max_deg + 1))] = rng.randrange(1, ctx.q)
    return BiPoly(ctx, data)


def test_convex_hull_basics():
    assert convex_hull([(0, 0)]) == ((0, 0),)
    assert convex_hull([(0, 0), (2, 0), (1, 0)]) == ((0, 0), (2, 0))
    hull = convex_hull([(0, 0), (2, 0), (0, 2), (1, 1), (2, 2)])
    assert set(hull) == {(0, 0), (2, 0), (2, 2), (0, 2)}
    assert hull[0] == (0, 0)  # canonical start at the lexicographic minimum


def test_newton_polytope_examples():
    F11 = field(11)
    f = parse_poly(F11, "x^7")
    sheared = compose_uni(f, parse_bipoly(F11, "x+z")) - from_uni_in("z", f) + BiPoly.constant(F11, 3)
    assert newton_polytope(sheared).vertex_set() == frozenset({(0, 0), (1, 6), (7, 0)})
    assert newton_polytope(parse_bipoly(F11, "x*z")).vertices == ((1, 1),)
    assert newton_polytope(parse_bipoly(F11, "1 + x + z")).vertex_set() == frozenset(
        {(0, 0), (1, 0), (0, 1)}
    )


def test_minkowski_sum_examples():
    a = LatticePolytope.from_points([(0, 0), (1, 2), (3, 0)])
    origin = LatticePolytope.from_points([(0, 0)])
    assert minkowski_sum(a, origin) == a
    seg_x = LatticePolytope.from_points([(0, 0), (1, 0)])
    seg_z = LatticePolytope.from_points([(0, 0), (0, 1)])
    square = minkowski_sum(seg_x, seg_z)
    assert square.vertex_set() == frozenset({(0, 0), (1, 0), (1, 1), (0, 1)})


def test_minkowski_identity_on_products():
    rng = random.Random(21)
    for ctx in (field(7), field(11)):
        for _ in range(100):
            g = _random_bipoly(ctx, rng)
            h = _random_bipoly(ctx, rng)
            prod = g * h
            if prod.is_zero():
                continue
            assert newton_polytope(prod) == minkowski_sum(newton_polytope(g), newton_polytope(h))


def test_triangle_area2_examples():
    assert triangle_area2((0, 0), (7, 0), (1, 6)) == 42  # d(d-1) for d = 7
    assert triangle_area2((0, 0), (1, 1), (2, 2)) == 0
    assert triangle_area2((0, 0), (1, 0), (0, 1)) == 1


def test_point_in_triangle_examples():
    a, b, c = (0, 0), (1, 6), (7, 0)
    for i1 in range(1, 8):
        for i2 in range(0, 8 - i1):
            if i1 + i2 >= 2:
                assert point_in_triangle((i1, i2), a, b, c)
    assert point_in_triangle(a, a, b, c)  # vertices count as inside
    assert not point_in_triangle((8, 8), a, b, c)
    assert not point_in_triangle((0, 2), a, b, c)
    with pytest.raises(DegenerateTriangle):
        point_in_triangle((0, 0), (0, 0), (1, 1), (2, 2))


def test_triangle_indecomposable_examples():
    for d in range(2, 40):
        assert triangle_indecomposable((0, 0), (1, d - 1), (d, 0))
    assert not triangle_indecomposable((0, 0), (0, 2), (2, 0))
    assert triangle_indecomposable((0, 0), (0, 1), (1, 0))
    with pytest.raises(DegenerateTriangle):
        triangle_indecomposable((0, 0), (1, 1), (3, 3))


def test_decomposable_triangle_is_a_sum():
    unit = LatticePolytope.from_points([(0, 0), (0, 1), (1, 0)])
    doubled = minkowski_sum(unit, unit)
    assert doubled.vertex_set() == frozenset({(0, 0), (0, 2), (2, 0)})


def _brute_force_decomposable(a, b, c):
    """Edge-subdivision search: a polygon is a Minkowski sum iff its edge
    multiset splits into two closed, non-trivial sub-collections; for a
    triangle that means integer sub-lengths k_i of the three edges with
    sum k_i * primitive_i = 0."""
    edges = [
        (b[0] - a[0], b[1] - a[1]),
        (c[0] - b[0], c[1] - b[1]),
        (a[0] - c[0], a[1] - c[1]),
    ]
    prims = []
    for du, dv in edges:
        g = gcd(du, dv)
        prims.append(((du // g, dv // g), g))
    for ks in product(*(range(length + 1) for _, length in prims)):
        if all(k == 0 for k in ks):
            continue
        if all(k == length for k, (_, length) in zip(ks, prims)):
            continue
        sx = sum(k * p[0] for k, (p, _) in zip(ks, prims))
        sy = sum(k * p[1] for k, (p, _) in zip(ks, prims))
        if sx == 0 and sy == 0:
            return True
    return False


def test_indecomposability_matches_brute_force_in_box():
    pts = [(u, v) for u in range(6) for v in range(6)]
    checked = 0
    for a, b, c in combinations(pts, 3):
        if triangle_area2(a, b, c) == 0:
            continue
        assert triangle_indecomposable(a, b, c) == (not _brute_force_decomposable(a, b, c))
        checked += 1
    assert checked > 1000


def test_certificate_examples():
    F11 = field(11)
    cert = certify_absolutely_irreducible_difference(parse_poly(F11, "x^7"), 3)
    assert set(cert.vertices) == {(0, 0), (1, 6), (7, 0)}
    assert gcd(*cert.gcd_witness) == 1
    assert cert.anchors["const"] == 3
    assert cert.anchors["xyd1"] == 7

    F5 = field(5)
    with pytest.raises(Inapplicable):
        certify_absolutely_irreducible_difference(parse_poly(F5, "x^5"), 1)
    with pytest.raises(Inapplicable):
        certify_absolutely_irreducible_difference(parse_poly(F11, "x^7"), 0)

    cert2 = certify_absolutely_irreducible_difference(parse_poly(F11, "x^2"), 1)
    assert set(cert2.vertices) == {(0, 0), (1, 1), (2, 0)}


def test_certificate_constant_term_normalized():
    # the constant term of f cancels in the difference; the certificate
    # must not be confused by it
    F13 = field(13)
    cert = certify_absolutely_irreducible_difference(parse_poly(F13, "x^3 + 7"), 2)
    assert cert.anchors["const"] == 2


def test_certificate_json_schema():
    F11 = field(11)
    cert = certify_absolutely_irreducible_difference(parse_poly(F11, "x^4+x"), 5)
    data = cert.to_json(F11)
    assert set(data) == {"vertices", "gcd_witness", "anchors"}
    assert set(data["anchors"]) == {"const", "xd", "xyd1"}


def _line_section(f, a, params, ctx):
    """Univariate restriction of f(x) - f(y) + a along a random line."""
    x0, u, y0, v = params
    t_line_x = UniPoly(ctx, (x0, u))
    t_line_y = UniPoly(ctx, (y0, v))
    return f.compose(t_line_x) - f.compose(t_line_y) + UniPoly.constant(ctx, a)


def test_certified_difference_has_irreducible_sections():
    """Heuristic cross-check of absolute irreducibility.

    If f(x) - f(y) + a factored, every degree-preserving line section
    would factor too; finding one irreducible section proves bivariate
    irreducibility over F_q. Demand a hit within 64 random lines for at
    least 95 percent of the sampled instances.
    """
    rng = random.Random(77)
    hits = 0
    samples = 0
    for ctx in (field(11), field(13)):
        for _ in range(20):
            d = rng.choice([k for k in range(2, 8) if k % ctx.p])
            coeffs = [rng.randrange(ctx.q) for _ in range(d)] + [rng.randrange(1, ctx.q)]
            f = UniPoly(ctx, coeffs)
            a = rng.randrange(1, ctx.q)
            certify_absolutely_irreducible_difference(f, a)
            samples += 1
            for _ in range(64):
                params = [rng.randrange(ctx.q) for _ in range(4)]
                section = _line_section(f, a, params, ctx)
                if section.degree == d and is_irreducible(section):
                    hits += 1
                    break
    assert hits >= 0.95 * samples
