"""Newton polytopes in Z^2 and the triangle irreducibility certificate.

Exact integer geometry only: monotone-chain convex hulls, Minkowski sums,
doubled triangle areas, the area-identity point-in-triangle test and the
gcd criterion for integral indecomposability of triangles. The exponent
pair (i, j) of a bivariate term is used directly as the lattice point
(u, v); this is the single place where polynomial exponents are read as
plane coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bpoly import BiPoly, compose_uni, from_uni_in
from .errors import (
    CertificateError,
    DegenerateTriangle,
    Inapplicable,
    ZeroPolynomial,
)
from .gf import Elt
from .upoly import UniPoly

Point = tuple  # (u, v) with non-negative integer entries


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> tuple:
    """Hull vertices in counterclockwise order, starting at the
    lexicographic minimum; collinear interior points are dropped."""
    pts = sorted(set((int(u), int(v)) for u, v in points))
    if not pts:
        raise ValueError("empty point set")
    if len(pts) == 1:
        return (pts[0],)
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        hull = hull[:1]
    return tuple(hull)


@dataclass(frozen=True)
class LatticePolytope:
    """Canonical hull vertex list (CCW from the lexicographic minimum)."""

    vertices: tuple

    @classmethod
    def from_points(cls, points) -> "LatticePolytope":
        return cls(convex_hull(points))

    def vertex_set(self):
        return frozenset(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def newton_polytope(f: BiPoly) -> LatticePolytope:
    """Convex hull of the exponent vectors of the nonzero terms."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polytope")
    return LatticePolytope.from_points(f.terms.keys())


def minkowski_sum(a: LatticePolytope, b: LatticePolytope) -> LatticePolytope:
    """Hull of all pairwise vertex sums."""
    pts = [(u1 + u2, v1 + v2) for (u1, v1) in a.vertices for (u2, v2) in b.vertices]
    return LatticePolytope.from_points(pts)


def triangle_area2(a: Point, b: Point, c: Point) -> int:
    """Twice the triangle area: |det| of the spanning edge vectors."""
    return abs(_cross(a, b, c))


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Area identity test: p is inside or on the boundary of abc."""
    whole = triangle_area2(a, b, c)
    if whole == 0:
        raise DegenerateTriangle("the three reference points are collinear")
    parts = (
        triangle_area2(p, b, c)
        + triangle_area2(a, p, c)
        + triangle_area2(a, b, p)
    )
    return parts == whole


def triangle_indecomposable(a: Point, b: Point, c: Point) -> bool:
    """gcd criterion: the triangle is not a Minkowski sum of smaller
    integral polytopes iff the four edge-difference coordinates are
    coprime."""
    if triangle_area2(a, b, c) == 0:
        raise DegenerateTriangle("the three points are collinear")
    return math.gcd(a[0] - b[0], a[1] - b[1], a[0] - c[0], a[1] - c[1]) == 1


@dataclass(frozen=True)
class IrreducibilityCertificate:
    """Machine-checkable evidence that f(x) - f(y) + a is absolutely
    irreducible: the Newton polytope of the sheared polynomial together
    with the gcd witness and the three anchor coefficients."""

    vertices: tuple
    gcd_witness: tuple  # (du1, dv1, du2, dv2)
    anchors: dict  # {"const": Elt, "xd": Elt, "xyd1": Elt}

    def to_json(self, ctx):
        return {
            "vertices": [list(v) for v in self.vertices],
            "gcd_witness": list(self.gcd_witness),
            "anchors": {k: ctx.elt_to_json(v) for k, v in self.anchors.items()},
        }


def certify_absolutely_irreducible_difference(f: UniPoly, a: Elt) -> IrreducibilityCertificate:
    """Polytope certificate for the difference polynomial f(x) - f(y) + a.

    After the shear x -> x + y the support lies in the triangle with
    vertices (0,0), (1, d-1), (d, 0); the three corners carry the
    coefficients a, lc(f) and d * lc(f), and the triangle passes the gcd
    indecomposability test. Requires d >= 2, a != 0 and gcd(d, p) = 1,
    otherwise Inapplicable is raised.
    """
    ctx = f.ctx
    d = f.degree
    if d < 2:
        raise Inapplicable("the difference certificate needs degree >= 2")
    if a == 0:
        raise Inapplicable("the constant offset must be nonzero")
    if d % ctx.p == 0:
        raise Inapplicable("degree shares a factor with the characteristic")
    # The constant term cancels in f(x) - f(y); normalize it away so the
    # remaining constant of the sheared polynomial is exactly a.
    core = f - UniPoly.constant(ctx, f.coeff(0))
    x_plus_z = BiPoly(ctx, {(1, 0): 1, (0, 1): 1})
    sheared = (
        compose_uni(core, x_plus_z)
        - from_uni_in("z", core)
        + BiPoly.constant(ctx, a)
    )
    triangle = ((0, 0), (1, d - 1), (d, 0))
    hull = newton_polytope(sheared)
    if hull.vertex_set() != frozenset(triangle):
        raise CertificateError(f"unexpected Newton polytope {hull.vertices}")
    anchors = {
        "const": sheared.coeff((0, 0)),
        "xd": sheared.coeff((d, 0)),
        "xyd1": sheared.coeff((1, d - 1)),
    }
    if anchors["const"] != a or not anchors["xd"] or not anchors["xyd1"]:
        raise CertificateError(f"missing anchor coefficient: {anchors}")
    if not triangle_indecomposable(*triangle):
        raise CertificateError("triangle unexpectedly decomposable")
    witness = (1 - 0, (d - 1) - 0, d - 0, 0 - 0)
    return IrreducibilityCertificate(
        vertices=hull.vertices, gcd_witness=witness, anchors=anchors
    )
