"""c-Boomerang uniformity toolkit over finite fields.

Connectivity-table counting and uniformity bounds for arbitrary
polynomials, the bivariate counting systems behind them, Groebner-basis
machinery (Buchberger and FGLM order conversion), Newton-polytope
irreducibility certificates, Dickson polynomials and a tight-example
search with embedded regression fixtures.
"""

from . import errors
from .boomerang import (
    BctTable,
    BoomerangSystem,
    UniformityReport,
    applicable_bound,
    bct_entry,
    bct_entry_permutation_form,
    bct_table,
    build_system,
    ddt_entry,
    uniformity,
)
from .bpoly import BiPoly, compose_uni, format_bipoly, from_uni_in, parse_bipoly
from .dickson import (
    check_commutation,
    check_scaling,
    dickson,
    dickson_closed_form,
    frobenius_index_identity,
    is_permutation_dickson,
    parity_of_terms,
)
from .gf import Elt, FieldCtx, ctx_extension, ctx_prime
from .groebner import (
    DRL,
    LEX,
    GroebnerBasis,
    Staircase,
    buchberger,
    compare,
    dimension_bound_via_top_components,
    divide,
    fglm,
    lex_shape,
    s_polynomial,
    staircase,
    verify_buchberger_criterion,
)
from .polytope import (
    IrreducibilityCertificate,
    LatticePolytope,
    certify_absolutely_irreducible_difference,
    minkowski_sum,
    newton_polytope,
    point_in_triangle,
    triangle_area2,
    triangle_indecomposable,
)
from .tightness import (
    FIXTURE_NAMES,
    FixtureReport,
    SearchConfig,
    TightnessWitness,
    search,
    verify_fixture,
)
from .upoly import (
    FactorList,
    UniPoly,
    count_roots_in_extension,
    factor,
    format_poly,
    is_irreducible,
    parse_poly,
    poly_gcd,
    pow_mod,
    splitting_degree,
)

__version__ = "0.1.0"
