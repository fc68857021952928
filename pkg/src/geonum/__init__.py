"""Exact geometry of numbers for rational polytopes.

Volumes, successive minima, lattice point counts, Ehrhart polynomials and
lattice surface areas are computed over the rationals, and a catalogue of
inequality checks compares them with exact verdicts.
"""

from .ehrhart import EhrhartPolynomial, ehrhart_polynomial, lattice_surface_area, root_sum
from .gallery import BodySpec, make, parse_body, random_body, symmetral, symmetral_halfspace
from .lattice import (
    EnumerationBudgetError,
    Lattice,
    count_points,
    enumerate_points,
    facet_lattice,
    interior_is_lattice_free,
    minimal_determinants,
    polar_lattice,
)
from .minima import SuccessiveMinima, difference_minima, successive_minima
from .polytope import (
    Facet,
    Polytope,
    PolytopeError,
    centroid,
    clip,
    contains,
    contains_point,
    difference_body,
    dilate,
    from_inequalities,
    gauge,
    hull,
    intersect,
    polar_body,
    surface_area,
    translate,
    volume,
)
from .verify import (
    CHECK_IDS,
    CheckNotApplicable,
    CheckReport,
    FuzzConfig,
    cross_lower_bound,
    fuzz_campaign,
    gruenbaum_ratio,
    pyramid_identity,
    reflexive_relation,
    run_check,
    sign_sum_bound,
)

__version__ = "0.1.0"

__all__ = [
    "EhrhartPolynomial",
    "ehrhart_polynomial",
    "lattice_surface_area",
    "root_sum",
    "BodySpec",
    "make",
    "parse_body",
    "random_body",
    "symmetral",
    "symmetral_halfspace",
    "EnumerationBudgetError",
    "Lattice",
    "count_points",
    "enumerate_points",
    "facet_lattice",
    "interior_is_lattice_free",
    "minimal_determinants",
    "polar_lattice",
    "SuccessiveMinima",
    "difference_minima",
    "successive_minima",
    "Facet",
    "Polytope",
    "PolytopeError",
    "centroid",
    "clip",
    "contains",
    "contains_point",
    "difference_body",
    "dilate",
    "from_inequalities",
    "gauge",
    "hull",
    "intersect",
    "polar_body",
    "surface_area",
    "translate",
    "volume",
    "CHECK_IDS",
    "CheckNotApplicable",
    "CheckReport",
    "FuzzConfig",
    "cross_lower_bound",
    "fuzz_campaign",
    "gruenbaum_ratio",
    "pyramid_identity",
    "reflexive_relation",
    "run_check",
    "sign_sum_bound",
]
