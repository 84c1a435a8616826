"""Gröbner bases over the Weyl algebra and Bernstein polynomials of D-modules."""

from .bernstein import (
    BernsteinReport,
    ModulePresentation,
    add_redundant_generator,
    bernstein_polynomial,
    invariants,
    krull_report,
    leading_exponent_sets,
)
from .groebner import DivisionResult, buchberger, is_member, reduce_full, reduce_step, s_polynomial
from .module import FreeModule, ModuleElement, ModuleMonomial, act, compare, divides, lcm_mono, leading, quotient
from .notation import (
    ParseError,
    format_binomial,
    format_element,
    format_monomial_poly,
    format_weyl,
    parse,
    parse_element,
    parse_weyl,
)
from .numpoly import (
    NumericalPolynomial,
    PointSet,
    count_v_points,
    forward_difference,
    kolchin_polynomial,
    kolchin_threshold,
    minimal_points,
)
from .oracle import DimensionTable, build_table, verify_presentation
from .weyl import WeylElement, WeylMonomial, apply, bernstein_degree, weyl_mul

__version__ = "0.1.0"
