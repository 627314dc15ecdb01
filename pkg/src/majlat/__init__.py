"""Majorization lattice toolkit.

Exact-rational or float-with-tolerance computations on sorted probability
vectors: the majorization order, pairwise meet and join, infimum and
supremum of arbitrary families via Lorenz-curve envelopes, reductions for
convex polytopes and l1 balls, and optimal-common-resource resolution for
majorization-based resource theories.
"""

from .core import (
    LorenzCurve,
    MajOrdering,
    OrderedProbVector,
    bottom,
    compare,
    curve_to_vector,
    majorizes,
    make_vector,
    partial_sums,
    top,
)
from .errors import (
    AlphaMinOutOfRangeError,
    AlphaOutOfRangeError,
    BadEndpointsError,
    BlockDimensionError,
    DimensionMismatchError,
    DimensionTooLargeError,
    EmptyFamilyError,
    EmptyInputError,
    InputArityError,
    InvalidExtremalError,
    InvalidStateSpecError,
    MajlatError,
    ModeMismatchError,
    NegativeEntryError,
    NegativeProbabilityError,
    NegativeRadiusError,
    NotConcaveError,
    NotMonotoneError,
    NotNormalizedError,
    NotSortedError,
    ParseError,
    ZeroDimensionError,
)
from .lattice import (
    EnvelopeResult,
    ExtremalFamily,
    FiniteFamily,
    VectorFamily,
    family_inf,
    family_sup,
    flatten,
    join,
    join_by_envelope,
    meet,
    upper_envelope,
)
from .numeric import DEFAULT_FLOAT_TOL, Scalar, scalar_str
from .polytope import (
    Ball,
    Polytope,
    ball_vertices,
    flattest_approx,
    polytope_inf,
    polytope_sup,
    steepest_approx,
)
from .resource_theory import (
    Direction,
    ResourceTheory,
    StateSpec,
    first_component_family,
    ocr_first_component_bound,
    ocr_two_block_superposition,
    optimal_common_resource,
    state_to_vector,
    two_block_family,
)
from .svg import emit_lorenz_svg

__version__ = "0.1.0"

__all__ = [
    "AlphaMinOutOfRangeError",
    "AlphaOutOfRangeError",
    "BadEndpointsError",
    "Ball",
    "BlockDimensionError",
    "DEFAULT_FLOAT_TOL",
    "DimensionMismatchError",
    "DimensionTooLargeError",
    "Direction",
    "EmptyFamilyError",
    "EmptyInputError",
    "EnvelopeResult",
    "ExtremalFamily",
    "FiniteFamily",
    "InputArityError",
    "InvalidExtremalError",
    "InvalidStateSpecError",
    "LorenzCurve",
    "MajOrdering",
    "MajlatError",
    "ModeMismatchError",
    "NegativeEntryError",
    "NegativeProbabilityError",
    "NegativeRadiusError",
    "NotConcaveError",
    "NotMonotoneError",
    "NotNormalizedError",
    "NotSortedError",
    "OrderedProbVector",
    "ParseError",
    "Polytope",
    "ResourceTheory",
    "Scalar",
    "StateSpec",
    "VectorFamily",
    "ZeroDimensionError",
    "ball_vertices",
    "bottom",
    "compare",
    "curve_to_vector",
    "emit_lorenz_svg",
    "family_inf",
    "family_sup",
    "first_component_family",
    "flatten",
    "flattest_approx",
    "join",
    "join_by_envelope",
    "majorizes",
    "make_vector",
    "meet",
    "ocr_first_component_bound",
    "ocr_two_block_superposition",
    "optimal_common_resource",
    "partial_sums",
    "polytope_inf",
    "polytope_sup",
    "scalar_str",
    "state_to_vector",
    "steepest_approx",
    "top",
    "two_block_family",
    "upper_envelope",
]
