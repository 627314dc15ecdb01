"""Front end for majorization-based resource theories.

Maps state data (amplitudes, Schmidt weights, spectra) to sorted
probability vectors, and resolves the optimal common resource of a target
family: the family supremum where free conversion needs the source to
majorize the target (purity), the family infimum where the relation is
reversed (entanglement, coherence). Two continuously parametrized target
families from coherence come with closed forms and exact extremal
descriptors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .core import OrderedProbVector, make_vector
from .errors import (
    AlphaMinOutOfRangeError,
    AlphaOutOfRangeError,
    BlockDimensionError,
    InvalidStateSpecError,
    NegativeProbabilityError,
    NotNormalizedError,
    ZeroDimensionError,
)
from .lattice import ExtremalFamily, as_family, family_inf, family_sup
from .numeric import Scalar, cumulative_sums, eq, geq, leq, lt, parse_scalar, resolve_mode


class Direction(Enum):
    """Which way free convertibility points relative to majorization."""

    DIRECT = "direct"  # source must majorize target
    REVERSED = "reversed"  # target must majorize source


class ResourceTheory(Enum):
    ENTANGLEMENT = "entanglement"
    COHERENCE = "coherence"
    PURITY = "purity"

    @property
    def direction(self) -> Direction:
        return Direction.DIRECT if self is ResourceTheory.PURITY else Direction.REVERSED


@dataclass(frozen=True)
class StateSpec:
    """State data: exactly one of amplitudes, schmidt_probs, spectrum.

    Amplitudes may be real scalars, complex numbers, or (re, im) pairs;
    moduli squared are taken and phases dropped. Schmidt weights and
    spectra are probabilities already.
    """

    amplitudes: tuple | None = None
    schmidt_probs: tuple | None = None
    spectrum: tuple | None = None

    def __post_init__(self):
        given = [f for f in ("amplitudes", "schmidt_probs", "spectrum") if getattr(self, f) is not None]
        if len(given) != 1:
            raise InvalidStateSpecError(f"exactly one data field required, got {given or 'none'}")
        field = given[0]
        object.__setattr__(self, field, tuple(getattr(self, field)))


def _amplitude_components(amplitudes: Sequence[object]) -> list[object]:
    """Flatten amplitudes into scalar components for mode inference."""
    parts: list[object] = []
    for a in amplitudes:
        if isinstance(a, complex):
            parts.append(float(a.real))
            parts.append(float(a.imag))
        elif isinstance(a, (tuple, list)):
            if len(a) != 2:
                raise InvalidStateSpecError(f"amplitude pair needs (re, im), got {a!r}")
            parts.extend(a)
        else:
            parts.append(a)
    return parts


def _squared_modulus(a: object, exact: bool) -> Scalar:
    if isinstance(a, complex):
        re, im = parse_scalar(a.real, exact), parse_scalar(a.imag, exact)
    elif isinstance(a, (tuple, list)):
        re, im = parse_scalar(a[0], exact), parse_scalar(a[1], exact)
    else:
        value = parse_scalar(a, exact)
        return value * value
    return re * re + im * im


def state_to_vector(spec: StateSpec, theory: ResourceTheory, *, tol: float | None = None) -> OrderedProbVector:
    """Sorted probability vector of a state under the given theory.

    Coherence and entanglement accept amplitudes (entanglement also takes
    Schmidt weights directly); purity takes a spectrum. The result is the
    squared moduli where applicable, sorted non-increasing.
    """
    if spec.amplitudes is not None:
        if theory is ResourceTheory.PURITY:
            raise InvalidStateSpecError("purity takes a spectrum, not amplitudes")
        exact, tol_eff = resolve_mode(_amplitude_components(spec.amplitudes), tol)
        probs = [_squared_modulus(a, exact) for a in spec.amplitudes]
    else:
        if spec.schmidt_probs is not None:
            if theory is not ResourceTheory.ENTANGLEMENT:
                raise InvalidStateSpecError("Schmidt weights belong to entanglement")
            raw = spec.schmidt_probs
        else:
            if theory is not ResourceTheory.PURITY:
                raise InvalidStateSpecError("a spectrum belongs to purity")
            raw = spec.spectrum
        exact, tol_eff = resolve_mode(raw, tol)
        probs = [parse_scalar(p, exact) for p in raw]
        zero = probs[0] * 0
        for p in probs:
            if not geq(p, zero, tol_eff):
                raise NegativeProbabilityError(f"negative probability {p!r}")
    total = sum(probs)
    if not eq(total, probs[0] * 0 + 1, tol_eff * len(probs)):
        raise NotNormalizedError(f"probabilities sum to {total!r}, expected 1")
    return make_vector(probs, sort=True, tol=None if exact else tol_eff)


def optimal_common_resource(family, theory: ResourceTheory) -> OrderedProbVector:
    """Vector of an optimal common resource for the target family.

    Direct theories (purity) need the supremum: it majorizes every
    target. Reversed theories (entanglement, coherence) need the infimum:
    every target majorizes it. Any state mapping to the returned vector
    is an optimal common resource.
    """
    family = as_family(family)
    if theory.direction is Direction.DIRECT:
        return family_sup(family)
    return family_inf(family)


def _check_alpha(alpha: object, d: int, tol: float | None):
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ZeroDimensionError(f"dimension must be a positive integer, got {d!r}")
    exact, tol_eff = resolve_mode((alpha,), tol)
    a = parse_scalar(alpha, exact)
    zero = a * 0
    one = zero + 1
    floor = Fraction(1, d) if exact else 1.0 / d
    if not (lt(zero, a, tol_eff) and leq(a, one, tol_eff) and lt(floor, a * a, tol_eff)):
        raise AlphaOutOfRangeError(f"need 1/sqrt({d}) < alpha <= 1, got {a!r}")
    return a * a, exact, tol_eff


def ocr_first_component_bound(alpha, d: int, *, tol: float | None = None) -> OrderedProbVector:
    """Optimal common resource for targets whose largest amplitude is >= alpha.

    The infimum of {x sorted : x_1 >= alpha^2} puts alpha^2 first and
    spreads the remainder uniformly.
    """
    a2, _, tol_eff = _check_alpha(alpha, d, tol)
    tail = (1 - a2) / (d - 1)  # d >= 2 is forced by alpha^2 > 1/d with alpha <= 1
    return OrderedProbVector((a2,) + (tail,) * (d - 1), tol_eff)


def first_component_family(alpha, d: int, *, tol: float | None = None) -> ExtremalFamily:
    """Prefix-sum extrema of {x sorted : x_1 >= alpha^2}.

    The infima trace the flat-tail member with first entry alpha^2; the
    suprema are 1 from k = 1 on (the point mass belongs to the family).
    """
    a2, exact, tol_eff = _check_alpha(alpha, d, tol)
    tail = (1 - a2) / (d - 1)
    lower = (a2 * 0,) + tuple(a2 + tail * k for k in range(d))
    one = a2 * 0 + 1
    upper = (a2 * 0,) + (one,) * d
    return ExtremalFamily(d, lower, upper, 0.0 if exact else tol_eff)


def _check_blocks(d1: object, d: object, alpha_min_sq, tol: float | None):
    for value in (d1, d):
        if not isinstance(value, int) or isinstance(value, bool):
            raise BlockDimensionError(f"block sizes must be integers, got {value!r}")
    if not 1 <= d1 < d:
        raise BlockDimensionError(f"need 1 <= d1 < d, got d1={d1}, d={d}")
    exact, tol_eff = resolve_mode((alpha_min_sq,), tol)
    q = parse_scalar(alpha_min_sq, exact)
    floor = Fraction(d1, d) if exact else d1 / d
    one = q * 0 + 1
    if not (lt(floor, q, tol_eff) and leq(q, one, tol_eff)):
        raise AlphaMinOutOfRangeError(f"need {d1}/{d} < alpha_min_sq <= 1, got {q!r}")
    return q, exact, tol_eff


def ocr_two_block_superposition(d1: int, d: int, alpha_min_sq, *, tol: float | None = None) -> OrderedProbVector:
    """Optimal common resource for two-block superposition targets.

    Targets spread weight a uniformly over the first d1 basis states and
    1 - a over the rest, with a ranging over [alpha_min_sq, 1]; the
    infimum is the member at a = alpha_min_sq.
    """
    q, _, tol_eff = _check_blocks(d1, d, alpha_min_sq, tol)
    head = q / d1
    tail = (1 - q) / (d - d1)  # head >= tail exactly because q > d1/d
    return OrderedProbVector((head,) * d1 + (tail,) * (d - d1), tol_eff)


def two_block_family(d1: int, d: int, alpha_min_sq, *, tol: float | None = None) -> ExtremalFamily:
    """Prefix-sum extrema of the two-block superposition targets.

    Every S_k is non-decreasing in the block weight a, so the infima sit
    at a = alpha_min_sq and the suprema at a = 1.
    """
    q, exact, tol_eff = _check_blocks(d1, d, alpha_min_sq, tol)
    head = q / d1
    tail = (1 - q) / (d - d1)
    lower = cumulative_sums((head,) * d1 + (tail,) * (d - d1))
    one = q * 0 + 1
    upper = tuple(min(Fraction(k, d1) if exact else k / d1, one) for k in range(d + 1))
    return ExtremalFamily(d, lower, upper, 0.0 if exact else tol_eff)
