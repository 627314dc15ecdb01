"""Ordered probability vectors, Lorenz curves, and the majorization order.

Vectors live in the ordered simplex: entries non-increasing, non-negative,
summing to one. Majorization compares prefix sums; geometrically, x
majorizes y exactly when the Lorenz curve of x lies nowhere below that
of y. Every type here is an immutable value and every operation a pure
function, so everything is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BadEndpointsError,
    DimensionMismatchError,
    EmptyInputError,
    ModeMismatchError,
    NegativeEntryError,
    NotConcaveError,
    NotMonotoneError,
    NotNormalizedError,
    NotSortedError,
    ZeroDimensionError,
)
from .numeric import (
    DEFAULT_FLOAT_TOL,
    Scalar,
    cumulative_sums,
    eq,
    geq,
    parse_scalar,
    resolve_mode,
    scalar_str,
)


class MajOrdering(Enum):
    """Outcome of a majorization comparison."""

    MAJORIZES = "majorizes"
    MAJORIZED_BY = "majorized_by"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _coerce_homogeneous(values: Sequence[object], tol: float) -> tuple[tuple[Scalar, ...], float]:
    """Shared entry coercion: all Fraction (tol 0) or all float (tol > 0)."""
    if any(isinstance(v, bool) for v in values):
        raise ModeMismatchError("bool is not a scalar entry")
    has_float = any(type(v) is float for v in values)
    has_fraction = any(isinstance(v, Fraction) for v in values)
    if has_float and has_fraction:
        raise ModeMismatchError("exact and float entries mixed")
    tol = float(tol)
    if tol < 0:
        raise ModeMismatchError("tolerance must be non-negative")
    if has_float and tol == 0:
        raise ModeMismatchError("float entries need a positive tolerance")
    if not has_float and tol != 0:
        raise ModeMismatchError("exact entries use zero tolerance")
    kind = float if has_float else Fraction
    try:
        return tuple(kind(v) for v in values), tol
    except (TypeError, ValueError) as exc:
        raise ModeMismatchError(f"unsupported entry: {exc}") from exc


@dataclass(frozen=True)
class OrderedProbVector:
    """Probability vector with non-increasing entries.

    Entries are all Fractions (exact mode, tol == 0) or all floats (float
    mode, tol > 0); downstream comparisons treat differences within tol
    as equality.
    """

    entries: tuple[Scalar, ...]
    tol: float = 0.0

    def __post_init__(self):
        if not self.entries:
            raise EmptyInputError("a probability vector needs at least one entry")
        entries, tol = _coerce_homogeneous(tuple(self.entries), self.tol)
        zero = entries[0] * 0
        for e in entries:
            if not geq(e, zero, tol):
                raise NegativeEntryError(f"negative entry {e!r}")
        for a, b in zip(entries, entries[1:]):
            if not geq(a, b, tol):
                raise NotSortedError(f"entries increase: {a!r} < {b!r}")
        total = sum(entries)
        if not eq(total, zero + 1, tol * len(entries)):
            raise NotNormalizedError(f"entries sum to {total!r}, expected 1")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "tol", tol)

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def is_exact(self) -> bool:
        return self.tol == 0

    def prefix_sums(self) -> tuple[Scalar, ...]:
        return cumulative_sums(self.entries)

    def to_float(self, tol: float = DEFAULT_FLOAT_TOL) -> "OrderedProbVector":
        """Float-mode copy; the inverse direction needs a fresh exact parse."""
        return OrderedProbVector(tuple(float(e) for e in self.entries), tol)

    def __str__(self) -> str:
        return "[" + ", ".join(scalar_str(e) for e in self.entries) + "]"


@dataclass(frozen=True)
class LorenzCurve:
    """Cumulative values (S_0 = 0, ..., S_d = 1) of a sorted vector.

    The curve itself is the piecewise-linear interpolation through the
    integer points; it is non-decreasing and concave by invariant.
    """

    values: tuple[Scalar, ...]
    tol: float = 0.0

    def __post_init__(self):
        if len(self.values) < 2:
            raise BadEndpointsError("need cumulative values S_0..S_d with d >= 1")
        values, tol = _coerce_homogeneous(tuple(self.values), self.tol)
        d = len(values) - 1
        zero = values[0] * 0
        if not eq(values[0], zero, tol):
            raise BadEndpointsError(f"S_0 must be 0, got {values[0]!r}")
        if not eq(values[-1], zero + 1, tol * d):
            raise BadEndpointsError(f"S_d must be 1, got {values[-1]!r}")
        for a, b in zip(values, values[1:]):
            if not geq(b, a, tol):
                raise NotMonotoneError(f"cumulative values decrease: {a!r} > {b!r}")
        for k in range(1, d):
            if not geq(values[k], (values[k - 1] + values[k + 1]) / 2, tol):
                raise NotConcaveError(f"concavity fails at index {k}")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "tol", tol)

    @property
    def d(self) -> int:
        return len(self.values) - 1

    @property
    def points(self) -> tuple[tuple[int, Scalar], ...]:
        return tuple(enumerate(self.values))

    def value_at(self, omega) -> Scalar:
        """Linear interpolation at any abscissa in [0, d]."""
        if omega < 0 or omega > self.d:
            raise ValueError(f"abscissa {omega!r} outside [0, {self.d}]")
        k = int(omega)
        if k == self.d:
            return self.values[k]
        return self.values[k] + (self.values[k + 1] - self.values[k]) * (omega - k)


def make_vector(
    raw: Iterable[object],
    *,
    normalize: bool = False,
    sort: bool = False,
    tol: float | None = None,
) -> OrderedProbVector:
    """Build a validated vector from scalars, decimal strings, or ratios.

    With normalize, entries are rescaled to unit sum; with sort, they are
    reordered non-increasing. Without the flags the input must already
    satisfy the corresponding invariant. Mode is inferred from the entry
    types unless tol forces it (0 exact, positive float).
    """
    values = list(raw)
    if not values:
        raise EmptyInputError("no entries given")
    exact, tol_eff = resolve_mode(values, tol)
    entries = [parse_scalar(v, exact) for v in values]
    zero = entries[0] * 0
    for e in entries:
        if not geq(e, zero, tol_eff):
            raise NegativeEntryError(f"negative entry {e!r}")
    if normalize:
        total = sum(entries)
        if not total > 0:
            raise NotNormalizedError("cannot normalize a zero-sum vector")
        entries = [e / total for e in entries]
    if sort:
        entries.sort(reverse=True)
    return OrderedProbVector(tuple(entries), tol_eff)


def _check_dimension(d: object) -> int:
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ZeroDimensionError(f"dimension must be a positive integer, got {d!r}")
    return d


def top(d: int, *, tol: float | None = None) -> OrderedProbVector:
    """Point mass [1, 0, ..., 0], the greatest element of dimension d."""
    _check_dimension(d)
    exact, tol_eff = resolve_mode((), tol)
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    return OrderedProbVector((one,) + (zero,) * (d - 1), tol_eff)


def bottom(d: int, *, tol: float | None = None) -> OrderedProbVector:
    """Uniform vector [1/d, ..., 1/d], the least element of dimension d."""
    _check_dimension(d)
    exact, tol_eff = resolve_mode((), tol)
    share = Fraction(1, d) if exact else 1.0 / d
    return OrderedProbVector((share,) * d, tol_eff)


def partial_sums(x: OrderedProbVector) -> LorenzCurve:
    """Lorenz curve of x: the points (k, S_k) for k = 0..d."""
    return LorenzCurve(cumulative_sums(x.entries), x.tol)


def curve_to_vector(curve) -> OrderedProbVector:
    """Finite differences of a Lorenz curve; inverse of partial_sums.

    Accepts a LorenzCurve or a raw cumulative sequence (which is then
    validated, raising BadEndpoints/NotMonotone/NotConcave as needed).
    """
    if not isinstance(curve, LorenzCurve):
        curve = LorenzCurve(tuple(curve))
    vals = curve.values
    return OrderedProbVector(tuple(vals[k + 1] - vals[k] for k in range(curve.d)), curve.tol)


def pair_tolerance(x: OrderedProbVector, y: OrderedProbVector) -> float:
    """Common tolerance of two operands; rejects mode or dimension clashes."""
    if x.d != y.d:
        raise DimensionMismatchError(f"dimensions differ: {x.d} vs {y.d}")
    if x.is_exact != y.is_exact:
        raise ModeMismatchError("cannot combine exact and float vectors")
    return max(x.tol, y.tol)


def compare(x: OrderedProbVector, y: OrderedProbVector) -> MajOrdering:
    """Majorization comparison via prefix-sum dominance at k = 1..d-1.

    The k = d sums agree for probability vectors, so they never decide.
    """
    tol = pair_tolerance(x, y)
    sx = x.prefix_sums()
    sy = y.prefix_sums()
    x_dominates = all(geq(sx[k], sy[k], tol) for k in range(1, x.d))
    y_dominates = all(geq(sy[k], sx[k], tol) for k in range(1, x.d))
    if x_dominates and y_dominates:
        return MajOrdering.EQUAL
    if x_dominates:
        return MajOrdering.MAJORIZES
    if y_dominates:
        return MajOrdering.MAJORIZED_BY
    return MajOrdering.INCOMPARABLE


def majorizes(x: OrderedProbVector, y: OrderedProbVector) -> bool:
    """Weak dominance: x majorizes y or equals it."""
    return compare(x, y) in (MajOrdering.MAJORIZES, MajOrdering.EQUAL)
