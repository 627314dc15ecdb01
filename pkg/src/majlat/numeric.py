"""Scalar plumbing: exact rationals, or floats with one absolute tolerance.

A computation is either exact (Fraction values, tolerance 0) or float
(float values, fixed tolerance tau); the two kinds never mix inside one
value. All tolerant comparisons live here so the tie policy is uniform:
a difference within tau counts as zero.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .errors import ModeMismatchError, ParseError

Scalar = Union[Fraction, float]

DEFAULT_FLOAT_TOL = 1e-12


def parse_scalar(value: object, exact: bool) -> Scalar:
    """Coerce a string, int, Fraction, or float into the requested mode.

    Exact mode accepts decimal strings ("0.26"), ratio strings ("13/50"),
    ints, and Fractions; those conversions are lossless. Floats are
    rejected there so binary rounding cannot leak into exact results.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a scalar: {value!r}")
    if exact:
        if isinstance(value, float):
            raise ModeMismatchError(
                "float value in exact mode; pass a decimal string, int, or Fraction"
            )
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"not an exact scalar: {value!r}") from exc
    try:
        if isinstance(value, str):
            return float(Fraction(value))
        return float(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(f"not a float scalar: {value!r}") from exc


def infer_exact(values: Sequence[object]) -> bool:
    """True when no float appears; floats may not mix with exact kinds."""
    has_float = any(type(v) is float for v in values)
    if not has_float:
        return True
    if any(isinstance(v, (Fraction, str)) for v in values):
        raise ModeMismatchError("floats mixed with exact values; pick one mode")
    return False


def resolve_mode(values: Sequence[object], tol: float | None) -> tuple[bool, float]:
    """Map (raw values, requested tolerance) to (exact?, effective tolerance).

    tol None: exact unless floats appear (then the default tolerance).
    tol 0: exact required. tol > 0: float mode with that tolerance.
    """
    if tol is None:
        exact = infer_exact(values)
        return exact, 0.0 if exact else DEFAULT_FLOAT_TOL
    t = float(tol)
    if t < 0:
        raise ModeMismatchError("tolerance must be non-negative")
    if t == 0:
        return True, 0.0
    return False, t


def leq(a: Scalar, b: Scalar, tol: float) -> bool:
    """a <= b, counting a difference within tol as equality."""
    return a <= b if tol == 0 else a - b <= tol


def geq(a: Scalar, b: Scalar, tol: float) -> bool:
    return leq(b, a, tol)


def eq(a: Scalar, b: Scalar, tol: float) -> bool:
    return a == b if tol == 0 else abs(a - b) <= tol


def lt(a: Scalar, b: Scalar, tol: float) -> bool:
    """a < b by more than tol."""
    return a < b if tol == 0 else b - a > tol


def cumulative_sums(entries: Sequence[Scalar]) -> tuple[Scalar, ...]:
    """(S_0, S_1, ..., S_d) with the convention S_0 = 0."""
    acc = entries[0] * 0  # zero of the right type
    out = [acc]
    for e in entries:
        acc = acc + e
        out.append(acc)
    return tuple(out)


def scalar_str(value: Scalar) -> str:
    """Canonical text form: exact decimal when terminating, 'p/q' otherwise."""
    if isinstance(value, float):
        return repr(value)
    f = Fraction(value)
    if f < 0:
        return "-" + scalar_str(-f)
    twos = fives = 0
    rest = f.denominator
    while rest % 2 == 0:
        rest //= 2
        twos += 1
    while rest % 5 == 0:
        rest //= 5
        fives += 1
    if rest != 1:
        return f"{f.numerator}/{f.denominator}"
    scale = max(twos, fives)
    digits = f.numerator * 10**scale // f.denominator
    if scale == 0:
        return str(digits)
    text = str(digits).rjust(scale + 1, "0")
    frac = text[-scale:].rstrip("0")
    whole = text[:-scale]
    return whole if not frac else f"{whole}.{frac}"


def solve_square(
    matrix: Sequence[Sequence[Scalar]],
    rhs: Sequence[Scalar],
    *,
    exact: bool,
    pivot_tol: float = 0.0,
) -> list[Scalar] | None:
    """Solve a square linear system; None when no unique solution exists.

    Exact mode pivots on any nonzero entry and stays in rationals; float
    mode partial-pivots and treats magnitudes <= pivot_tol as zero.
    """
    n = len(matrix)
    if exact:
        aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    else:
        aug = [[float(v) for v in row] + [float(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = None
        if exact:
            for r in range(col, n):
                if aug[r][col] != 0:
                    pivot_row = r
                    break
        else:
            best = pivot_tol
            for r in range(col, n):
                mag = abs(aug[r][col])
                if mag > best:
                    best = mag
                    pivot_row = r
        if pivot_row is None:
            return None
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [v / pivot for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]
