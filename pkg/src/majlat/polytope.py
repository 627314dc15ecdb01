"""Convex polytopes in the ordered simplex, l1 balls, and their lattice bounds.

Prefix sums of any hull point are convex combinations of vertex prefix
sums, so the infimum/supremum of a whole polytope equals the family
infimum/supremum of its vertex list. The l1 ball around a sorted vector
(clipped to the ordered simplex) is such a polytope; enumerating its
vertices reduces the steepest/flattest approximate-majorization bounds to
the same vertex fold.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import OrderedProbVector
from .errors import DimensionTooLargeError, EmptyFamilyError, NegativeRadiusError
from .lattice import FiniteFamily, family_inf, family_sup
from .numeric import Scalar, geq, leq, parse_scalar, solve_square


def _l1(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    return sum(abs(u - v) for u, v in zip(a, b))


@dataclass(frozen=True)
class Polytope:
    """Convex polytope given by vertices, deduplicated and canonically ordered."""

    vertices: tuple[OrderedProbVector, ...]

    def __post_init__(self):
        members = FiniteFamily(tuple(self.vertices)).members  # validates d and mode
        tol = max(m.tol for m in members)
        unique: list[OrderedProbVector] = []
        for v in members:
            duplicate = any(
                all(abs(a - b) <= tol for a, b in zip(v.entries, u.entries)) if tol else v.entries == u.entries
                for u in unique
            )
            if not duplicate:
                unique.append(v)
        unique.sort(key=lambda v: v.entries)
        object.__setattr__(self, "vertices", tuple(unique))

    @property
    def d(self) -> int:
        return self.vertices[0].d

    @property
    def tol(self) -> float:
        return max(v.tol for v in self.vertices)


@dataclass(frozen=True)
class Ball:
    """l1 ball around a sorted vector, implicitly clipped to the ordered simplex."""

    center: OrderedProbVector
    radius: Scalar

    def __post_init__(self):
        radius = parse_scalar(self.radius, self.center.is_exact)
        if radius < 0:
            raise NegativeRadiusError(f"radius must be non-negative, got {radius!r}")
        object.__setattr__(self, "radius", radius)


def polytope_inf(p: Polytope) -> OrderedProbVector:
    """Greatest lower bound of the whole hull; the fold over its vertices.

    The result need not belong to the polytope.
    """
    return family_inf(FiniteFamily(p.vertices))


def polytope_sup(p: Polytope) -> OrderedProbVector:
    """Least upper bound of the whole hull; the fold over its vertices."""
    return family_sup(FiniteFamily(p.vertices))


def ball_vertices(ball: Ball, *, max_dimension: int = 10) -> Polytope:
    """All vertices of {x in the ordered simplex : ||x - center||_1 <= radius}.

    Candidates are solutions of square active-constraint systems on the
    unit-sum hyperplane: one l1 facet (sign pattern s, s.(x - center) =
    radius) plus d-2 further tight constraints drawn from coordinate ties
    with the center, ordering facets, and positivity; plus the simplex
    corners for the case where the ball constraint is slack. Several
    tight l1 facets at one point are equivalent to one facet plus
    coordinate ties, so the sweep reaches every vertex; constant sign
    patterns are pruned because they are never tight for a positive
    radius. Every solution is re-checked against all constraints and
    deduplicated. Exact mode stays entirely in rationals.

    Cost grows combinatorially with dimension (fine up to d around 6,
    heavy beyond), hence the configurable cap.

    Raises:
        DimensionTooLargeError: when the center dimension exceeds the cap.
    """
    center = ball.center
    d = center.d
    if d > max_dimension:
        raise DimensionTooLargeError(f"dimension {d} above enumeration cap {max_dimension}")
    tol = center.tol
    exact = center.is_exact
    eps = ball.radius
    if eps == 0 or (not exact and eps <= tol):
        return Polytope((center,))
    x0 = center.entries
    zero = x0[0] * 0
    candidates: list[tuple[Scalar, ...]] = []

    for k in range(1, d + 1):
        share = Fraction(1, k) if exact else 1.0 / k
        corner = (share,) * k + (zero,) * (d - k)
        if leq(_l1(corner, x0), eps, tol * d):
            candidates.append(corner)

    pool: list[tuple[tuple[int, ...], Scalar]] = []
    for i in range(d):  # coordinate tie with the center
        row = [0] * d
        row[i] = 1
        pool.append((tuple(row), x0[i]))
    for i in range(d - 1):  # ordering facet x_i = x_{i+1}
        row = [0] * d
        row[i] = 1
        row[i + 1] = -1
        pool.append((tuple(row), zero))
    last = [0] * d
    last[d - 1] = 1
    pool.append((tuple(last), zero))  # positivity facet x_d = 0

    ones = [1] * d
    for signs in itertools.product((1, -1), repeat=d):
        if all(s == 1 for s in signs) or all(s == -1 for s in signs):
            continue
        rhs_ball = eps + sum(s * c for s, c in zip(signs, x0))
        for extra in itertools.combinations(pool, d - 2):
            matrix = [ones, list(signs)] + [list(row) for row, _ in extra]
            rhs = [zero + 1, rhs_ball] + [value for _, value in extra]
            solution = solve_square(matrix, rhs, exact=exact, pivot_tol=0.0 if exact else tol)
            if solution is None:
                continue
            if _feasible(solution, x0, eps, tol):
                candidates.append(tuple(solution))

    if not candidates:
        raise EmptyFamilyError("vertex enumeration found nothing; ball should be non-empty")
    return Polytope(tuple(OrderedProbVector(c, tol) for c in candidates))


def _feasible(x: Sequence[Scalar], x0: Sequence[Scalar], eps: Scalar, tol: float) -> bool:
    d = len(x0)
    if not leq(_l1(x, x0), eps, tol * d):
        return False
    if any(not geq(x[i], x[i + 1], tol) for i in range(d - 1)):
        return False
    return geq(x[-1], x[0] * 0, tol)


def steepest_approx(ball: Ball, *, max_dimension: int = 10) -> OrderedProbVector:
    """Most concentrated vector within reach: majorizes every ball member."""
    return polytope_sup(ball_vertices(ball, max_dimension=max_dimension))


def flattest_approx(ball: Ball, *, max_dimension: int = 10) -> OrderedProbVector:
    """Least concentrated vector within reach: majorized by every ball member."""
    return polytope_inf(ball_vertices(ball, max_dimension=max_dimension))
