"""Nondegenerate conics, chords and tangents, and marked conics.

A conic is stored as the six coefficients of

    A x^2 + B xy + C y^2 + D xz + E yz + F z^2

so no halving is needed on the exact backend. ``polar(p, q)`` is the full
polarization ``Q(p + q) - Q(p) - Q(q)``, i.e. twice the symmetric bilinear
form; with it the second intersection of the line through ``k`` (on the
conic) and ``d`` is ``Q(d) k - polar(k, d) d``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import scalar
from .errors import (
    DegenerateConic,
    IdenticalPoints,
    IdentityNotOnConic,
    IdentityOnMarkedLine,
    KernelBug,
    PointNotOnConic,
)
from .projective import (
    LINE_AT_INFINITY,
    ProjLine,
    ProjPoint,
    ProjTransform,
    adjugate,
    canonical,
    det3,
    incident,
    join,
    matmul,
    proportional_vectors,
    transpose,
    vanishes,
)
from .scalar import Scalar

Coefficients = Tuple[Scalar, Scalar, Scalar, Scalar, Scalar, Scalar]


@dataclass(frozen=True, eq=False)
class Conic:
    coeffs: Coefficients

    def __post_init__(self):
        if len(self.coeffs) != 6:
            raise ValueError(f"a conic needs six coefficients, got {self.coeffs!r}")
        try:
            c = canonical(self.coeffs)
        except ValueError:
            raise DegenerateConic("all coefficients are zero") from None
        object.__setattr__(self, "coeffs", c)
        m = self.doubled_matrix()
        if vanishes(det3(m), *m):
            raise DegenerateConic(f"{self!r} is a line pair")

    def doubled_matrix(self):
        """``2M`` where ``Q(p) = p^T M p``; integer whenever the coefficients are."""
        A, B, C, D, E, F = self.coeffs
        return ((2 * A, B, D), (B, 2 * C, E), (D, E, 2 * F))

    @property
    def is_exact(self) -> bool:
        return scalar.all_exact(self.coeffs)

    def to_float(self) -> "Conic":
        return Conic(tuple(float(c) for c in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Conic):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return self.coeffs == other.coeffs
        return proportional_vectors(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Conic(" + ", ".join(scalar.format_scalar(c) for c in self.coeffs) + ")"

    def quad(self, p) -> Scalar:
        x, y, z = p
        A, B, C, D, E, F = self.coeffs
        return A * x * x + B * x * y + C * y * y + D * x * z + E * y * z + F * z * z

    def gradient(self, p) -> tuple:
        """``2Mp``: the coefficients of the polar line of ``p``."""
        x, y, z = p
        A, B, C, D, E, F = self.coeffs
        return (2 * A * x + B * y + D * z, B * x + 2 * C * y + E * z, D * x + E * y + 2 * F * z)

    def polar(self, p, q) -> Scalar:
        g = self.gradient(p)
        return g[0] * q[0] + g[1] * q[1] + g[2] * q[2]


PARABOLA = Conic((1, 0, 0, 0, -1, 0))   # y = x^2
HYPERBOLA = Conic((0, 1, 0, 0, 0, -1))  # xy = 1
CIRCLE = Conic((1, 0, 1, 0, 0, -1))     # x^2 + y^2 = 1


def conic_contains(X: Conic, p: ProjPoint) -> bool:
    return vanishes(X.quad(p.coords), X.coeffs, p.coords, p.coords)


def _require_on(X: Conic, p: ProjPoint, what: str = "point") -> None:
    if not conic_contains(X, p):
        raise PointNotOnConic(f"{what} {p!r} is not on {X!r}")


def tangent_line(X: Conic, p: ProjPoint) -> ProjLine:
    _require_on(X, p)
    return ProjLine(X.gradient(p.coords))


def chord_or_tangent(X: Conic, a: ProjPoint, b: ProjPoint) -> ProjLine:
    _require_on(X, a)
    _require_on(X, b)
    if a == b:
        return tangent_line(X, a)
    return join(a, b)


def second_intersection(X: Conic, known: ProjPoint, other: ProjPoint) -> ProjPoint:
    """The other point where the line ``known``-``other`` meets ``X``.

    Returns ``known`` itself when that line is tangent at ``known``.
    """
    _require_on(X, known, "known point")
    if known == other:
        raise IdenticalPoints(f"{known!r} and {other!r} do not span a line")
    k, d = known.coords, other.coords
    qd = X.quad(d)
    b = X.polar(k, d)
    tangent = vanishes(b, X.coeffs, k, d)
    through = vanishes(qd, X.coeffs, d, d)
    if tangent and through:
        raise KernelBug("line lies inside a nondegenerate conic")
    if tangent:
        return known
    if through:
        return other
    return ProjPoint(tuple(qd * ki - b * di for ki, di in zip(k, d)))


def transform_conic(T: ProjTransform, X: Conic) -> Conic:
    """Image of ``X`` under the point map ``T``: matrix ``T^-T M T^-1`` up to scale."""
    adj = adjugate(T.matrix)
    m = matmul(transpose(adj), matmul(X.doubled_matrix(), adj))
    # m is twice a symmetric matrix; read the coefficients back off it
    return Conic((m[0][0], 2 * m[0][1], m[1][1], 2 * m[0][2], 2 * m[1][2], m[2][2]))


# -- marked conics ---------------------------------------------------------

@dataclass(frozen=True)
class MarkedConic:
    """A conic with a marked line and an identity point on the conic, off the line."""

    conic: Conic
    marked_line: ProjLine
    identity: ProjPoint

    def __post_init__(self):
        if not conic_contains(self.conic, self.identity):
            raise IdentityNotOnConic(f"{self.identity!r} is not on {self.conic!r}")
        if incident(self.identity, self.marked_line):
            raise IdentityOnMarkedLine(f"{self.identity!r} lies on {self.marked_line!r}")

    def contains(self, p: ProjPoint) -> bool:
        """Membership in the group carrier: on the conic, off the marked line."""
        return conic_contains(self.conic, p) and not incident(p, self.marked_line)

    def transformed(self, T: ProjTransform) -> "MarkedConic":
        return MarkedConic(transform_conic(T, self.conic), T(self.marked_line), T(self.identity))

    def to_float(self) -> "MarkedConic":
        return MarkedConic(self.conic.to_float(), self.marked_line.to_float(), self.identity.to_float())


def make_marked(X: Conic, L: ProjLine, o: ProjPoint) -> MarkedConic:
    return MarkedConic(X, L, o)


@dataclass(frozen=True)
class ChordTrace:
    """Intermediate objects of one group-law construction."""

    chord: ProjLine
    meet_on_L: ProjPoint
    second_line: ProjLine


STANDARD_PARABOLA = MarkedConic(PARABOLA, LINE_AT_INFINITY, ProjPoint((0, 0, 1)))
STANDARD_HYPERBOLA = MarkedConic(HYPERBOLA, LINE_AT_INFINITY, ProjPoint((1, 1, 1)))
STANDARD_CIRCLE = MarkedConic(CIRCLE, LINE_AT_INFINITY, ProjPoint((1, 0, 1)))
