"""Classification of marked conics and normalization to the standard ones.

A marked conic is sorted by how its conic meets the marked line (tangent,
two real points, no real points). ``normalize`` then builds a projective
transform onto the standard parabola, hyperbola or circle in three stages:
marked line to infinity, affine reduction by completing squares, and an
affine map fixing the standard conic that moves the identity into place.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from . import scalar
from .conic import (
    STANDARD_CIRCLE,
    STANDARD_HYPERBOLA,
    STANDARD_PARABOLA,
    MarkedConic,
    transform_conic,
)
from .errors import IrrationalNormalization, KernelBug
from .group_law import oplus
from .projective import (
    IDENTITY,
    ProjPoint,
    ProjTransform,
    compose,
    cross,
    inverse,
    is_zero_vector,
    norm,
    proportional,
    transform_sending_line_to_infinity,
)
from .scalar import Scalar


class ConicClass(enum.Enum):
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    ELLIPSE = "ellipse"


STANDARD = {
    ConicClass.PARABOLA: STANDARD_PARABOLA,
    ConicClass.HYPERBOLA: STANDARD_HYPERBOLA,
    ConicClass.ELLIPSE: STANDARD_CIRCLE,
}


@dataclass(frozen=True)
class Normalization:
    transform: ProjTransform
    target: MarkedConic
    klass: ConicClass


def _points_on_line(l) -> Tuple[tuple, tuple]:
    """Two distinct points spanning ``l``, taken from ``l x e_k``."""
    u = l.coords
    candidates = [cross(u, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    candidates = [c for c in candidates if not is_zero_vector(c, norm(u))]
    r = max(candidates, key=norm)
    for s in candidates:
        if not proportional(r, s):
            return r, s
    raise KernelBug(f"could not span line {l!r}")


def restriction_discriminant(mc: MarkedConic) -> Tuple[Scalar, float]:
    """Discriminant of ``t -> Q(r + t s)`` along the marked line, with its scale."""
    X = mc.conic
    r, s = _points_on_line(mc.marked_line)
    qr, qs, b = X.quad(r), X.quad(s), X.polar(r, s)
    disc = b * b - 4 * qr * qs
    return disc, (norm(X.coeffs) * norm(r) * norm(s)) ** 2


def classify(mc: MarkedConic) -> ConicClass:
    disc, scale = restriction_discriminant(mc)
    sign = scalar.sign(disc, scale)
    if sign == 0:
        return ConicClass.PARABOLA
    return ConicClass.HYPERBOLA if sign > 0 else ConicClass.ELLIPSE


# -- normalization ---------------------------------------------------------

def _affine(a, b, c, d, e, f) -> ProjTransform:
    """``(x, y) -> (a x + b y + c, d x + e y + f)``."""
    return ProjTransform(((a, b, c), (d, e, f), (0, 0, 1)))


def _div(a: Scalar, b: Scalar) -> Scalar:
    return scalar.div(a, b)


def _root(x: Scalar) -> Scalar:
    r = scalar.sqrt(x)
    if r is None:
        raise IrrationalNormalization(
            f"square root of {scalar.format_scalar(x)} is not rational; use the float backend"
        )
    return r


def _affine_identity(mc: MarkedConic) -> Tuple[Scalar, Scalar]:
    aff = mc.identity.to_affine()
    if aff is None:
        raise KernelBug("identity sits on the line at infinity")
    return aff


def _reduce_quadratic(mc: MarkedConic) -> Tuple[ProjTransform, Sequence[Scalar]]:
    """Shear so the affine quadratic part is diagonal.

    The pivot is the larger-magnitude diagonal coefficient, ``x`` on ties.
    Returns the transform and the new coefficients.
    """
    A, B, C, D, E, F = mc.conic.coeffs
    steps = IDENTITY
    if abs(C) > abs(A):
        steps = _affine(0, 1, 0, 1, 0, 0)
        A, B, C, D, E, F = transform_conic(steps, mc.conic).coeffs
    if scalar.is_zero(A, norm(mc.conic.coeffs)):
        return steps, (A, B, C, D, E, F)
    shear = _affine(1, _div(B, 2 * A), 0, 0, 1, 0)
    steps = compose(shear, steps)
    # exact coefficients after u = x + (B / 2A) y
    return steps, (A, 0, C - _div(B * B, 4 * A), D, E - _div(B * D, 2 * A), F)


def _parabola(A, C, D, E, F) -> ProjTransform:
    # A u^2 + D u + E y + F = 0  ->  Y = X^2
    shift = _div(D, 2 * A)
    rest = F - _div(D * D, 4 * A)
    return _affine(1, 0, shift, 0, -_div(E, A), -_div(rest, A))


def _ellipse(A, C, D, E, F) -> ProjTransform:
    # A U^2 + C V^2 = K after centring
    k = _div(D * D, 4 * A) + _div(E * E, 4 * C) - F
    sx, sy = _root(_div(A, k)), _root(_div(C, k))
    return _affine(sx, 0, sx * _div(D, 2 * A), 0, sy, sy * _div(E, 2 * C))


def _hyperbola_diagonal(A, C, D, E, F) -> ProjTransform:
    # A U^2 + C V^2 = K with A C < 0; factor A (U - sV)(U + sV) = K
    k = _div(D * D, 4 * A) + _div(E * E, 4 * C) - F
    s = _root(_div(-C, A))
    u0, v0 = _div(D, 2 * A), _div(E, 2 * C)
    g = _div(A, k)
    # X = g (U - s V), Y = U + s V, with U = x + u0, V = y + v0
    return _affine(g, -g * s, g * (u0 - s * v0), 1, s, u0 + s * v0)


def _hyperbola_product(B, D, E, F) -> ProjTransform:
    # B x y + D x + E y + F = 0  ->  B (x + E/B)(y + D/B) = K
    k = _div(D * E, B) - F
    g = _div(B, k)
    return _affine(g, 0, g * _div(E, B), 0, 1, _div(D, B))


def _relocate(klass: ConicClass, o: Tuple[Scalar, Scalar]) -> ProjTransform:
    """Affine symmetry of the standard conic taking ``o`` to the standard identity."""
    x0, y0 = o
    if klass is ConicClass.PARABOLA:
        return _affine(1, 0, -x0, -2 * x0, 1, x0 * x0)
    if klass is ConicClass.HYPERBOLA:
        # diagonal scaling; a negative x0 also swaps the branches
        return _affine(_div(1, x0), 0, 0, 0, x0, 0)
    return _affine(x0, y0, 0, -y0, x0, 0)


def _as_scalars(T: ProjTransform, exact: bool) -> ProjTransform:
    return T if exact else T.to_float()


def normalize(mc: MarkedConic) -> Normalization:
    """Transform ``mc`` onto the standard marked conic of its class.

    Raises ``IrrationalNormalization`` on exact input whose reduction needs an
    irrational square root; convert with ``mc.to_float()`` and retry.
    """
    exact = mc.conic.is_exact and mc.marked_line.is_exact and mc.identity.is_exact
    klass = classify(mc)
    to_infinity = _as_scalars(transform_sending_line_to_infinity(mc.marked_line), exact)
    mc1 = mc.transformed(to_infinity)
    shear, (A, B, C, D, E, F) = _reduce_quadratic(mc1)
    if klass is ConicClass.PARABOLA:
        reduce_ = _parabola(A, C, D, E, F)
    elif klass is ConicClass.ELLIPSE:
        reduce_ = _ellipse(A, C, D, E, F)
    elif scalar.is_zero(A, norm(mc1.conic.coeffs)):
        reduce_ = _hyperbola_product(B, D, E, F)
    else:
        reduce_ = _hyperbola_diagonal(A, C, D, E, F)
    T = compose(reduce_, compose(shear, to_infinity))
    o = _affine_identity(mc.transformed(T))
    T = compose(_relocate(klass, o), T)
    target = STANDARD[klass]
    if exact and mc.transformed(T) != target:
        raise KernelBug(f"normalization of {mc!r} missed {target!r}")
    return Normalization(T, target, klass)


def normalization_residuals(mc: MarkedConic, n: Normalization) -> dict:
    """Round-trip residuals: pull the target back and compare with the source.

    Conic and line are compared as unit vectors (sign aligned); the identity
    by affine coordinates, or as a unit vector when it lies at infinity.
    """
    back = n.target.to_float().transformed(inverse(n.transform.to_float()))
    src = mc.to_float()
    return {
        "conic": _unit_distance(src.conic.coeffs, back.conic.coeffs),
        "line": _unit_distance(src.marked_line.coords, back.marked_line.coords),
        "identity": _affine_distance(src.identity, back.identity),
    }


def _unit_distance(u: Iterable[float], v: Iterable[float]) -> float:
    u, v = [float(x) for x in u], [float(x) for x in v]
    nu, nv = norm(u), norm(v)
    u = [x / nu for x in u]
    v = [x / nv for x in v]
    plus = max(abs(a - b) for a, b in zip(u, v))
    minus = max(abs(a + b) for a, b in zip(u, v))
    return min(plus, minus)


def _affine_distance(p: ProjPoint, q: ProjPoint) -> float:
    a, b = p.to_affine(), q.to_affine()
    if a is None or b is None:
        return _unit_distance(p.coords, q.coords)
    return max(abs(float(a[0]) - float(b[0])), abs(float(a[1]) - float(b[1])))


def pushforward_check(mc: MarkedConic, T: ProjTransform,
                      pairs: Iterable[Tuple[ProjPoint, ProjPoint]]) -> bool:
    """``T(a + b) == T(a) + T(b)`` for every pair, the right side on the image marked conic."""
    image = mc.transformed(T)
    for a, b in pairs:
        if T(oplus(mc, a, b).sum) != oplus(image, T(a), T(b)).sum:
            return False
    return True
