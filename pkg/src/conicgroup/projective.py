"""Points, lines and projective transformations of the real projective plane.

Objects are homogeneous triples modulo nonzero scale. On the exact backend
every triple is stored in a canonical integer form (coprime entries, first
nonzero entry positive) so equality is plain tuple comparison. Float triples
are rescaled to unit max-norm for conditioning only; their equality is always
tested through a cross product.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Sequence, Tuple

from . import scalar
from .errors import IdenticalLines, IdenticalPoints, SingularTransform
from .scalar import Scalar

Triple = Tuple[Scalar, Scalar, Scalar]
Matrix = Tuple[Triple, Triple, Triple]


# -- vector helpers ---------------------------------------------------------

def cross(p: Sequence[Scalar], q: Sequence[Scalar]) -> Triple:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def dot(p: Sequence[Scalar], q: Sequence[Scalar]) -> Scalar:
    return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]


def det3(m: Sequence[Sequence[Scalar]]) -> Scalar:
    return dot(m[0], cross(m[1], m[2]))


def norm(v: Sequence[Scalar]) -> float:
    return math.sqrt(sum(float(x) * float(x) for x in v))


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def matvec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> Triple:
    return tuple(dot(row, v) for row in m)


def transpose(m: Sequence[Sequence[Scalar]]) -> Matrix:
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))


def adjugate(m: Sequence[Sequence[Scalar]]) -> Matrix:
    """Classical adjoint; ``m @ adjugate(m) == det(m) * I``."""
    c0, c1, c2 = (tuple(m[r][c] for r in range(3)) for c in range(3))
    # rows of the adjugate are cross products of column pairs
    return (cross(c1, c2), cross(c2, c0), cross(c0, c1))


def canonical(values: Sequence[Scalar]) -> tuple:
    """Scale-canonical representative of a nonzero vector.

    Exact input becomes coprime integers with first nonzero entry positive.
    Float input is divided by its largest-magnitude entry's absolute value,
    with that entry made positive.
    """
    if all(type(v) is int for v in values):
        ints = list(values)
    elif scalar.all_exact(values):
        fracs = [Fraction(v) for v in values]
        den = reduce(math.lcm, (f.denominator for f in fracs), 1)
        ints = [f.numerator * (den // f.denominator) for f in fracs]
    else:
        ints = None
    if ints is not None:
        g = reduce(math.gcd, ints, 0)
        if g == 0:
            raise ValueError("zero vector has no projective class")
        lead = next(i for i in ints if i != 0)
        if lead < 0:
            g = -g
        return tuple(i // g for i in ints)
    floats = [float(v) for v in values]
    big = max(floats, key=abs)
    if big == 0 or not all(math.isfinite(f) for f in floats):
        raise ValueError("zero or non-finite vector has no projective class")
    return tuple(f / big for f in floats)


def is_zero_vector(v: Sequence[Scalar], scale: float = 1.0) -> bool:
    if scalar.all_exact(v):
        return all(x == 0 for x in v)
    return norm(v) <= scalar.EPSILON * max(scale, 1e-300)


def _norm_product(vectors) -> float:
    out = 1.0
    for v in vectors:
        out *= norm(v)
    return out


def vanishes(value: Scalar, *vectors: Sequence[Scalar]) -> bool:
    """Zero test for a value built multilinearly from ``vectors``.

    The norms only set the float tolerance, so they are skipped on exact input.
    """
    if scalar.is_exact(value):
        return value == 0
    return scalar.is_zero(value, _norm_product(vectors))


def vanishes_vector(v: Sequence[Scalar], *vectors: Sequence[Scalar]) -> bool:
    if scalar.all_exact(v):
        return all(x == 0 for x in v)
    return is_zero_vector(v, _norm_product(vectors))


def proportional(p: Sequence[Scalar], q: Sequence[Scalar]) -> bool:
    """Equality up to scale of two triples (cross product vanishes)."""
    return vanishes_vector(cross(p, q), p, q)


def proportional_vectors(p: Sequence[Scalar], q: Sequence[Scalar]) -> bool:
    """Equality up to scale of vectors of any length (all 2x2 minors vanish)."""
    n = len(p)
    minors = [p[i] * q[j] - p[j] * q[i] for i in range(n) for j in range(i + 1, n)]
    return vanishes_vector(minors, p, q)


# -- projective objects ---------------------------------------------------

class _Homogeneous:
    """Shared behaviour of points and lines: canonical storage, equality up to scale."""

    coords: Triple

    def __post_init__(self):
        if len(self.coords) != 3:
            raise ValueError(f"expected three coordinates, got {self.coords!r}")
        object.__setattr__(self, "coords", canonical(self.coords))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return self.coords == other.coords
        return proportional(self.coords, other.coords)

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def is_exact(self) -> bool:
        return scalar.all_exact(self.coords)

    def to_float(self):
        return type(self)(tuple(float(c) for c in self.coords))


@dataclass(frozen=True, eq=False)
class ProjPoint(_Homogeneous):
    coords: Triple

    @classmethod
    def affine(cls, x: Scalar, y: Scalar) -> "ProjPoint":
        return cls((x, y, 1))

    @property
    def at_infinity(self) -> bool:
        return vanishes(self.coords[2], self.coords)

    def to_affine(self) -> tuple[Scalar, Scalar] | None:
        """Affine coordinates ``(x/z, y/z)``, or ``None`` for points at infinity."""
        if self.at_infinity:
            return None
        x, y, z = self.coords
        if self.is_exact:
            return scalar.simplify(Fraction(x, z)), scalar.simplify(Fraction(y, z))
        return x / z, y / z

    def __repr__(self):
        return "[" + ":".join(scalar.format_scalar(c) for c in self.coords) + "]"


@dataclass(frozen=True, eq=False)
class ProjLine(_Homogeneous):
    """The line ``u*x + v*y + w*z = 0``."""

    coords: Triple

    def __repr__(self):
        return "(" + ",".join(scalar.format_scalar(c) for c in self.coords) + ")"


LINE_AT_INFINITY = ProjLine((0, 0, 1))


def point(x: Scalar, y: Scalar, z: Scalar = 1) -> ProjPoint:
    return ProjPoint((x, y, z))


def line(u: Scalar, v: Scalar, w: Scalar) -> ProjLine:
    return ProjLine((u, v, w))


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The line through two distinct points."""
    c = cross(p.coords, q.coords)
    if vanishes_vector(c, p.coords, q.coords):
        raise IdenticalPoints(f"cannot join {p!r} with itself")
    return ProjLine(c)


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The intersection point of two distinct lines."""
    c = cross(l.coords, m.coords)
    if vanishes_vector(c, l.coords, m.coords):
        raise IdenticalLines(f"cannot meet {l!r} with itself")
    return ProjPoint(c)


def incident(p: ProjPoint, l: ProjLine) -> bool:
    return vanishes(dot(p.coords, l.coords), p.coords, l.coords)


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    d = det3((p.coords, q.coords, r.coords))
    return vanishes(d, p.coords, q.coords, r.coords)


# -- transformations ------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ProjTransform:
    """Invertible 3x3 matrix acting on column vectors of homogeneous coordinates."""

    matrix: Matrix

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.matrix)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("a projective transform needs a 3x3 matrix")
        flat = canonical([x for r in rows for x in r])
        rows = (flat[0:3], flat[3:6], flat[6:9])
        d = det3(rows)
        if vanishes(d, *rows):
            raise SingularTransform("matrix is not invertible")
        object.__setattr__(self, "matrix", rows)

    @property
    def flat(self) -> tuple:
        return tuple(x for r in self.matrix for x in r)

    @property
    def is_exact(self) -> bool:
        return scalar.all_exact(self.flat)

    def __eq__(self, other):
        if not isinstance(other, ProjTransform):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return self.matrix == other.matrix
        return proportional_vectors(self.flat, other.flat)

    def __hash__(self):
        return hash(self.matrix)

    def __call__(self, obj):
        if isinstance(obj, ProjPoint):
            return apply_point(self, obj)
        if isinstance(obj, ProjLine):
            return apply_line(self, obj)
        raise TypeError(f"cannot apply a transform to {type(obj).__name__}")

    def to_float(self) -> "ProjTransform":
        return ProjTransform(tuple(tuple(float(x) for x in r) for r in self.matrix))

    def __repr__(self):
        rows = "; ".join(" ".join(scalar.format_scalar(x) for x in r) for r in self.matrix)
        return f"ProjTransform[{rows}]"


IDENTITY = ProjTransform(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def apply_point(t: ProjTransform, p: ProjPoint) -> ProjPoint:
    return ProjPoint(matvec(t.matrix, p.coords))


def apply_line(t: ProjTransform, l: ProjLine) -> ProjLine:
    # lines transform by the inverse transpose; the adjugate is the inverse up to scale
    return ProjLine(matvec(transpose(adjugate(t.matrix)), l.coords))


def compose(t1: ProjTransform, t2: ProjTransform) -> ProjTransform:
    """``t1 after t2``."""
    return ProjTransform(matmul(t1.matrix, t2.matrix))


def inverse(t: ProjTransform) -> ProjTransform:
    return ProjTransform(adjugate(t.matrix))


def transform_sending_line_to_infinity(l: ProjLine) -> ProjTransform:
    """A transform whose image of ``l`` is ``z = 0``.

    The third row is ``l`` itself; the other two rows are the pair of standard
    basis vectors maximising ``|det|`` against ``l`` (first such pair in index
    order on ties), so the result is deterministic.
    """
    u = l.coords
    basis = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    # det[e_i; e_j; u] is +-u_k for the left-out index k
    pairs = ((0, 1, 2), (0, 2, 1), (1, 2, 0))
    i, j, _ = max(pairs, key=lambda ijk: abs(u[ijk[2]]))
    return ProjTransform((basis[i], basis[j], u))
