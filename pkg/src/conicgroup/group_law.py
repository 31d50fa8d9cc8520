"""The chord construction on a marked conic and the closed-form standard laws."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import scalar
from .conic import (
    ChordTrace,
    MarkedConic,
    chord_or_tangent,
    conic_contains,
    second_intersection,
    tangent_line,
)
from .errors import KernelBug, PointNotOnConic, PointOnMarkedLine
from .projective import ProjPoint, incident, join, meet, vanishes
from .scalar import Scalar

PARABOLA = "parabola"
HYPERBOLA = "hyperbola"
CIRCLE = "circle"
STANDARD_KINDS = (PARABOLA, HYPERBOLA, CIRCLE)


@dataclass(frozen=True)
class OplusResult:
    sum: ProjPoint
    trace: ChordTrace


def _require_member(mc: MarkedConic, p: ProjPoint) -> None:
    if not conic_contains(mc.conic, p):
        raise PointNotOnConic(f"{p!r} is not on {mc.conic!r}")
    if incident(p, mc.marked_line):
        raise PointOnMarkedLine(f"{p!r} lies on the marked line {mc.marked_line!r}")


def oplus(mc: MarkedConic, a: ProjPoint, b: ProjPoint) -> OplusResult:
    """``a (+) b``: meet the chord ``ab`` with the marked line at ``p``, then
    take the second intersection of the line ``o p`` with the conic."""
    _require_member(mc, a)
    _require_member(mc, b)
    X, L, o = mc.conic, mc.marked_line, mc.identity
    chord = chord_or_tangent(X, a, b)
    if chord == L:
        raise KernelBug("chord through points off the marked line equals the marked line")
    p = meet(chord, L)
    if conic_contains(X, p):
        raise KernelBug(f"chord meets the marked line on the conic at {p!r}")
    second_line = join(o, p)
    if vanishes(X.polar(o.coords, p.coords), X.coeffs, o.coords, p.coords):
        # o-p is tangent at o
        total = o
    else:
        total = second_intersection(X, o, p)
    if incident(total, L):
        raise KernelBug(f"sum {total!r} left the group carrier")
    return OplusResult(total, ChordTrace(chord, p, second_line))


def inverse(mc: MarkedConic, a: ProjPoint) -> ProjPoint:
    """Second intersection of the line from ``a`` to where the tangent at ``o`` meets ``L``."""
    _require_member(mc, a)
    p_o = meet(tangent_line(mc.conic, mc.identity), mc.marked_line)
    return second_intersection(mc.conic, a, p_o)


def is_associative_triple(mc: MarkedConic, a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    left = oplus(mc, oplus(mc, a, b).sum, c).sum
    right = oplus(mc, a, oplus(mc, b, c).sum).sum
    return left == right


# -- closed forms on the standard marked conics ----------------------------

Pair = Tuple[Scalar, Scalar]


def on_standard(kind: str, p: Pair) -> bool:
    x, y = p
    if kind == PARABOLA:
        value, scale = y - x * x, 1 + abs(x) ** 2
    elif kind == HYPERBOLA:
        value, scale = x * y - 1, 1 + abs(x * y)
    elif kind == CIRCLE:
        value, scale = x * x + y * y - 1, 1 + x * x + y * y
    else:
        raise ValueError(f"unknown standard conic {kind!r}")
    return scalar.is_zero(value, float(scale))


def standard_oplus(kind: str, a: Pair, b: Pair) -> Pair:
    """Addition, multiplication or rotation, by kind of standard conic."""
    for p in (a, b):
        if not on_standard(kind, p):
            raise PointNotOnConic(f"{p!r} is not on the standard {kind}")
    (x1, y1), (x2, y2) = a, b
    if kind == PARABOLA:
        s = x1 + x2
        return s, s * s
    if kind == HYPERBOLA:
        return x1 * x2, y1 * y2
    return x1 * x2 - y1 * y2, x1 * y2 + y1 * x2
