"""Hexagons inscribed in a conic: opposite-side meets and the Pascal line.

Besides the direct determinant check, ``pascal_via_group`` re-derives the
collinearity through the group law: with the line through two of the meets as
marked line and the fifth vertex as identity, the hexagon's vertices satisfy
``d = a+b`` and ``f = b+c``, and the third meet lies on the marked line exactly
when ``d+c`` and ``a+f`` are constructed through the same point of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Tuple

from .conic import Conic, MarkedConic, chord_or_tangent, conic_contains
from .errors import (
    GroupRouteUnavailable, InvalidHexagon, NoValidCycle, PointNotOnConic, TrivialHexagon,
)
from .group_law import OplusResult, oplus as _oplus
from .projective import ProjLine, ProjPoint, collinear, det3, incident, join, meet, norm

LINE_NAMES = ("A1", "B1", "C1", "A2", "B2", "C2")


@dataclass(frozen=True)
class Hexagon:
    conic: Conic
    points: Tuple[ProjPoint, ProjPoint, ProjPoint, ProjPoint, ProjPoint, ProjPoint]

    def __post_init__(self):
        pts = tuple(self.points)
        if len(pts) != 6:
            raise InvalidHexagon(f"a hexagon needs six points, got {len(pts)}")
        object.__setattr__(self, "points", pts)
        for i, p in enumerate(pts):
            if not conic_contains(self.conic, p):
                raise PointNotOnConic(f"vertex {i} {p!r} is not on {self.conic!r}")
        lines = hexagon_lines(self)
        for i in range(3):
            if lines[i] == lines[i + 3]:
                raise InvalidHexagon(
                    f"opposite lines {LINE_NAMES[i]} and {LINE_NAMES[i + 3]} coincide"
                )


@dataclass(frozen=True)
class PascalResult:
    meets: Tuple[ProjPoint, ProjPoint, ProjPoint]
    pascal_line: Optional[ProjLine]
    collinear: bool
    trivial_reason: Optional[str] = None


def hexagon_lines(h: Hexagon) -> Tuple[ProjLine, ...]:
    """Lines ``(A1, B1, C1, A2, B2, C2)``: ``ab, bc, cd, de, ef, fa``."""
    pts = h.points
    return tuple(chord_or_tangent(h.conic, pts[i], pts[(i + 1) % 6]) for i in range(6))


def pascal_points(h: Hexagon) -> PascalResult:
    lines = hexagon_lines(h)
    meets = tuple(meet(lines[i], lines[i + 3]) for i in range(3))
    p, q, r = meets
    ok = collinear(p, q, r)
    pairs = (("p=q", p, q), ("q=r", q, r), ("r=p", r, p))
    coincident = [name for name, u, v in pairs if u == v]
    trivial = ",".join(coincident) if coincident else None
    pascal_line = None
    for _, u, v in pairs:
        if u != v:
            pascal_line = join(u, v)
            break
    return PascalResult(meets, pascal_line, ok, trivial)


def verify_pascal(h: Hexagon) -> bool:
    return pascal_points(h).collinear


def pascal_residual(h: Hexagon) -> float:
    """``|det|`` of the three meets, each scaled to unit Euclidean length."""
    meets = pascal_points(h).meets
    unit = [tuple(float(c) / norm(m.coords) for c in m.coords) for m in meets]
    return abs(det3(unit))


def cycle_hexagon(h: Hexagon, k: int) -> Hexagon:
    """Rotate the vertex list left by ``k``."""
    k %= 6
    return Hexagon(h.conic, h.points[k:] + h.points[:k])


def _distinct_meets(h: Hexagon) -> PascalResult:
    res = pascal_points(h)
    if res.trivial_reason is not None:
        raise TrivialHexagon(f"coincident meets ({res.trivial_reason})")
    return res


def _cycles(h: Hexagon) -> Iterator[Tuple[int, Hexagon, ProjLine]]:
    _distinct_meets(h)
    for k in range(6):
        hk = cycle_hexagon(h, k)
        p, q, _ = pascal_points(hk).meets
        L = join(p, q)
        if not incident(hk.points[4], L):
            yield k, hk, L


def find_valid_cycle(h: Hexagon) -> Tuple[int, ProjLine]:
    """First rotation ``k`` whose fifth vertex is off the line through its first two meets."""
    for k, _, L in _cycles(h):
        return k, L
    raise NoValidCycle("no rotation puts the fifth vertex off the line of meets")


OplusFn = Callable[[MarkedConic, ProjPoint, ProjPoint], OplusResult]


def pascal_via_group(h: Hexagon, oplus: OplusFn = _oplus) -> bool:
    """Collinearity of the meets, derived through associativity of the group law.

    Uses the first valid rotation in which every vertex other than the
    identity is a group element (off the marked line). Hexagons that repeat
    a vertex non-adjacently can have no such rotation; those raise
    ``GroupRouteUnavailable``.
    """
    usable = False
    for _, hk, L in _cycles(h):
        usable = True
        a, b, c, d, e, f = hk.points
        if any(incident(x, L) for x in (a, b, c, d, f)):
            continue
        mc = MarkedConic(h.conic, L, e)
        if oplus(mc, a, b).sum != d or oplus(mc, b, c).sum != f:
            return False
        left = oplus(mc, d, c)
        right = oplus(mc, a, f)
        if left.sum != right.sum:
            return False
        # chords cd and fa reach L at the same point: the third meet is on L
        return left.trace.meet_on_L == right.trace.meet_on_L
    if usable:
        raise GroupRouteUnavailable("every valid rotation puts a vertex on the line of meets")
    raise NoValidCycle("no rotation puts the fifth vertex off the line of meets")


def associativity_hexagon(mc: MarkedConic, a: ProjPoint, b: ProjPoint, c: ProjPoint,
                          oplus: OplusFn = _oplus) -> Hexagon:
    """The hexagon ``(a, b, c, a+b, o, b+c)`` relating Pascal to associativity."""
    ab = oplus(mc, a, b).sum
    bc = oplus(mc, b, c).sum
    return Hexagon(mc.conic, (a, b, c, ab, mc.identity, bc))


def meets_on_marked_line(mc: MarkedConic, h: Hexagon) -> Tuple[bool, bool, bool]:
    return tuple(incident(m, mc.marked_line) for m in pascal_points(h).meets)


def hexagon_condition(h: Hexagon) -> float:
    """Largest affine coordinate magnitude among the three meets (inf at infinity)."""
    worst = 0.0
    for m in pascal_points(h).meets:
        aff = m.to_affine()
        if aff is None:
            return math.inf
        worst = max(worst, abs(float(aff[0])), abs(float(aff[1])))
    return worst
