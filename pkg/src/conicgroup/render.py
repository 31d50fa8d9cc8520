"""SVG drawings of group-law and Pascal constructions.

Rendering only consumes finished constructions; nothing here feeds back into
the kernel. Output is byte-stable for a given input: fixed element order and
fixed-precision coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple
from xml.sax.saxutils import escape

from .conic import Conic, MarkedConic
from .errors import NothingVisible
from .group_law import OplusResult
from .pascal import LINE_NAMES, Hexagon, PascalResult, hexagon_lines
from .projective import ProjLine, ProjPoint, det3

Window = Tuple[float, float, float, float]  # xmin, xmax, ymin, ymax
DEFAULT_WINDOW: Window = (-10.0, 10.0, -10.0, 10.0)
DEFAULT_SIZE = 800

MAX_DEPTH = 14
MAX_STEP_PX = 3.0


@dataclass
class Drawing:
    """Objects to draw; ``conic_base`` is any point of the conic, used to sweep it."""

    conic: Optional[Conic] = None
    conic_base: Optional[ProjPoint] = None
    lines: List[Tuple[str, ProjLine, str]] = field(default_factory=list)
    points: List[Tuple[str, ProjPoint, str]] = field(default_factory=list)


def oplus_drawing(mc: MarkedConic, a: ProjPoint, b: ProjPoint, result: OplusResult) -> Drawing:
    t = result.trace
    return Drawing(
        conic=mc.conic,
        conic_base=mc.identity,
        lines=[
            ("L", mc.marked_line, "marked"),
            ("ab", t.chord, "chord"),
            ("op", t.second_line, "chord"),
        ],
        points=[
            ("a", a, "input"),
            ("b", b, "input"),
            ("o", mc.identity, "identity"),
            ("p", t.meet_on_L, "aux"),
            ("a+b", result.sum, "result"),
        ],
    )


def pascal_drawing(h: Hexagon, result: PascalResult) -> Drawing:
    d = Drawing(conic=h.conic, conic_base=h.points[0])
    for name, l in zip(LINE_NAMES, hexagon_lines(h)):
        d.lines.append((name, l, "chord"))
    if result.pascal_line is not None:
        d.lines.append(("pascal", result.pascal_line, "marked"))
    for name, p in zip("abcdef", h.points):
        d.points.append((name, p, "input"))
    for name, m in zip("pqr", result.meets):
        d.points.append((name, m, "result"))
    return d


# -- geometry in floats ------------------------------------------------------

def _f(v) -> Tuple[float, float, float]:
    return tuple(float(c) for c in v)


def _conic_sweep(X: Conic, base: ProjPoint):
    """Map ``theta in [0, pi)`` onto the conic through the pencil of lines at ``base``."""
    k = _f(base.coords)
    basis = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    pairs = ((0, 1), (0, 2), (1, 2))
    # span the pencil with a line that misses base
    i, j = max(pairs, key=lambda ij: abs(det3((k, basis[ij[0]], basis[ij[1]]))))
    r, s = basis[i], basis[j]
    Xf = X.to_float()

    def at(theta: float) -> Tuple[float, float, float]:
        c, sn = math.cos(theta), math.sin(theta)
        d = tuple(c * r[n] + sn * s[n] for n in range(3))
        qd = Xf.quad(d)
        b = Xf.polar(k, d)
        return tuple(qd * k[n] - b * d[n] for n in range(3))

    return at


class _Viewport:
    def __init__(self, window: Window, size: int):
        self.xmin, self.xmax, self.ymin, self.ymax = window
        self.size = size

    def to_px(self, x: float, y: float) -> Tuple[float, float]:
        px = (x - self.xmin) / (self.xmax - self.xmin) * self.size
        py = (self.ymax - y) / (self.ymax - self.ymin) * self.size
        return px, py

    def affine(self, v) -> Optional[Tuple[float, float]]:
        x, y, z = v
        if abs(z) <= 1e-12 * max(abs(x), abs(y), abs(z)):
            return None
        return x / z, y / z

    def inside(self, xy, margin: float = 0.0) -> bool:
        if xy is None:
            return False
        x, y = xy
        mx = margin * (self.xmax - self.xmin)
        my = margin * (self.ymax - self.ymin)
        return (self.xmin - mx <= x <= self.xmax + mx) and (self.ymin - my <= y <= self.ymax + my)


def _conic_paths(X: Conic, base: ProjPoint, vp: _Viewport) -> List[List[Tuple[float, float]]]:
    at = _conic_sweep(X, base)
    samples: List[Tuple[float, Optional[Tuple[float, float]]]] = []

    def visit(t0, p0, t1, p1, depth):
        if depth < MAX_DEPTH and _needs_split(p0, p1, vp):
            tm = 0.5 * (t0 + t1)
            pm = vp.affine(at(tm))
            visit(t0, p0, tm, pm, depth + 1)
            visit(tm, pm, t1, p1, depth + 1)
        else:
            samples.append((t1, p1))

    n = 64
    thetas = [math.pi * i / n for i in range(n + 1)]
    pts = [vp.affine(at(t)) for t in thetas]
    samples.append((thetas[0], pts[0]))
    for i in range(n):
        visit(thetas[i], pts[i], thetas[i + 1], pts[i + 1], 0)

    paths, current = [], []
    for _, xy in samples:
        if vp.inside(xy, margin=0.5):
            if current and _px_dist(current[-1], xy, vp) > 0.25 * vp.size:
                paths.append(current)
                current = []
            current.append(xy)
        elif current:
            paths.append(current)
            current = []
    if current:
        paths.append(current)
    return [p for p in paths if len(p) > 1 and any(vp.inside(q) for q in p)]


def _needs_split(p0, p1, vp: _Viewport) -> bool:
    if p0 is None or p1 is None:
        return vp.inside(p0, 0.5) or vp.inside(p1, 0.5)
    if not (vp.inside(p0, 0.5) or vp.inside(p1, 0.5)):
        return False
    return _px_dist(p0, p1, vp) > MAX_STEP_PX


def _px_dist(p, q, vp: _Viewport) -> float:
    a, b = vp.to_px(*p), vp.to_px(*q)
    return math.hypot(a[0] - b[0], a[1] - b[1])


def _clip_line(l: ProjLine, vp: _Viewport):
    u, v, w = _f(l.coords)
    hits = []
    if abs(v) > 1e-15:
        for x in (vp.xmin, vp.xmax):
            y = -(u * x + w) / v
            if vp.ymin <= y <= vp.ymax:
                hits.append((x, y))
    if abs(u) > 1e-15:
        for y in (vp.ymin, vp.ymax):
            x = -(v * y + w) / u
            if vp.xmin <= x <= vp.xmax:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    hits.sort()
    first, last = hits[0], hits[-1]
    if first == last:
        return None
    return first, last


# -- SVG ----------------------------------------------------------------------

STYLE = {
    "marked": 'stroke="#c0392b" stroke-width="2.5"',
    "chord": 'stroke="#2c6fbb" stroke-width="1.2"',
    "input": 'fill="#2c6fbb"',
    "identity": 'fill="#111111"',
    "aux": 'fill="#777777"',
    "result": 'fill="#c0392b"',
}


def _n(v: float) -> str:
    return f"{v:.2f}"


def render_svg(drawing: Drawing, window: Window = DEFAULT_WINDOW,
               size: int = DEFAULT_SIZE) -> str:
    vp = _Viewport(window, size)
    body: List[str] = []

    if drawing.conic is not None and drawing.conic_base is not None:
        for path in _conic_paths(drawing.conic, drawing.conic_base, vp):
            pts = [vp.to_px(*xy) for xy in path]
            d = "M " + " L ".join(f"{_n(x)} {_n(y)}" for x, y in pts)
            body.append(f'<path d="{d}" fill="none" stroke="#111111" stroke-width="2"/>')

    for label, l, kind in drawing.lines:
        seg = _clip_line(l, vp)
        if seg is None:
            continue
        (x0, y0), (x1, y1) = vp.to_px(*seg[0]), vp.to_px(*seg[1])
        body.append(
            f'<line x1="{_n(x0)}" y1="{_n(y0)}" x2="{_n(x1)}" y2="{_n(y1)}" {STYLE[kind]}>'
            f"<title>{escape(label)}</title></line>"
        )

    for label, p, kind in drawing.points:
        xy = vp.affine(_f(p.coords))
        if not vp.inside(xy):
            continue
        x, y = vp.to_px(*xy)
        body.append(f'<circle cx="{_n(x)}" cy="{_n(y)}" r="4" {STYLE[kind]}/>')
        body.append(
            f'<text x="{_n(x + 6)}" y="{_n(y - 6)}" font-family="sans-serif" '
            f'font-size="14">{escape(label)}</text>'
        )

    if not body:
        raise NothingVisible("no part of the construction falls inside the window")
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">\n'
        f'<rect width="{size}" height="{size}" fill="white"/>\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def element_counts(svg: str) -> dict:
    """Count drawn elements by tag, for structural checks."""
    return {tag: svg.count(f"<{tag} ") for tag in ("path", "line", "circle", "text")}

