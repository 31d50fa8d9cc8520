"""Line-oriented scene files.

Example::

    # unit circle, marked line at infinity
    backend exact
    conic 1 0 1 0 0 -1
    marked_line 0 0 1
    identity 1 0
    point P 3/5 4/5
    point Q 0 1

``conic`` lists A B C D E F of ``Ax^2 + Bxy + Cy^2 + Dxz + Eyz + Fz^2``.
Points take two (affine) or three (homogeneous) numbers. Numbers are
``p/q`` or integers; decimals only when ``backend float``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import scalar
from .conic import Conic, MarkedConic, conic_contains
from .errors import GeometryError
from .projective import ProjLine, ProjPoint
from .scalar import Scalar

FIELDS = ("backend", "epsilon", "conic", "marked_line", "identity", "point")


class SceneError(ValueError):
    def __init__(self, message: str, lineno: Optional[int] = None, field: Optional[str] = None):
        self.lineno = lineno
        self.field = field
        where = []
        if lineno is not None:
            where.append(f"line {lineno}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class MalformedNumber(SceneError):
    pass


class UnknownField(SceneError):
    pass


class ValidationFailed(SceneError):
    pass


@dataclass
class Scene:
    conic: Tuple[Scalar, ...]
    marked_line: Tuple[Scalar, ...] = (0, 0, 1)
    identity: Optional[Tuple[Scalar, ...]] = None
    points: Dict[str, Tuple[Scalar, ...]] = field(default_factory=dict)
    backend: str = scalar.EXACT
    epsilon: Optional[float] = None

    def build_conic(self) -> Conic:
        return Conic(self.conic)

    def line(self) -> ProjLine:
        return ProjLine(self.marked_line)

    def point(self, name: str) -> ProjPoint:
        try:
            return _as_point(self.points[name])
        except KeyError:
            raise ValidationFailed(f"no point named {name!r}") from None

    def marked_conic(self) -> MarkedConic:
        if self.identity is None:
            raise ValidationFailed("scene has no identity point")
        return MarkedConic(self.build_conic(), self.line(), _as_point(self.identity))


def _as_point(values) -> ProjPoint:
    if len(values) == 2:
        return ProjPoint((values[0], values[1], 1))
    return ProjPoint(tuple(values))


def _numbers(tokens: List[str], backend: str, lineno: int, name: str) -> Tuple[Scalar, ...]:
    out = []
    for tok in tokens:
        try:
            out.append(scalar.parse(tok, backend))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedNumber(str(exc), lineno, name) from None
    return tuple(out)


def _expect(values, counts, lineno, name):
    if len(values) not in counts:
        want = " or ".join(str(c) for c in counts)
        raise ValidationFailed(f"expected {want} numbers, got {len(values)}", lineno, name)


def parse_scene(text: str) -> Scene:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        key, *rest = body.split()
        if key not in FIELDS:
            raise UnknownField(f"unknown field {key!r}", lineno, key)
        entries.append((lineno, key, rest))

    backend = scalar.EXACT
    for lineno, key, rest in entries:
        if key == "backend":
            if len(rest) != 1 or rest[0] not in scalar.BACKENDS:
                raise ValidationFailed(f"backend must be one of {scalar.BACKENDS}", lineno, key)
            backend = rest[0]

    seen = set()
    conic = None
    scene = Scene(conic=(), backend=backend)
    for lineno, key, rest in entries:
        if key != "point":
            if key in seen:
                raise ValidationFailed("given more than once", lineno, key)
            seen.add(key)
        if key == "backend":
            continue
        if key == "epsilon":
            if len(rest) != 1:
                raise ValidationFailed("expected one number", lineno, key)
            try:
                eps = float(rest[0])
            except ValueError:
                raise MalformedNumber(f"not a number: {rest[0]!r}", lineno, key) from None
            if not eps > 0:
                raise ValidationFailed("epsilon must be positive", lineno, key)
            scene.epsilon = eps
        elif key == "conic":
            conic = _numbers(rest, backend, lineno, key)
            _expect(conic, (6,), lineno, key)
            scene.conic = conic
        elif key == "marked_line":
            values = _numbers(rest, backend, lineno, key)
            _expect(values, (3,), lineno, key)
            scene.marked_line = values
        elif key == "identity":
            values = _numbers(rest, backend, lineno, key)
            _expect(values, (2, 3), lineno, key)
            scene.identity = values
        elif key == "point":
            if not rest:
                raise ValidationFailed("point needs a name", lineno, key)
            name, *nums = rest
            if name in scene.points:
                raise ValidationFailed(f"duplicate point name {name!r}", lineno, key)
            values = _numbers(nums, backend, lineno, key)
            _expect(values, (2, 3), lineno, key)
            scene.points[name] = values
    if conic is None:
        raise ValidationFailed("missing conic")
    validate(scene)
    return scene


def validate(scene: Scene) -> None:
    """Check the scene's geometry under its backend's tolerance."""
    eps_before = scalar.get_epsilon()
    if scene.epsilon is not None:
        scalar.set_epsilon(scene.epsilon)
    try:
        try:
            X = scene.build_conic()
            L = scene.line()
        except (GeometryError, ValueError) as exc:
            raise ValidationFailed(str(exc)) from None
        for name, values in scene.points.items():
            try:
                p = _as_point(values)
            except ValueError as exc:
                raise ValidationFailed(f"point {name}: {exc}") from None
            if not conic_contains(X, p):
                raise ValidationFailed(f"point {name} {p!r} is not on the conic")
        if scene.identity is not None:
            try:
                MarkedConic(X, L, _as_point(scene.identity))
            except (GeometryError, ValueError) as exc:
                raise ValidationFailed(str(exc)) from None
    finally:
        scalar.set_epsilon(eps_before)


def serialize_scene(scene: Scene) -> str:
    fmt = scalar.format_scalar

    def nums(values):
        return " ".join(fmt(v) for v in values)

    lines = [f"backend {scene.backend}"]
    if scene.epsilon is not None:
        lines.append(f"epsilon {scene.epsilon!r}")
    lines.append(f"conic {nums(scene.conic)}")
    lines.append(f"marked_line {nums(scene.marked_line)}")
    if scene.identity is not None:
        lines.append(f"identity {nums(scene.identity)}")
    for name, values in scene.points.items():
        lines.append(f"point {name} {nums(values)}")
    return "\n".join(lines) + "\n"
