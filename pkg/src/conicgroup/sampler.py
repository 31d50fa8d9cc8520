"""Seeded generation of marked conics, points and hexagons, and the fuzz driver.

Randomness comes from numpy's Philox counter-based generator. Each trial gets
its own key, derived by hashing ``(seed, trial index)``, so a failing trial
can be replayed alone from the key printed in the report.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from . import scalar
from .classification import ConicClass, classify
from .conic import STANDARD_CIRCLE, STANDARD_HYPERBOLA, STANDARD_PARABOLA, MarkedConic
from .errors import InvalidHexagon, InvalidParameter, SingularTransform
from .group_law import CIRCLE, HYPERBOLA, PARABOLA, STANDARD_KINDS, inverse, oplus
from .pascal import Hexagon, OplusFn, pascal_points, pascal_via_group
from .projective import ProjPoint, ProjTransform, compose
from .scalar import Scalar

STANDARD_BY_KIND = {
    PARABOLA: STANDARD_PARABOLA,
    HYPERBOLA: STANDARD_HYPERBOLA,
    CIRCLE: STANDARD_CIRCLE,
}
CLASS_BY_KIND = {
    PARABOLA: ConicClass.PARABOLA,
    HYPERBOLA: ConicClass.HYPERBOLA,
    CIRCLE: ConicClass.ELLIPSE,
}

PROPERTIES = (
    "identity",
    "commutativity",
    "inverse",
    "closure",
    "associativity",
    "pascal",
    "pascal_group",
    "pushforward",
    "classification",
)

TANGENT_HEXAGON_RATE = 0.25
CIRCLE_BOUNDARY_RATE = 0.05
HEXAGON_RETRIES = 100
FLOAT_MAX_CONDITION = 100.0


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    trials: int = 100
    coefficient_bound: int = 50
    backend: str = scalar.EXACT

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.coefficient_bound < 1:
            raise ValueError("coefficient_bound must be at least 1")
        if self.backend not in scalar.BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}")


def trial_key(seed: int, index: int) -> int:
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def make_rng(key: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key))


# -- primitive draws -------------------------------------------------------

def random_int(rng: np.random.Generator, low: int, high: int) -> int:
    """Uniform integer in ``[low, high]``."""
    return int(rng.integers(low, high, endpoint=True))


def random_rational(rng: np.random.Generator, bound: int) -> Scalar:
    p = random_int(rng, -bound, bound)
    q = 0
    while q == 0:
        q = random_int(rng, -bound, bound)
    return scalar.simplify(Fraction(p, q))


def sample_point(kind: str, t: Scalar) -> ProjPoint:
    """Rational parametrisations of the standard conics."""
    if kind == PARABOLA:
        return ProjPoint((t, t * t, 1))
    if kind == HYPERBOLA:
        if t == 0:
            raise InvalidParameter("the hyperbola has no point at t = 0")
        # (t, 1/t) in homogeneous form
        return ProjPoint((t * t, 1, t))
    if kind == CIRCLE:
        return ProjPoint((1 - t * t, 2 * t, 1 + t * t))
    raise InvalidParameter(f"unknown standard conic {kind!r}")


def random_parameter(rng: np.random.Generator, kind: str, bound: int) -> Scalar:
    while True:
        t = random_rational(rng, bound)
        if kind != HYPERBOLA or t != 0:
            return t


def random_standard_point(rng: np.random.Generator, kind: str, bound: int) -> ProjPoint:
    # the circle parametrisation never reaches (-1, 0); inject it now and then
    if kind == CIRCLE and rng.random() < CIRCLE_BOUNDARY_RATE:
        return ProjPoint((-1, 0, 1))
    return sample_point(kind, random_parameter(rng, kind, bound))


def random_transform(rng: np.random.Generator, bound: int,
                     max_condition: Optional[float] = None) -> ProjTransform:
    """Random invertible rational matrix; singular draws are redrawn.

    ``max_condition`` also redraws matrices whose 2-norm condition number is
    larger, which keeps float-backend scenes well conditioned.
    """
    while True:
        rows = tuple(tuple(random_rational(rng, bound) for _ in range(3)) for _ in range(3))
        try:
            T = ProjTransform(rows)
        except SingularTransform:
            continue
        if max_condition is not None and condition(T) > max_condition:
            continue
        return T


def condition(T: ProjTransform) -> float:
    return float(np.linalg.cond(np.array([[float(x) for x in r] for r in T.matrix])))


def random_kind(rng: np.random.Generator) -> str:
    return STANDARD_KINDS[random_int(rng, 0, 2)]


def _max_condition(cfg: SamplerConfig) -> Optional[float]:
    return FLOAT_MAX_CONDITION if cfg.backend == scalar.FLOAT else None


def sample_marked_conic(cfg: SamplerConfig, rng: np.random.Generator,
                        kind: Optional[str] = None) -> Tuple[MarkedConic, ProjTransform]:
    """A standard marked conic pushed through a random invertible rational transform."""
    if kind is None:
        kind = random_kind(rng)
    T = random_transform(rng, cfg.coefficient_bound, _max_condition(cfg))
    return STANDARD_BY_KIND[kind].transformed(T), T


def sample_hexagon(rng: np.random.Generator, kind: str, T: ProjTransform,
                   bound: int) -> Hexagon:
    """Six points on ``T`` applied to a standard conic.

    A quarter of the time one consecutive pair is merged so the tangent
    convention gets exercised.
    """
    conic = STANDARD_BY_KIND[kind].transformed(T).conic
    for _ in range(HEXAGON_RETRIES):
        params: List[Scalar] = []
        while len(params) < 6:
            t = random_parameter(rng, kind, bound)
            if t not in params:
                params.append(t)
        pts = [T(sample_point(kind, t)) for t in params]
        if rng.random() < TANGENT_HEXAGON_RATE:
            i = random_int(rng, 0, 5)
            pts[(i + 1) % 6] = pts[i]
        try:
            return Hexagon(conic, tuple(pts))
        except InvalidHexagon:
            continue
    raise InvalidHexagon(f"no valid hexagon after {HEXAGON_RETRIES} attempts")


# -- fuzz driver -----------------------------------------------------------

@dataclass
class TrialOutcome:
    prop: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""


@dataclass
class Failure:
    trial: int
    key: int
    prop: str
    detail: str


@dataclass
class FuzzReport:
    config: SamplerConfig
    counts: Dict[str, Dict[str, int]] = field(
        default_factory=lambda: {p: {"pass": 0, "fail": 0, "skip": 0} for p in PROPERTIES}
    )
    failures: List[Failure] = field(default_factory=list)

    @property
    def failure_count(self) -> int:
        return sum(c["fail"] for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def to_text(self) -> str:
        c = self.config
        lines = [
            f"fuzz seed={c.seed} trials={c.trials} bound={c.coefficient_bound} backend={c.backend}",
            f"{'property':<16}{'pass':>7}{'fail':>7}{'skip':>7}",
        ]
        for prop in PROPERTIES:
            n = self.counts[prop]
            lines.append(f"{prop:<16}{n['pass']:>7}{n['fail']:>7}{n['skip']:>7}")
        lines.append(f"failures: {self.failure_count}")
        for f in sorted(self.failures, key=lambda f: (f.trial, f.prop)):
            lines.append(f"  trial {f.trial} key {f.key} {f.prop}: {f.detail}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(
            {
                "config": asdict(self.config),
                "counts": self.counts,
                "failures": [asdict(f) for f in sorted(self.failures, key=lambda f: (f.trial, f.prop))],
            },
            indent=2,
            sort_keys=True,
        )


def run_trial(key: int, cfg: SamplerConfig, oplus_fn: OplusFn = oplus) -> List[TrialOutcome]:
    """All property checks for one trial, driven by its own generator."""
    rng = make_rng(key)
    bound = cfg.coefficient_bound
    kind = random_kind(rng)
    mc, T = sample_marked_conic(cfg, rng, kind)
    std = STANDARD_BY_KIND[kind]
    std_pts = [random_standard_point(rng, kind, bound) for _ in range(3)]
    hexagon = sample_hexagon(rng, kind, T, bound)
    T2 = random_transform(rng, bound, _max_condition(cfg))
    if cfg.backend == scalar.FLOAT:
        while condition(compose(T2, T)) > FLOAT_MAX_CONDITION:
            T2 = random_transform(rng, bound, FLOAT_MAX_CONDITION)

    a, b, c = (T(p) for p in std_pts)
    image = mc.transformed(T2)
    if cfg.backend == scalar.FLOAT:
        # every object is built exactly, then rounded once
        mc, image, std = mc.to_float(), image.to_float(), std.to_float()
        T, T2 = T.to_float(), T2.to_float()
        std_pts = [p.to_float() for p in std_pts]
        a, b, c = (p.to_float() for p in (a, b, c))
        hexagon = Hexagon(hexagon.conic.to_float(), tuple(p.to_float() for p in hexagon.points))
    o = mc.identity

    def add(x, y):
        return oplus_fn(mc, x, y).sum

    checks: List[Tuple[str, Callable[[], Optional[bool]]]] = [
        ("identity", lambda: add(a, o) == a and add(o, a) == a),
        ("commutativity", lambda: add(a, b) == add(b, a)),
        ("inverse", lambda: add(a, inverse(mc, a)) == o),
        ("closure", lambda: mc.contains(add(a, b)) and mc.contains(add(b, c))),
        ("associativity", lambda: add(add(a, b), c) == add(a, add(b, c))),
        ("pascal", lambda: pascal_points(hexagon).collinear),
        ("pascal_group", lambda: _pascal_group(hexagon, oplus_fn)),
        ("pushforward", lambda: _pushforward(mc, image, std, T, T2, std_pts, oplus_fn)),
        ("classification", lambda: classify(mc) == CLASS_BY_KIND[kind]
            and classify(image) == CLASS_BY_KIND[kind]),
    ]
    outcomes = []
    for prop, check in checks:
        try:
            result = check()
        except Exception as exc:  # a raised error is a failed property, not a crash
            outcomes.append(TrialOutcome(prop, "fail", f"{type(exc).__name__}: {exc}"))
            continue
        if result is None:
            outcomes.append(TrialOutcome(prop, "skip", "trivial hexagon"))
        elif result:
            outcomes.append(TrialOutcome(prop, "pass"))
        else:
            outcomes.append(TrialOutcome(prop, "fail", "property does not hold"))
    return outcomes


def _pascal_group(hexagon: Hexagon, oplus_fn: OplusFn) -> Optional[bool]:
    res = pascal_points(hexagon)
    if res.trivial_reason is not None:
        return None
    return pascal_via_group(hexagon, oplus_fn) == res.collinear


def _pushforward(mc, image, std, T, T2, std_pts, oplus_fn) -> bool:
    x, y = std_pts[0], std_pts[1]
    # standard -> mc along T
    if T(oplus_fn(std, x, y).sum) != oplus_fn(mc, T(x), T(y)).sum:
        return False
    # mc -> a further random image along T2
    a, b = T(x), T(y)
    return T2(oplus_fn(mc, a, b).sum) == oplus_fn(image, T2(a), T2(b)).sum


def fuzz_suite(cfg: SamplerConfig, oplus_fn: OplusFn = oplus) -> FuzzReport:
    """Run ``cfg.trials`` independent trials; failures are recorded, never raised.

    ``oplus_fn`` replaces the group law in every group check, which lets a
    deliberately broken implementation exercise the harness.
    """
    report = FuzzReport(cfg)
    for i in range(cfg.trials):
        key = trial_key(cfg.seed, i)
        for out in run_trial(key, cfg, oplus_fn):
            report.counts[out.prop][out.status] += 1
            if out.status == "fail":
                report.failures.append(Failure(i, key, out.prop, out.detail))
    return report
