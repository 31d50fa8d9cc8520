"""Scalar backends.

Two number types flow through the kernel:

* exact: ``int`` and ``fractions.Fraction`` (arbitrary precision, canonical
  lowest terms with positive denominator, courtesy of ``Fraction``);
* float: Python ``float``, compared with a relative tolerance ``EPSILON``.

The backend of a computation is decided by the values themselves: any float
operand puts the comparison on the float backend.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisionByZero

Scalar = Union[int, Fraction, float]

EXACT = "exact"
FLOAT = "float"
BACKENDS = (EXACT, FLOAT)

EPSILON = 1e-9


def set_epsilon(eps: float) -> None:
    global EPSILON
    if not eps > 0:
        raise ValueError(f"epsilon must be positive, got {eps!r}")
    EPSILON = float(eps)


def get_epsilon() -> float:
    return EPSILON


_EXACT_TYPES = frozenset((int, Fraction))


def is_exact(x: Scalar) -> bool:
    return type(x) in _EXACT_TYPES or (isinstance(x, (int, Fraction)) and not isinstance(x, bool))


def all_exact(values: Iterable[Scalar]) -> bool:
    return all(is_exact(v) for v in values)


def backend_of(values: Iterable[Scalar]) -> str:
    return EXACT if all_exact(values) else FLOAT


def add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def sub(a: Scalar, b: Scalar) -> Scalar:
    return a - b


def mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def div(a: Scalar, b: Scalar) -> Scalar:
    if is_zero(b):
        raise DivisionByZero(f"division by {b!r}")
    if is_exact(a) and is_exact(b):
        return Fraction(a) / Fraction(b)
    return a / b


def is_zero(a: Scalar, scale: float | None = None) -> bool:
    """Zero test; on floats ``|a| <= EPSILON``, or ``EPSILON * scale`` when
    the magnitude of the terms that produced ``a`` is known."""
    if is_exact(a):
        return a == 0
    if scale is None:
        return abs(a) <= EPSILON
    return abs(a) <= EPSILON * abs(scale)


def eq(a: Scalar, b: Scalar) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(a - b) <= EPSILON * max(1.0, abs(a), abs(b))


def sign(a: Scalar, scale: float | None = None) -> int:
    if is_zero(a, scale):
        return 0
    return 1 if a > 0 else -1


def simplify(x: Scalar) -> Scalar:
    """Collapse integral fractions to ``int``."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def to_float(x: Scalar) -> float:
    return float(x)


def exact_sqrt(x: Scalar) -> Scalar | None:
    """Square root of an exact scalar if it is rational, else ``None``."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return simplify(Fraction(rn, rd))
    return None


def sqrt(x: Scalar) -> Scalar | None:
    """Backend-aware square root; ``None`` when the exact root is irrational."""
    if is_exact(x):
        return exact_sqrt(x)
    if x < 0:
        if -x <= EPSILON:
            return 0.0
        return None
    return math.sqrt(x)


def parse(text: str, backend: str = EXACT) -> Scalar:
    """Parse ``"p/q"``, an integer, or (float backend only) a decimal literal."""
    text = text.strip()
    if backend == EXACT:
        try:
            if "/" in text:
                num, den = text.split("/")
                value = Fraction(int(num), int(den))
            else:
                value = int(text)
        except ZeroDivisionError:
            raise DivisionByZero(f"zero denominator in {text!r}") from None
        except ValueError:
            raise ValueError(f"not an exact rational literal: {text!r}") from None
        return simplify(value) if isinstance(value, Fraction) else value
    if backend == FLOAT:
        if "/" in text:
            num, den = text.split("/")
            if float(den) == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return float(num) / float(den)
        value = float(text)
        if not math.isfinite(value):
            raise ValueError(f"non-finite literal: {text!r}")
        return value
    raise ValueError(f"unknown backend {backend!r}")


def format_scalar(x: Scalar) -> str:
    if is_exact(x):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return repr(float(x))
