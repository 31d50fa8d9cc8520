from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from conicgroup.projective import LINE_AT_INFINITY, point
from conicgroup.scene import (
    MalformedNumber, UnknownField, ValidationFailed, parse_scene, serialize_scene,
)

CIRCLE_SCENE = """\
# unit circle
conic 1 0 1 0 0 -1
identity 1 0
point P 3/5 4/5
point Q 0 1 1
"""


def test_minimal_scene():
    s = parse_scene(CIRCLE_SCENE)
    assert s.point("P") == point(Fr(3, 5), Fr(4, 5))
    assert s.point("Q") == point(0, 1)
    assert s.line() == LINE_AT_INFINITY
    assert s.marked_conic().identity == point(1, 0)


def test_point_off_conic():
    with pytest.raises(ValidationFailed):
        parse_scene(CIRCLE_SCENE + "point R 1 1\n")


@pytest.mark.parametrize("extra,exc,lineno", [
    ("point R 1/x 0\n", MalformedNumber, 6),
    ("colour red\n", UnknownField, 6),
    ("point P 1 0\n", ValidationFailed, 6),
    ("conic 1 0 1 0 0 -1\n", ValidationFailed, 6),
    ("point R 0.6 0.8\n", MalformedNumber, 6),
])
def test_errors_carry_line_numbers(extra, exc, lineno):
    with pytest.raises(exc) as info:
        parse_scene(CIRCLE_SCENE + extra)
    assert info.value.lineno == lineno


def test_missing_conic():
    with pytest.raises(ValidationFailed):
        parse_scene("identity 1 0\n")


def test_degenerate_conic():
    with pytest.raises(ValidationFailed):
        parse_scene("conic 1 0 -1 0 0 0\n")


def test_identity_on_marked_line():
    with pytest.raises(ValidationFailed):
        parse_scene("conic 1 0 1 0 0 -1\nmarked_line 1 0 -1\nidentity 1 0\n")


def test_float_scene_with_epsilon():
    text = "backend float\nepsilon 1e-6\nconic 1 0 1 0 0 -1\nidentity 1 0\npoint P 0.6 0.8000001\n"
    s = parse_scene(text)
    assert s.epsilon == 1e-6
    with pytest.raises(ValidationFailed):
        parse_scene(text.replace("epsilon 1e-6\n", ""))


def test_roundtrip():
    s = parse_scene(CIRCLE_SCENE)
    assert parse_scene(serialize_scene(s)) == s


fracs = st.fractions(min_value=-100, max_value=100, max_denominator=100)


@given(fracs.filter(lambda t: t != 0))
def test_roundtrip_hyperbola_points(t):
    text = f"conic 0 1 0 0 0 -1\nidentity 1 1\npoint A {t} {1 / t}\n"
    s = parse_scene(text)
    again = parse_scene(serialize_scene(s))
    assert again == s and again.point("A") == point(t, 1 / t)


def test_shipped_scenes_parse():
    from pathlib import Path
    files = sorted((Path(__file__).parent.parent / "scenes").glob("*.scene"))
    assert files
    for f in files:
        assert parse_scene(f.read_text()).marked_conic()
