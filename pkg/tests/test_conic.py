import pytest
from hypothesis import assume, given, strategies as st

from conicgroup.conic import (
    CIRCLE, HYPERBOLA, PARABOLA, STANDARD_CIRCLE, Conic, chord_or_tangent, conic_contains,
    make_marked, second_intersection, tangent_line, transform_conic,
)
from conicgroup.errors import (
    DegenerateConic, IdentityNotOnConic, IdentityOnMarkedLine, PointNotOnConic,
)
from conicgroup.projective import LINE_AT_INFINITY, ProjPoint, ProjTransform, det3, incident, line, point
from conicgroup.sampler import sample_point

params = st.fractions(min_value=-50, max_value=50, max_denominator=50)
small = st.integers(-9, 9)
matrices = st.tuples(*[st.tuples(small, small, small)] * 3).filter(lambda m: det3(m) != 0)


def _restriction_disc(X, l):
    # oracle: two points on l, discriminant of t -> Q(r + t s)
    from conicgroup.classification import _points_on_line
    r, s = _points_on_line(l)
    return X.polar(r, s) ** 2 - 4 * X.quad(r) * X.quad(s)


def test_degenerate_rejected():
    with pytest.raises(DegenerateConic):
        Conic((1, 0, -1, 0, 0, 0))  # x^2 - y^2, a line pair
    with pytest.raises(DegenerateConic):
        Conic((1, 0, 0, 0, 0, 0))


def test_contains():
    assert conic_contains(CIRCLE, point(1, 0))
    assert not conic_contains(CIRCLE, point(0, 0))
    assert conic_contains(PARABOLA, point(2, 4))


def test_tangent_examples():
    assert tangent_line(CIRCLE, point(1, 0)) == line(1, 0, -1)
    assert tangent_line(PARABOLA, point(0, 0)) == line(0, 1, 0)
    t = tangent_line(HYPERBOLA, point(1, 1))
    assert incident(point(1, 1), t)
    assert _restriction_disc(HYPERBOLA, t) == 0
    with pytest.raises(PointNotOnConic):
        tangent_line(CIRCLE, point(0, 0))


def test_chord_examples():
    assert chord_or_tangent(CIRCLE, point(1, 0), point(0, 1)) == line(1, 1, -1)
    assert chord_or_tangent(CIRCLE, point(1, 0), point(1, 0)) == line(1, 0, -1)
    assert chord_or_tangent(PARABOLA, point(1, 1), point(-1, 1)) == line(0, 1, -1)


def test_second_intersection_examples():
    assert second_intersection(CIRCLE, point(1, 0), point(0, 0)) == point(-1, 0)
    assert second_intersection(CIRCLE, point(1, 0), point(1, 1)) == point(1, 0)
    assert second_intersection(PARABOLA, point(0, 0), ProjPoint((1, 1, 0))) == point(1, 1)


def test_make_marked():
    assert make_marked(CIRCLE, LINE_AT_INFINITY, point(1, 0)) == STANDARD_CIRCLE
    with pytest.raises(IdentityNotOnConic):
        make_marked(CIRCLE, LINE_AT_INFINITY, point(0, 0))
    with pytest.raises(IdentityOnMarkedLine):
        make_marked(CIRCLE, line(1, 0, -1), point(1, 0))


@given(params, st.tuples(small, small, small).filter(any))
def test_second_intersection_on_conic_and_line(t, d):
    a = sample_point("circle", t)
    D = ProjPoint(d)
    assume(D != a)
    b = second_intersection(CIRCLE, a, D)
    assert conic_contains(CIRCLE, b)
    assert det3((a.coords, D.coords, b.coords)) == 0


@given(matrices, params)
def test_transform_maps_points_onto_image(m, t):
    T = ProjTransform(m)
    for X, kind in ((PARABOLA, "parabola"), (CIRCLE, "circle")):
        assert conic_contains(transform_conic(T, X), T(sample_point(kind, t)))
