import pytest
from hypothesis import given, settings, strategies as st

from conicgroup.classification import (
    ConicClass, classify, normalization_residuals, normalize, pushforward_check,
)
from conicgroup.conic import (
    CIRCLE, PARABOLA, STANDARD_CIRCLE, STANDARD_HYPERBOLA, STANDARD_PARABOLA, Conic, MarkedConic,
)
from conicgroup.errors import IrrationalNormalization
from conicgroup.projective import IDENTITY, LINE_AT_INFINITY, ProjTransform, det3, line, point
from conicgroup.sampler import sample_point

small = st.integers(-7, 7)
matrices = st.tuples(*[st.tuples(small, small, small)] * 3).filter(lambda m: det3(m) != 0)
params = st.fractions(min_value=-20, max_value=20, max_denominator=20).filter(lambda t: t != 0)
STD = [(STANDARD_PARABOLA, ConicClass.PARABOLA, "parabola"),
       (STANDARD_HYPERBOLA, ConicClass.HYPERBOLA, "hyperbola"),
       (STANDARD_CIRCLE, ConicClass.ELLIPSE, "circle")]


@pytest.mark.parametrize("mc,klass,_", STD)
def test_standard_classes(mc, klass, _):
    assert classify(mc) is klass


@pytest.mark.parametrize("mc,klass,_", STD)
def test_standard_normalizes_to_identity(mc, klass, _):
    n = normalize(mc)
    assert n.klass is klass and n.transform == IDENTITY and n.target == mc


def test_parabola_shift():
    mc = MarkedConic(PARABOLA, LINE_AT_INFINITY, point(3, 9))
    n = normalize(mc)
    assert n.transform(point(3, 9)) == point(0, 0)
    assert n.transform == ProjTransform(((1, 0, -3), (-6, 1, 9), (0, 0, 1)))
    assert mc.transformed(n.transform) == STANDARD_PARABOLA


def test_circle_of_radius_sqrt2():
    mc = MarkedConic(Conic((1, 0, 1, 0, 0, -2)), LINE_AT_INFINITY, point(1, 1))
    with pytest.raises(IrrationalNormalization):
        normalize(mc)
    n = normalize(mc.to_float())
    assert n.klass is ConicClass.ELLIPSE
    assert max(normalization_residuals(mc, n).values()) < 1e-9


def test_finite_marked_line():
    # circle marked by a secant: two points on the line, so a hyperbola class
    mc = MarkedConic(CIRCLE, line(1, 0, 0), point(1, 0))
    assert classify(mc) is ConicClass.HYPERBOLA
    # tangent x = -1
    mc = MarkedConic(CIRCLE, line(1, 0, 1), point(1, 0))
    assert classify(mc) is ConicClass.PARABOLA
    # missing line x = 2
    mc = MarkedConic(CIRCLE, line(1, 0, -2), point(1, 0))
    assert classify(mc) is ConicClass.ELLIPSE


def test_pushforward_identity():
    pairs = [(point(1, 1), point(2, 4)), (point(-1, 1), point(-1, 1))]
    assert pushforward_check(STANDARD_PARABOLA, IDENTITY, pairs)


@settings(max_examples=40, deadline=None)
@given(matrices, st.data())
def test_classify_invariant_and_normalize(m, data):
    T = ProjTransform(m)
    mc, klass, kind = data.draw(st.sampled_from(STD))
    image = mc.transformed(T)
    assert classify(image) is klass
    try:
        n = normalize(image)
    except IrrationalNormalization:
        n = normalize(image.to_float())
        assert max(normalization_residuals(image, n).values()) < 1e-6
        return
    assert n.klass is klass and image.transformed(n.transform) == n.target


@settings(max_examples=25, deadline=None)
@given(matrices, st.lists(params, min_size=4, max_size=4))
def test_pushforward_random(m, ts):
    T = ProjTransform(m)
    for mc, _, kind in STD:
        pts = [sample_point(kind, t) for t in ts]
        pairs = list(zip(pts[::2], pts[1::2]))
        assert pushforward_check(mc, T, pairs)


def test_residuals_with_identity_at_infinity():
    mc = MarkedConic(Conic((0, 2, -2, -2, 2, -1)), line(1, 0, 0), point(1, 0, 0))
    n = normalize(mc.to_float())
    assert max(normalization_residuals(mc, n).values()) < 1e-9
