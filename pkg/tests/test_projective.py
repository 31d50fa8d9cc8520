from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from conicgroup.errors import IdenticalLines, IdenticalPoints, SingularTransform
from conicgroup.projective import (
    IDENTITY, LINE_AT_INFINITY, ProjLine, ProjPoint, ProjTransform, apply_line, apply_point,
    collinear, compose, det3, dot, incident, inverse, join, line, meet, point,
    transform_sending_line_to_infinity,
)

small = st.integers(-20, 20)
triples = st.tuples(small, small, small).filter(lambda t: any(t))
matrices = st.tuples(*[st.tuples(small, small, small)] * 3).filter(lambda m: det3(m) != 0)


def test_canonical_form():
    assert ProjPoint((2, 4, 6)).coords == (1, 2, 3)
    assert ProjPoint((-2, 4, 6)).coords == (1, -2, -3)
    assert ProjPoint((Fraction(1, 2), Fraction(1, 3), 1)).coords == (3, 2, 6)
    assert ProjPoint((2, 4, 6)) == ProjPoint((-1, -2, -3))
    assert hash(ProjPoint((2, 4, 6))) == hash(ProjPoint((1, 2, 3)))


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        ProjPoint((0, 0, 0))


def test_float_points_compare_up_to_scale():
    assert ProjPoint((1.0, 2.0, 3.0)) == ProjPoint((2.0, 4.0, 6.0 + 1e-12))
    assert ProjPoint((1.0, 2.0, 3.0)) != ProjPoint((1.0, 2.0, 3.1))


def test_join_examples():
    assert join(ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0))) == LINE_AT_INFINITY
    assert join(point(0, 0), point(1, 1)) == line(1, -1, 0)
    p, q = point(1, 2), point(3, 4)
    l = join(p, q)
    assert dot(l.coords, p.coords) == 0 and dot(l.coords, q.coords) == 0


def test_join_identical():
    with pytest.raises(IdenticalPoints):
        join(point(1, 2), ProjPoint((2, 4, 2)))


def test_meet_examples():
    assert meet(line(1, 0, 0), line(0, 1, 0)) == point(0, 0)
    assert meet(line(1, 0, -1), LINE_AT_INFINITY) == ProjPoint((0, 1, 0))
    assert meet(line(1, 1, 0), line(1, 1, -5)).at_infinity
    with pytest.raises(IdenticalLines):
        meet(line(1, 2, 3), line(2, 4, 6))


def test_incident_and_collinear():
    assert incident(point(1, 1), line(1, -1, 0))
    assert incident(ProjPoint((1, 0, 0)), LINE_AT_INFINITY)
    assert not incident(point(1, 1), LINE_AT_INFINITY)
    assert collinear(point(1, 0), point(2, 0), point(3, 0))
    assert not collinear(point(0, 0), point(1, 0), point(0, 1))
    p = point(4, 5)
    assert collinear(p, point(1, 1), p)


def test_transforms():
    swap = ProjTransform(((0, 1, 0), (1, 0, 0), (0, 0, 1)))
    assert apply_point(IDENTITY, point(3, 7)) == point(3, 7)
    assert apply_point(swap, point(1, 2)) == point(2, 1)
    assert inverse(IDENTITY) == IDENTITY
    d = ProjTransform(((2, 0, 0), (0, 3, 0), (0, 0, 1)))
    assert inverse(d) == ProjTransform(((Fraction(1, 2), 0, 0), (0, Fraction(1, 3), 0), (0, 0, 1)))
    with pytest.raises(SingularTransform):
        ProjTransform(((1, 2, 3), (2, 4, 6), (0, 0, 1)))


@pytest.mark.parametrize("l", [(0, 0, 1), (1, 0, 0), (1, 1, 1), (0, 3, -2), (5, -7, 11)])
def test_line_to_infinity(l):
    T = transform_sending_line_to_infinity(ProjLine(l))
    assert apply_line(T, ProjLine(l)) == LINE_AT_INFINITY


def test_line_to_infinity_fixes_infinity():
    T = transform_sending_line_to_infinity(LINE_AT_INFINITY)
    assert apply_line(T, LINE_AT_INFINITY) == LINE_AT_INFINITY


@given(triples, triples)
def test_join_is_incident(p, q):
    P, Q = ProjPoint(p), ProjPoint(q)
    assume(P != Q)
    l = join(P, Q)
    assert incident(P, l) and incident(Q, l)


@given(triples, triples, triples)
def test_join_meet_duality(p, q, r):
    P, Q, R = ProjPoint(p), ProjPoint(q), ProjPoint(r)
    assume(P != Q and P != R and not collinear(P, Q, R))
    assert meet(join(P, Q), join(P, R)) == P


@given(matrices, triples, triples)
def test_incidence_preserved(m, p, q):
    T = ProjTransform(m)
    P, Q = ProjPoint(p), ProjPoint(q)
    assume(P != Q)
    l = join(P, Q)
    assert incident(T(P), T(l))
    assert T(l) == join(T(P), T(Q))


@given(matrices, matrices, triples)
def test_compose_and_inverse(a, b, p):
    A, B, P = ProjTransform(a), ProjTransform(b), ProjPoint(p)
    assert compose(A, inverse(A)) == IDENTITY
    assert compose(A, B)(P) == A(B(P))
