from fractions import Fraction as Fr

import pytest

from conicgroup.conic import PARABOLA, STANDARD_CIRCLE, STANDARD_HYPERBOLA
from conicgroup.errors import NothingVisible
from conicgroup.group_law import oplus
from conicgroup.pascal import Hexagon, pascal_points
from conicgroup.projective import point
from conicgroup.render import Drawing, element_counts, oplus_drawing, pascal_drawing, render_svg


def circle_svg(**kw):
    mc = STANDARD_CIRCLE
    a, b = point(Fr(3, 5), Fr(4, 5)), point(0, 1)
    return render_svg(oplus_drawing(mc, a, b, oplus(mc, a, b)), window=(-2, 2, -2, 2), **kw)


def test_oplus_structure():
    svg = circle_svg()
    counts = element_counts(svg)
    assert counts["path"] == 1           # the circle
    assert counts["line"] == 2           # two chords; the marked line is at infinity
    assert counts["circle"] == 4         # a, b, o, result; p is at infinity
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")


def test_deterministic():
    assert circle_svg() == circle_svg()


def test_nothing_visible():
    with pytest.raises(NothingVisible):
        render_svg(Drawing())
    with pytest.raises(NothingVisible):
        render_svg(
            oplus_drawing(STANDARD_CIRCLE, point(1, 0), point(1, 0),
                          oplus(STANDARD_CIRCLE, point(1, 0), point(1, 0))),
            window=(50, 60, 50, 60))


def test_hyperbola_has_two_branches():
    mc = STANDARD_HYPERBOLA
    a, b = point(2, Fr(1, 2)), point(-1, -1)
    svg = render_svg(oplus_drawing(mc, a, b, oplus(mc, a, b)), window=(-5, 5, -5, 5))
    assert element_counts(svg)["path"] == 2


def test_pascal_drawing():
    h = Hexagon(PARABOLA, tuple(point(x, x * x) for x in (-3, -1, 0, 1, 2, 3)))
    svg = render_svg(pascal_drawing(h, pascal_points(h)), window=(-10, 10, -5, 15))
    counts = element_counts(svg)
    assert counts["path"] >= 1 and counts["line"] >= 6 and counts["circle"] >= 6
