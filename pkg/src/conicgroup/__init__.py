"""Exact and floating-point projective geometry of marked conics.

Points of a conic off a chosen line form a group under a chord construction;
this package computes that group law, checks Pascal's hexagon theorem, sorts
marked conics into three classes and moves them onto standard models.
"""

from .classification import ConicClass, classify, normalize
from .conic import Conic, MarkedConic, make_marked
from .group_law import inverse, oplus, standard_oplus
from .pascal import Hexagon, pascal_points, pascal_via_group, verify_pascal
from .projective import ProjLine, ProjPoint, ProjTransform, join, meet, point

__all__ = [
    "ConicClass", "Conic", "Hexagon", "MarkedConic", "ProjLine", "ProjPoint", "ProjTransform",
    "classify", "inverse", "join", "make_marked", "meet", "normalize", "oplus",
    "pascal_points", "pascal_via_group", "point", "standard_oplus", "verify_pascal",
]
