"""Exception types raised by the kernel."""


class GeometryError(ValueError):
    """Base class for rejected geometric inputs."""


class DivisionByZero(ZeroDivisionError):
    pass


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class SingularTransform(GeometryError):
    pass


class DegenerateConic(GeometryError):
    pass


class PointNotOnConic(GeometryError):
    pass


class IdentityNotOnConic(GeometryError):
    pass


class IdentityOnMarkedLine(GeometryError):
    pass


class PointOnMarkedLine(GeometryError):
    pass


class InvalidHexagon(GeometryError):
    pass


class TrivialHexagon(GeometryError):
    """Two of the three opposite-side meets coincide."""


class InvalidParameter(GeometryError):
    pass


class GroupRouteUnavailable(GeometryError):
    """Every usable rotation leaves some vertex on the marked line."""


class IrrationalNormalization(ArithmeticError):
    """The exact backend would need an irrational square root."""


class NothingVisible(ValueError):
    pass


class KernelBug(AssertionError):
    """An internal invariant failed. Raising this means the kernel is wrong."""


class NoValidCycle(KernelBug):
    pass
