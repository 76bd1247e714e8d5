"""Exception types raised by the geometry engine."""


class GeometryError(ValueError):
    """Base class for invalid geometric input or degenerate configurations."""


class PoleError(GeometryError):
    pass


class DegenerateTransform(GeometryError):
    pass


class NotInDisk(GeometryError):
    pass


class NotOnSphere(GeometryError):
    pass


class CoincidentIdealPoints(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class IdenticalGeodesics(GeometryError):
    pass


class NumericalInstability(ArithmeticError):
    pass


class NotAHorodisk(GeometryError):
    pass


class SameBasePoint(GeometryError):
    pass


class InvalidHexagon(GeometryError):
    pass


class InvalidAngles(GeometryError):
    pass


class InvalidArc(GeometryError):
    pass


class DegenerateTriangle(GeometryError):
    pass


class InternalError(RuntimeError):
    pass
