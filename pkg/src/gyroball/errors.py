"""Exception types raised by the geometric operations."""


class GeometryError(Exception):
    """Base class for all geometric failures."""


class BoundaryViolation(GeometryError):
    """A point lies on or outside the guarded s-ball boundary."""


class DimensionMismatch(GeometryError):
    """Operands live in different ambient dimensions."""


class DegenerateRay(GeometryError):
    """An angle leg has zero gyrolength (ray endpoint equals the vertex)."""


class OutsideBall(GeometryError):
    """A gyrobarycentric representation has no point in the ball (m0^2 <= 0)."""


class ZeroDenominator(GeometryError):
    """The gamma-weighted denominator of a representation vanishes."""


class FrameMismatch(GeometryError):
    """Two representations refer to different reference point sets."""


class DegenerateTriangle(GeometryError):
    """Triangle vertices are coincident or gyrocollinear."""


class AngleSumNotHyperbolic(GeometryError):
    """An angle triple has sum >= pi and defines no gyrotriangle."""


class NoCircumcircle(GeometryError):
    """The circumgyrocircle existence condition D3 > H3 fails.

    The ``detail`` attribute records the violated inequality.
    """

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class CoincidentPoints(GeometryError):
    """Two points that must be distinct coincide."""


class InteriorPoint(GeometryError):
    """A tangency-based operation was applied to an interior point."""


class ParamOutOfRange(GeometryError):
    """A cevian or circle parameter lies outside its admissible range."""


class CollinearPoints(GeometryError):
    """Euclidean points that must span a triangle are collinear."""


class DegenerateConfiguration(GeometryError):
    """A power-of-a-point configuration has a zero-length chord or leg."""


class SideUndetermined(GeometryError):
    """A point lies on the reference line within tolerance; no side can be assigned."""


class SceneValidationError(GeometryError):
    """A CLI scene document failed validation.

    ``paths`` holds JSON-pointer strings locating each offending field.
    """

    def __init__(self, message, paths=()):
        super().__init__(message)
        self.paths = list(paths)


class RenderUnsupportedDimension(GeometryError):
    """SVG rendering is only defined for plane (n=2) scenes."""
