"""Exception hierarchy shared by every curvesim module."""


class CurvesimError(Exception):
    """Base class for all library errors."""


class ZeroDenominator(CurvesimError, ZeroDivisionError):
    pass


class DegenerateInput(CurvesimError):
    """The parametrization is constant (or otherwise not a curve)."""


class CurveIsLine(CurvesimError):
    pass


class CurveIsCircle(CurvesimError):
    pass


class ImproperParametrization(CurvesimError):
    pass


class UnequalDegrees(CurvesimError):
    """Curves of different degree can never be similar."""


class PreconditionViolated(CurvesimError):
    pass


class InternalDegenerate(CurvesimError):
    """A situation the theory rules out for valid input was reached."""


class IncompatibleExtensions(CurvesimError):
    """Two algebraic values live in number fields that were not unified."""


class CurveFileError(CurvesimError):
    """Malformed curve file; the message carries the offending location."""
