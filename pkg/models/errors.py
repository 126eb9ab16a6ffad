"""
Domain errors

Every failure the algebra can report has its own exception class. The
``code`` attribute is the short name printed by the command line front end.
"""

from typing import Optional


class CurveAlgebraError(Exception):
    """Base class for all domain errors"""

    code = "CurveAlgebraError"


class CurveParseError(ValueError):
    """Raised when a form, curve or matrix text cannot be parsed"""

    code = "ParseError"


# ============================================
# Arithmetic
# ============================================

class BothZeroError(CurveAlgebraError):
    code = "BothZero"


class NotDivisibleError(CurveAlgebraError):
    code = "NotDivisible"


class DivideByZeroError(CurveAlgebraError):
    code = "DivideByZero"


class ZeroResultantError(CurveAlgebraError):
    """The moving lines share a common factor in (s,t)"""

    code = "ZeroResultant"

    def __init__(self, message: str, resultant: Optional[object] = None):
        super().__init__(message)
        self.resultant = resultant


# ============================================
# Syzygies and curves
# ============================================

class NotPrimitiveError(CurveAlgebraError):
    code = "NotPrimitive"


class DegenerateLineError(CurveAlgebraError):
    code = "DegenerateLine"


class MinorMismatchError(CurveAlgebraError):
    code = "MinorMismatch"


class ZeroInputError(CurveAlgebraError):
    code = "ZeroInput"


class PowerExtractionFailedError(CurveAlgebraError):
    code = "PowerExtractionFailed"


class ImplicitCheckError(CurveAlgebraError):
    code = "ImplicitCheckFailed"


# ============================================
# Scroll lift
# ============================================

class ChartExhaustedError(CurveAlgebraError):
    code = "ChartExhausted"


class GcdDegreeMismatchError(CurveAlgebraError):
    code = "GcdDegreeMismatch"


class CenterOnCurveError(CurveAlgebraError):
    code = "CenterOnCurve"


class WrongSplittingError(CurveAlgebraError):
    code = "WrongSplitting"


class IrrationalNormalizationError(CurveAlgebraError):
    code = "IrrationalNormalization"


class LiftVerificationError(CurveAlgebraError):
    code = "LiftVerificationFailed"
