"""Exception types shared across the package."""


class ScaleSpaceError(Exception):
    """Base class for the domain errors of this package."""


class DivisionByZero(ScaleSpaceError, ZeroDivisionError):
    pass


class ShapeMismatch(ScaleSpaceError, ValueError):
    pass


class SingularMatrix(ScaleSpaceError, ArithmeticError):
    pass


class SpaceMismatch(ScaleSpaceError, ValueError):
    """Operands live in different spaces."""


class NonPositiveScalar(ScaleSpaceError, ValueError):
    pass


class AlreadyComplete(ScaleSpaceError, ValueError):
    pass


class NotSemiFree(ScaleSpaceError, TypeError):
    pass


class InvalidMap(ScaleSpaceError, ValueError):
    """Matrix data does not describe a semi-linear map between the given spaces."""


class BaseMismatch(ScaleSpaceError, ValueError):
    pass


class FractionalPowerOfNegative(ScaleSpaceError, ValueError):
    pass


class ZeroToNonpositivePower(ScaleSpaceError, ValueError):
    pass


class SingularBasis(ScaleSpaceError, ValueError):
    pass


class DimensionMismatch(ScaleSpaceError, ValueError):
    pass
