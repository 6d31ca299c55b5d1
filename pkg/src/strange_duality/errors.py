"""Exception types raised across the package."""


class StrangeDualityError(Exception):
    """Base class for every error raised by this package."""


class FrameParseError(StrangeDualityError, ValueError):
    pass


class NonPolynomial(StrangeDualityError, ArithmeticError):
    """The product of (x^m - 1)^e leaves a remainder."""


class NotCyclotomicProduct(StrangeDualityError, ValueError):
    pass


class PoleAtOne(StrangeDualityError, ArithmeticError):
    pass


class NonIntegerMilnorNumber(StrangeDualityError, ValueError):
    pass


class NonIntegralExponent(StrangeDualityError, ValueError):
    pass


class DegenerateWeightSystem(StrangeDualityError, ValueError):
    """Weight system whose Milnor number vanishes."""


class WrongClass(StrangeDualityError, ValueError):
    pass


class DegenerateForm(StrangeDualityError, ArithmeticError):
    pass


class DiagonalNotMinusTwo(StrangeDualityError, ValueError):
    pass


class UnknownSymbol(StrangeDualityError, ValueError):
    pass


class UnknownName(StrangeDualityError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else "unknown name"


class NoFormula(StrangeDualityError, ValueError):
    pass


class CatalogError(StrangeDualityError, ValueError):
    """The catalog data file failed schema or invariant validation."""


class ShapeMismatch(StrangeDualityError, ValueError):
    pass


class UnsupportedConvention(StrangeDualityError, ValueError):
    pass


class DomainError(StrangeDualityError, ValueError):
    pass


class NonPositiveD(StrangeDualityError, ValueError):
    pass
