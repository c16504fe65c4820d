"""Exception types raised across the package."""


class CyclotomyError(Exception):
    """Base class for all package errors."""


class NotDivisibleError(CyclotomyError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class ModulusMismatchError(CyclotomyError, ValueError):
    """Two field elements live in different cyclotomic fields."""


class FieldZeroDivisionError(CyclotomyError, ZeroDivisionError):
    """Inverse of the zero element was requested."""


class PoleError(CyclotomyError, ZeroDivisionError):
    """A logarithmic derivative was requested at a zero of the polynomial."""


class NotAlgebraicIntegerError(CyclotomyError, ValueError):
    """An element with non-integral coordinates was passed where an algebraic integer is required."""


class InapplicableError(CyclotomyError, ValueError):
    """The hypotheses of a closed formula do not hold for the given arguments."""


class NoQuadraticCharacterError(CyclotomyError, ValueError):
    """No unique even real non-principal character exists for the modulus."""
