"""Exception types shared across the package."""


class TamewildError(Exception):
    """Base class for every error raised by this package."""


class ModulusMismatch(TamewildError):
    """Operands live over different prime fields."""


class ZeroInverse(TamewildError):
    """Multiplicative inverse of zero requested."""


class DivisionByZeroPoly(TamewildError):
    """Polynomial division by the zero polynomial."""


class BothZero(TamewildError):
    """gcd of two zero polynomials is undefined."""


class DuplicateNode(TamewildError):
    """Interpolation table contains a repeated abscissa."""


class EmptyTable(TamewildError):
    """Interpolation table contains no nodes."""


class ShapeMismatch(TamewildError):
    """Matrix or tuple dimensions are incompatible."""


class NotSquare(TamewildError):
    """Operation requires a square matrix."""


class Singular(TamewildError):
    """Matrix has no inverse."""


class TooLarge(TamewildError):
    """Search space exceeds the configured hard guard."""


class SingularPolyMatrix(TamewildError):
    """Polynomial matrix is singular over F_p[x]."""


class InvalidChain(TamewildError):
    """Sequence of polynomials is not a valid divisibility chain."""


class ArityMismatch(TamewildError):
    """Variable count of a non-commutative polynomial does not match its input."""


class BudgetExceeded(TamewildError):
    """Step charge went past the configured budget."""


class NondeterministicTable(TamewildError):
    """Transducer transition table has conflicting entries for one input value."""


class RunTooLong(TamewildError):
    """Transducer run did not halt within its step bound."""
