"""Exception hierarchy.

``DomainError`` covers everything a caller can trigger with bad input;
``InternalInvariantError`` means the library itself misbehaved.
"""


class ZeckError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ZeckError):
    """An operation was called outside its domain."""


class ParseError(DomainError, ValueError):
    """A bitstring contained something other than '0' and '1'."""


class CanonicityError(DomainError, ValueError):
    """Digits do not form a canonical Zeckendorf representation."""


class NegativeResult(DomainError, ArithmeticError):
    """Subtraction would produce a negative number."""


class DivisionByZero(DomainError, ZeroDivisionError):
    pass


class ZeroMultiplicand(DomainError, ValueError):
    pass


class PreconditionViolated(DomainError, ValueError):
    """An identity was evaluated outside the range where it is claimed."""


class InternalInvariantError(ZeckError, RuntimeError):
    """A digit bound, buffer width or rewrite budget was exceeded."""
