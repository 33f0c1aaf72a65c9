"""Exact integer arithmetic on Zeckendorf representations over Lucas numbers."""

from .arithmetic import add, divmod_, lucas_multiples, mul, sub
from .core import (RULE_NAMES, ZERO, Ordering, WorkDigits, ZeckLucas, compare,
                   decode, encode, fibonacci_number, format_bits, lucas_number,
                   normalize, parse_bits, validate)
from .errors import (CanonicityError, DivisionByZero, DomainError,
                     InternalInvariantError, NegativeResult, ParseError,
                     PreconditionViolated, ZeckError, ZeroMultiplicand)

__version__ = "0.1.0"
