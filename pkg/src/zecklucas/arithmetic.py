"""Addition, subtraction, multiplication and division on ZeckLucas digits.

Nothing here converts an operand to a binary integer; all work happens on
Lucas-weighted digit arrays in :mod:`._kernels`.  Every function takes an
optional ``counter`` (a :class:`collections.Counter`) that receives the
number of times each rewrite rule fired.
"""

from __future__ import annotations

from collections import Counter
from typing import Union

import numpy as np

from . import _kernels
from .core import (ZERO, Ordering, ZeckLucas, _check_status, _counts, _record,
                   compare, encode)
from .errors import DivisionByZero, NegativeResult, ZeroMultiplicand

__all__ = ["add", "sub", "mul", "divmod_", "lucas_multiples"]


def _padded(z: ZeckLucas, width: int) -> np.ndarray:
    buf = np.zeros(width, dtype=np.int8)
    buf[:len(z)] = z.array()
    return buf


def add(a: ZeckLucas, b: ZeckLucas, counter: Counter | None = None) -> ZeckLucas:
    """Digitwise sum (digits 0..2) followed by carry normalization."""
    width = max(len(a), len(b)) + 3
    out = np.empty(width, dtype=np.int8)
    counts = _counts()
    n = _kernels.add_into(out, _padded(a, width), _padded(b, width), counts)
    _check_status(n, "add")
    _record(counter, counts)
    return ZeckLucas._trusted(out[:n].tobytes())


def sub(a: ZeckLucas, b: ZeckLucas, counter: Counter | None = None) -> ZeckLucas:
    """Digitwise difference, borrow chains for each -1, then normalization.

    Raises NegativeResult if a < b.
    """
    if compare(a, b) is Ordering.LESS:
        raise NegativeResult(f"{a} - {b} is negative")
    width = len(a) + 3
    out = np.empty(width, dtype=np.int8)
    counts = _counts()
    n = _kernels.sub_into(out, _padded(a, width), _padded(b, width), counts)
    _check_status(n, "sub")
    _record(counter, counts)
    return ZeckLucas._trusted(out[:n].tobytes())


def lucas_multiples(a: ZeckLucas, bound: Union[int, ZeckLucas],
                    counter: Counter | None = None) -> list[ZeckLucas]:
    """Return [a*L_1, a*L_0, a*L_2, a*L_3, ...] built only by additions.

    Stops at the first multiple whose value exceeds ``bound``, which is
    included as a sentinel.  The entry for Lucas index i sits at list
    position 0 for i = 1, 1 for i = 0, and i otherwise.
    """
    if not a:
        raise ZeroMultiplicand("Lucas multiples of zero never exceed a bound")
    if not isinstance(bound, ZeckLucas):
        bound = encode(bound)
    if compare(a, bound) is Ordering.GREATER:
        return [a]
    by_index = [add(a, a, counter), a]
    if compare(by_index[0], bound) is Ordering.GREATER:
        return [a, by_index[0]]
    while compare(by_index[-1], bound) is not Ordering.GREATER:
        by_index.append(add(by_index[-1], by_index[-2], counter))
    return [by_index[1], by_index[0]] + by_index[2:]


def mul(a: ZeckLucas, b: ZeckLucas, counter: Counter | None = None) -> ZeckLucas:
    """Sum of the multiples a*L_i over the digits i set in ``b``."""
    if not a or not b:
        return ZERO
    # a < L_(ta+1), b < L_(tb+1)  =>  a*b < L_(ta+tb+3)
    width = len(a) + len(b) + 4
    counts = _counts()
    out, status = _kernels.mul(a.array(), b.array(), width, counts)
    _check_status(status, "mul")
    _record(counter, counts)
    return ZeckLucas._trusted(out.tobytes())


def divmod_(a: ZeckLucas, b: ZeckLucas,
            counter: Counter | None = None) -> tuple[ZeckLucas, ZeckLucas]:
    """Quotient and remainder by trial subtraction of Lucas multiples of ``b``.

    Multiples are tried from the largest value down (index 0 before
    index 1, since 2b > b); each one that fits is subtracted and its
    quotient digit set.  The selection is greedy, so the quotient comes
    out canonical without further normalization.
    """
    if not b:
        raise DivisionByZero("division by zero")
    if compare(a, b) is Ordering.LESS:
        return ZERO, a
    counts = _counts()
    quot, rem, status = _kernels.divmod_(a.array(), b.array(), counts)
    _check_status(status, "divmod")
    _record(counter, counts)
    return ZeckLucas._trusted(quot.tobytes()), ZeckLucas._trusted(rem.tobytes())
