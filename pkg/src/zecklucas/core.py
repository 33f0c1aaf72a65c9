"""Lucas/Fibonacci sequences and the canonical Zeckendorf-Lucas number type."""

from __future__ import annotations

import enum
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from . import _kernels
from .errors import (CanonicityError, DomainError, InternalInvariantError,
                     ParseError)

__all__ = [
    "ZeckLucas", "WorkDigits", "Ordering", "RULE_NAMES",
    "lucas_number", "fibonacci_number", "lucas_prefix",
    "encode", "decode", "validate", "normalize", "compare",
    "parse_bits", "format_bits",
]

RULE_NAMES = ("R1", "R2", "R3", "R4", "R5", "split", "split_low")


class _Sequence:
    """Grow-only cache of a two-term recurrence, safe to share across threads."""

    def __init__(self, first, second):
        self._values = [first, second]
        self._lock = threading.Lock()

    def upto(self, n):
        """Return a list holding at least the first ``n`` terms."""
        values = self._values
        if len(values) < n:
            with self._lock:
                values = self._values
                if len(values) < n:
                    grown = list(values)
                    while len(grown) < n:
                        grown.append(grown[-1] + grown[-2])
                    # publish a new list; readers holding the old one stay valid
                    self._values = values = grown
        return values


_LUCAS = _Sequence(2, 1)
_FIB = _Sequence(0, 1)


def lucas_number(i: int) -> int:
    """Return L_i, with L_0 = 2 and L_1 = 1."""
    if i < 0:
        raise DomainError(f"Lucas index must be >= 0, got {i}")
    return _LUCAS.upto(i + 1)[i]


def lucas_prefix(n: int) -> list[int]:
    """Return [L_0, ..., L_(n-1)]."""
    return _LUCAS.upto(n)[:n]


def fibonacci_number(i: int) -> int:
    """Return F_i with F_0 = 0, F_1 = 1 and F_-1 = 1."""
    if i < -1:
        raise DomainError(f"Fibonacci index must be >= -1, got {i}")
    if i == -1:
        return 1
    return _FIB.upto(i + 1)[i]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def validate(digits: Iterable[int]) -> bool:
    """True iff ``digits`` (least significant first) is a canonical Zeckendorf-Lucas
    digit sequence: only 0/1, no two adjacent ones, and not both e_0 and e_2.

    Trailing zeros are allowed.
    """
    d = list(digits)
    if any(x not in (0, 1) for x in d):
        return False
    if any(d[i] and d[i + 1] for i in range(len(d) - 1)):
        return False
    return not (len(d) > 2 and d[0] and d[2])


def _is_canonical_bytes(b: bytes) -> bool:
    if b.translate(None, b"\x00\x01"):
        return False
    if b"\x01\x01" in b:
        return False
    return not (len(b) > 2 and b[0] and b[2])


@dataclass(frozen=True, init=False, eq=True, repr=False)
class ZeckLucas:
    """A nonnegative integer as a canonical sum of distinct Lucas numbers.

    ``digits`` holds e_0, e_1, ... (least significant index first) with no
    trailing zeros, so zero is the empty sequence.  Instances are immutable
    and hashable; ordering follows the integer values.
    """

    digits: bytes

    def __init__(self, digits: Iterable[int] = b""):
        try:
            raw = bytes(digits).rstrip(b"\x00")
        except (TypeError, ValueError):
            raise CanonicityError(f"digits must be 0 or 1: {digits!r}") from None
        if not _is_canonical_bytes(raw):
            raise CanonicityError(f"not a canonical digit sequence: {list(raw)}")
        object.__setattr__(self, "digits", raw)

    @classmethod
    def _trusted(cls, raw: bytes) -> "ZeckLucas":
        # for kernel output: re-check cheaply, but blame ourselves on failure
        raw = raw.rstrip(b"\x00")
        if not _is_canonical_bytes(raw):
            raise InternalInvariantError(f"kernel produced non-canonical digits {list(raw)}")
        obj = object.__new__(cls)
        object.__setattr__(obj, "digits", raw)
        return obj

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "ZeckLucas":
        idx = sorted(set(indices))
        if idx and idx[0] < 0:
            raise CanonicityError("negative digit index")
        d = bytearray(idx[-1] + 1 if idx else 0)
        for i in idx:
            d[i] = 1
        return cls(d)

    @classmethod
    def from_int(cls, n: int) -> "ZeckLucas":
        return encode(n)

    @property
    def indices(self) -> tuple[int, ...]:
        """Indices of the set digits, ascending."""
        return tuple(i for i, x in enumerate(self.digits) if x)

    @property
    def top_index(self) -> int:
        """Highest set index, -1 for zero."""
        return len(self.digits) - 1

    def array(self) -> np.ndarray:
        return np.frombuffer(self.digits, dtype=np.int8)

    def __len__(self):
        return len(self.digits)

    def __bool__(self):
        return bool(self.digits)

    def __int__(self):
        return decode(self)

    def __str__(self):
        return format_bits(self)

    def __repr__(self):
        return f"ZeckLucas('{format_bits(self)}')"

    def __lt__(self, other):
        if not isinstance(other, ZeckLucas):
            return NotImplemented
        return compare(self, other) is Ordering.LESS

    def __le__(self, other):
        if not isinstance(other, ZeckLucas):
            return NotImplemented
        return compare(self, other) is not Ordering.GREATER

    def __gt__(self, other):
        if not isinstance(other, ZeckLucas):
            return NotImplemented
        return compare(self, other) is Ordering.GREATER

    def __ge__(self, other):
        if not isinstance(other, ZeckLucas):
            return NotImplemented
        return compare(self, other) is not Ordering.LESS

    # arithmetic lives in .arithmetic, which imports this module
    def __add__(self, other):
        from .arithmetic import add
        return add(self, other) if isinstance(other, ZeckLucas) else NotImplemented

    def __sub__(self, other):
        from .arithmetic import sub
        return sub(self, other) if isinstance(other, ZeckLucas) else NotImplemented

    def __mul__(self, other):
        from .arithmetic import mul
        return mul(self, other) if isinstance(other, ZeckLucas) else NotImplemented

    def __divmod__(self, other):
        from .arithmetic import divmod_
        return divmod_(self, other) if isinstance(other, ZeckLucas) else NotImplemented

    def __floordiv__(self, other):
        result = self.__divmod__(other)
        return result if result is NotImplemented else result[0]

    def __mod__(self, other):
        result = self.__divmod__(other)
        return result if result is NotImplemented else result[1]


ZERO = ZeckLucas()


@dataclass(frozen=True, init=False)
class WorkDigits:
    """Relaxed signed digit counts d_0, d_1, ... with value sum(d_i * L_i).

    Used for intermediate sums and differences; digits must stay within
    ``[DIGIT_MIN, DIGIT_MAX]``.
    """

    digits: tuple[int, ...]

    DIGIT_MIN = _kernels.DIGIT_MIN
    DIGIT_MAX = _kernels.DIGIT_MAX

    def __init__(self, digits: Iterable[int] = ()):
        d = tuple(int(x) for x in digits)
        for x in d:
            if not self.DIGIT_MIN <= x <= self.DIGIT_MAX:
                raise DomainError(
                    f"work digit {x} outside [{self.DIGIT_MIN}, {self.DIGIT_MAX}]")
        object.__setattr__(self, "digits", d)

    def __int__(self):
        return decode(self)


def decode(z: Union[ZeckLucas, WorkDigits, Sequence[int]]) -> int:
    """Return sum(d_i * L_i) over the digits of ``z``."""
    digits = z.digits if isinstance(z, (ZeckLucas, WorkDigits)) else tuple(z)
    if not digits:
        return 0
    lucas = _LUCAS.upto(len(digits))
    return sum(d * lucas[i] for i, d in enumerate(digits) if d)


def encode(n: int) -> ZeckLucas:
    """Greedy decomposition: repeatedly take the largest Lucas number <= n.

    "Largest" is by value, so near the bottom the candidates run
    ..., L_3, L_2, L_0, L_1.
    """
    n = int(n)
    if n < 0:
        raise DomainError(f"cannot encode negative integer {n}")
    if n == 0:
        return ZERO
    lucas = _LUCAS.upto(3)
    size = 3
    while lucas[-1] <= n:
        size = max(2 * size, 8)
        lucas = _LUCAS.upto(size)
    t = len(lucas) - 1
    while lucas[t] > n:
        t -= 1
    t = max(t, 2)
    d = bytearray(t + 1)
    r = n
    for i in range(t, 1, -1):
        if lucas[i] <= r:
            d[i] = 1
            r -= lucas[i]
    # remainder is now < L_2 = 3
    if r == 2:
        d[0] = 1
    elif r == 1:
        d[1] = 1
    return ZeckLucas._trusted(bytes(d))


def _check_status(status: int, what: str) -> int:
    if status >= 0:
        return status
    reason = {
        _kernels.ERR_BOUND: "digit bound exceeded",
        _kernels.ERR_WIDTH: "digit buffer too narrow",
        _kernels.ERR_CAP: "rewrite budget exhausted",
        _kernels.ERR_NEGATIVE: "negative digit could not be cleared",
    }.get(status, f"status {status}")
    raise InternalInvariantError(f"{what}: {reason}")


def _record(counter: Counter | None, counts: np.ndarray) -> None:
    if counter is not None:
        for name, c in zip(RULE_NAMES, counts.tolist()):
            if c:
                counter[name] += c


def _counts() -> np.ndarray:
    return np.zeros(_kernels.N_COUNTERS, dtype=np.int64)


def _headroom(digits: Sequence[int]) -> int:
    # value < max_digit * L_(n+1) <= L_(n+1+c) with phi**c >= max_digit
    top = max(digits, default=0)
    return 4 + 2 * max(top, 1).bit_length()


def normalize(w: Union[WorkDigits, Sequence[int]], counter: Counter | None = None) -> ZeckLucas:
    """Rewrite nonnegative work digits into the canonical form of the same value.

    Only value-preserving rules are used (2 L_i = L_(i+1) + L_(i-2),
    2 L_1 = L_0, 2 L_0 = L_2 + L_1, L_(i-1) + L_i = L_(i+1),
    L_0 + L_2 = L_1 + L_3).  If ``counter`` is given, rule applications
    are tallied into it.
    """
    if not isinstance(w, WorkDigits):
        w = WorkDigits(w)
    digits = w.digits
    if any(x < 0 for x in digits):
        raise DomainError("normalize needs nonnegative digits")
    buf = np.zeros(len(digits) + _headroom(digits), dtype=np.int8)
    buf[:len(digits)] = digits
    counts = _counts()
    n = _check_status(_kernels.normalize(buf, counts), "normalize")
    _record(counter, counts)
    return ZeckLucas._trusted(buf[:n].tobytes())


def compare(a: ZeckLucas, b: ZeckLucas) -> Ordering:
    """Order two canonical values without decoding them."""
    return Ordering(int(_kernels.compare(a.array(), b.array())))


def parse_bits(text: str, relaxed: bool = False) -> Union[ZeckLucas, WorkDigits]:
    """Parse a most-significant-first bitstring such as "10001000" (= 33).

    Leading zeros are accepted.  Non-canonical strings raise
    ``CanonicityError`` unless ``relaxed`` is set, in which case the digits
    come back as ``WorkDigits``.
    """
    text = text.strip()
    if not text or text.strip("01"):
        raise ParseError(f"expected a nonempty string of 0/1, got {text!r}")
    digits = bytes(int(ch) for ch in reversed(text))
    if relaxed:
        return WorkDigits(digits)
    return ZeckLucas(digits)


def format_bits(z: ZeckLucas) -> str:
    """Most-significant-first bitstring without leading zeros ("0" for zero)."""
    if not z.digits:
        return "0"
    return "".join("1" if x else "0" for x in reversed(z.digits))
