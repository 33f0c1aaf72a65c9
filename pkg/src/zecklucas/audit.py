"""Exact numerical audit of closed-form Lucas product and Fibonacci quotient identities.

Each check evaluates both sides of one identity with Python integers and
returns an :class:`IdentityReport`; nothing here asserts.  The product
identities (P1-P4) expand ``c * L_k * L_(k+n)`` as sums of Fibonacci
numbers, and P5 expands ``F_(kn) / F_n`` for odd ``n``.  A subscript
written ``a ± m`` contributes both ``F_(a+m)`` and ``F_(a-m)``.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from typing import IO, Iterable, Optional

from .core import fibonacci_number as fib
from .core import lucas_number as lucas
from .errors import InternalInvariantError, PreconditionViolated

__all__ = [
    "IdentityReport", "AuditReport", "AuditGrid", "CsvSink", "JsonSink",
    "prop_product_check", "prop5_check", "prop5_lucas_form_check", "run_audit",
    "CSV_HEADER",
]

EVEN_K = "EVEN_K"
ODD_K = "ODD_K"
LUCAS_FORM = "LUCAS_FORM"

CSV_HEADER = ("prop", "branch", "k", "n", "lhs", "rhs", "equal")

# c -> (min n, min even k, min odd k)
PRODUCT_BOUNDS = {1: (3, 2, 3), 2: (5, 4, 5), 3: (5, 4, 5), 4: (6, 6, 5)}


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of one identity at one (k, n).

    ``rhs_terms`` lists (index, value) for every term on the right.  They
    are Fibonacci terms except on the LUCAS_FORM branch, where they are
    Lucas terms.  For P5 the first ``split`` terms form the most
    significant part S_(k,n) and the rest the correction e_(k,n).
    """

    proposition: str
    branch: str
    k: int
    n: int
    lhs: int
    rhs_terms: tuple[tuple[int, int], ...]
    split: Optional[int] = None

    @property
    def rhs(self) -> int:
        return sum(v for _, v in self.rhs_terms)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    @property
    def label(self) -> str:
        """Summary key: the proposition, suffixed for the Lucas-form diagnostic."""
        if self.branch == LUCAS_FORM:
            return self.proposition + "-lucas"
        return self.proposition

    @property
    def distinct_indices(self) -> bool:
        idx = [i for i, _ in self.rhs_terms]
        return len(idx) == len(set(idx))

    @property
    def most_significant_terms(self):
        return self.rhs_terms if self.split is None else self.rhs_terms[:self.split]

    @property
    def least_significant_terms(self):
        return () if self.split is None else self.rhs_terms[self.split:]

    def row(self) -> tuple:
        return (self.proposition, self.branch, self.k, self.n, self.lhs,
                self.rhs, "true" if self.equal else "false")

    def as_dict(self) -> dict:
        d = dict(zip(CSV_HEADER, self.row()))
        d["equal"] = self.equal
        d["rhs_terms"] = [[i, v] for i, v in self.rhs_terms]
        return d


def _fib_terms(indices: Iterable[int]) -> tuple[tuple[int, int], ...]:
    return tuple((i, fib(i)) for i in indices)


def _pm(a: int, m: int) -> list[int]:
    return [a + m, a - m]


def _product_indices(c: int, k: int, n: int) -> list[int]:
    if c == 1:
        if k % 2 == 0:
            return [n - 1, n + 1, *_pm(2 * k + n, 1)]
        return ([n - 2, n + 1, 2 * k + n + 1]
                + [2 * j + n + 2 for j in range(1, k - 1)])
    if c == 2:
        if k % 2 == 0:
            return [*_pm(n, 3), *_pm(2 * k + n, 3)]
        return ([n - 4, 2 * k + n + 3]
                + [2 * j + n - 3 for j in range(1, 4)]
                + [2 * j + n + 4 for j in range(1, k - 3)])
    if c == 3:
        if k % 2 == 0:
            return [i for j in range(1, 5)
                    for i in (2 * j + n - 5, 2 * j + 2 * k + n - 5)]
        return ([n - 4, n + 3]
                + [2 * j + 2 * k + n - 3 for j in range(1, 4)]
                + [2 * j + n + 4 for j in range(1, k - 3)])
    if k % 2 == 0:
        return [i for j in range(1, 5)
                for i in (3 * j + n - 8, 3 * j + 2 * k + n - 8)]
    return ([n - 4, n - 2, n + 1]
            + [3 * j + 2 * k + n - 5 for j in range(1, 4)]
            + [2 * j + n + 4 for j in range(1, k - 4)])


def product_precondition(c: int, k: int, n: int) -> Optional[str]:
    """Return a description of the violated bound, or None if (c, k, n) is in range."""
    if c not in PRODUCT_BOUNDS:
        return f"multiplier must be 1..4, got {c}"
    min_n, min_even, min_odd = PRODUCT_BOUNDS[c]
    if n < min_n:
        return f"P{c} requires n >= {min_n}, got n={n}"
    if k % 2 == 0 and k < min_even:
        return f"P{c} requires k >= {min_even} for even k, got k={k}"
    if k % 2 == 1 and k < min_odd:
        return f"P{c} requires k >= {min_odd} for odd k, got k={k}"
    return None


def prop_product_check(c: int, k: int, n: int) -> IdentityReport:
    """Evaluate c * L_k * L_(k+n) against its Fibonacci expansion (c in 1..4)."""
    problem = product_precondition(c, k, n)
    if problem:
        raise PreconditionViolated(problem)
    return IdentityReport(
        proposition=f"P{c}",
        branch=EVEN_K if k % 2 == 0 else ODD_K,
        k=k, n=n,
        lhs=c * lucas(k) * lucas(k + n),
        rhs_terms=_fib_terms(_product_indices(c, k, n)),
    )


def _p5_precondition(k: int, n: int) -> Optional[str]:
    if n % 2 == 0:
        return f"P5 requires odd n, got n={n}"
    if n < 3:
        return f"P5 requires n >= 3, got n={n}"
    if k < 4:
        return f"P5 requires k >= 4, got k={k}"
    return None


def _exact_quotient(k: int, n: int) -> int:
    q, r = divmod(fib(k * n), fib(n))
    if r:
        raise InternalInvariantError(f"F_{n} does not divide F_{k * n}")
    return q


def prop5_check(k: int, n: int) -> IdentityReport:
    """Evaluate F_(kn) / F_n against S_(k,n) + e_(k,n) (n odd)."""
    problem = _p5_precondition(k, n)
    if problem:
        raise PreconditionViolated(problem)
    s_part = []
    for r in range(k // 4):
        hi = (k - 4 * r - 1) * n
        lo = (k - 4 * r - 3) * n
        s_part.append(hi + 1)
        s_part.extend(hi - 2 * s for s in range(1, n - 1))
        s_part.extend((lo + 1, lo - 2))
    tail = {
        0: [],
        1: [2],
        2: [n + 1, n - 1],
        3: [2 * n + 1] + [2 * n - 2 * r for r in range(1, n)],
    }[k % 4]
    return IdentityReport(
        proposition="P5",
        branch=f"K_MOD4_{k % 4}",
        k=k, n=n,
        lhs=_exact_quotient(k, n),
        rhs_terms=_fib_terms(s_part + tail),
        split=len(s_part),
    )


def prop5_lucas_form_check(k: int, n: int) -> IdentityReport:
    """Evaluate F_(kn) / F_n against the sum over r = 1..k/4 of
    L_((k-4r+3)n) + L_((k-4r+1)n), taken literally (k divisible by 4)."""
    problem = _p5_precondition(k, n)
    if problem is None and k % 4:
        problem = f"P5 Lucas form requires k divisible by 4, got k={k}"
    if problem:
        raise PreconditionViolated(problem)
    idx = []
    for r in range(1, k // 4 + 1):
        idx.extend(((k - 4 * r + 3) * n, (k - 4 * r + 1) * n))
    return IdentityReport(
        proposition="P5", branch=LUCAS_FORM, k=k, n=n,
        lhs=_exact_quotient(k, n),
        rhs_terms=tuple((i, lucas(i)) for i in idx),
    )


@dataclass(frozen=True)
class AuditGrid:
    """Propositions to audit and inclusive-exclusive ranges for k and n.

    ``lucas_form`` adds the literal Lucas-form evaluation of P5 next to
    each P5 point.
    """

    props: tuple[int, ...]
    k: range
    n: range
    lucas_form: bool = False

    def points(self):
        """Yield (prop, k, n, lucas_form) in report order."""
        for p in sorted(set(self.props)):
            for k in self.k:
                for n in self.n:
                    yield p, k, n, False
                    if p == 5 and self.lucas_form:
                        yield p, k, n, True


def _evaluate(p: int, k: int, n: int, lucas_form: bool) -> Optional[IdentityReport]:
    try:
        if p == 5:
            return prop5_lucas_form_check(k, n) if lucas_form else prop5_check(k, n)
        return prop_product_check(p, k, n)
    except PreconditionViolated:
        return None


def _empty_tally():
    return {"equal": 0, "unequal": 0, "skipped": 0, "repeated_indices": 0}


@dataclass
class AuditReport:
    records: list[IdentityReport] = field(default_factory=list)
    summary: dict[str, dict[str, int]] = field(default_factory=dict)

    def _tally(self, label: str) -> dict[str, int]:
        return self.summary.setdefault(label, _empty_tally())

    def add(self, record: IdentityReport) -> None:
        self.records.append(record)
        t = self._tally(record.label)
        t["equal" if record.equal else "unequal"] += 1
        if not record.distinct_indices:
            t["repeated_indices"] += 1

    def skip(self, label: str) -> None:
        self._tally(label)["skipped"] += 1

    @property
    def all_equal(self) -> bool:
        return all(r.equal for r in self.records)

    def mismatches(self) -> list[IdentityReport]:
        return [r for r in self.records if not r.equal]

    def summary_lines(self) -> list[str]:
        return [
            f"{label}: {t['equal']} equal, {t['unequal']} unequal, "
            f"{t['skipped']} skipped, {t['repeated_indices']} with repeated indices"
            for label, t in sorted(self.summary.items())
        ]


class CsvSink:
    """Writes one CSV row per record under the fixed header."""

    def __init__(self, stream: IO[str]):
        self._writer = csv.writer(stream, lineterminator="\n")
        self._writer.writerow(CSV_HEADER)

    def write(self, record: IdentityReport) -> None:
        self._writer.writerow(record.row())

    def finish(self, report: AuditReport) -> None:
        pass


class JsonSink:
    """Writes a JSON array of record objects, one object per line."""

    def __init__(self, stream: IO[str]):
        self._stream = stream
        self._first = True
        stream.write("[")

    def write(self, record: IdentityReport) -> None:
        self._stream.write("\n" if self._first else ",\n")
        self._stream.write(json.dumps(record.as_dict(), separators=(",", ":")))
        self._first = False

    def finish(self, report: AuditReport) -> None:
        self._stream.write("\n]\n")


def run_audit(grid: AuditGrid, sink=None) -> AuditReport:
    """Evaluate every in-range grid point in order, streaming records to ``sink``.

    Out-of-range points are counted as skipped in the summary.
    """
    report = AuditReport()
    for p, k, n, lucas_form in grid.points():
        record = _evaluate(p, k, n, lucas_form)
        if record is None:
            report.skip(f"P{p}-lucas" if lucas_form else f"P{p}")
            continue
        report.add(record)
        if sink is not None:
            sink.write(record)
    if sink is not None:
        sink.finish(report)
    return report
