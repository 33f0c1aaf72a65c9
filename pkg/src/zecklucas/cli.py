"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 domain error, 3 internal error.
"""

import argparse
import random
import sys
import time

from . import arithmetic, audit
from .core import ZeckLucas, decode, encode, format_bits, parse_bits, validate
from .errors import DomainError, InternalInvariantError, ParseError

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def operand(text: str) -> ZeckLucas:
    """Decimal by default; ``z:`` prefix for a Zeckendorf bitstring."""
    if text.startswith("z:"):
        return parse_bits(text[2:])
    if not text.isdigit():
        raise ParseError(f"expected a nonnegative decimal or z:<bits>, got {text!r}")
    return encode(int(text))


def show(z: ZeckLucas, fmt: str) -> str:
    if fmt == "bits":
        return format_bits(z)
    if fmt == "dec":
        return str(decode(z))
    return f"{format_bits(z)} = {decode(z)}"


def k_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <lo>:<hi>, got {text!r}")
    return range(lo, hi + 1)


def build_parser():
    p = _Parser(prog="zecklucas",
                description="Exact arithmetic on Zeckendorf representations over Lucas numbers.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("encode", help="decimal -> bitstring")
    s.add_argument("value")
    s = sub.add_parser("decode", help="bitstring -> decimal")
    s.add_argument("bits")

    for name in ("add", "sub", "mul", "divmod"):
        s = sub.add_parser(name, help=f"{name} two operands (decimal or z:<bits>)")
        s.add_argument("x")
        s.add_argument("y")
        s.add_argument("--format", choices=("bits", "dec", "both"), default="both")

    s = sub.add_parser("audit", help="evaluate the product/quotient identities")
    s.add_argument("--prop", choices=("1", "2", "3", "4", "5", "all"), default="all")
    s.add_argument("--k", type=k_range, default=k_range("3:20"), metavar="LO:HI")
    s.add_argument("--n", type=k_range, default=k_range("3:12"), metavar="LO:HI")
    s.add_argument("--out", help="report path ('-' for standard output)")
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--lucas-form", action="store_true",
                   help="also evaluate the compact Lucas form of P5 verbatim")

    s = sub.add_parser("selftest", help="oracle sweep plus golden examples")
    s.add_argument("--max", type=int, default=1000, dest="max_n")
    return p


def cmd_audit(args, out):
    props = (1, 2, 3, 4, 5) if args.prop == "all" else (int(args.prop),)
    grid = audit.AuditGrid(props, args.k, args.n, lucas_form=args.lucas_form)
    sink_cls = audit.JsonSink if args.format == "json" else audit.CsvSink
    if args.out is None:
        report = audit.run_audit(grid)
    elif args.out == "-":
        report = audit.run_audit(grid, sink_cls(out))
    else:
        with open(args.out, "w", newline="") as fh:
            report = audit.run_audit(grid, sink_cls(fh))
    # the report goes to stdout with "--out -", so keep the summary off it
    summary_to = sys.stderr if args.out == "-" else out
    for line in report.summary_lines():
        print(line, file=summary_to)
    for r in report.mismatches():
        print(f"MISMATCH {r.label} {r.branch} k={r.k} n={r.n}: lhs={r.lhs} rhs={r.rhs}",
              file=summary_to)
    return EXIT_OK


GOLDEN = [
    ("add", 33, 19, ["100001010"]),
    ("add", 12, 19, ["10000001"]),
    ("sub", 42, 32, ["10100"]),
    ("mul", 17, 10, ["10100000000"]),
    ("divmod", 250, 17, ["100100", "100010"]),
]


def _run_op(op, a, b):
    if op == "divmod":
        return list(arithmetic.divmod_(a, b))
    return [getattr(arithmetic, op)(a, b)]


def selftest(max_n, out):
    """Return the number of failed checks, printing one line per group."""
    failures = 0

    def report(name, bad, count, started):
        nonlocal failures
        failures += bad
        status = "PASS" if not bad else "FAIL"
        print(f"{status} {name}: {count - bad}/{count} ({time.perf_counter() - started:.2f}s)",
              file=out)

    t = time.perf_counter()
    bad = 0
    for op, x, y, want in GOLDEN:
        got = [format_bits(z) for z in _run_op(op, encode(x), encode(y))]
        bad += got != want
    report("golden examples", bad, len(GOLDEN), t)

    t = time.perf_counter()
    codes = [encode(n) for n in range(max_n + 1)]
    bad = sum(1 for n, z in enumerate(codes) if decode(z) != n or not validate(z.digits))
    report(f"round trip 0..{max_n}", bad, len(codes), t)

    # every a in 0..max_n against its mirror max_n - a and a few small divisors
    t = time.perf_counter()
    bad = count = 0
    for x in range(max_n + 1):
        for y in {max_n - x, 1, 2, 3, 7, 1 + x // 2}:
            a, b = codes[x], codes[y]
            count += 1
            ok = (decode(a + b) == x + y and decode(a * b) == x * y
                  and (a < b) == (x < y))
            if x >= y:
                ok = ok and decode(a - b) == x - y
            if y:
                q, r = divmod(a, b)
                ok = ok and (decode(q), decode(r)) == divmod(x, y)
            bad += not ok
    report(f"arithmetic sweep 0..{max_n}", bad, count, t)

    t = time.perf_counter()
    rng = random.Random(0)
    bad = 0
    for _ in range(200):
        x, y = rng.randrange(10 ** 30), rng.randrange(1, 10 ** 15)
        a, b = encode(x), encode(y)
        q, r = divmod(a, b)
        ok = (decode(a * b) == x * y and decode(a + b) == x + y
              and decode(a - b) == x - y and (decode(q), decode(r)) == divmod(x, y))
        bad += not ok
    report("random large operands", bad, 200, t)
    return failures


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if not e.code else EXIT_USAGE
    try:
        if args.command == "encode":
            if not args.value.isdigit():
                raise ParseError(f"expected a nonnegative decimal, got {args.value!r}")
            print(format_bits(encode(int(args.value))), file=out)
        elif args.command == "decode":
            print(decode(parse_bits(args.bits)), file=out)
        elif args.command == "audit":
            return cmd_audit(args, out)
        elif args.command == "selftest":
            failed = selftest(args.max_n, out)
            print("selftest " + ("PASSED" if not failed else f"FAILED ({failed})"), file=out)
            return EXIT_OK if not failed else EXIT_INTERNAL
        else:
            x, y = operand(args.x), operand(args.y)
            for z in _run_op(args.command, x, y):
                print(show(z, args.format), file=out)
    except DomainError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except InternalInvariantError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
