import io
import json
import subprocess
import sys

import pytest

from zecklucas import decode, parse_bits
from zecklucas.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_add():
    assert run("add", "33", "19") == (0, "100001010 = 52\n")


def test_divmod():
    assert run("divmod", "250", "17") == (0, "100100 = 14\n100010 = 12\n")


def test_formats_and_prefix():
    assert run("mul", "z:101001", "z:10100", "--format", "bits") == (0, "10100000000\n")
    assert run("sub", "z:10100001", "32", "--format", "dec") == (0, "10\n")
    # "10" without the prefix is decimal ten
    assert run("add", "10", "0", "--format", "dec") == (0, "10\n")
    assert run("add", "z:10", "0", "--format", "dec") == (0, "1\n")


def test_encode_decode():
    assert run("encode", "50") == (0, "100000100\n")
    assert run("encode", "0") == (0, "0\n")
    assert run("decode", "10001000") == (0, "33\n")


@pytest.mark.parametrize("argv", [
    ("sub", "32", "42"), ("divmod", "5", "0"), ("decode", "11"), ("decode", "12"),
    ("add", "z:11", "1"), ("add", "-3", "1"), ("encode", "x"),
])
def test_domain_errors_exit_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_negative_result_named(capsys):
    run("sub", "32", "42")
    assert "NegativeResult" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [(), ("frob",), ("add", "1"), ("add", "1", "2", "--format", "hex"),
                                  ("audit", "--k", "3-5")])
def test_usage_errors_exit_1(argv):
    assert run(*argv)[0] == 1


def test_both_format_is_self_consistent():
    for x, y in [(33, 19), (1000, 7), (2, 1)]:
        for op in ("add", "mul", "divmod"):
            _, text = run(op, str(x), str(y))
            for line in text.splitlines():
                bits, dec = line.split(" = ")
                assert decode(parse_bits(bits)) == int(dec)


def test_audit_writes_report(tmp_path):
    path = tmp_path / "p1.csv"
    code, text = run("audit", "--prop", "1", "--k", "3:10", "--n", "3:8", "--out", str(path))
    assert code == 0
    assert "P1: 48 equal, 0 unequal" in text
    assert len(path.read_text().splitlines()) == 49


def test_audit_json_lucas_form(tmp_path):
    path = tmp_path / "p5.json"
    code, text = run("audit", "--prop", "5", "--k", "4:4", "--n", "3:3", "--lucas-form",
                     "--format", "json", "--out", str(path))
    assert code == 0
    assert "MISMATCH P5-lucas" in text and "lhs=72 rhs=80" in text
    recs = json.loads(path.read_text())
    assert [(r["branch"], r["rhs"]) for r in recs] == [("K_MOD4_0", 72), ("LUCAS_FORM", 80)]


def test_audit_unwritable_path(tmp_path):
    code, _ = run("audit", "--prop", "1", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2


def test_selftest():
    code, text = run("selftest", "--max", "300")
    assert code == 0
    assert text.rstrip().endswith("selftest PASSED")
    assert "FAIL" not in text


def test_output_is_deterministic():
    assert run("audit", "--out", "-") == run("audit", "--out", "-")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zecklucas", "add", "12", "19"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "10000001 = 31\n"
