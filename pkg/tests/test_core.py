import pytest
from hypothesis import given
from hypothesis import strategies as st

from zecklucas import (CanonicityError, DomainError, Ordering, ParseError, WorkDigits, ZeckLucas,
                       compare, decode, encode, format_bits, parse_bits, validate)

from conftest import canonical_sequences, lucas_list, value


def Z(*indices):
    return ZeckLucas.from_indices(indices)


# -- codec ---------------------------------------------------------------

def test_encode_fifty():
    z = encode(50)
    assert z.indices == (2, 8)
    assert format_bits(z) == "100000100"


def test_encode_small():
    assert encode(0).digits == b""
    assert format_bits(encode(0)) == "0"
    assert encode(4).indices == (3,)
    assert format_bits(encode(4)) == "1000"
    # greedy by value: 2 uses L_0, 1 uses L_1
    assert encode(2).indices == (0,)
    assert encode(1).indices == (1,)
    assert encode(5).indices == (1, 3)


def test_decode_examples():
    assert decode(Z(8, 2)) == 50
    assert decode(ZeckLucas()) == 0
    assert decode(WorkDigits([0, 2])) == 2
    assert decode(WorkDigits([-1, 0, 1])) == 1


def test_round_trip_exhaustive():
    for n in range(20000):
        z = encode(n)
        assert decode(z) == n
        assert validate(z.digits)


@given(st.integers(min_value=0, max_value=10 ** 80))
def test_round_trip_big(n):
    z = encode(n)
    assert decode(z) == n
    assert validate(z.digits)
    assert encode(decode(z)) == z


def test_negative_encode_rejected():
    with pytest.raises(DomainError):
        encode(-1)


# -- validate / Theorem 1 -----------------------------------------------

def test_validate_examples():
    assert validate(Z(7, 3).digits)
    assert not validate([0, 1, 1])
    assert not validate([1, 0, 1])
    assert not validate([0, 2])
    assert validate([])
    assert validate([0, 1, 0, 0])


@pytest.mark.parametrize("k", range(2, 17))
def test_canonical_sequences_biject_onto_lucas_interval(k):
    seqs = list(canonical_sequences(k))
    values = sorted(value(s) for s in seqs)
    assert values == list(range(lucas_list(k + 1)[k]))
    for s in seqs:
        assert validate(s)
        assert encode(value(s)) == ZeckLucas(s)


def test_single_index_is_not_an_interval():
    # over index 0 alone the values are {0, L_0} = {0, 2}, not [0, L_1) = {0}
    assert sorted(value(s) for s in canonical_sequences(1)) == [0, 2]


def test_encode_agrees_with_enumeration():
    table = {value(s): ZeckLucas(s) for s in canonical_sequences(14)}
    for n, z in table.items():
        assert encode(n) == z


def test_constructor_rejects_non_canonical():
    for bad in ([1, 1], [1, 0, 1], [2], [0, 0, 1, 1, 0]):
        with pytest.raises(CanonicityError):
            ZeckLucas(bad)
    with pytest.raises(CanonicityError):
        ZeckLucas([-1])


def test_constructor_strips_trailing_zeros():
    assert ZeckLucas([0, 1, 0, 0]) == ZeckLucas([0, 1])
    assert len(ZeckLucas([0, 0])) == 0


# -- compare ---------------------------------------------------------------

def test_compare_examples():
    assert compare(Z(1), Z(0)) is Ordering.LESS
    assert compare(Z(0), Z(1)) is Ordering.GREATER
    assert compare(Z(8, 2), Z(8, 2)) is Ordering.EQUAL
    assert compare(Z(8, 2), Z(7, 3)) is Ordering.GREATER
    assert compare(ZeckLucas(), Z(1)) is Ordering.LESS


def test_compare_exhaustive_small():
    codes = [encode(n) for n in range(400)]
    for x, a in enumerate(codes):
        for y, b in enumerate(codes):
            assert compare(a, b) == (x > y) - (x < y)


def test_dunder_ordering():
    assert encode(1) < encode(2) <= encode(2) < encode(3)
    assert encode(7) > encode(5) >= encode(5)
    assert sorted(encode(n) for n in (9, 1, 2, 0)) == [encode(n) for n in (0, 1, 2, 9)]


def _non_adjacent_sets(k):
    """Every set of indices in 0..k-1 with no two adjacent, as sorted tuples."""
    if k <= 0:
        yield ()
        return
    yield from _non_adjacent_sets(k - 1)
    for rest in _non_adjacent_sets(k - 2):
        yield rest + (k - 1,)


def test_top_index_bound_exhaustive():
    # max canonical value with top index i stays below L_(i+2), and below L_(i+1)
    # once i >= 1; this is what makes digit-descent comparison valid
    limit = 25
    w = lucas_list(limit + 3)
    best = {}
    for idx in _non_adjacent_sets(limit):
        if not idx or (0 in idx and 2 in idx):
            continue
        best[idx[-1]] = max(best.get(idx[-1], 0), sum(w[i] for i in idx))
    assert set(best) == set(range(limit))
    for i, m in best.items():
        assert m < w[i + 2]
        if i >= 1:
            assert m < w[i + 1]
    assert best[0] == 2 > w[1]


# -- text format -------------------------------------------------------------

def test_parse_examples():
    assert parse_bits("10001000").indices == (3, 7)
    assert decode(parse_bits("10001000")) == 33
    assert parse_bits("0") == ZeckLucas()
    assert format_bits(parse_bits("00101001")) == "101001"
    assert decode(parse_bits("00101001")) == 17


def test_parse_errors():
    for text in ("", "102", "1 0", "abc", "z:10"):
        with pytest.raises(ParseError):
            parse_bits(text)
    with pytest.raises(CanonicityError):
        parse_bits("11")
    relaxed = parse_bits("0011", relaxed=True)
    assert isinstance(relaxed, WorkDigits)
    assert decode(relaxed) == 3


def test_format_parse_round_trip():
    for n in range(3000):
        z = encode(n)
        assert parse_bits(format_bits(z)) == z
        assert str(z) == format_bits(z)
        assert eval(repr(z), {"ZeckLucas": lambda s: parse_bits(s)}) == z


def test_hash_and_equality():
    assert len({encode(5), parse_bits("1010"), Z(3, 1)}) == 1
    assert encode(5) != encode(6)
    assert int(encode(12345)) == 12345
