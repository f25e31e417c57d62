import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from encodability.typesyntax import (
    Arrow,
    N,
    ParseError,
    Prod,
    level,
    parse_type,
    print_type,
    type_size,
)
from helpers import enumerate_types


def test_parse_arrow_right_associative():
    assert parse_type("N->N->N") == Arrow(N, Arrow(N, N))


def test_parse_atomic():
    assert parse_type("N") == N


def test_parse_product_binds_tighter():
    # frozen from the reference-grammar prototype: ProdTy reduces before "->"
    assert parse_type("N*N->N") == Arrow(Prod(N, N), N)


def test_parse_product_left_associative():
    assert parse_type("N*N*N") == Prod(Prod(N, N), N)


def test_parse_whitespace_insignificant():
    assert parse_type("  ( N -> N ) * N  ") == Prod(Arrow(N, N), N)


@pytest.mark.parametrize(
    "text,offset",
    [
        ("", 0),
        ("N->", 3),
        ("M", 0),
        ("(N", 2),
        ("N)", 1),
        ("N**N", 2),
        ("N->->N", 3),
    ],
)
def test_parse_errors_carry_positions(text, offset):
    with pytest.raises(ParseError) as info:
        parse_type(text)
    assert info.value.position == offset
    assert 0 <= info.value.position <= len(text) + 1


def test_print_examples():
    assert print_type(Arrow(N, Arrow(N, N))) == "N->N->N"
    assert print_type(Arrow(Prod(N, N), N)) == "N*N->N"
    assert print_type(Arrow(Arrow(N, N), N)) == "(N->N)->N"
    assert print_type(Prod(N, Prod(N, N))) == "N*(N*N)"


def test_level_examples():
    assert level(N) == 0
    assert level(parse_type("(N->N)->N")) == 2
    assert level(parse_type("N*N")) == 0
    assert level(parse_type("N->N->N")) == 1
    assert level(parse_type("N*(N->N)")) == 1


def test_round_trip_exhaustive_small():
    for t in enumerate_types(11):
        assert parse_type(print_type(t)) == t


_types = st.recursive(
    st.just(N),
    lambda sub: st.builds(Arrow, sub, sub) | st.builds(Prod, sub, sub),
    max_leaves=48,
)


@given(_types)
@settings(max_examples=200)
def test_round_trip_random_deep(t):
    assert parse_type(print_type(t)) == t


def _matched_paren_pairs(s: str) -> list[tuple[int, int]]:
    stack, pairs = [], []
    for i, c in enumerate(s):
        if c == "(":
            stack.append(i)
        elif c == ")":
            pairs.append((stack.pop(), i))
    return pairs


def test_printer_minimality():
    # dropping any single matched pair must change or break the parse
    for t in enumerate_types(9):
        s = print_type(t)
        for open_, close in _matched_paren_pairs(s):
            stripped = s[:open_] + s[open_ + 1 : close] + s[close + 1 :]
            try:
                assert parse_type(stripped) != t
            except ParseError:
                pass


@given(st.text(alphabet="N*->() \t", max_size=40))
@settings(max_examples=500)
def test_parser_never_panics(text):
    try:
        t = parse_type(text)
    except ParseError as exc:
        assert 0 <= exc.position <= len(text) + 1
    else:
        assert parse_type(print_type(t)) == t


def test_deep_nesting_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_type("(" * 500 + "N" + ")" * 500)


def test_type_size():
    assert type_size(N) == 1
    assert type_size(parse_type("N*N->N")) == 5
