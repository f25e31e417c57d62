import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from encodability.ordinals import (
    OMEGA,
    ONE,
    ZERO,
    Ordering,
    Ordinal,
    cantor_add,
    compare_ordinals,
    from_int,
    is_cantor_sum,
    omega_pow,
    omega_times,
    parse_ordinal,
    print_ordinal,
    successor,
)
from encodability.typesyntax import ParseError
from helpers import poly_add, poly_cmp, poly_ordinal, poly_range


def test_cnf_invariant_rejects_increasing_exponents():
    with pytest.raises(ValueError):
        Ordinal((ZERO, ONE))  # 1 + w written backwards is not a CNF


def test_zero_and_one():
    assert ZERO.is_zero and ZERO.is_finite and ZERO.as_int() == 0
    assert ONE == from_int(1) == omega_pow(ZERO)
    assert OMEGA == omega_pow(ONE)


def test_compare_examples():
    assert compare_ordinals(ONE, ONE) is Ordering.EQUAL
    assert compare_ordinals(from_int(2), OMEGA) is Ordering.LESS
    # hand-derived CNFs: w^(w*2) vs w^(w^2)
    a = omega_pow(omega_times(ONE, 2))
    b = omega_pow(omega_pow(from_int(2)))
    assert compare_ordinals(a, b) is Ordering.LESS


def test_cantor_add_examples():
    assert cantor_add(ONE, OMEGA) == OMEGA
    assert cantor_add(OMEGA, ONE) == parse_ordinal("w + 1")
    # frozen from the polynomial oracle: (0,1,1) + (0,1,0) = (0,2,0)
    assert cantor_add(parse_ordinal("w + 1"), OMEGA) == parse_ordinal("w*2")


def test_omega_pow_examples():
    assert omega_pow(ZERO) == ONE
    assert omega_pow(ONE) == OMEGA
    assert omega_pow(OMEGA) == parse_ordinal("w^w")


def test_is_cantor_sum_examples():
    assert is_cantor_sum(OMEGA, ONE) is True
    assert is_cantor_sum(ONE, OMEGA) is False
    assert is_cantor_sum(parse_ordinal("w^2 + w"), OMEGA) is True
    with pytest.raises(ValueError):
        is_cantor_sum(ZERO, ONE)


def test_parse_examples():
    a = parse_ordinal("w^2*3 + w + 1")
    assert [print_ordinal(e) for e in a.exponents] == ["2", "2", "2", "1", "0"]
    assert parse_ordinal("1 + w") == OMEGA
    assert parse_ordinal("0") == ZERO
    assert parse_ordinal("w^0") == ONE
    assert parse_ordinal("w^(w + 1)") == omega_pow(parse_ordinal("w + 1"))


def test_print_examples():
    assert print_ordinal(Ordinal((ONE, ZERO))) == "w + 1"
    assert print_ordinal(ZERO) == "0"
    assert print_ordinal(omega_pow(OMEGA)) == "w^w"
    assert print_ordinal(omega_times(from_int(2), 3)) == "w^2*3"


@pytest.mark.parametrize(
    "text",
    ["", "w^", "w*0", "0 + 1", "1 + 0", "w + ", "(w", "w^()", "3*2", "x"],
)
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_ordinal(text)


def _oracle_domain(limit=3):
    return [(p, poly_ordinal(*p)) for p in poly_range(limit)]


def test_compare_agrees_with_polynomial_oracle():
    domain = _oracle_domain()
    for (px, x), (py, y) in itertools.product(domain, domain):
        want = poly_cmp(px, py)
        got = compare_ordinals(x, y)
        assert (want, got) in {
            (-1, Ordering.LESS),
            (0, Ordering.EQUAL),
            (1, Ordering.GREATER),
        }


def test_add_agrees_with_polynomial_oracle():
    domain = _oracle_domain()
    for (px, x), (py, y) in itertools.product(domain, domain):
        assert cantor_add(x, y) == poly_ordinal(*poly_add(px, py))


def test_canonicity_on_oracle_domain():
    domain = _oracle_domain()
    for (px, x), (py, y) in itertools.product(domain, domain):
        structurally_equal = x == y
        assert structurally_equal == (compare_ordinals(x, y) is Ordering.EQUAL)
        assert structurally_equal == (px == py)


_small_ordinals = st.one_of(
    st.integers(0, 9).map(from_int),
    st.builds(
        lambda a, b, c: cantor_add(
            cantor_add(omega_times(from_int(a), b), from_int(c)), ZERO
        ),
        st.integers(0, 3),
        st.integers(0, 3),
        st.integers(0, 3),
    ),
    st.builds(lambda e, k: omega_times(e, k), st.integers(0, 4).map(from_int), st.integers(1, 3)),
    st.builds(lambda e: omega_pow(omega_pow(e)), st.integers(0, 3).map(from_int)),
)


@given(_small_ordinals)
@settings(max_examples=200)
def test_print_parse_round_trip(a):
    assert parse_ordinal(print_ordinal(a)) == a


@given(_small_ordinals, _small_ordinals, _small_ordinals)
@settings(max_examples=200)
def test_add_associative_and_monotone(a, b, c):
    assert cantor_add(cantor_add(a, b), c) == cantor_add(a, cantor_add(b, c))
    assert compare_ordinals(cantor_add(a, b), a) is not Ordering.LESS
    if compare_ordinals(b, c) is Ordering.LESS:
        assert compare_ordinals(cantor_add(a, b), cantor_add(a, c)) is Ordering.LESS


def test_successor():
    assert successor(ZERO) == ONE
    assert successor(OMEGA) == parse_ordinal("w + 1")
    assert print_ordinal(successor(parse_ordinal("w^2 + 1"))) == "w^2 + 2"


def test_total_order_transitive_sample():
    domain = [x for _, x in _oracle_domain(2)]
    for a, b, c in itertools.islice(itertools.product(domain, domain, domain), 0, None, 7):
        if a <= b <= c:
            assert a <= c
