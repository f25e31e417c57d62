import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from encodability.terms import (
    App,
    Fst,
    IfN,
    Lam,
    Num,
    Pair,
    Snd,
    TypeCheckError,
    Var,
    free_names,
    parse_term,
    print_term,
    typecheck,
)
from encodability.typesyntax import Arrow, N, ParseError, Prod, parse_type
from encodability.verify import generate_inhabitant
from helpers import enumerate_types


def test_parse_lambda():
    assert parse_term("\\x:N. x") == Lam("x", N, Var("x"))


def test_parse_fst_pair():
    assert parse_term("fst <x, 0>") == Fst(Pair(Var("x"), Num(0)))


def test_parse_if():
    assert parse_term("if 3 z 0 1") == IfN(3, Var("z"), Num(0), Num(1))


def test_parse_application_left_associative():
    assert parse_term("f a b") == App(App(Var("f"), Var("a")), Var("b"))


def test_parse_annotation_uses_type_grammar():
    t = parse_term("\\f:(N->N)*N. fst f")
    assert t.annot == parse_type("(N->N)*N")


def test_alpha_equivalence_is_equality():
    assert parse_term("\\x:N. x") == parse_term("\\y:N. y")
    assert parse_term("\\x:N. \\y:N. x") != parse_term("\\x:N. \\y:N. y")
    # annotations matter
    assert parse_term("\\x:N. 0") != parse_term("\\x:N*N. 0")
    # free variables compare by name
    assert Var("a") != Var("b")
    assert hash(parse_term("\\x:N. x")) == hash(parse_term("\\z:N. z"))


def test_shadowing_resolves_to_nearest_binder():
    t = parse_term("\\x:N. \\x:N->N. x")
    assert t == parse_term("\\a:N. \\b:N->N. b")


@pytest.mark.parametrize(
    "text",
    ["", "\\x. x", "\\x:N x", "<x>", "<x,>", "fst", "if x 1 2 3", "if 1 2 3", "(x", "\\fst:N. 0"],
)
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_term(text)


def test_typecheck_identity():
    assert typecheck([], parse_term("\\x:N.x")) == parse_type("N->N")


def test_typecheck_conditional():
    assert typecheck([], parse_term("if 0 0 1 2")) == N


def test_typecheck_numeral_not_a_function():
    with pytest.raises(TypeCheckError) as info:
        typecheck([], App(Num(0), Num(0)))
    assert info.value.path == (0,)


def test_typecheck_reports_leftmost_innermost():
    # the failure inside the function part must win over the argument's
    bad = App(App(Num(1), Num(2)), App(Num(3), Num(4)))
    with pytest.raises(TypeCheckError) as info:
        typecheck([], bad)
    assert info.value.path == (0, 0)


def test_typecheck_mismatch_carries_expected_actual():
    term = App(parse_term("\\x:N.x"), parse_term("<0, 1>"))
    with pytest.raises(TypeCheckError) as info:
        typecheck([], term)
    assert info.value.expected == N
    assert info.value.actual == Prod(N, N)
    assert info.value.path == (1,)


def test_typecheck_context_and_shadowing():
    ctx = [("f", parse_type("N->N")), ("x", N)]
    assert typecheck(ctx, parse_term("f x")) == N
    assert typecheck(ctx, parse_term("\\x:N->N. x")) == parse_type("(N->N)->(N->N)")
    with pytest.raises(TypeCheckError):
        typecheck(ctx, parse_term("\\x:N->N. f x"))


def test_typecheck_unbound():
    with pytest.raises(TypeCheckError) as info:
        typecheck([], Var("ghost"))
    assert "ghost" in str(info.value)


def test_free_names():
    assert free_names(parse_term("\\x:N. f x y")) == {"f", "y"}


def test_round_trip_fixture_terms():
    for text in [
        "\\x:N. x",
        "\\x:N*N. \\y:N. if 0 y fst x if 1 y snd x 0",
        "fst <x, 0>",
        "f fst x",
        "fst x y",
        "(\\x:N. x) 0",
        "g (f x)",
        "\\f:(N->N)->N. f (\\x:N. 0)",
        "snd <\\x:N. x, <0, 1>>",
        "if 2 (f 0) (g <0, 1>) 7",
    ]:
        t = parse_term(text)
        assert parse_term(print_term(t)) == t


@given(st.integers(0, 10_000), st.sampled_from(enumerate_types(7)))
@settings(max_examples=200, deadline=None)
def test_round_trip_generated_terms(seed, ty):
    t = generate_inhabitant(ty, seed, fuel=4)
    assert parse_term(print_term(t)) == t
