import pytest
from hypothesis import given

from drh.kterm import (
    EMPTY,
    Concat,
    KTermSyntaxError,
    Letter,
    Power,
    ReservedLetterError,
    concat,
    content,
    is_kappa,
    length,
    parse_kterm,
    print_kterm,
)
from strategies import kterms

a, b, c = Letter("a"), Letter("b"), Letter("c")
TREE = "((b^(w-1)) a c) ((a b (a^(w-1)))^(w-1))"


def test_parse_basic():
    assert parse_kterm("(a b)^(w-1)") == Power(Concat((a, b)), -1)
    assert parse_kterm("a") == a
    assert parse_kterm("I") == EMPTY
    assert parse_kterm("(I)") == EMPTY


def test_parse_tree_example():
    w = parse_kterm(TREE)
    left = Concat((Power(b, -1), a, c))
    right = Power(Concat((a, b, Power(a, -1))), -1)
    assert w == Concat(left.parts + (right,))
    # the picture has 8 inner nodes and 6 leaves
    assert length(w) == 15
    assert content(w) == {"a", "b", "c"}


def test_length():
    assert length(a) == 2
    assert length(Power(a, -1)) == 3
    assert length(EMPTY) == 1
    assert length(concat(a, b, c)) == 6


def test_print():
    assert print_kterm(Power(a, -1)) == "a^(w-1)"
    assert print_kterm(Power(a, 0)) == "a^w"
    assert print_kterm(concat(a, Power(b, -2))) == "a b^(w-2)"
    assert print_kterm(Power(Power(a, -1), -1)) == "(a^(w-1))^(w-1)"
    assert print_kterm(EMPTY) == "I"


@pytest.mark.parametrize(
    "text",
    ["", "a^", "a^(w)", "a^(w1)", "(a", "a)", "A", "a I", "I^(w-1)", "a^(w-x)"],
)
def test_syntax_errors(text):
    with pytest.raises(KTermSyntaxError):
        parse_kterm(text, kbar=True)


def test_reserved_and_kappa_only():
    with pytest.raises(ReservedLetterError):
        parse_kterm("a 0")
    with pytest.raises(ReservedLetterError):
        parse_kterm("#")
    with pytest.raises(KTermSyntaxError):
        parse_kterm("a^w")
    assert parse_kterm("a^(w+2)", kbar=True) == Power(a, 2)


def test_error_position():
    with pytest.raises(KTermSyntaxError) as ei:
        parse_kterm("a b )")
    assert ei.value.pos == 4


def test_invariants():
    with pytest.raises(ValueError):
        Concat((a,))
    with pytest.raises(ValueError):
        Concat((a, Concat((a, b))))
    with pytest.raises(ValueError):
        Power(EMPTY, -1)
    assert concat(EMPTY, a) == a
    assert concat() == EMPTY


@given(kterms(qs=(-3, -2, -1, 0, 1, 2)))
def test_roundtrip(w):
    assert parse_kterm(print_kterm(w), kbar=True) == w


@given(kterms(), kterms())
def test_content_of_products(x, y):
    assert content(concat(x, y)) == content(x) | content(y)
    assert content(Power(x, -1)) == content(x)


@given(kterms())
def test_length_monotone(w):
    assert length(Power(w, -1)) > length(w)
    assert length(concat(w, a)) > length(w)
    assert is_kappa(w)
