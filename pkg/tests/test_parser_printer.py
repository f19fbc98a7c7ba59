import pytest
from hypothesis import given

from lamkernel.models.term import EMPTY, REC, SUCC, ZERO, Abs, App, Var, apply, lam, v
from lamkernel.models.types import NAT, Arrow, Context, Meta
from lamkernel.utils.errors import ParseError
from lamkernel.utils.normalization import numeral
from lamkernel.utils.parser import parse_context, parse_substitution, parse_term, parse_type
from lamkernel.utils.printer import LAMBDA, print_context, print_term, print_type
from tests.strategies import terms


def test_parse_lambda_body_extends_right():
    assert parse_term("\\v0. v0 v1") == Abs(Var(0), App(v(0), v(1)))
    assert parse_term("λv0. v0 v1") == parse_term("\\v0. v0 v1")


def test_application_is_left_associative():
    assert parse_term("Rec v0 v1 0") == App(App(App(REC, v(0)), v(1)), ZERO)
    assert parse_term("v0 (v1 v2)") == App(v(0), App(v(1), v(2)))


def test_parse_numerals_and_parentheses():
    assert parse_term("S (S 0)") == numeral(2)
    assert parse_term("((\\v0. v0)) 0") == App(lam(0, v(0)), ZERO)
    assert parse_term("  v12  ") == v(12)


def test_arrow_is_not_a_term_token():
    with pytest.raises(ParseError):
        parse_term("v0 -> v1")


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as excinfo:
        parse_term("(v0")
    assert excinfo.value.line == 1
    assert excinfo.value.column >= 1
    assert excinfo.value.expected
    with pytest.raises(ParseError) as excinfo:
        parse_term("\\v0 v0")
    assert excinfo.value.line == 1


def test_constants_outside_alphabet_are_rejected():
    with pytest.raises(ParseError) as excinfo:
        parse_term("\\v0. S v0", EMPTY)
    assert excinfo.value.column == 6
    assert parse_term("\\v0. v0", EMPTY) == lam(0, v(0))


def test_parse_types():
    assert parse_type("nat -> nat -> nat") == Arrow(NAT, Arrow(NAT, NAT))
    assert parse_type("(nat -> nat) -> nat") == Arrow(Arrow(NAT, NAT), NAT)
    with pytest.raises(ParseError):
        parse_type("natt")
    with pytest.raises(ParseError):
        parse_type("nat ->")


def test_parse_context_most_recent_first():
    ctx = parse_context("v0:nat, v1:nat -> nat, v0:nat -> nat")
    assert ctx.lookup(Var(0)) == NAT
    assert ctx.lookup(Var(1)) == Arrow(NAT, NAT)
    assert len(ctx) == 3
    assert parse_context("") == Context()
    assert print_context(parse_context("v1:nat,v0:nat -> nat")) == "v1:nat,v0:nat -> nat"


def test_parse_substitution():
    sigma = parse_substitution("v1:=v0, v2:=\\v0. v0")
    assert sigma(Var(1)) == v(0)
    assert sigma(Var(2)) == lam(0, v(0))
    assert sigma(Var(0)) == v(0)
    with pytest.raises(ParseError):
        parse_substitution("v1=v0")


def test_print_worked_example():
    term = lam(1, lam(2, lam(3, apply(v(3), v(0), v(2), v(1)))))
    assert print_term(term) == "\\v1. \\v2. \\v3. v3 v0 v2 v1"
    assert print_term(term, binder=LAMBDA) == "λv1. λv2. λv3. v3 v0 v2 v1"


def test_print_minimal_parentheses():
    assert print_term(numeral(2)) == "S (S 0)"
    assert print_term(App(lam(0, v(0)), v(1))) == "(\\v0. v0) v1"
    assert print_term(App(v(1), lam(0, v(0)))) == "v1 (\\v0. v0)"
    assert print_term(apply(REC, v(0), v(1), ZERO)) == "Rec v0 v1 0"
    assert print_term(App(SUCC, App(SUCC, ZERO))) == "S (S 0)"


def test_print_types():
    assert print_type(Arrow(Arrow(NAT, NAT), NAT)) == "(nat -> nat) -> nat"
    assert print_type(Arrow(Meta(0), Arrow(NAT, Meta(1)))) == "?0 -> nat -> ?1"


@given(terms())
def test_print_parse_round_trip(term):
    assert parse_term(print_term(term)) == term
    assert parse_term(print_term(term, binder=LAMBDA)) == term
