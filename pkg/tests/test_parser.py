import pytest
from hypothesis import given, settings, strategies as st

from mixmult import (GF, GradedRing, ParseError, PreconditionError, format_polynomial,
                     parse_polynomial, parse_ring, parse_session)
from mixmult.parser import tokenize

R = parse_ring("QQ[x,y,z]")


def test_parse_example_polynomial():
    f = parse_polynomial("x^4 + y^2*z^2", R)
    assert len(f) == 2
    assert format_polynomial(f) == "x^4 + y^2*z^2"


def test_rational_coefficient():
    f = parse_polynomial("-3/2*x*y", R)
    assert len(f) == 1
    assert format_polynomial(f) == "-3/2*x*y"


def test_precedence_and_unary_minus():
    assert parse_polynomial("-x^2", R) == -parse_polynomial("x^2", R)
    assert parse_polynomial("2*x + 3*y*z", R) == parse_polynomial("(3*z)*y + x*2", R)
    assert parse_polynomial("(x+y)^2", R) == parse_polynomial("x^2 + 2*x*y + y^2", R)


@pytest.mark.parametrize("text", ["x + ", "x y", "xy", "x^-1", "x^y", "w", "2/0", "(x"])
def test_malformed_input(text):
    with pytest.raises(ParseError):
        parse_polynomial(text, R)


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x +\n  * y", R)
    assert info.value.line == 2
    assert info.value.column == 3


def test_format_zero_and_difference():
    assert format_polynomial(R.zero) == "0"
    assert format_polynomial(parse_polynomial("x^2 - y^2", R)) == "x^2 - y^2"


def test_parse_ring_variants():
    S = parse_ring("GF(7)[a, b] order lex")
    assert S.field == GF(7)
    assert str(S.order) == "lex"
    with pytest.raises(ParseError):
        parse_ring("GF(8)[a]")
    with pytest.raises(ParseError):
        parse_ring("QQ[a, a]")


def test_session_document():
    doc = parse_session("""
        ring R = QQ[x,y,z];   # comment
        ideal I = x^2, x*y;
        poly f in R = x^2*y + z^3;
        polytope Q = (1,1,0) (2,1,0) (1,3,0) (1,1,3);
    """)
    assert len(doc.rings) == 1
    assert len(doc.ideal("I").generators) == 2
    assert doc.poly("f") == parse_polynomial("x^2*y + z^3", doc.rings["R"])
    assert len(doc.polytope("Q")) == 4


@pytest.mark.parametrize("text", [
    "ideal I = a;",
    "ring R = QQ[x]; ideal I = x; ideal I = x^2;",
    "ring R = QQ[x]; polytope Q = (1,1) (2;",
    "ring R = QQ[x]; ideal I in S = x;",
])
def test_session_errors(text):
    with pytest.raises(ParseError):
        parse_session(text)


def test_missing_session_name():
    doc = parse_session("ring R = QQ[x];")
    with pytest.raises(PreconditionError):
        doc.ideal("nope")


terms = st.lists(
    st.tuples(st.tuples(*[st.integers(0, 6)] * 3),
              st.fractions(min_value=-50, max_value=50, max_denominator=9)),
    max_size=6)


@settings(max_examples=200, deadline=None)
@given(terms)
def test_format_parse_roundtrip(ts):
    p = sum((R.monomial(e, c) for e, c in ts), R.zero)
    assert parse_polynomial(format_polynomial(p), R) == p


@settings(max_examples=200, deadline=None)
@given(terms)
def test_roundtrip_over_prime_field(ts):
    S = R.with_field(GF(32003))
    p = sum((S.monomial(e, int(c.numerator)) for e, c in ts), S.zero)
    assert parse_polynomial(format_polynomial(p), S) == p


TOKENS = ["x", "y", "z", "1", "2/3", "+", "-", "*", "^", "(", ")", "3", " ", "w", ",", ";", "#"]


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sampled_from(TOKENS), max_size=12))
def test_parser_total_on_token_soup(tokens):
    text = "".join(tokens)
    try:
        parse_polynomial(text, R)
    except ParseError:
        pass


@settings(max_examples=200, deadline=None)
@given(st.text(max_size=40))
def test_session_parser_total_on_text(text):
    try:
        parse_session(text)
    except ParseError:
        pass


def test_tokenizer_rejects_stray_characters():
    with pytest.raises(ParseError):
        tokenize("x $ y")
