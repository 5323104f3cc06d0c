from fractions import Fraction

import pytest
from hypothesis import given

from cuntz_cyclic.notation import ParseError, format_lincomb, parse_algebra, parse_chain, parse_monomial
from cuntz_cyclic.semigroup import CUNTZ_UNIT, FREE_UNIT, CuntzMonomial, p, q
from strategies import chains, free_words


def test_monomial():
    assert parse_monomial("p[1]q[2,3]") == CuntzMonomial((1,), (2, 3))
    assert parse_monomial("1") == CUNTZ_UNIT
    assert parse_monomial("w[]") == FREE_UNIT


def test_two_term_chain():
    x = parse_chain("3/2 * (p[1] (x) q[1]) + -1 * (1 (x) 1)")
    assert len(x) == 2
    assert x.coeff((p(1), q(1))) == Fraction(3, 2)
    assert x.coeff((CUNTZ_UNIT, CUNTZ_UNIT)) == -1


def test_multilinear_tensor():
    x = parse_chain("(p[1] + q[1]) (x) 1")
    assert x == parse_chain("p[1] (x) 1 + q[1] (x) 1")


def test_zero():
    assert parse_chain("0") == 0
    assert format_lincomb(parse_chain("p[1] - p[1]")) == "0"


@pytest.mark.parametrize(
    "text",
    ["q[1] p[1]", "p[1] +", "p[1] (x)", "p[0]", "3 * ", "p[1] (x) q[1] + p[1]", "p[1] (x) w[1]", "q[]", "p[1] @"],
)
def test_rejects(text):
    with pytest.raises(ParseError) as info:
        parse_chain(text)
    assert info.value.position >= 0


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_chain("q[1] p[1]")
    assert info.value.position == 5


def test_parse_algebra_rejects_tensor():
    with pytest.raises(ParseError):
        parse_algebra("p[1] (x) q[1]")


def test_canonical_format():
    assert format_lincomb(parse_chain("1 - p[1]q[1]")) == "1 - p[1]q[1]"
    assert format_lincomb(parse_chain("-(q[1] (x) p[1])")) == "-1 * (q[1] (x) p[1])"
    assert format_lincomb(parse_chain("1/2 * w[1,2] + 1/2 * w[2,1]")) == "1/2 * w[1,2] + 1/2 * w[2,1]"


@given(chains(0))
def test_roundtrip_degree0(x):
    assert parse_chain(format_lincomb(x)) == x


@given(chains(2))
def test_roundtrip_degree2(x):
    assert parse_chain(format_lincomb(x)) == x


@given(chains(1, free_words))
def test_roundtrip_free(x):
    assert parse_chain(format_lincomb(x)) == x
