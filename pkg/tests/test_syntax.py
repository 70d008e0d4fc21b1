from fractions import Fraction

import pytest

from src.kontsevich.divalg import H_SYMBOL, b_symbol, l_symbol
from src.kontsevich.exceptions import InvalidSpaceError, InvalidSymbolError, MonomialSyntaxError
from src.kontsevich.moduli import BoundarySym, SpaceId, enumerate_boundary
from src.kontsevich.syntax import (
    format_boundary,
    format_monomial,
    parse_boundary,
    parse_expression,
    parse_monomial,
    parse_space,
)


def test_parse_space():
    assert parse_space("r=2,d=3,n=0") == SpaceId(2, 3, 0)
    assert parse_space(" r = 3 , d = 1 , n = 2 ") == SpaceId(3, 1, 2)
    with pytest.raises(MonomialSyntaxError):
        parse_space("2,3,0")
    with pytest.raises(InvalidSpaceError):
        parse_space("r=1,d=3,n=0")


def test_parse_monomial():
    s = SpaceId.of(2, 3, 0)
    m = parse_monomial(s, "H^3 K{dA=1}^5")
    assert m.exponent(H_SYMBOL) == 3
    assert m.exponent(b_symbol(BoundarySym(1, ()))) == 5
    assert m.degree == 8


def test_boundary_is_canonicalized():
    s = SpaceId.of(2, 2, 3)
    assert parse_boundary(s, "A=2,3;dA=0") == parse_boundary(s, "A=1;dA=2")
    assert parse_boundary(s, "dA=1; A=3,1") == parse_boundary(s, "A=2;dA=1")


def test_repeated_factors_accumulate():
    s = SpaceId.of(2, 2, 1)
    m = parse_monomial(s, "L1 H^2 L1^2 H")
    assert m.exponent(l_symbol(1)) == 3
    assert m.exponent(H_SYMBOL) == 3


@pytest.mark.parametrize("text", ["H^0", "X^2", "K{A=1}", "K{dA=x}", "K{A=1,1;dA=1}", "T^2", "H^-1"])
def test_parse_monomial_rejects(text):
    with pytest.raises(MonomialSyntaxError):
        parse_monomial(SpaceId.of(2, 2, 1), text)


@pytest.mark.parametrize("text", ["L2", "K{A=1;dA=0}"])
def test_parse_monomial_rejects_foreign_symbols(text):
    with pytest.raises(InvalidSymbolError):
        parse_monomial(SpaceId.of(2, 2, 1), text)


def test_format_round_trip():
    s = SpaceId.of(2, 3, 2)
    for b in enumerate_boundary(s):
        text = f"H^2 {format_boundary(b)}^3 L2"
        m = parse_monomial(s, text)
        assert parse_monomial(s, format_monomial(m)) == m
    assert format_monomial(parse_monomial(s, "1")) == "1"


def test_parse_expression_with_named_classes():
    s = SpaceId.of(2, 2, 1)
    p = parse_expression(s, "1/2 H^3 T^2 L1")
    assert p.degrees() == {6}
    # T = H/2 + K/2 on M̄_{0,1}(2,2), so H^3 T^2 L1 / 2 has the coefficient 1/8 on H^5 L1
    assert p.terms[((H_SYMBOL, 5), (l_symbol(1), 1))] == Fraction(1, 8)

    plain = parse_expression(s, "H^5 L1")
    assert plain.terms == {((H_SYMBOL, 5), (l_symbol(1), 1)): Fraction(1)}
