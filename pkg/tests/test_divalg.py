from fractions import Fraction

import pytest

from src.kontsevich.divalg import (
    H_SYMBOL,
    DivClass,
    Monomial,
    Polynomial,
    b_symbol,
    conic_tangency_class,
    cuspidal_class,
    forgetful_pullback,
    l_symbol,
    omega_squared_class,
    pullback_polynomial,
    section_self_class,
    tangency_class,
)
from src.kontsevich.exceptions import ExcludedSpaceError, InvalidSymbolError, ScopeError
from src.kontsevich.moduli import BoundarySym, SpaceId, enumerate_boundary, marked_size_class


def k(degree, side=()):
    return b_symbol(BoundarySym(degree, side))


def test_monomial_rejects_foreign_symbols():
    s = SpaceId.of(2, 2, 1)
    with pytest.raises(InvalidSymbolError):
        Monomial.of(s, {l_symbol(2): 1})
    with pytest.raises(InvalidSymbolError):
        Monomial.of(s, {k(0, (1,)): 1})


def test_monomial_product_and_degree():
    s = SpaceId.of(2, 2, 1)
    m = Monomial.of(s, {H_SYMBOL: 2, l_symbol(1): 1}) * Monomial.of(s, {H_SYMBOL: 1, k(1): 3})
    assert m.degree == 7
    assert m.exponent(H_SYMBOL) == 3
    assert m.exponent(k(1)) == 3


def test_class_arithmetic():
    s = SpaceId.of(2, 3, 0)
    a = DivClass.of(s, {H_SYMBOL: Fraction(1, 2), k(1): 1})
    b = DivClass.of(s, {H_SYMBOL: Fraction(1, 2)})
    assert (a - b).coeffs == {k(1): Fraction(1)}
    assert (a + a).coefficient(H_SYMBOL) == 1
    assert (3 * a).coefficient(k(1)) == 3
    assert (a - a).is_zero()


def test_polynomial_power_truncates():
    s = SpaceId.of(2, 3, 0)
    p = DivClass.of(s, {H_SYMBOL: 1, k(1): 1}).as_polynomial()
    square = p.power(2)
    assert square.terms[((H_SYMBOL, 1), (k(1), 1))] == 2
    assert p.power(3, max_degree=2).is_zero()
    assert (p.multiply(p, max_degree=2)).degrees() == {2}


def test_section_self_class_examples():
    s = SpaceId.of(2, 2, 1)
    assert section_self_class(s, 1).coeffs == {
        H_SYMBOL: Fraction(-1, 4), l_symbol(1): Fraction(1), k(1): Fraction(-1, 4),
    }
    s = SpaceId.of(2, 1, 2)
    assert section_self_class(s, 2).coeffs == {
        H_SYMBOL: Fraction(-1), l_symbol(2): Fraction(2), k(0, (1, 2)): Fraction(-1),
    }


def test_section_self_class_degree_zero():
    s = SpaceId.of(3, 0, 4)
    expected = {b_symbol(b): Fraction(-1, 3) for b in marked_size_class(s, 1, 2)}
    assert section_self_class(s, 1).coeffs == expected
    assert section_self_class(SpaceId.of(3, 0, 3), 2).is_zero()


def test_omega_squared_is_minus_total_boundary():
    s = SpaceId.of(2, 3, 1)
    c = omega_squared_class(s)
    assert set(c.coeffs) == {b_symbol(b) for b in enumerate_boundary(s)}
    assert set(c.coeffs.values()) == {Fraction(-1)}
    with pytest.raises(ExcludedSpaceError):
        omega_squared_class(SpaceId.of(2, 2, 0))


def test_tangency_and_cuspidal_classes_quartics():
    s = SpaceId.of(2, 4, 0)
    assert tangency_class(s).coeffs == {H_SYMBOL: Fraction(3, 4), k(1): Fraction(3, 4), k(2): Fraction(1)}
    assert cuspidal_class(s).coeffs == {H_SYMBOL: Fraction(9, 4), k(1): Fraction(1, 4), k(2): Fraction(1)}


def test_named_class_scopes():
    with pytest.raises(ScopeError):
        tangency_class(SpaceId.of(2, 1, 0))
    with pytest.raises(ScopeError):
        cuspidal_class(SpaceId.of(3, 3, 0))
    with pytest.raises(ScopeError):
        cuspidal_class(SpaceId.of(2, 2, 0))
    with pytest.raises(ScopeError):
        conic_tangency_class(SpaceId.of(2, 2, 2))
    assert conic_tangency_class(SpaceId.of(2, 2, 1)).coeffs == {H_SYMBOL: Fraction(3), k(1): Fraction(1)}


def test_forgetful_pullback_sums_distinct_lifts():
    s = SpaceId.of(2, 3, 1)
    lifted = forgetful_pullback(DivClass.of(s, {k(1): 1, l_symbol(1): 2}))
    assert lifted.space == SpaceId(2, 3, 2)
    assert lifted.coeffs == {k(1): Fraction(1), k(1, (2,)): Fraction(1), l_symbol(1): Fraction(2)}

    # K{dA=1} on M̄_{0,0}(2,2) has a single lift
    single = forgetful_pullback(DivClass.of(SpaceId.of(2, 2, 0), {k(1): 1}))
    assert single.coeffs == {k(1): Fraction(1)}


def test_pullback_polynomial():
    s = SpaceId.of(2, 2, 0)
    p = Polynomial.from_monomial(Monomial.of(s, {H_SYMBOL: 4, k(1): 1}), Fraction(1, 2))
    lifted = pullback_polynomial(p)
    assert lifted.space == SpaceId(2, 2, 1)
    assert lifted.terms == {((H_SYMBOL, 4), (k(1), 1)): Fraction(1, 2)}
    with pytest.raises(ScopeError):
        forgetful_pullback(DivClass.of(SpaceId.of(2, 0, 3), {}))
