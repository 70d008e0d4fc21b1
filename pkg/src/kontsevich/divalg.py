"""Divisor classes on M̄_{0,n}(r,d).

Symbols are ``L_i`` (evaluation at marking i), ``H`` (incidence with a
codimension-2 plane) and one symbol per boundary component. A ``DivClass`` is
a sparse rational combination of symbols, a ``Monomial`` an exponent multiset
and a ``Polynomial`` a sparse rational combination of monomials. Factor tuples
``((symbol, exponent), ...)`` are kept sorted so they double as dictionary keys.

The named classes below (omega squared, section self-intersection, tangency,
cuspidal and conic tangency) are rebuilt on every call; only evaluated
products are memoized.
"""

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple

from .exactnum import ONE, ZERO, binomial
from .exceptions import ExcludedSpaceError, InvalidSymbolError, ScopeError
from .moduli import (
    BoundarySym,
    SpaceId,
    canonical_boundary,
    degree_partition_class,
    enumerate_boundary,
    is_boundary,
    marked_degree_class,
    marked_size_class,
)
from .validators import validate_marking


class SymbolKind(IntEnum):
    H = 0
    L = 1
    B = 2


class DivSymbol(NamedTuple):
    kind: SymbolKind
    marking: int = 0
    boundary: Optional[BoundarySym] = None


H_SYMBOL = DivSymbol(SymbolKind.H)

Factors = Tuple[Tuple[DivSymbol, int], ...]


def l_symbol(marking: int) -> DivSymbol:
    return DivSymbol(SymbolKind.L, marking)


def b_symbol(boundary: BoundarySym) -> DivSymbol:
    return DivSymbol(SymbolKind.B, 0, boundary)


def validate_symbol(s: SpaceId, sym: DivSymbol) -> bool:
    """Check that ``sym`` names a divisor on ``s``.

    Raises:
        InvalidSymbolError: For a marking outside 1..n or a non-component partition.
    """
    if sym.kind == SymbolKind.L:
        validate_marking(s.n, sym.marking)
    elif sym.kind == SymbolKind.B:
        if not is_boundary(s, sym.boundary):
            raise InvalidSymbolError(f"{sym.boundary} is not a boundary component of {s}", "Y02")
    return True


def factors_from(exponents: Mapping[DivSymbol, int]) -> Factors:
    return tuple(sorted((sym, e) for sym, e in exponents.items() if e > 0))


def multiply_factors(a: Factors, b: Factors) -> Factors:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for sym, e in b:
        merged[sym] = merged.get(sym, 0) + e
    return tuple(sorted(merged.items()))


def factors_degree(factors: Factors) -> int:
    return sum(e for _, e in factors)


@dataclass(frozen=True)
class DivClass:
    """Formal rational combination of divisor symbols on one space."""

    space: SpaceId
    coeffs: Dict[DivSymbol, Fraction] = field(default_factory=dict)

    @classmethod
    def of(cls, space: SpaceId, coeffs: Mapping[DivSymbol, Fraction]) -> "DivClass":
        return cls(space, {sym: Fraction(c) for sym, c in coeffs.items() if c != 0})

    @classmethod
    def symbol(cls, space: SpaceId, sym: DivSymbol) -> "DivClass":
        validate_symbol(space, sym)
        return cls(space, {sym: ONE})

    def coefficient(self, sym: DivSymbol) -> Fraction:
        return self.coeffs.get(sym, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def items(self) -> Iterator[Tuple[DivSymbol, Fraction]]:
        return iter(sorted(self.coeffs.items()))

    def _check(self, other: "DivClass") -> None:
        if other.space != self.space:
            raise ScopeError(f"Cannot combine classes on {self.space} and {other.space}")

    def __add__(self, other: "DivClass") -> "DivClass":
        self._check(other)
        merged = dict(self.coeffs)
        for sym, c in other.coeffs.items():
            merged[sym] = merged.get(sym, ZERO) + c
        return DivClass.of(self.space, merged)

    def __neg__(self) -> "DivClass":
        return DivClass(self.space, {sym: -c for sym, c in self.coeffs.items()})

    def __sub__(self, other: "DivClass") -> "DivClass":
        return self + (-other)

    def scale(self, factor) -> "DivClass":
        return DivClass.of(self.space, {sym: c * factor for sym, c in self.coeffs.items()})

    def __rmul__(self, factor) -> "DivClass":
        return self.scale(factor)

    def as_polynomial(self) -> "Polynomial":
        return Polynomial(self.space, {((sym, 1),): c for sym, c in self.coeffs.items()})


@dataclass(frozen=True)
class Monomial:
    """Exponent multiset of divisor symbols on ``space``."""

    space: SpaceId
    factors: Factors = ()

    @classmethod
    def of(cls, space: SpaceId, exponents: Mapping[DivSymbol, int]) -> "Monomial":
        for sym in exponents:
            validate_symbol(space, sym)
        return cls(space, factors_from(exponents))

    @property
    def degree(self) -> int:
        return factors_degree(self.factors)

    def exponent(self, sym: DivSymbol) -> int:
        return dict(self.factors).get(sym, 0)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if other.space != self.space:
            raise ScopeError(f"Cannot multiply monomials on {self.space} and {other.space}")
        return Monomial(self.space, multiply_factors(self.factors, other.factors))


@dataclass(frozen=True)
class Polynomial:
    """Rational combination of monomials, keyed by factor tuples."""

    space: SpaceId
    terms: Dict[Factors, Fraction] = field(default_factory=dict)

    @classmethod
    def one(cls, space: SpaceId) -> "Polynomial":
        return cls(space, {(): ONE})

    @classmethod
    def from_monomial(cls, m: Monomial, coefficient=ONE) -> "Polynomial":
        if coefficient == 0:
            return cls(m.space, {})
        return cls(m.space, {m.factors: Fraction(coefficient)})

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[Tuple[Factors, Fraction]]:
        return iter(sorted(self.terms.items()))

    def monomials(self) -> Iterator[Tuple[Monomial, Fraction]]:
        for factors, c in self.items():
            yield Monomial(self.space, factors), c

    def degrees(self) -> set:
        return {factors_degree(f) for f in self.terms}

    def __add__(self, other: "Polynomial") -> "Polynomial":
        merged = dict(self.terms)
        for f, c in other.terms.items():
            total = merged.get(f, ZERO) + c
            if total:
                merged[f] = total
            else:
                merged.pop(f, None)
        return Polynomial(self.space, merged)

    def scale(self, factor) -> "Polynomial":
        if factor == 0:
            return Polynomial(self.space, {})
        return Polynomial(self.space, {f: c * factor for f, c in self.terms.items()})

    def multiply(self, other: "Polynomial", max_degree: Optional[int] = None) -> "Polynomial":
        """Product, dropping monomials of degree above ``max_degree``."""
        out: Dict[Factors, Fraction] = {}
        for fa, ca in self.terms.items():
            da = factors_degree(fa)
            for fb, cb in other.terms.items():
                if max_degree is not None and da + factors_degree(fb) > max_degree:
                    continue
                f = multiply_factors(fa, fb)
                total = out.get(f, ZERO) + ca * cb
                if total:
                    out[f] = total
                else:
                    out.pop(f, None)
        return Polynomial(self.space, out)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return self.multiply(other)

    def power(self, exponent: int, max_degree: Optional[int] = None) -> "Polynomial":
        result = Polynomial.one(self.space)
        for _ in range(exponent):
            result = result.multiply(self, max_degree)
        return result


def monomial_polynomial(s: SpaceId, exponents: Mapping[DivSymbol, int], coefficient=ONE) -> Polynomial:
    return Polynomial.from_monomial(Monomial.of(s, exponents), coefficient)


def _boundary_sum(s: SpaceId, components: Iterable[BoundarySym], coefficient: Fraction) -> Dict[DivSymbol, Fraction]:
    return {b_symbol(b): coefficient for b in components}


def omega_squared_class(s: SpaceId) -> DivClass:
    """Push-forward of c_1(ω_π)² from the universal curve: minus the total boundary.

    Raises:
        ExcludedSpaceError: On M̄_{0,0}(2,2).
    """
    if (s.r, s.d, s.n) == (2, 2, 0):
        raise ExcludedSpaceError("omega_squared_class")
    return DivClass.of(s, _boundary_sum(s, enumerate_boundary(s), -ONE))


def section_self_class(s: SpaceId, marking: int) -> DivClass:
    """Push-forward of the self-intersection of the section of ``marking``.

    For d >= 1 this is -H/d² + (2/d) L_i - Σ_j (d-j)²/d² K^{i,j}; for d = 0 it is
    -Σ_j C(n-j, 2) K^i_j / C(n-1, 2), which vanishes on M̄_{0,3}.
    """
    validate_marking(s.n, marking)
    coeffs: Dict[DivSymbol, Fraction] = {}
    if s.d >= 1:
        d = s.d
        coeffs[H_SYMBOL] = Fraction(-1, d * d)
        coeffs[l_symbol(marking)] = Fraction(2, d)
        for j in range(d):
            coeffs.update(_boundary_sum(s, marked_degree_class(s, marking, j), Fraction(-(d - j) ** 2, d * d)))
        return DivClass.of(s, coeffs)

    norm = binomial(s.n - 1, 2)
    for j in range(2, s.n - 1):
        coeffs.update(_boundary_sum(s, marked_size_class(s, marking, j), -binomial(s.n - j, 2) / norm))
    return DivClass.of(s, coeffs)


def tangency_class(s: SpaceId) -> DivClass:
    """Maps tangent to a fixed hyperplane: (d-1)/d H + Σ_j j(d-j)/d K^j."""
    if s.d < 2:
        raise ScopeError(f"Tangency class needs d >= 2, got {s}")
    d = s.d
    coeffs = {H_SYMBOL: Fraction(d - 1, d)}
    for j in range(1, d // 2 + 1):
        coeffs.update(_boundary_sum(s, degree_partition_class(s, j), Fraction(j * (d - j), d)))
    return DivClass.of(s, coeffs)


def cuspidal_class(s: SpaceId) -> DivClass:
    """Closure of the non-immersive plane maps: (3d-3)/d H + Σ_i (3i(d-i)-2d)/d K^i."""
    if s.r != 2 or s.n != 0 or s.d < 3:
        raise ScopeError(f"Cuspidal class is defined for r=2, n=0, d>=3, got {s}")
    d = s.d
    coeffs = {H_SYMBOL: Fraction(3 * d - 3, d)}
    for i in range(1, d // 2 + 1):
        coeffs.update(_boundary_sum(s, degree_partition_class(s, i), Fraction(3 * i * (d - i) - 2 * d, d)))
    return DivClass.of(s, coeffs)


def conic_tangency_class(s: SpaceId) -> DivClass:
    """Plane conics tangent to a fixed conic: 3H + K."""
    if (s.r, s.d) != (2, 2) or s.n > 1:
        raise ScopeError(f"Conic tangency class is only available on M̄_{{0,n}}(2,2) with n <= 1, got {s}")
    coeffs = {H_SYMBOL: Fraction(3)}
    coeffs.update(_boundary_sum(s, enumerate_boundary(s), ONE))
    return DivClass.of(s, coeffs)


def pullback_symbol(s: SpaceId, sym: DivSymbol) -> Dict[DivSymbol, Fraction]:
    target = SpaceId(s.r, s.d, s.n + 1)
    if sym.kind != SymbolKind.B:
        return {sym: ONE}
    b = sym.boundary
    lifts = {
        canonical_boundary(target, b.side + (target.n,), b.degree),
        canonical_boundary(target, b.side, b.degree),
    }
    return {b_symbol(lift): ONE for lift in lifts}


def forgetful_pullback(c: DivClass) -> DivClass:
    """Pull a class back along the map forgetting marking n+1.

    Boundary components go to the sum of their distinct lifts.
    """
    s = c.space
    if s.d < 1:
        raise ScopeError(f"Forgetful pullback needs d >= 1, got {s}")
    target = SpaceId(s.r, s.d, s.n + 1)
    coeffs: Dict[DivSymbol, Fraction] = {}
    for sym, coefficient in c.coeffs.items():
        for lifted, weight in pullback_symbol(s, sym).items():
            coeffs[lifted] = coeffs.get(lifted, ZERO) + coefficient * weight
    return DivClass.of(target, coeffs)


def pullback_polynomial(p: Polynomial) -> Polynomial:
    """Forgetful pullback of every monomial of ``p``."""
    s = p.space
    if s.d < 1:
        raise ScopeError(f"Forgetful pullback needs d >= 1, got {s}")
    target = SpaceId(s.r, s.d, s.n + 1)
    result = Polynomial(target, {})
    for factors, coefficient in p.terms.items():
        term = Polynomial.one(target).scale(coefficient)
        for sym, e in factors:
            lifted = DivClass.of(target, pullback_symbol(s, sym)).as_polynomial()
            term = term.multiply(lifted.power(e))
        result = result + term
    return result
