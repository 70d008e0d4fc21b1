# src/kontsevich/charnum.py

"""Characteristic numbers and cuspidal counts of rational curves.

A characteristic number counts degree-d rational curves in P^r meeting α_i
general codimension-i linear spaces and tangent to β general hyperplanes. It is
the top product of L-powers (one marking per condition of codimension >= 3),
H^{α_2} and T^β on M̄_{0,n}(r,d).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from loguru import logger

from .divalg import (
    H_SYMBOL,
    Monomial,
    Polynomial,
    conic_tangency_class,
    cuspidal_class,
    l_symbol,
    tangency_class,
)
from .evaluate import IntersectionEvaluator
from .exactnum import ZERO, binomial, is_integral
from .exceptions import CharNumQueryError, IntegralityError, RouteDisagreementError, ScopeError
from .gw import nd
from .moduli import SpaceId
from .validators import validate_charnum, validate_index


@dataclass(frozen=True)
class CharNumQuery:
    r: int
    d: int
    alpha: Dict[int, int] = field(default_factory=dict)
    beta: int = 0

    @classmethod
    def of(cls, r: int, d: int, alpha: Dict[int, int], beta: int = 0) -> "CharNumQuery":
        alpha = {int(c): int(n) for c, n in alpha.items() if n}
        validate_charnum(r, d, alpha, beta)
        return cls(r, d, alpha, beta)

    def describe(self) -> str:
        parts = [f"{n} codim-{c}" for c, n in sorted(self.alpha.items(), reverse=True)]
        if self.beta:
            parts.append(f"tangent to {self.beta} hyperplanes")
        return f"degree {self.d} rational curves in P^{self.r}: " + (", ".join(parts) or "no conditions")


def characteristic_polynomial(q: CharNumQuery, all_markings: bool = False) -> Polynomial:
    """The top product computing ``q``.

    Conditions of codimension >= 3 (or every condition when ``all_markings``) get one
    marking each, ordered by decreasing codimension; the remaining codimension-2
    conditions become H factors.
    """
    codims = []
    for c, n in sorted(q.alpha.items(), reverse=True):
        if c >= 3 or all_markings:
            codims.extend([c] * n)
    h_power = 0 if all_markings else q.alpha.get(2, 0)

    s = SpaceId.of(q.r, q.d, len(codims))
    exponents = {l_symbol(i): c for i, c in enumerate(codims, start=1)}
    if h_power:
        exponents[H_SYMBOL] = h_power
    product = Polynomial.from_monomial(Monomial.of(s, exponents))
    if q.beta:
        product = product.multiply(tangency_class(s).as_polynomial().power(q.beta))
    return product


def _checked(value: Fraction, what: str, check_integer: bool) -> Fraction:
    if check_integer and not is_integral(value):
        raise IntegralityError(f"{what} evaluated to the non-integer {value}")
    return value


def characteristic_number(q: CharNumQuery, evaluator: IntersectionEvaluator,
                          all_markings: bool = False, check_integer: bool = False) -> Fraction:
    """Evaluate a characteristic number query."""
    logger.info(f"Characteristic number of {q.describe()}")
    value = evaluator.evaluate_polynomial(characteristic_polynomial(q, all_markings))
    return _checked(value, q.describe(), check_integer)


def cuspidal_closed_form(d: int) -> Fraction:
    """C_d from the N_i (one-cusp rational plane curves through 3d - 2 points)."""
    if d < 3:
        raise ScopeError(f"Cuspidal counts need d >= 3, got {d}")
    total = Fraction(3 * d - 3, d) * nd(d)
    correction = ZERO
    for i in range(1, d):
        j = d - i
        correction += binomial(3 * d - 2, 3 * i - 1) * nd(i) * nd(j) * (3 * i * i * j * j - 2 * d * i * j)
    return total + correction / (2 * d)


def cuspidal_count(d: int, evaluator: Optional[IntersectionEvaluator] = None) -> Fraction:
    """C_d, checked against Z · H^{3d-2} on M̄_{0,0}(2,d) when an evaluator is given.

    Raises:
        ScopeError: If d < 3.
        RouteDisagreementError: If the two routes differ.
    """
    closed = cuspidal_closed_form(d)
    if evaluator is None:
        return closed
    s = SpaceId.of(2, d, 0)
    hyperplanes = Polynomial.from_monomial(Monomial.of(s, {H_SYMBOL: 3 * d - 2}))
    direct = evaluator.evaluate_polynomial(cuspidal_class(s).as_polynomial().multiply(hyperplanes))
    if direct != closed:
        raise RouteDisagreementError(f"cuspidal count C_{d}", closed, direct)
    return closed


def boundary_point_oracle(d: int, i: int) -> Fraction:
    """K^i · H^{3d-2} on M̄_{0,0}(2,d) from the plane counts N_i."""
    validate_index(d, 2, 10 ** 6, "d")
    validate_index(i, 1, d // 2, "i")
    if 2 * i != d:
        return binomial(3 * d - 2, 3 * i - 1) * i * (d - i) * nd(i) * nd(d - i)
    half = d // 2
    return binomial(3 * d - 2, 3 * half - 1) * half * half * nd(half) * nd(half) / 2


def conic_tangency_count(points: int, lines: int, conics: int, evaluator: IntersectionEvaluator,
                         check_integer: bool = False) -> Fraction:
    """Plane conics through points, tangent to lines and tangent to conics (five conditions)."""
    for name, value in (("points", points), ("lines", lines), ("conics", conics)):
        if value < 0:
            raise CharNumQueryError(f"Negative number of {name}: {value}")
    if points + lines + conics != 5:
        raise CharNumQueryError(f"Conics need 5 conditions, got {points + lines + conics}")
    s = SpaceId.of(2, 2, 1)
    product = Polynomial.from_monomial(Monomial.of(s, {H_SYMBOL: points, l_symbol(1): 1}), Fraction(1, 2))
    product = product.multiply(tangency_class(s).as_polynomial().power(lines))
    product = product.multiply(conic_tangency_class(s).as_polynomial().power(conics))
    value = evaluator.evaluate_polynomial(product)
    return _checked(value, f"conics through {points} points, {lines} lines, {conics} conics", check_integer)
