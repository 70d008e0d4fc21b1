# src/kontsevich/evaluate.py

"""Top intersection products on M̄_{0,n}(r,d).

A monomial containing a boundary symbol k is evaluated on the gluing model
M̄_A x_{P^r} M̄_B of k: every other factor is pulled back to a sum of classes on
the two sides, the diagonal of P^r contributes Σ_e L_{p_A}^e ⊗ L_{p_B}^{r-e},
and the result is a sum of products of top intersections on the smaller
spaces. Monomials in L_i and H alone are Gromov-Witten invariants.

Sub-spaces are labelled as follows: the markings of A in increasing order become
1..|A| on M̄_A and the gluing point p_A is |A|+1 (likewise for B).
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Tuple

from loguru import logger

from .divalg import (
    DivClass,
    DivSymbol,
    Factors,
    H_SYMBOL,
    Monomial,
    Polynomial,
    SymbolKind,
    b_symbol,
    factors_degree,
    l_symbol,
    multiply_factors,
    omega_squared_class,
    pullback_polynomial,
    section_self_class,
    validate_symbol,
)
from .exactnum import ONE, ZERO, binomial
from .exceptions import InvalidSymbolError, NotTopProductError, ScopeError
from .gw import GromovWittenSolver
from .memo import MemoStore
from .moduli import (
    BoundarySym,
    SpaceId,
    canonical_boundary,
    complement,
    dim_space,
    enumerate_boundary,
    is_boundary,
    side_containing,
)
from .syntax import parse_expression

EXCLUDED_SPACE = SpaceId(2, 2, 0)

ROUTE_SIMPLIFIED = "simplified"
ROUTE_LITERAL = "literal"

BiFactors = Tuple[Factors, Factors]


@dataclass(frozen=True)
class BiClass:
    """Rational combination of products (class on M̄_A) ⊗ (class on M̄_B)."""

    left: SpaceId
    right: SpaceId
    terms: Dict[BiFactors, Fraction] = field(default_factory=dict)

    @classmethod
    def from_parts(cls, left: DivClass, right: DivClass) -> "BiClass":
        terms: Dict[BiFactors, Fraction] = {}
        for sym, c in left.coeffs.items():
            terms[(((sym, 1),), ())] = c
        for sym, c in right.coeffs.items():
            terms[((), ((sym, 1),))] = c
        return cls(left.space, right.space, terms)

    def __add__(self, other: "BiClass") -> "BiClass":
        merged = dict(self.terms)
        for key, c in other.terms.items():
            total = merged.get(key, ZERO) + c
            if total:
                merged[key] = total
            else:
                merged.pop(key, None)
        return BiClass(self.left, self.right, merged)

    def scale(self, factor) -> "BiClass":
        if factor == 0:
            return BiClass(self.left, self.right, {})
        return BiClass(self.left, self.right, {k: c * factor for k, c in self.terms.items()})

    def __neg__(self) -> "BiClass":
        return self.scale(-1)

    def __sub__(self, other: "BiClass") -> "BiClass":
        return self + (-other)


@dataclass(frozen=True)
class BoundarySplit:
    """The gluing data of one boundary component k = (A ∪ B, d_A, d_B)."""

    space: SpaceId
    boundary: BoundarySym
    left: SpaceId
    right: SpaceId
    left_markings: Tuple[int, ...]
    right_markings: Tuple[int, ...]
    # image T -> divisors of M̄_A / M̄_B meeting the gluing locus along T
    contributions: Dict[BoundarySym, Tuple[Tuple[str, BoundarySym], ...]]
    self_crossing: Tuple[Tuple[str, BoundarySym], ...]

    @property
    def left_point(self) -> int:
        return self.left.n

    @property
    def right_point(self) -> int:
        return self.right.n

    def side_of(self, marking: int) -> Tuple[str, int]:
        if marking in self.left_markings:
            return "A", self.left_markings.index(marking) + 1
        return "B", self.right_markings.index(marking) + 1


def _reconstruct(s: SpaceId, sub: SpaceId, labels: Tuple[int, ...], divisor: BoundarySym) -> BoundarySym:
    # side of the divisor away from the gluing point keeps its markings and degree
    attached = side_containing(sub, divisor, sub.n)
    detached = complement(sub, attached)
    return canonical_boundary(s, tuple(labels[i - 1] for i in detached.side), detached.degree)


@lru_cache(maxsize=4096)
def boundary_split(s: SpaceId, k: BoundarySym) -> BoundarySplit:
    if not is_boundary(s, k):
        raise InvalidSymbolError(f"{k} is not a boundary component of {s}", "Y02")
    other = complement(s, k)
    left = SpaceId(s.r, k.degree, len(k.side) + 1)
    right = SpaceId(s.r, other.degree, len(other.side) + 1)

    contributions: Dict[BoundarySym, List[Tuple[str, BoundarySym]]] = {}
    self_crossing: List[Tuple[str, BoundarySym]] = []
    for tag, sub, labels in (("A", left, k.side), ("B", right, other.side)):
        for divisor in enumerate_boundary(sub):
            image = _reconstruct(s, sub, labels, divisor)
            if image == k:
                self_crossing.append((tag, divisor))
            else:
                contributions.setdefault(image, []).append((tag, divisor))

    return BoundarySplit(
        space=s,
        boundary=k,
        left=left,
        right=right,
        left_markings=k.side,
        right_markings=other.side,
        contributions={t: tuple(v) for t, v in contributions.items()},
        self_crossing=tuple(self_crossing),
    )


def psi_degree(s: SpaceId, k: BoundarySym) -> int:
    """Degree of the gluing map onto k: 2 when n = 0 and the split is d/2 + d/2."""
    if not is_boundary(s, k):
        raise InvalidSymbolError(f"{k} is not a boundary component of {s}", "Y02")
    return 2 if s.n == 0 and 2 * k.degree == s.d else 1


class IntersectionEvaluator:
    """Evaluates top products, memoizing by relabeled canonical keys.

    Args:
        store: Memo store for products (and the solver's invariants).
        solver: Gromov-Witten solver for monomials without boundary factors.
        relabel_limit: Maximum number of marking orders tried per memo key.
        route: How ψ*(k) is expanded, ``simplified`` or ``literal``.
    """

    def __init__(self, store: Optional[MemoStore] = None, solver: Optional[GromovWittenSolver] = None,
                 relabel_limit: int = 720, route: str = ROUTE_SIMPLIFIED) -> None:
        self.store = store if store is not None else MemoStore()
        self.solver = solver if solver is not None else GromovWittenSolver(self.store)
        self.relabel_limit = relabel_limit
        if route not in (ROUTE_SIMPLIFIED, ROUTE_LITERAL):
            raise ScopeError(f"Unknown pullback route {route!r}")
        self.route = route

    # -- pullbacks -----------------------------------------------------------

    def _contribution_parts(self, split: BoundarySplit, entries: Iterable[Tuple[str, BoundarySym]]):
        left: Dict[DivSymbol, Fraction] = {}
        right: Dict[DivSymbol, Fraction] = {}
        for tag, divisor in entries:
            target = left if tag == "A" else right
            sym = b_symbol(divisor)
            target[sym] = target.get(sym, ZERO) + ONE
        return DivClass.of(split.left, left), DivClass.of(split.right, right)

    def _self_pullback(self, split: BoundarySplit, route: str) -> Tuple[DivClass, DivClass]:
        left, right = self._contribution_parts(split, split.self_crossing)
        left = left + section_self_class(split.left, split.left_point)
        right = right + section_self_class(split.right, split.right_point)
        if route == ROUTE_SIMPLIFIED:
            return left, right

        others = [entry for entries in split.contributions.values() for entry in entries]
        other_left, other_right = self._contribution_parts(split, others)
        literal_left = (
            section_self_class(split.left, split.left_point)
            - omega_squared_class(split.left)
            - other_left
        )
        literal_right = (
            section_self_class(split.right, split.right_point)
            - omega_squared_class(split.right)
            - other_right
        )
        return literal_left, literal_right

    def _linear_parts(self, split: BoundarySplit, sym: DivSymbol, route: Optional[str] = None) -> Tuple[DivClass, DivClass]:
        route = route or self.route
        if sym.kind == SymbolKind.H:
            left = {H_SYMBOL: ONE} if split.left.d >= 1 else {}
            right = {H_SYMBOL: ONE} if split.right.d >= 1 else {}
            return DivClass.of(split.left, left), DivClass.of(split.right, right)
        if sym.kind == SymbolKind.L:
            tag, label = split.side_of(sym.marking)
            if tag == "A":
                return DivClass.of(split.left, {l_symbol(label): ONE}), DivClass(split.right, {})
            return DivClass(split.left, {}), DivClass.of(split.right, {l_symbol(label): ONE})
        if sym.boundary == split.boundary:
            return self._self_pullback(split, route)
        return self._contribution_parts(split, split.contributions.get(sym.boundary, ()))

    def psi_pullback(self, s: SpaceId, k: BoundarySym, sym: DivSymbol, route: Optional[str] = None) -> BiClass:
        """ψ* of one symbol to M̄_A x M̄_B, as a combination of degree-one classes."""
        validate_symbol(s, sym)
        split = boundary_split(s, k)
        return BiClass.from_parts(*self._linear_parts(split, sym, route))

    def total_boundary_sides(self, s: SpaceId, k: BoundarySym) -> Tuple[BiClass, BiClass]:
        """Both sides of Σ_{T≠k} ψ*(T) + self crossings = τ_A*(ΣΔ_A) + τ_B*(ΣΔ_B)."""
        split = boundary_split(s, k)
        pulled = BiClass(split.left, split.right, {})
        for t in enumerate_boundary(s):
            if t != k:
                pulled = pulled + BiClass.from_parts(*self._linear_parts(split, b_symbol(t)))
        pulled = pulled + BiClass.from_parts(*self._contribution_parts(split, split.self_crossing))
        total = BiClass.from_parts(-omega_squared_class(split.left), -omega_squared_class(split.right))
        return pulled, total

    # -- canonical keys --------------------------------------------------------

    def _relabel(self, s: SpaceId, factors: Factors, perm: Dict[int, int]) -> Factors:
        out = []
        for sym, e in factors:
            if sym.kind == SymbolKind.L:
                out.append((l_symbol(perm[sym.marking]), e))
            elif sym.kind == SymbolKind.B:
                b = sym.boundary
                out.append((b_symbol(canonical_boundary(s, tuple(perm[i] for i in b.side), b.degree)), e))
            else:
                out.append((sym, e))
        return tuple(sorted(out))

    def canonical_factors(self, s: SpaceId, factors: Factors) -> Factors:
        """A relabeled form of ``factors`` shared by all marking permutations (within the search limit)."""
        if s.n <= 1:
            return factors
        exponents = {sym.marking: e for sym, e in factors if sym.kind == SymbolKind.L}
        boundary = [(sym.boundary, e) for sym, e in factors if sym.kind == SymbolKind.B]

        def signature(i: int):
            incidence = []
            for b, e in boundary:
                side = side_containing(s, b, i)
                incidence.append((e, side.degree, len(side.side)))
            return exponents.get(i, 0), tuple(sorted(incidence))

        ordered = sorted(s.markings, key=signature)
        groups = [list(g) for _, g in itertools.groupby(ordered, key=signature)]

        def relabel_with(order: List[int]) -> Factors:
            return self._relabel(s, factors, {old: new for new, old in enumerate(order, start=1)})

        varying = []
        for group in groups:
            if len(group) < 2:
                continue
            symmetric = True
            for a, b in zip(group, group[1:]):
                swap = {i: i for i in s.markings}
                swap[a], swap[b] = b, a
                if self._relabel(s, factors, swap) != factors:
                    symmetric = False
                    break
            if not symmetric:
                varying.append(group)

        candidates = 1
        for group in varying:
            candidates *= math.factorial(len(group))
        if not varying or candidates > self.relabel_limit:
            return relabel_with(ordered)

        best = None
        for choice in itertools.product(*(itertools.permutations(g) for g in varying)):
            replacement = dict(zip(map(tuple, varying), choice))
            order: List[int] = []
            for group in groups:
                order.extend(replacement.get(tuple(group), group))
            relabeled = relabel_with(order)
            if best is None or relabeled < best:
                best = relabeled
        return best

    # -- evaluation ------------------------------------------------------------

    def _integrate(self, s: SpaceId, factors: Factors) -> Fraction:
        """Top product of ``factors``; zero for any degree other than the dimension."""
        if factors_degree(factors) != dim_space(s):
            return ZERO
        for sym, e in factors:
            if sym.kind == SymbolKind.H and s.d == 0:
                return ZERO
            if sym.kind == SymbolKind.L and e > s.r:
                return ZERO
        key = (s, self.canonical_factors(s, factors))
        known = self.store.get_product(key)
        if known is not None:
            return known
        value = self._compute(s, key[1])
        return self.store.put_product(key, value)

    def _compute(self, s: SpaceId, factors: Factors) -> Fraction:
        boundary = [sym for sym, _ in factors if sym.kind == SymbolKind.B]
        if boundary:
            return self._split(s, factors, min(boundary))

        if s.d == 0:
            total = sum(e for _, e in factors)
            return ONE if s.n == 3 and total == s.r else ZERO

        exponents = dict(factors)
        insertions = [exponents.get(l_symbol(i), 0) for i in s.markings]
        insertions += [2] * exponents.get(H_SYMBOL, 0)
        return self.solver.value(s.r, s.d, insertions)

    def _powers(self, part: DivClass, top: int, limit: int) -> List[List[Tuple[Factors, Fraction]]]:
        powers = []
        poly = Polynomial.one(part.space)
        linear = part.as_polynomial()
        for j in range(top + 1):
            powers.append(list(poly.terms.items()) if j <= limit else [])
            if j < top and j < limit:
                poly = poly.multiply(linear, limit)
        return powers

    def _split(self, s: SpaceId, factors: Factors, k_sym: DivSymbol) -> Fraction:
        k = k_sym.boundary
        split = boundary_split(s, k)
        dim_left, dim_right = dim_space(split.left), dim_space(split.right)
        r = s.r

        remaining = []
        for sym, e in factors:
            e = e - 1 if sym == k_sym else e
            if e:
                remaining.append((sym, e))
        logger.debug(f"Splitting {s} along {k} ({len(remaining)} remaining factors)")

        expansion: Dict[BiFactors, Fraction] = {((), ()): ONE}
        still = sum(e for _, e in remaining)
        for sym, e in remaining:
            still -= e
            left_part, right_part = self._linear_parts(split, sym)
            left_pow = self._powers(left_part, e, dim_left)
            right_pow = self._powers(right_part, e, dim_right)
            weights = [binomial(e, j) for j in range(e + 1)]
            grown: Dict[BiFactors, Fraction] = {}
            for (lf, rf), c in expansion.items():
                dl, dr = factors_degree(lf), factors_degree(rf)
                for j in range(e + 1):
                    nl, nr = dl + j, dr + e - j
                    if nl > dim_left or nr > dim_right:
                        continue
                    if nl + still < dim_left - r or nr + still < dim_right - r:
                        continue
                    if not left_pow[j] or not right_pow[e - j]:
                        continue
                    cw = c * weights[j]
                    for lterm, lc in left_pow[j]:
                        new_left = multiply_factors(lf, lterm)
                        for rterm, rc in right_pow[e - j]:
                            key = (new_left, multiply_factors(rf, rterm))
                            total = grown.get(key, ZERO) + cw * lc * rc
                            if total:
                                grown[key] = total
                            else:
                                grown.pop(key, None)
            expansion = grown
            if not expansion:
                return ZERO

        left_point = l_symbol(split.left_point)
        right_point = l_symbol(split.right_point)
        total = ZERO
        left_cache: Dict[Tuple[Factors, int], Fraction] = {}
        for (lf, rf), c in expansion.items():
            power = dim_left - factors_degree(lf)
            if not 0 <= power <= r:
                continue
            left_key = (lf, power)
            if left_key not in left_cache:
                left_factors = multiply_factors(lf, ((left_point, power),)) if power else lf
                left_cache[left_key] = self._integrate(split.left, left_factors)
            left_value = left_cache[left_key]
            if left_value == 0:
                continue
            right_factors = multiply_factors(rf, ((right_point, r - power),)) if r - power else rf
            right_value = self._integrate(split.right, right_factors)
            total += c * left_value * right_value
        return total / psi_degree(s, k)

    # -- public --------------------------------------------------------------

    def _routed(self, p: Polynomial) -> Polynomial:
        """Move a polynomial on M̄_{0,0}(2,2) to M̄_{0,1}(2,2): ε*(p) · L_1 / 2."""
        lifted = pullback_polynomial(p)
        marker = Polynomial(lifted.space, {((l_symbol(1), 1),): Fraction(1, EXCLUDED_SPACE.d)})
        return lifted.multiply(marker)

    def evaluate_polynomial(self, p: Polynomial) -> Fraction:
        """Sum of coefficient x top product over the terms of ``p``.

        Raises:
            NotTopProductError: If some term has degree other than the dimension.
        """
        s = p.space
        dimension = dim_space(s)
        for factors in p.terms:
            if factors_degree(factors) != dimension:
                raise NotTopProductError(factors_degree(factors), dimension)
        if s == EXCLUDED_SPACE:
            logger.debug("Routing M̄_{0,0}(2,2) through M̄_{0,1}(2,2)")
            return self.evaluate_polynomial(self._routed(p))
        total = ZERO
        for factors, coefficient in sorted(p.terms.items()):
            total += coefficient * self._integrate(s, factors)
        return total

    def eval_top(self, s: SpaceId, m: Monomial) -> Fraction:
        """The intersection number of a top-degree monomial on ``s``."""
        if m.space != s:
            raise ScopeError(f"Monomial lives on {m.space}, not on {s}")
        return self.evaluate_polynomial(Polynomial.from_monomial(m))

    def evaluate_expression(self, s: SpaceId, text: str) -> Fraction:
        """Parse a monomial or named-class expression on ``s`` and evaluate it."""
        return self.evaluate_polynomial(parse_expression(s, text))
