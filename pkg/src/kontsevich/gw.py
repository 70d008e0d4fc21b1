# src/kontsevich/gw.py

"""Genus-0 Gromov-Witten invariants of P^r.

``I_d(h^{a_1}, ..., h^{a_m})`` counts degree-d rational curves meeting general
linear spaces of codimensions a_i. Values are reconstructed from the number of
lines through two points: the divisor rule strips h-insertions, the plane
sequence N_d short-cuts r = 2, and everything else is solved level by level from
associativity (WDVV) relations.

A level is the set of keys with fixed (r, d, m) and all insertions in 2..r.
The relations harvested for a level contain its keys linearly with constant
coefficients; every other term belongs to a strictly lower level.
"""

import itertools
from collections import Counter, defaultdict
from functools import lru_cache
from fractions import Fraction
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from loguru import logger

from .exactnum import ONE, ZERO, binomial
from .exceptions import InconsistentRelationError, ScopeError, UnderdeterminedSystemError
from .linsolve import CONSTANT, SparseLinearSystem, residual
from .memo import MemoStore
from .validators import validate_index, validate_insertions


class GWKey(NamedTuple):
    r: int
    d: int
    insertions: Tuple[int, ...]

    @classmethod
    def of(cls, r: int, d: int, insertions: Sequence[int]) -> "GWKey":
        validate_index(r, 2, 10 ** 6, "r")
        validate_index(d, 0, 10 ** 6, "d")
        validate_insertions(r, insertions)
        return cls(r, d, tuple(sorted(insertions, reverse=True)))


@lru_cache(maxsize=None)
def nd(d: int) -> Fraction:
    """Number of rational plane curves of degree d through 3d - 1 general points."""
    if d < 1:
        raise ScopeError(f"N_d needs d >= 1, got {d}")
    if d == 1:
        return ONE
    total = ZERO
    for i in range(1, d):
        j = d - i
        total += nd(i) * nd(j) * i * i * j * (
            j * binomial(3 * d - 4, 3 * i - 2) - i * binomial(3 * d - 4, 3 * i - 1)
        )
    return total


def _level_insertions(r: int, total: int, m: int, top: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of length m, entries in 2..top, summing to total."""
    top = r if top is None else top
    if m == 0:
        if total == 0:
            yield ()
        return
    for a in range(min(top, total - 2 * (m - 1)), 1, -1):
        if a * m < total:
            break
        for rest in _level_insertions(r, total - a, m - 1, a):
            yield (a,) + rest


def _splits(rest: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], int]]:
    """Split a multiset in two, with the number of ways each split occurs."""
    counts = sorted(Counter(rest).items())
    for chosen in itertools.product(*(range(n + 1) for _, n in counts)):
        first: List[int] = []
        second: List[int] = []
        weight = 1
        for (value, n), k in zip(counts, chosen):
            first.extend([value] * k)
            second.extend([value] * (n - k))
            weight *= int(binomial(n, k))
        yield tuple(first), tuple(second), weight


class GromovWittenSolver:
    """Reconstructs invariants from lines through two points.

    Args:
        store: Memo store receiving every solved key.
        plane_fast_path: Use N_d for r = 2 keys with all insertions equal to 2.
        tested_max_rank: Targets above this rank are computed on a best effort basis.
    """

    def __init__(self, store: Optional[MemoStore] = None, plane_fast_path: bool = True,
                 tested_max_rank: int = 3) -> None:
        self.store = store if store is not None else MemoStore()
        self.plane_fast_path = plane_fast_path
        self.tested_max_rank = tested_max_rank
        self._warned = set()

    def invariant(self, key: GWKey) -> Fraction:
        if key.r > self.tested_max_rank and key.r not in self._warned:
            self._warned.add(key.r)
            logger.warning(f"Invariants of P^{key.r} are outside the tested range; computing best effort")
        return self.value(key.r, key.d, key.insertions)

    def normalize(self, r: int, d: int, insertions: Sequence[int]) -> Tuple[Fraction, Optional[GWKey]]:
        """Apply the closed rules; return ``(c, None)`` for the value c or ``(c, key)`` for c * I(key)."""
        if any(a < 0 or a > r for a in insertions):
            return ZERO, None
        m = len(insertions)
        if sum(insertions) != r * d + r + d + m - 3:
            return ZERO, None
        if 0 in insertions and (d >= 1 or m >= 4):
            return ZERO, None
        if d == 0:
            return (ONE if m == 3 else ZERO), None

        ones = sum(1 for a in insertions if a == 1)
        coefficient = Fraction(d) ** ones
        rest = tuple(sorted((a for a in insertions if a != 1), reverse=True))
        if d == 1 and rest == (r, r):
            return coefficient, None
        if r == 2 and self.plane_fast_path and all(a == 2 for a in rest):
            return coefficient * nd(d), None
        return coefficient, GWKey(r, d, rest)

    def value(self, r: int, d: int, insertions: Sequence[int]) -> Fraction:
        coefficient, key = self.normalize(r, d, insertions)
        if key is None or coefficient == 0:
            return coefficient
        known = self.store.get_invariant(key)
        if known is None:
            self._solve_level(key.r, key.d, len(key.insertions))
            known = self.store.get_invariant(key)
        return coefficient * known

    def _term(self, r: int, d: int, insertions: Sequence[int], level) -> Tuple[Fraction, Optional[GWKey]]:
        coefficient, key = self.normalize(r, d, insertions)
        if key is None or coefficient == 0:
            return coefficient, None
        if (key.r, key.d, len(key.insertions)) == level:
            return coefficient, key
        return coefficient * self.value(key.r, key.d, key.insertions), None

    def _side(self, r: int, d: int, x: Tuple[int, int, int, int], rest: Sequence[int], level,
              out: Dict, sign: int) -> None:
        """Accumulate sign * Σ I_{d1}(x1, x2, S1, e) I_{d2}(r - e, x3, x4, S2) into ``out``."""
        x1, x2, x3, x4 = x
        for d1 in range(d + 1):
            d2 = d - d1
            for first, second, weight in _splits(rest):
                for e in range(r + 1):
                    left, left_key = self._term(r, d1, (x1, x2) + first + (e,), level)
                    if left == 0:
                        continue
                    right, right_key = self._term(r, d2, (r - e, x3, x4) + second, level)
                    if right == 0:
                        continue
                    if left_key is not None and right_key is not None:
                        raise InconsistentRelationError(
                            f"quadratic term {left_key} * {right_key} in a level relation"
                        )
                    product = sign * weight * left * right
                    out[left_key or right_key or CONSTANT] += product

    def wdvv_relation(self, r: int, d: int, x: Tuple[int, int, int, int], rest: Sequence[int],
                      level=None) -> Dict:
        """LHS - RHS of the relation for (x1, x2 | x3, x4) with the remaining insertions ``rest``.

        Keys at ``level`` stay symbolic; everything else is evaluated.
        """
        out: Dict = defaultdict(Fraction)
        x1, x2, x3, x4 = x
        self._side(r, d, (x1, x2, x3, x4), rest, level, out, 1)
        self._side(r, d, (x1, x3, x2, x4), rest, level, out, -1)
        return {k: v for k, v in out.items() if v}

    def wdvv_sides(self, r: int, d: int, x: Tuple[int, int, int, int], rest: Sequence[int]) -> Tuple[Fraction, Fraction]:
        """Both sides of one relation, fully evaluated."""
        x1, x2, x3, x4 = x
        lhs: Dict = defaultdict(Fraction)
        rhs: Dict = defaultdict(Fraction)
        self._side(r, d, (x1, x2, x3, x4), rest, None, lhs, 1)
        self._side(r, d, (x1, x3, x2, x4), rest, None, rhs, 1)
        return lhs[CONSTANT], rhs[CONSTANT]

    def _harvest(self, key: GWKey, level) -> Iterator[Dict]:
        r, d = key.r, key.d
        ins = list(key.insertions)
        for third in sorted(set(ins), reverse=True):
            remaining = list(ins)
            remaining.remove(third)
            for a, b in sorted(set(itertools.permutations(remaining, 2))):
                rest = list(remaining)
                rest.remove(a)
                rest.remove(b)
                yield self.wdvv_relation(r, d, (a, b, 1, third - 1), tuple(rest), level)

    def _solve_level(self, r: int, d: int, m: int) -> None:
        level = (r, d, m)
        total = r * d + r + d + m - 3
        unknowns = [GWKey(r, d, ins) for ins in _level_insertions(r, total, m)]
        logger.debug(f"Solving GW level r={r} d={d} m={m} with {len(unknowns)} unknowns")

        system = SparseLinearSystem()
        relations = []
        for key in unknowns:
            if len(key.insertions) < 3:
                continue
            for relation in self._harvest(key, level):
                if relation:
                    system.add(relation)
                    relations.append(relation)
            if not system.undetermined(unknowns):
                break

        missing = system.undetermined(unknowns)
        if missing:
            raise UnderdeterminedSystemError(
                f"{len(missing)} invariants of P^{r} in degree {d} with {m} insertions "
                f"are not determined by the harvested relations (first: {missing[0]})"
            )
        values = {key: system.value(key) for key in unknowns}
        for relation in relations:
            if residual(relation, values) != 0:
                raise InconsistentRelationError(f"level r={r} d={d} m={m} fails a harvested relation")
        for key, value in values.items():
            self.store.put_invariant(key, value)


_default_solver: Optional[GromovWittenSolver] = None


def gw_invariant(key: GWKey, solver: Optional[GromovWittenSolver] = None) -> Fraction:
    """Value of a canonical key, using a process-wide solver when none is given."""
    global _default_solver
    if solver is None:
        if _default_solver is None:
            _default_solver = GromovWittenSolver()
        solver = _default_solver
    return solver.invariant(key)
