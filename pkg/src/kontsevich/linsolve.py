"""Exact sparse elimination for harvested linear relations.

``SparseLinearSystem`` keeps a fully reduced set of rows: each row has a pivot
variable that occurs in no other row. A relation is a mapping from variables
(any hashable) to ``Fraction`` coefficients, with the constant term stored under
``CONSTANT``; it states ``Σ coefficient · variable + constant = 0``.
"""

from collections import defaultdict
from fractions import Fraction
from typing import Dict, Hashable, Iterable, Mapping, Optional

from .exceptions import InconsistentRelationError

CONSTANT = "__constant__"

Row = Dict[Hashable, Fraction]


def _iadd(row: Row, coef: Fraction, other: Row) -> None:
    for var, c in other.items():
        total = row.get(var, 0) + coef * c
        if total:
            row[var] = total
        else:
            row.pop(var, None)


class SparseLinearSystem:
    def __init__(self) -> None:
        self.rows: Dict[Hashable, Row] = {}                 # pivot -> row
        self.cols: Dict[Hashable, set] = defaultdict(set)   # variable -> pivots of rows using it
        self.relations = 0

    def _eliminate(self, row: Row) -> None:
        updates = [(coef, self.rows[var]) for var, coef in row.items() if var in self.rows]
        for coef, update in updates:
            # pivot rows are normalised to coefficient -1 on the pivot
            _iadd(row, coef, update)

    def add(self, relation: Mapping[Hashable, Fraction]) -> bool:
        """Add a relation; return False when it was already implied.

        Raises:
            InconsistentRelationError: If the relation reduces to ``c = 0`` with c != 0.
        """
        self.relations += 1
        row: Row = {var: Fraction(c) for var, c in relation.items() if c}
        self._eliminate(row)
        candidates = [var for var in row if var != CONSTANT]
        if not candidates:
            if row.get(CONSTANT):
                raise InconsistentRelationError(
                    f"harvested relation reduces to {row[CONSTANT]} = 0"
                )
            return False

        pivot = min(candidates, key=lambda var: (len(self.cols[var]), repr(var)))
        scale = -1 / row[pivot]
        for var in row:
            row[var] *= scale

        for ri in list(self.cols[pivot]):
            target = self.rows[ri]
            coef = target[pivot]
            before = set(target)
            _iadd(target, coef, row)
            after = set(target)
            for var in before - after:
                if var != CONSTANT:
                    self.cols[var].discard(ri)
            for var in after - before:
                if var != CONSTANT:
                    self.cols[var].add(ri)
        self.cols[pivot] = set()

        self.rows[pivot] = row
        for var in row:
            if var != CONSTANT:
                self.cols[var].add(pivot)
        return True

    def is_determined(self, var: Hashable) -> bool:
        row = self.rows.get(var)
        return row is not None and all(v in (var, CONSTANT) for v in row)

    def value(self, var: Hashable) -> Optional[Fraction]:
        """The solved value of ``var``, or None while other variables remain in its row."""
        if not self.is_determined(var):
            return None
        return self.rows[var].get(CONSTANT, Fraction(0))

    def undetermined(self, variables: Iterable[Hashable]) -> list:
        return [var for var in variables if not self.is_determined(var)]


def residual(relation: Mapping[Hashable, Fraction], values: Mapping[Hashable, Fraction]) -> Fraction:
    """Evaluate ``Σ coefficient · value + constant`` for a relation."""
    total = Fraction(relation.get(CONSTANT, 0))
    for var, coef in relation.items():
        if var != CONSTANT:
            total += coef * values[var]
    return total
