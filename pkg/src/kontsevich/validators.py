"""Kontsevich Intersection Field Validators

This module contains validation functions for the parameters accepted by the
engine, the command line and the HTTP service.
"""

from typing import Iterable, Mapping

from .exceptions import (
    CharNumQueryError,
    InvalidSpaceError,
    InvalidSymbolError,
    MbarUsageError,
)


def validate_space(r: int, d: int, n: int) -> bool:
    """Validate a (r, d, n) triple naming M̄_{0,n}(r,d)"""
    if r < 2:
        raise InvalidSpaceError(f"Invalid space r={r},d={d},n={n}", "S01")
    if d < 0:
        raise InvalidSpaceError(f"Invalid space r={r},d={d},n={n}", "S02")
    if n < 0:
        raise InvalidSpaceError(f"Invalid space r={r},d={d},n={n}", "S04")
    if d == 0 and n < 3:
        raise InvalidSpaceError(f"Invalid space r={r},d={d},n={n}", "S03")
    return True


def validate_marking(n: int, marking: int) -> bool:
    """Validate a marking label (1..n)"""
    if not 1 <= marking <= n:
        raise InvalidSymbolError(f"Invalid marking {marking} for n={n}", "Y01")
    return True


def validate_degree(d: int, degree: int) -> bool:
    """Validate one side of a degree split"""
    if not 0 <= degree <= d:
        raise InvalidSymbolError(f"Invalid side degree {degree} for d={d}", "Y03")
    return True


def validate_index(value: int, low: int, high: int, name: str) -> bool:
    """Validate an integer parameter against an inclusive range"""
    if not low <= value <= high:
        raise InvalidSymbolError(f"Invalid {name}={value}, expected {low}..{high}", "Y04")
    return True


def validate_insertions(r: int, insertions: Iterable[int]) -> bool:
    """Validate Gromov-Witten insertion exponents (0 <= a <= r)"""
    for a in insertions:
        if not 0 <= a <= r:
            raise InvalidSymbolError(f"Invalid insertion h^{a} on P^{r}", "Y04")
    return True


def validate_charnum(r: int, d: int, alpha: Mapping[int, int], beta: int) -> bool:
    """Validate a characteristic number query against the dimension constraint"""
    if r < 2:
        raise CharNumQueryError(f"Invalid target P^{r}")
    if d < 1:
        raise CharNumQueryError(f"Characteristic numbers need d >= 1, got d={d}")
    if beta < 0:
        raise CharNumQueryError(f"Invalid tangency count {beta}")
    for codim, count in alpha.items():
        if not 2 <= codim <= r:
            raise CharNumQueryError(f"Invalid condition codimension {codim} in P^{r}")
        if count < 0:
            raise CharNumQueryError(f"Invalid count {count} for codimension {codim}")
    if beta > 0 and d < 2:
        raise CharNumQueryError("Tangency conditions need d >= 2")
    expected = r * d + r + d - 3
    total = sum((codim - 1) * count for codim, count in alpha.items()) + beta
    if total != expected:
        raise CharNumQueryError(
            f"Conditions impose {total} but the family of rational curves has dimension {expected}"
        )
    return True


def validate_table_id(table_id: str, known: Iterable[str]) -> bool:
    """Validate a table identifier"""
    known = list(known)
    if table_id not in known:
        raise MbarUsageError(f"Unknown table {table_id!r}; expected one of {', '.join(known)}")
    return True
