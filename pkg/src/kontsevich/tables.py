# src/kontsevich/tables.py

"""Catalogue of the reproducible tables.

Each table is a list of rows ``(section, space, expression)``; expressions use
the class-expression grammar of ``syntax`` so characteristic rows print as the
products they are, e.g. ``1/2 H^3 T^2 L1``.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from loguru import logger

from .evaluate import IntersectionEvaluator
from .exactnum import is_integral
from .exceptions import IntegralityError
from .moduli import SpaceId
from .syntax import parse_expression
from .validators import validate_table_id


class TableId(str, Enum):
    CONICS_P2 = "conics-p2"
    CONICS_P3 = "conics-p3"
    CUBICS_P2 = "cubics-p2"
    CUBICS_P3 = "cubics-p3"
    QUARTICS_P2 = "quartics-p2"
    CUSPIDAL = "cuspidal"


PRODUCTS = "products"
CHARACTERISTIC = "characteristic"
CONIC_TANGENCY = "conic tangency"
CUSPIDAL = "cuspidal"
BOUNDARY_POINTS = "boundary points"

# sections whose values are enumerative counts
ENUMERATIVE_SECTIONS = (CHARACTERISTIC, CONIC_TANGENCY, CUSPIDAL)


@dataclass(frozen=True)
class RowSpec:
    section: str
    space: SpaceId
    expression: str


@dataclass(frozen=True)
class TableRow:
    section: str
    space: SpaceId
    expression: str
    value: Fraction


def _power(name: str, e: int) -> Optional[str]:
    if e == 0:
        return None
    return name if e == 1 else f"{name}^{e}"


def _join(*parts: Optional[str]) -> str:
    return " ".join(p for p in parts if p) or "1"


def _hk_rows(section: str, s: SpaceId, second: str, prefix: str = "", suffix: str = "") -> List[RowSpec]:
    dimension = s.dimension - len(suffix.split())
    rows = []
    for b in range(dimension + 1):
        body = _join(_power("H", dimension - b), _power(second, b), suffix or None)
        rows.append(RowSpec(section, s, f"{prefix}{body}"))
    return rows


def _conics_p2() -> List[RowSpec]:
    s = SpaceId(2, 2, 1)
    k = "K{dA=1}"
    rows = []
    for l_power in (0, 1, 2):
        suffix = _power("L1", l_power) or ""
        for b in range(s.dimension - l_power + 1):
            rows.append(RowSpec(PRODUCTS, s, _join(_power("H", s.dimension - l_power - b), suffix or None, _power(k, b))))
    rows += _hk_rows(CHARACTERISTIC, s, "T", prefix="1/2 ", suffix="L1")
    rows.append(RowSpec(CONIC_TANGENCY, s, "1/2 C^5 L1"))
    return rows


def _h_and_boundary(r: int, d: int) -> List[RowSpec]:
    s = SpaceId(r, d, 0)
    return _hk_rows(PRODUCTS, s, "K{dA=1}") + _hk_rows(CHARACTERISTIC, s, "T")


def _quartics_p2() -> List[RowSpec]:
    s = SpaceId(2, 4, 0)
    rows = []
    for j in range(s.dimension + 1):
        for k in range(s.dimension - j + 1):
            h = s.dimension - j - k
            rows.append(RowSpec(PRODUCTS, s, _join(_power("H", h), _power("K{dA=1}", k), _power("K{dA=2}", j))))
    return rows + _hk_rows(CHARACTERISTIC, s, "T")


def _cuspidal() -> List[RowSpec]:
    rows = []
    for d in range(3, 7):
        s = SpaceId(2, d, 0)
        points = _power("H", 3 * d - 2)
        rows.append(RowSpec(CUSPIDAL, s, _join("Z", points)))
        for i in range(1, d // 2 + 1):
            rows.append(RowSpec(BOUNDARY_POINTS, s, _join(f"K{{dA={i}}}", points)))
    return rows


CATALOGUE = {
    TableId.CONICS_P2: _conics_p2,
    TableId.CONICS_P3: lambda: _h_and_boundary(3, 2),
    TableId.CUBICS_P2: lambda: _h_and_boundary(2, 3),
    TableId.CUBICS_P3: lambda: _h_and_boundary(3, 3),
    TableId.QUARTICS_P2: _quartics_p2,
    TableId.CUSPIDAL: _cuspidal,
}


def table_rows(table_id: str) -> List[RowSpec]:
    name = table_id.value if isinstance(table_id, TableId) else table_id
    validate_table_id(name, [t.value for t in TableId])
    return CATALOGUE[TableId(name)]()


def evaluate_row(spec: RowSpec, evaluator: IntersectionEvaluator, check_integer: bool = False) -> TableRow:
    value = evaluator.evaluate_polynomial(parse_expression(spec.space, spec.expression))
    if check_integer and spec.section in ENUMERATIVE_SECTIONS and not is_integral(value):
        raise IntegralityError(f"{spec.expression} on {spec.space} evaluated to the non-integer {value}")
    return TableRow(spec.section, spec.space, spec.expression, value)


def reproduce_table(table_id: str, evaluator: IntersectionEvaluator, jobs: int = 1,
                    check_integer: bool = False) -> List[TableRow]:
    """Compute every row of a table, in catalogue order.

    Args:
        table_id: One of the ``TableId`` values.
        evaluator: Shared evaluator; its memo store is reused across rows.
        jobs: Worker threads for independent rows (1 runs inline).
        check_integer: Require integer values in enumerative sections.
    """
    specs = table_rows(table_id)
    logger.info(f"Reproducing table {TableId(table_id).value} ({len(specs)} rows, jobs={jobs})")
    if jobs <= 1:
        return [evaluate_row(spec, evaluator, check_integer) for spec in specs]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda spec: evaluate_row(spec, evaluator, check_integer), specs))
