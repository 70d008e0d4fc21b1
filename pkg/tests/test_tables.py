from fractions import Fraction

import pytest

from src.kontsevich.evaluate import IntersectionEvaluator
from src.kontsevich.exceptions import MbarUsageError
from src.kontsevich.syntax import format_monomial, parse_monomial
from src.kontsevich.tables import (
    BOUNDARY_POINTS,
    CHARACTERISTIC,
    CONIC_TANGENCY,
    CUSPIDAL,
    PRODUCTS,
    TableId,
    reproduce_table,
    table_rows,
)


def values(rows, section):
    return [row.value for row in rows if row.section == section]


def test_conics_p2(evaluator):
    rows = reproduce_table("conics-p2", evaluator, check_integer=True)
    assert values(rows, PRODUCTS) == [0] * 7 + [2, 6, 18, -10, -30, 102] + [1, 3, 9, -5, -15]
    assert values(rows, CHARACTERISTIC) == [1, 2, 4, 4, 2, 1]
    assert values(rows, CONIC_TANGENCY) == [3264]
    assert rows[-1].expression == "1/2 C^5 L1"


def test_cubics_p2(evaluator):
    rows = reproduce_table(TableId.CUBICS_P2, evaluator)
    assert values(rows, PRODUCTS) == [
        12, 42, 129, 285, 336, Fraction(-2541, 4), Fraction(-8259, 16), Fraction(19641, 8), Fraction(-44835, 16),
    ]
    assert values(rows, CHARACTERISTIC) == [12, 36, 100, 240, 480, 712, 756, 600, 400]


def test_conics_p3(evaluator):
    rows = reproduce_table("conics-p3", evaluator)
    assert values(rows, PRODUCTS) == [92, 140, 140, -100, -68, 172, -20, -580, 1820]
    assert values(rows, CHARACTERISTIC) == [92, 116, 128, 104, 64, 32, 16, 8, 4]


def test_cuspidal_table(evaluator):
    rows = reproduce_table("cuspidal", evaluator, check_integer=True)
    assert values(rows, CUSPIDAL) == [24, 2304, 435168, 156153600]
    assert values(rows, BOUNDARY_POINTS) == [42, 1620, 504, 193440, 92664, 52382400, 21665280, 8339760]


@pytest.mark.slow
def test_cubics_p3(evaluator):
    rows = reproduce_table("cubics-p3", evaluator, check_integer=True)
    assert values(rows, PRODUCTS) == [
        80160, 121440, 148920, 112080, -7824, -104100, 35880, Fraction(190095, 2), Fraction(-222855, 2),
        Fraction(-674007, 16), Fraction(10112745, 32), Fraction(-5995065, 8), Fraction(58086435, 32),
    ]
    assert values(rows, CHARACTERISTIC) == [
        80160, 134400, 209760, 297280, 375296, 415360, 401920, 343360, 264320, 188256, 128160, 85440, 56960,
    ]


QUARTIC_SPOTS = {
    "H^11": 620, "H^10 K{dA=1}": 1620, "H^10 K{dA=2}": 504, "H^9 K{dA=2}^2": 0,
    "H^8 K{dA=2}^2 K{dA=1}": 0, "H^7 K{dA=1}^4": -8340, "H^6 K{dA=2}^5": -645,
    "H^5 K{dA=2}^6": Fraction(2419, 8), "H^4 K{dA=2}^7": Fraction(765, 2), "H^3 K{dA=1}^8": Fraction(-338620, 3),
    "H^2 K{dA=1}^9": Fraction(-13690660, 27), "H K{dA=1}^10": Fraction(147582380, 81),
    "K{dA=1}^11": Fraction(-278947820, 81), "K{dA=2} K{dA=1}^10": 1310904, "K{dA=2}^2 K{dA=1}^9": -616896,
    "K{dA=2}^9 K{dA=1}^2": -189, "K{dA=2}^10 K{dA=1}": 0, "K{dA=2}^11": Fraction(10143, 128),
    "H K{dA=2}^10": Fraction(-7875, 32), "H K{dA=2}^9 K{dA=1}": 189, "H^2 K{dA=2}^9": Fraction(4375, 8),
    "H^5 K{dA=2}^5 K{dA=1}": Fraction(-2385, 2),
}


@pytest.mark.slow
def test_quartics_p2(evaluator):
    rows = reproduce_table("quartics-p2", evaluator, check_integer=True)
    by_expression = {row.expression: row.value for row in rows if row.section == PRODUCTS}
    for text, expected in QUARTIC_SPOTS.items():
        m = parse_monomial(rows[0].space, text)
        assert by_expression[format_monomial(m)] == expected, text
    assert values(rows, CHARACTERISTIC) == [
        620, 2184, 7200, 21776, 59424, 143040, 295544, 505320, 699216, 783584, 728160, 581904,
    ]


@pytest.mark.parametrize("table_id,count", [
    ("conics-p2", 18 + 6 + 1),
    ("conics-p3", 18),
    ("cubics-p2", 18),
    ("cubics-p3", 26),
    ("quartics-p2", 78 + 12),
    ("cuspidal", 4 + 8),
])
def test_catalogue_sizes(table_id, count):
    assert len(table_rows(table_id)) == count


@pytest.mark.parametrize("table_id", [t.value for t in TableId])
def test_product_rows_round_trip(table_id):
    for spec in table_rows(table_id):
        if spec.section != PRODUCTS:
            continue
        m = parse_monomial(spec.space, spec.expression)
        assert m.degree == spec.space.dimension
        assert format_monomial(m) == spec.expression
        assert parse_monomial(spec.space, format_monomial(m)) == m


def test_unknown_table():
    with pytest.raises(MbarUsageError):
        table_rows("sextics-p2")


def test_parallel_rows_match_sequential():
    sequential = reproduce_table("conics-p2", IntersectionEvaluator())
    parallel = reproduce_table("conics-p2", IntersectionEvaluator(), jobs=4)
    assert parallel == sequential
