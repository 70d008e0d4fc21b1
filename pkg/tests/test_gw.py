import pytest

from src.kontsevich.exceptions import InvalidSymbolError, ScopeError
from src.kontsevich.gw import GromovWittenSolver, GWKey, gw_invariant, nd


@pytest.mark.parametrize("d,expected", [(1, 1), (2, 1), (3, 12), (4, 620), (5, 87304), (6, 26312976)])
def test_plane_curve_counts(d, expected):
    assert nd(d) == expected


def test_nd_scope():
    with pytest.raises(ScopeError):
        nd(0)


def test_key_is_canonical():
    assert GWKey.of(3, 2, [2, 3, 2]) == GWKey(3, 2, (3, 2, 2))
    with pytest.raises(InvalidSymbolError):
        GWKey.of(3, 2, [4])
    with pytest.raises(InvalidSymbolError):
        GWKey.of(1, 2, [])


@pytest.mark.parametrize("r,d,insertions,expected", [
    (3, 2, [2] * 8, 92),
    (3, 2, [3, 3, 3, 2, 2], 1),
    (3, 1, [3, 3], 1),
    (3, 1, [3, 2, 2], 1),
    (2, 3, [2] * 8, 12),
    (2, 1, [1, 2, 2], 1),
    (2, 3, [1, 2, 2, 2, 2, 2, 2, 2, 2], 36),
])
def test_invariants(r, d, insertions, expected):
    assert gw_invariant(GWKey.of(r, d, insertions), GromovWittenSolver()) == expected


@pytest.mark.parametrize("r,d,insertions", [
    (3, 2, [2] * 7),        # wrong dimension
    (3, 1, [3, 3, 0]),      # identity insertion with d >= 1
    (2, 0, [2, 2, 2, 0]),   # degree 0 with four points
])
def test_vanishing_rules(r, d, insertions):
    assert GromovWittenSolver().value(r, d, insertions) == 0


def test_degree_zero_three_points():
    solver = GromovWittenSolver()
    assert solver.value(3, 0, [3, 0, 0]) == 1
    assert solver.value(3, 0, [1, 1, 1]) == 1


def test_twisted_cubics_through_twelve_lines():
    assert gw_invariant(GWKey.of(3, 3, [2] * 12), GromovWittenSolver()) == 80160


def test_plane_path_agrees_with_relations():
    slow = GromovWittenSolver(plane_fast_path=False)
    assert slow.value(2, 3, [2] * 8) == 12
    assert slow.value(2, 4, [2] * 11) == 620


def test_solved_levels_are_stored():
    solver = GromovWittenSolver()
    solver.value(3, 2, [2] * 8)
    assert solver.store.get_invariant(GWKey(3, 2, (2,) * 8)) == 92
    assert solver.store.get_invariant(GWKey(3, 2, (3, 3, 3, 2, 2))) == 1


@pytest.mark.parametrize("r,d,x,rest", [
    (3, 2, (3, 3, 2, 2), (2, 2, 2)),
    (3, 2, (3, 2, 2, 2), (2, 2, 2, 2)),
    (2, 3, (2, 2, 2, 2), (2, 2, 2, 2, 2)),
    (3, 3, (3, 3, 2, 2), (2, 2, 2, 2, 2, 2, 2)),
])
def test_associativity_relations_hold(r, d, x, rest):
    lhs, rhs = GromovWittenSolver().wdvv_sides(r, d, x, rest)
    assert lhs == rhs


def test_best_effort_rank_warns_once():
    solver = GromovWittenSolver(tested_max_rank=2)
    assert solver.invariant(GWKey.of(3, 1, [3, 3])) == 1
    assert solver.invariant(GWKey.of(3, 1, [3, 2, 2])) == 1
    assert solver._warned == {3}
