from fractions import Fraction

import pytest

from sylq.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, maximize, minimize

F = Fraction


def test_minimize_small_bounded():
    sol = minimize([1, 1], [([1, 2], ">=", 4), ([3, 1], ">=", 6)])
    assert sol.status == OPTIMAL
    assert sol.value == F(14, 5)
    assert sol.point == [F(8, 5), F(6, 5)]


def test_maximize_flips_the_value_back():
    sol = maximize([3, 2], [([1, 1], "<=", 4), ([1, 3], "<=", 6)])
    assert sol.status == OPTIMAL
    assert sol.value == 12
    assert sol.point == [4, 0]


def test_equalities_solve_through_artificials():
    sol = minimize([1, 0], [([1, 1], "==", 2), ([1, -1], "==", 0)])
    assert sol.status == OPTIMAL
    assert sol.value == 1
    assert sol.point == [1, 1]


def test_redundant_equality_rows_are_harmless():
    sol = minimize([1, 1], [([1, 1], "==", 2), ([2, 2], "==", 4)])
    assert sol.status == OPTIMAL
    assert sol.value == 2


def test_infeasible_band():
    sol = minimize([1], [([1], ">=", 2), ([1], "<=", 1)])
    assert sol.status == INFEASIBLE
    assert sol.value is None


def test_unbounded_direction():
    sol = minimize([-1, 0], [([0, 1], "<=", 5)])
    assert sol.status == UNBOUNDED


def test_exact_rational_arithmetic_no_drift():
    # thirds and sevenths stay exact end to end
    sol = minimize(
        [F(1, 3), F(1, 7)],
        [([F(1, 3), F(2, 7)], ">=", F(5, 21)), ([1, 1], "<=", 10)],
    )
    assert sol.status == OPTIMAL
    assert sol.value == F(5, 42)
    assert sol.point == [0, F(5, 6)]


def test_degenerate_cycling_example_terminates():
    # a classic cycling tableau for the textbook most-negative rule; the
    # pivot budget hands it to Bland's rule, which must reach -1/20
    sol = minimize(
        [F(-3, 4), 150, F(-1, 50), 6],
        [
            ([F(1, 4), -60, F(-1, 25), 9], "<=", 0),
            ([F(1, 2), -90, F(-1, 50), 3], "<=", 0),
            ([0, 0, 1, 0], "<=", 1),
        ],
    )
    assert sol.status == OPTIMAL
    assert sol.value == F(-1, 20)


def test_zero_variable_edge():
    with pytest.raises(ValueError):
        minimize([1], [([1, 2], ">=", 1)])


def test_negative_rhs_rows_normalize():
    sol = minimize([2, 1], [([-1, -1], "<=", -3)])
    assert sol.status == OPTIMAL
    assert sol.value == 3
    assert sol.point == [0, 3]
