import itertools

import numpy as np
import pytest

from mcstandards.errors import GridCapError, ProblemError
from mcstandards.problem import (Constraint, FiniteSet, Interval, Objective, Point, Problem,
                                 Relation, VariableDomain, enumerate_feasible,
                                 evaluate_objectives, feasible_grid, is_feasible)

from oracles import exact_points, example1_feasible


def test_example1_feasibility(ex1):
    assert is_feasible(ex1, {"y1": 1, "y2": 1, "y3": 0}, 0)
    assert not is_feasible(ex1, {"y1": 1, "y2": 1, "y3": 1}, 0)


def test_example2_feasibility(ex2):
    assert is_feasible(ex2, {"y1": 0.5, "y2": 0.5, "y3": 0.5}, 0)
    assert not is_feasible(ex2, {"y1": 0.5, "y2": 0.4, "y3": 0.5}, 0)


def test_feasibility_tolerance_and_domain(ex1):
    assert not is_feasible(ex1, {"y1": 1 + 1e-7, "y2": 0, "y3": 0}, 1e-9)
    assert is_feasible(ex1, {"y1": 1 + 1e-10, "y2": 0, "y3": 0}, 1e-9)
    assert not is_feasible(ex1, {"y1": -0.1, "y2": 0, "y3": 0}, 1e-9)


def test_finite_set_membership_within_tol():
    p = Problem((VariableDomain("x", FiniteSet((0, 0.5, 2))),), (Objective("F", "x", "max"),))
    assert is_feasible(p, {"x": 0.5 + 1e-12}, 1e-9)
    assert not is_feasible(p, {"x": 1.0}, 1e-9)


def test_ge_constraint():
    p = Problem((VariableDomain("x", Interval(0, 4)),), (Objective("F", "x", "min"),),
                (Constraint("2*x", ">=", 3),))
    assert [pt["x"] for pt in enumerate_feasible(p, 4)] == [2.0, 3.0, 4.0]


@pytest.mark.parametrize("point, expected", [
    ({"y1": 1, "y2": 1, "y3": 0}, (2.0, 1.0)),
    ({"y1": 0, "y2": 0, "y3": 1}, (1.0, 2.0)),
])
def test_example2_objectives(ex2, point, expected):
    assert evaluate_objectives(ex2, point) == expected


def test_example1_objectives_at_origin(ex1):
    assert evaluate_objectives(ex1, {"y1": 0, "y2": 0, "y3": 0}) == (0.0, 0.0, 0.0)


def test_evaluate_objectives_is_pure(ex2):
    x = Point(y1=0.3, y2=0.3, y3=0.7)
    assert evaluate_objectives(ex2, x) == evaluate_objectives(ex2, x)


def test_example1_corners(ex1):
    got = [tuple(pt.values()) for pt in enumerate_feasible(ex1, 1, 0)]
    assert got == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 0)]


def test_interval_grid_spacing():
    p = Problem((VariableDomain("x", Interval(0, 1)),), (Objective("F", "x", "max"),))
    assert [pt["x"] for pt in enumerate_feasible(p, 4)] == [0, 0.25, 0.5, 0.75, 1]


def test_infeasible_problem_gives_empty_stream():
    p = Problem((VariableDomain("x", Interval(0, 1)),), (Objective("F", "x", "max"),),
                (Constraint("0*x", "<=", -1),))
    assert list(enumerate_feasible(p, 10)) == []


def test_grid_cap_reports_counts(ex1):
    with pytest.raises(GridCapError) as info:
        list(enumerate_feasible(ex1, 10, cap=100))
    assert info.value.required == 11**3
    assert info.value.allowed == 100


def test_grid_cap_from_environment(ex1, monkeypatch):
    monkeypatch.setenv("MCSTANDARDS_GRID_CAP", "50")
    with pytest.raises(GridCapError):
        feasible_grid(ex1, 10)


def test_example1_grid_matches_exact_oracle(ex1):
    got = [tuple(pt.values()) for pt in enumerate_feasible(ex1, 10, 0)]
    want = [tuple(float(v) for v in y) for y in exact_points(example1_feasible, 10)]
    assert got == want


def test_enumeration_equals_full_grid_filter_on_random_problems():
    rng = np.random.default_rng(7)
    for _ in range(25):
        doms = [VariableDomain(f"x{i}", FiniteSet(tuple(sorted(set(rng.integers(-3, 4, 4).tolist())))))
                for i in range(3)]
        c = Constraint(f"{rng.integers(-2, 3)}*x0 + {rng.integers(-2, 3)}*x1*x2", "<=",
                       float(rng.integers(-2, 4)))
        p = Problem(tuple(doms), (Objective("F", "x0 + x1", "max"),), (c,))
        full = [Point.from_values(p.variable_names, v)
                for v in itertools.product(*(d.kind.values for d in doms))]
        assert list(enumerate_feasible(p, 1)) == [x for x in full if is_feasible(p, x, 1e-9)]


def test_parallel_scan_matches_serial(ex1):
    a = feasible_grid(ex1, 60, workers=1)
    b = feasible_grid(ex1, 60, workers=4)
    assert np.array_equal(a.X, b.X) and np.array_equal(a.F, b.F)


@pytest.mark.parametrize("build", [
    lambda: Problem((), ()),
    lambda: Problem((VariableDomain("x", Interval(0, 1)),) * 2, (Objective("F", "x", "max"),)),
    lambda: Problem((VariableDomain("x", Interval(0, 1)),),
                    (Objective("F", "x", "max"), Objective("F", "x", "min"))),
    lambda: Problem((VariableDomain("x", Interval(0, 1)),), (Objective("F", "z", "max"),)),
    lambda: Problem((VariableDomain("x", Interval(0, 1)),), (Objective("F", "x", "max"),),
                    (Constraint("w", "<=", 1),)),
    lambda: Interval(2, 1),
    lambda: FiniteSet(()),
    lambda: FiniteSet((1, 1)),
])
def test_invalid_problems_rejected(build):
    with pytest.raises(ProblemError):
        build()


def test_point_mapping_behaviour():
    x = Point(y1=1, y2=0.5)
    assert dict(x) == {"y1": 1.0, "y2": 0.5}
    assert x == {"y1": 1, "y2": 0.5}
    assert hash(x) == hash(Point([("y1", 1.0), ("y2", 0.5)]))
    assert Relation(">=") is Relation.GE
