import pytest

from mcstandards.errors import ConstantCriterionError, InfeasibleError, StandardsError
from mcstandards.problem import (Constraint, Interval, Objective, Problem, VariableDomain,
                                 enumerate_feasible, evaluate_objectives)
from mcstandards.standards import ComparisonStandards, compute_standards, override_standards

from oracles import exact_points, example1_feasible


def test_example2_standards(s2):
    assert s2.ideal == (2.0, 1.0)
    assert s2.anti_ideal == (1.0, 2.0)


def test_example1_standards(s1):
    assert s1.ideal == (1.0, 1.0, 1.0)
    assert s1.anti_ideal == (0.0, 0.0, 0.0)


def test_example1_anti_ideal_matches_oracle(s1):
    pts = exact_points(example1_feasible, 10)
    assert s1.anti_ideal == tuple(float(min(y[i] for y in pts)) for i in range(3))


def test_witnesses_reproduce_bounds(ex1, ex2, s1, s2):
    for p, s in ((ex1, s1), (ex2, s2)):
        for i in range(p.n_objectives):
            assert evaluate_objectives(p, s.attained_at_ideal[i])[i] == s.ideal[i]
            assert evaluate_objectives(p, s.attained_at_anti_ideal[i])[i] == s.anti_ideal[i]


def test_witness_ties_go_to_first_grid_point(s1):
    # y1 = 0 first occurs at the origin in enumeration order
    assert s1.attained_at_anti_ideal[0] == {"y1": 0, "y2": 0, "y3": 0}


def test_bracketing(ex2, s2):
    for x in enumerate_feasible(ex2, 10):
        f = evaluate_objectives(ex2, x)
        assert s2.anti_ideal[0] <= f[0] <= s2.ideal[0]
        assert s2.ideal[1] <= f[1] <= s2.anti_ideal[1]


def test_override_is_idempotent(s1):
    assert override_standards(s1, ideal=(1, 1, 1)) == s1


def test_override_anti_ideal(s2):
    s = override_standards(s2, anti_ideal=(0, 3))
    assert s.anti_ideal == (0.0, 3.0)
    assert s.ideal == s2.ideal
    assert s.attained_at_anti_ideal == (None, None)
    assert s.attained_at_ideal == s2.attained_at_ideal


def test_override_violating_direction(s2):
    with pytest.raises(StandardsError):
        override_standards(s2, ideal=(0, 5))


def test_override_equal_bounds(s2):
    with pytest.raises(StandardsError):
        override_standards(s2, ideal=(1, 1), anti_ideal=(1, 2))


def test_override_wrong_length(s2):
    with pytest.raises(StandardsError):
        override_standards(s2, ideal=(2, 1, 0))


def test_constant_criterion_rejected():
    p = Problem((VariableDomain("x", Interval(0, 1)),),
                (Objective("F1", "x", "max"), Objective("F2", "0*x + 3", "min")))
    with pytest.raises(ConstantCriterionError) as info:
        compute_standards(p, 4)
    assert info.value.name == "F2"


def test_empty_feasible_set():
    p = Problem((VariableDomain("x", Interval(0, 1)),), (Objective("F", "x", "max"),),
                (Constraint("x", ">=", 2),))
    with pytest.raises(InfeasibleError):
        compute_standards(p, 4)


def test_direct_construction_checks_invariant():
    with pytest.raises(StandardsError):
        ComparisonStandards((0.0,), (1.0,), ("max",))
    s = ComparisonStandards((0.0,), (1.0,), ("min",))
    assert s.attained_at_ideal == (None,)
