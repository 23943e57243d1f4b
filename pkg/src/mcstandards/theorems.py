"""Executable Pareto-optimality checks for the scalarized solvers.

Each check solves one single-criterion form on the grid and asks the
brute-force oracle whether any feasible grid point dominates an answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pareto import brute_force_front, verify_theorem5
from .problem import DEFAULT_TOL, feasible_grid
from .scalarize import Method, ScalarizationKind
from .solver import DEFAULT_TIE_TOL, LexOrder, solve, solve_lexicographic
from .standards import standards_from_grid


@dataclass(frozen=True)
class CheckResult:
    theorem: int
    check: str
    passed: bool
    counterexample: dict | None = None


_METHOD_THEOREM = {Method.DELTA_MIN: 1, Method.THETA_MAX: 2, Method.GAMMA_MIN: 4}


def _front_set(p, resolution, tol, cap, workers):
    front = brute_force_front(p, resolution, tol, cap, workers)
    return set(front.vectors)


def _check_report(theorem, name, report, front_vectors):
    for x, f in zip(report.best_points, report.objective_vectors):
        if f not in front_vectors:
            return CheckResult(theorem, name, False,
                               {"point": dict(x), "objectives": list(f)})
    return CheckResult(theorem, name, True)


def check_theorems(p, resolution: int = 10, tol: float = DEFAULT_TOL,
                   tie_tol: float = DEFAULT_TIE_TOL, cap=None, workers: int = 1):
    """Run every Pareto-optimality check on one problem; returns CheckResults.

    Standards are computed on the same grid, which is what makes the grid
    versions of the guarantees hold exactly.
    """
    grid = feasible_grid(p, resolution, tol, cap, workers)
    s = standards_from_grid(p, grid, tol)
    front = _front_set(p, resolution, tol, cap, workers)
    results = []
    for method, theorem in _METHOD_THEOREM.items():
        plain = solve(p, s, ScalarizationKind(method), resolution, tol=tol, tie_tol=tie_tol,
                      cap=cap, workers=workers)
        results.append(_check_report(theorem, f"{method.value} optimum non-dominated",
                                     plain, front))
        squared = solve(p, s, ScalarizationKind(method, True), resolution, tol=tol,
                        tie_tol=tie_tol, cap=cap, workers=workers)
        same = set(plain.best_points) == set(squared.best_points)
        results.append(CheckResult(theorem, f"{method.value} squared form same optima", same,
                                   None if same else {
                                       "plain": [dict(x) for x in plain.best_points],
                                       "squared": [dict(x) for x in squared.best_points]}))
    for order in LexOrder:
        report = solve_lexicographic(p, s, order, resolution, tie_tol, tol=tol, tie_tol=tie_tol,
                                     cap=cap, workers=workers)
        results.append(_check_report(3, f"lexicographic {order.value} non-dominated",
                                     report, front))
    ok = verify_theorem5(p, s, resolution, tol, cap, workers)
    results.append(CheckResult(5, "normalized front equals original front", ok))
    return results
