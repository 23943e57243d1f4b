"""Grid solvers for the delta / theta / gamma single-criterion problems."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import GridCapError, InfeasibleError
from .pareto import dominated_mask, nondominated_mask
from .problem import (DEFAULT_TOL, Interval, Point, Problem, default_grid_cap,
                      feasible_grid, scan)
from .scalarize import Method, ScalarizationKind, normalize, scalarized_objective
from .standards import ComparisonStandards

DEFAULT_TIE_TOL = 1e-9


class LexOrder(enum.Enum):
    DELTA_THEN_THETA = "delta-theta"
    THETA_THEN_DELTA = "theta-delta"

    @property
    def stages(self):
        if self is LexOrder.DELTA_THEN_THETA:
            return Method.DELTA_MIN, Method.THETA_MAX
        return Method.THETA_MAX, Method.DELTA_MIN


@dataclass(frozen=True)
class SolveReport:
    best_points: tuple
    best_value: float
    objective_vectors: tuple
    kind: ScalarizationKind
    resolution_used: int
    tie_count_before_filter: int
    pareto_certified: bool
    normalized: bool = False
    lex_order: LexOrder | None = None
    refine_rounds: int = 0


def _rows_sorted(X):
    """Row indices of X in lexicographic order (first column outermost)."""
    if X.shape[0] == 0:
        return np.zeros(0, dtype=int)
    return np.lexsort(X.T[::-1])


def _unique_rows(X, F):
    _, first = np.unique(X, axis=0, return_index=True)
    first = np.sort(first)
    return X[first], F[first]


def _ties(keys, tol):
    best = np.min(keys)
    if np.isinf(best):
        return np.flatnonzero(keys == best), best
    return np.flatnonzero(keys <= best + tol), best


def _refine_axes(p, point, steps, resolution):
    axes = []
    for v, x, step in zip(p.variables, point, steps):
        if isinstance(v.kind, Interval) and step > 0:
            k = np.arange(resolution + 1, dtype=float)
            a = np.clip(x - step + 2.0 * step * k / resolution, v.kind.lower, v.kind.upper)
            axes.append(np.unique(np.append(a, x)))
        else:
            axes.append(np.array([x]))
    return axes


def _filter_ties(p, X, F):
    keep = nondominated_mask(F, p.directions)
    return X[keep], F[keep]


def _report(p, X, F, best_key, objective, kind, resolution, n_ties, certified,
            **extra):
    order = _rows_sorted(X)
    X, F = X[order], F[order]
    squared = -best_key if objective.sense.sign > 0 else best_key
    value = objective.report(squared) if np.isfinite(squared) else math.inf
    return SolveReport(
        best_points=tuple(Point.from_values(p.variable_names, x) for x in X),
        best_value=value,
        objective_vectors=tuple(tuple(float(v) for v in f) for f in F),
        kind=kind,
        resolution_used=resolution,
        tie_count_before_filter=n_ties,
        pareto_certified=certified,
        **extra,
    )


def _solve(p, s, kind, resolution, refine_rounds, tol, tie_tol, certify, cap, workers,
           transform=None, normalized=False):
    kind = kind if isinstance(kind, ScalarizationKind) else ScalarizationKind(kind)
    transform = transform or (lambda F: F)
    objective = scalarized_objective(kind, s)
    cap = default_grid_cap() if cap is None else cap
    grid = feasible_grid(p, resolution, tol, cap, workers)
    if len(grid) == 0:
        raise InfeasibleError("feasible set is empty at this resolution")

    def pick(F):
        return _ties(np.atleast_1d(objective.key(transform(F))), tie_tol)

    pool_X, pool_F = grid.X, grid.F
    idx, best = pick(pool_F)
    inc_X, inc_F = pool_X[idx], pool_F[idx]

    steps = [(v.kind.upper - v.kind.lower) / resolution if isinstance(v.kind, Interval) else 0.0
             for v in p.variables]
    for _ in range(refine_rounds):
        if not any(steps):
            break
        new_X, new_F = [inc_X], [inc_F]
        budget = cap
        for x in inc_X:
            axes = _refine_axes(p, x, steps, resolution)
            size = math.prod(len(a) for a in axes)
            if size > budget:
                raise GridCapError(size, budget)
            budget -= size
            local = scan(p, axes, tol, cap, 1)
            new_X.append(local.X)
            new_F.append(local.F)
        cand_X, cand_F = _unique_rows(np.concatenate(new_X), np.concatenate(new_F))
        pool_X = np.concatenate([pool_X, cand_X])
        pool_F = np.concatenate([pool_F, cand_F])
        idx, best = pick(cand_F)
        inc_X, inc_F = cand_X[idx], cand_F[idx]
        steps = [2.0 * st / resolution for st in steps]

    n_ties = inc_X.shape[0]
    inc_X, inc_F = _filter_ties(p, inc_X, inc_F)
    certified = False
    if certify:
        certified = not bool(np.any(dominated_mask(inc_F, pool_F, p.directions)))
    return _report(p, inc_X, inc_F, best, objective, kind, resolution, n_ties, certified,
                   normalized=normalized, refine_rounds=refine_rounds)


def solve(p: Problem, s: ComparisonStandards, kind, resolution: int = 10, refine_rounds: int = 0,
          *, tol: float = DEFAULT_TOL, tie_tol: float = DEFAULT_TIE_TOL, certify: bool = False,
          cap: int | None = None, workers: int = 1) -> SolveReport:
    """Optimize one scalarization over the feasible grid.

    All points whose squared-form value lies within ``tie_tol`` of the best
    are kept, then refined ``refine_rounds`` times on a local grid of the same
    resolution spanning one coarse step either side of each incumbent (the
    span shrinks by ``2 / resolution`` per round; the search region never
    grows).  Tied points dominated by another tied point are dropped.

    ``certify`` checks every reported point against all feasible points
    scanned, grid and refinement alike.
    """
    return _solve(p, s, kind, resolution, refine_rounds, tol, tie_tol, certify, cap, workers)


def solve_normalized(p: Problem, s: ComparisonStandards, kind, resolution: int = 10,
                     refine_rounds: int = 0, *, tol: float = DEFAULT_TOL,
                     tie_tol: float = DEFAULT_TIE_TOL, certify: bool = False,
                     cap: int | None = None, workers: int = 1) -> SolveReport:
    """As :func:`solve`, scoring normalized criteria against normalized standards.

    Reported objective vectors are in original units.
    """
    norm = normalize(p, s)
    return _solve(p, norm.normalized_standards, kind, resolution, refine_rounds, tol, tie_tol,
                  certify, cap, workers, transform=norm.f, normalized=True)


def solve_lexicographic(p: Problem, s: ComparisonStandards, order: LexOrder, resolution: int = 10,
                        stage_tol: float = DEFAULT_TIE_TOL, *, tol: float = DEFAULT_TOL,
                        tie_tol: float = DEFAULT_TIE_TOL, certify: bool = False,
                        cap: int | None = None, workers: int = 1,
                        squared: bool = False) -> SolveReport:
    """Two-stage lexicographic delta/theta optimization on the grid.

    Stage 2 only considers points whose stage-1 squared value is within
    ``stage_tol`` of the stage-1 optimum, standing in for an equality
    constraint on the stage-1 criterion.
    """
    order = LexOrder(order)
    first, second = order.stages
    grid = feasible_grid(p, resolution, tol, cap, workers)
    if len(grid) == 0:
        raise InfeasibleError("feasible set is empty at this resolution")
    obj1 = scalarized_objective(ScalarizationKind(first), s)
    kind2 = ScalarizationKind(second, squared)
    obj2 = scalarized_objective(kind2, s)
    band, _ = _ties(np.atleast_1d(obj1.key(grid.F)), stage_tol)
    X, F = grid.X[band], grid.F[band]
    idx, best = _ties(np.atleast_1d(obj2.key(F)), tie_tol)
    n_ties = len(idx)
    X, F = _filter_ties(p, X[idx], F[idx])
    certified = False
    if certify:
        certified = not bool(np.any(dominated_mask(F, grid.F, p.directions)))
    return _report(p, X, F, best, obj2, kind2, resolution, n_ties, certified, lex_order=order)
