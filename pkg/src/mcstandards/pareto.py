"""Dominance tests, brute-force Pareto fronts and non-dominance certificates."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleCandidateError, InfeasibleError
from .problem import (DEFAULT_TOL, Direction, FeasibleGrid, Problem, evaluate_objectives,
                      feasible_grid, is_feasible)

_BLOCK = 512


class DominanceResult(enum.Enum):
    FIRST_DOMINATES = "first"
    SECOND_DOMINATES = "second"
    INCOMPARABLE = "incomparable"
    EQUAL = "equal"


def _signs(directions):
    return np.array([Direction(d).sign for d in directions])


def _directions(p):
    return p.directions if isinstance(p, Problem) else tuple(p)


def dominates(p, u, v) -> DominanceResult:
    """Compare two objective vectors under the problem's directions.

    ``p`` may be a Problem or a sequence of Directions.  Comparison is exact:
    vectors from the same grid are bit-identical when their points are.
    """
    dirs = _directions(p)
    if len(u) != len(dirs) or len(v) != len(dirs):
        raise ValueError(f"vectors must have length {len(dirs)}")
    u_better = v_better = False
    for d, a, b in zip(dirs, u, v):
        if d.better(a, b):
            u_better = True
        elif d.better(b, a):
            v_better = True
    if u_better and v_better:
        return DominanceResult.INCOMPARABLE
    if u_better:
        return DominanceResult.FIRST_DOMINATES
    if v_better:
        return DominanceResult.SECOND_DOMINATES
    return DominanceResult.EQUAL


def dominated_mask(candidates, pool, directions) -> np.ndarray:
    """For each candidate row, whether some row of ``pool`` dominates it."""
    signs = _signs(directions)
    C = np.asarray(candidates, dtype=float).reshape(-1, len(signs)) * signs
    P = np.asarray(pool, dtype=float).reshape(-1, len(signs)) * signs
    out = np.zeros(C.shape[0], dtype=bool)
    if P.shape[0] == 0:
        return out
    for start in range(0, C.shape[0], _BLOCK):
        c = C[start:start + _BLOCK, None, :]
        geq = np.all(P[None, :, :] >= c, axis=2)
        gt = np.any(P[None, :, :] > c, axis=2)
        out[start:start + _BLOCK] = np.any(geq & gt, axis=1)
    return out


def nondominated_mask(F, directions) -> np.ndarray:
    """Rows of ``F`` that no other row dominates.  Equal rows all survive."""
    return ~dominated_mask(F, F, directions)


@dataclass(frozen=True)
class FrontReport:
    points: tuple
    vectors: tuple
    multiplicity: tuple
    total_feasible: int


def front_of_grid(p: Problem, grid: FeasibleGrid) -> FrontReport:
    keep = np.flatnonzero(nondominated_mask(grid.F, p.directions))
    points, vectors, mult = [], [], []
    seen = {}
    for i in keep:
        vec = tuple(float(v) for v in grid.F[i])
        if vec in seen:
            mult[seen[vec]] += 1
            continue
        seen[vec] = len(points)
        points.append(grid.point(i))
        vectors.append(vec)
        mult.append(1)
    return FrontReport(tuple(points), tuple(vectors), tuple(mult), len(grid))


def brute_force_front(p: Problem, resolution: int, tol: float = DEFAULT_TOL,
                      cap: int | None = None, workers: int = 1) -> FrontReport:
    """Non-dominated subset of the feasible grid.

    Points with equal objective vectors collapse onto the first in
    enumeration order; ``multiplicity`` counts how many grid points each
    front member stands for.
    """
    grid = feasible_grid(p, resolution, tol, cap, workers)
    if len(grid) == 0:
        raise InfeasibleError("feasible set is empty at this resolution")
    return front_of_grid(p, grid)


def certify_non_dominated(p: Problem, candidate, resolution: int, tol: float = DEFAULT_TOL,
                          cap: int | None = None, workers: int = 1, grid: FeasibleGrid | None = None) -> bool:
    if not is_feasible(p, candidate, tol):
        raise InfeasibleCandidateError(f"candidate {candidate!r} is infeasible")
    if grid is None:
        grid = feasible_grid(p, resolution, tol, cap, workers)
    f = evaluate_objectives(p, candidate)
    return not bool(dominated_mask([f], grid.F, p.directions)[0])


def verify_theorem5(p: Problem, s, resolution: int, tol: float = DEFAULT_TOL,
                    cap: int | None = None, workers: int = 1) -> bool:
    """Check that normalizing the criteria leaves the grid's Pareto set unchanged.

    Compares the full non-dominated point sets (duplicates included) of the
    original and the normalized problem over the same grid.
    """
    from .scalarize import normalize

    normalized = normalize(p, s).as_problem()
    grid = feasible_grid(p, resolution, tol, cap, workers)
    ngrid = feasible_grid(normalized, resolution, tol, cap, workers)
    if len(grid) == 0:
        raise InfeasibleError("feasible set is empty at this resolution")
    if not np.array_equal(grid.X, ngrid.X):
        return False
    return bool(np.array_equal(nondominated_mask(grid.F, p.directions),
                               nondominated_mask(ngrid.F, normalized.directions)))
