"""Comparison standards: per-criterion best (ideal) and worst (anti-ideal) values."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ConstantCriterionError, InfeasibleError, StandardsError
from .problem import DEFAULT_TOL, Direction, FeasibleGrid, Problem, feasible_grid


@dataclass(frozen=True)
class ComparisonStandards:
    """Ideal point ``ideal`` (K) and anti-ideal point ``anti_ideal`` (W).

    Either point may be infeasible as a joint vector; only the direction
    invariant is enforced.  Witness lists hold the grid point that attained
    each bound, or None when the bound was supplied externally.
    """

    ideal: tuple
    anti_ideal: tuple
    directions: tuple
    attained_at_ideal: tuple = None
    attained_at_anti_ideal: tuple = None

    def __post_init__(self):
        n = len(self.directions)
        ideal = tuple(float(v) for v in self.ideal)
        anti = tuple(float(v) for v in self.anti_ideal)
        if len(ideal) != n or len(anti) != n:
            raise StandardsError(f"standards must have length {n}")
        for i, (d, k, w) in enumerate(zip(self.directions, ideal, anti)):
            d = Direction(d)
            if k == w:
                raise StandardsError(f"criterion {i + 1}: ideal equals anti-ideal ({k})")
            if d.better(w, k):
                raise StandardsError(
                    f"criterion {i + 1} ({d.value}): ideal {k} is worse than anti-ideal {w}")
        object.__setattr__(self, "ideal", ideal)
        object.__setattr__(self, "anti_ideal", anti)
        object.__setattr__(self, "directions", tuple(Direction(d) for d in self.directions))
        for attr in ("attained_at_ideal", "attained_at_anti_ideal"):
            value = getattr(self, attr)
            object.__setattr__(self, attr, (None,) * n if value is None else tuple(value))

    @property
    def n(self):
        return len(self.directions)


def standards_from_grid(p: Problem, grid: FeasibleGrid, tol: float = DEFAULT_TOL) -> ComparisonStandards:
    if len(grid) == 0:
        raise InfeasibleError("feasible set is empty at this resolution")
    ideal, anti, at_ideal, at_anti = [], [], [], []
    for i, obj in enumerate(p.objectives):
        col = grid.F[:, i]
        hi, lo = int(np.argmax(col)), int(np.argmin(col))
        best, worst = (hi, lo) if obj.direction is Direction.MAXIMIZE else (lo, hi)
        if abs(col[best] - col[worst]) <= tol:
            raise ConstantCriterionError(i, obj.name, float(col[best]))
        ideal.append(float(col[best]))
        anti.append(float(col[worst]))
        at_ideal.append(grid.point(best))
        at_anti.append(grid.point(worst))
    return ComparisonStandards(tuple(ideal), tuple(anti), p.directions,
                               tuple(at_ideal), tuple(at_anti))


def compute_standards(p: Problem, resolution: int = 10, tol: float = DEFAULT_TOL,
                      cap: int | None = None, workers: int = 1) -> ComparisonStandards:
    """Best and worst value of every criterion over the feasible grid.

    Ties go to the first point in enumeration order.  Grid standards are
    inner approximations of the true best values and outer approximations
    of the true worst values; they bracket every grid point exactly.
    """
    return standards_from_grid(p, feasible_grid(p, resolution, tol, cap, workers), tol)


def override_standards(s: ComparisonStandards, ideal=None, anti_ideal=None) -> ComparisonStandards:
    """Replace ideal and/or anti-ideal with externally supplied estimates.

    Witnesses are cleared only where a supplied entry differs from the
    computed one, so re-supplying the computed values is a no-op.
    """
    new_ideal = s.ideal if ideal is None else tuple(float(v) for v in ideal)
    new_anti = s.anti_ideal if anti_ideal is None else tuple(float(v) for v in anti_ideal)
    if len(new_ideal) != s.n or len(new_anti) != s.n:
        raise StandardsError(f"standards must have length {s.n}")
    at_ideal = tuple(w if a == b else None
                     for w, a, b in zip(s.attained_at_ideal, s.ideal, new_ideal))
    at_anti = tuple(w if a == b else None
                    for w, a, b in zip(s.attained_at_anti_ideal, s.anti_ideal, new_anti))
    return replace(s, ideal=new_ideal, anti_ideal=new_anti,
                   attained_at_ideal=at_ideal, attained_at_anti_ideal=at_anti)
