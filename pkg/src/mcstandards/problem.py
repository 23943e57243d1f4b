"""Multi-criteria problem model and desk-scale feasible-set enumeration."""

from __future__ import annotations

import enum
import math
import os
from collections.abc import Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import GridCapError, ProblemError
from .expr import Expr, evaluate, free_variables, parse

DEFAULT_TOL = 1e-9
DEFAULT_GRID_CAP = 10**7
GRID_CAP_ENV = "MCSTANDARDS_GRID_CAP"
_CHUNK = 1 << 16


class Direction(enum.Enum):
    MAXIMIZE = "max"
    MINIMIZE = "min"

    @property
    def sign(self):
        """+1 for maximization, -1 for minimization."""
        return 1.0 if self is Direction.MAXIMIZE else -1.0

    def better(self, a, b):
        """True if ``a`` is strictly better than ``b`` in this sense."""
        return a > b if self is Direction.MAXIMIZE else a < b


class Relation(enum.Enum):
    LE = "<="
    EQ = "="
    GE = ">="


def _as_expr(e):
    return parse(e) if isinstance(e, str) else e


@dataclass(frozen=True)
class Objective:
    name: str
    expr: Expr
    direction: Direction

    def __post_init__(self):
        object.__setattr__(self, "expr", _as_expr(self.expr))
        object.__setattr__(self, "direction", Direction(self.direction))


@dataclass(frozen=True)
class Constraint:
    lhs: Expr
    relation: Relation
    rhs: float

    def __post_init__(self):
        object.__setattr__(self, "lhs", _as_expr(self.lhs))
        object.__setattr__(self, "relation", Relation(self.relation))
        object.__setattr__(self, "rhs", float(self.rhs))

    def excess(self, lhs_value):
        """Violation amount as a negated-<= residual: feasible iff <= tol.

        ``>=`` is checked as ``-lhs <= -rhs``; ``=`` as ``|lhs - rhs| <= tol``.
        """
        if self.relation is Relation.LE:
            return lhs_value - self.rhs
        if self.relation is Relation.GE:
            return self.rhs - lhs_value
        return abs(lhs_value - self.rhs)


@dataclass(frozen=True)
class Interval:
    lower: float
    upper: float

    def __post_init__(self):
        object.__setattr__(self, "lower", float(self.lower))
        object.__setattr__(self, "upper", float(self.upper))
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise ProblemError("interval bounds must be finite")
        if self.lower > self.upper:
            raise ProblemError(f"interval lower {self.lower} exceeds upper {self.upper}")

    def grid(self, resolution):
        """``resolution`` equal steps, both ends included exactly."""
        if self.lower == self.upper:
            return np.array([self.lower])
        k = np.arange(resolution + 1, dtype=float)
        values = self.lower + (self.upper - self.lower) * k / resolution
        values[-1] = self.upper
        return values

    def contains(self, value, tol=0.0):
        return self.lower - tol <= value <= self.upper + tol


@dataclass(frozen=True)
class FiniteSet:
    values: tuple

    def __post_init__(self):
        values = tuple(float(v) for v in self.values)
        if not values:
            raise ProblemError("finite domain must be non-empty")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ProblemError("finite domain values must be strictly increasing")
        object.__setattr__(self, "values", values)

    def grid(self, resolution=None):
        return np.array(self.values)

    def contains(self, value, tol=0.0):
        return any(abs(value - v) <= tol for v in self.values)


@dataclass(frozen=True)
class VariableDomain:
    name: str
    kind: Interval | FiniteSet


class Point(Mapping):
    """Immutable assignment of values to named variables, in problem order."""

    __slots__ = ("_names", "_values")

    def __init__(self, items=(), /, **kwargs):
        pairs = list(items.items() if isinstance(items, Mapping) else items)
        pairs += list(kwargs.items())
        self._names = tuple(n for n, _ in pairs)
        self._values = tuple(float(v) for _, v in pairs)
        if len(set(self._names)) != len(self._names):
            raise ValueError("duplicate variable in point")

    @classmethod
    def from_values(cls, names, values):
        return cls(zip(names, values))

    @property
    def names(self):
        return self._names

    @property
    def values_tuple(self):
        return self._values

    def __getitem__(self, name):
        try:
            return self._values[self._names.index(name)]
        except ValueError:
            raise KeyError(name) from None

    def __iter__(self):
        return iter(self._names)

    def __len__(self):
        return len(self._names)

    def __hash__(self):
        return hash(frozenset(zip(self._names, self._values)))

    def __eq__(self, other):
        if not isinstance(other, Mapping):
            return NotImplemented
        return dict(self) == {k: float(v) for k, v in other.items()}

    def __repr__(self):
        body = ", ".join(f"{n}={v!r}" for n, v in zip(self._names, self._values))
        return f"Point({body})"


@dataclass(frozen=True)
class Problem:
    variables: tuple
    objectives: tuple
    constraints: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "objectives", tuple(self.objectives))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if not self.objectives:
            raise ProblemError("a problem needs at least one objective")
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ProblemError("variable names must be unique")
        onames = [o.name for o in self.objectives]
        if len(set(onames)) != len(onames):
            raise ProblemError("objective names must be unique")
        declared = set(names)
        for o in self.objectives:
            unknown = free_variables(o.expr) - declared
            if unknown:
                raise ProblemError(f"objective {o.name!r} uses undeclared {sorted(unknown)}")
        for j, c in enumerate(self.constraints):
            unknown = free_variables(c.lhs) - declared
            if unknown:
                raise ProblemError(f"constraint {j + 1} uses undeclared {sorted(unknown)}")

    @property
    def variable_names(self):
        return tuple(v.name for v in self.variables)

    @property
    def directions(self):
        return tuple(o.direction for o in self.objectives)

    @property
    def n_objectives(self):
        return len(self.objectives)


def _check_assigned(p, x):
    missing = [n for n in p.variable_names if n not in x]
    if missing:
        raise ProblemError(f"point does not assign {missing}")


def is_feasible(p: Problem, x: Mapping, tol: float = DEFAULT_TOL) -> bool:
    _check_assigned(p, x)
    for v in p.variables:
        if not v.kind.contains(float(x[v.name]), tol):
            return False
    for c in p.constraints:
        if c.excess(evaluate(c.lhs, x)) > tol:
            return False
    return True


def evaluate_objectives(p: Problem, x: Mapping) -> tuple:
    _check_assigned(p, x)
    return tuple(evaluate(o.expr, x) for o in p.objectives)


def default_grid_cap():
    value = os.environ.get(GRID_CAP_ENV)
    return int(value) if value else DEFAULT_GRID_CAP


def grid_axes(p: Problem, resolution: int):
    if resolution < 1:
        raise ValueError("resolution must be a positive integer")
    return [v.kind.grid(resolution) for v in p.variables]


@dataclass
class FeasibleGrid:
    """Feasible points of a grid scan in enumeration order.

    ``X`` holds one row per point (columns follow ``names``); ``F`` holds the
    matching objective vectors.
    """

    names: tuple
    X: np.ndarray
    F: np.ndarray
    total: int = 0
    resolution: int | None = None
    extra: dict = field(default_factory=dict)

    def __len__(self):
        return self.X.shape[0]

    def point(self, i):
        return Point.from_values(self.names, self.X[i])

    def points(self):
        return [self.point(i) for i in range(len(self))]


def _broadcast(value, size):
    return np.broadcast_to(np.asarray(value, dtype=float), (size,))


def _scan_chunk(p, axes, shape, start, stop, tol):
    idx = np.unravel_index(np.arange(start, stop), shape)
    size = stop - start
    env = {v.name: axes[k][idx[k]] for k, v in enumerate(p.variables)}
    mask = np.ones(size, dtype=bool)
    for c in p.constraints:
        lhs = _broadcast(evaluate(c.lhs, env), size)
        if c.relation is Relation.LE:
            mask &= lhs - c.rhs <= tol
        elif c.relation is Relation.GE:
            mask &= c.rhs - lhs <= tol
        else:
            mask &= np.abs(lhs - c.rhs) <= tol
    X = np.column_stack([env[n][mask] for n in p.variable_names]) if p.variables \
        else np.zeros((int(mask.sum()), 0))
    sub = {n: env[n][mask] for n in p.variable_names}
    m = X.shape[0]
    F = np.column_stack([_broadcast(evaluate(o.expr, sub), m) for o in p.objectives]) \
        if m else np.zeros((0, p.n_objectives))
    return X, F


def scan(p: Problem, axes: Sequence[np.ndarray], tol: float = DEFAULT_TOL,
         cap: int | None = None, workers: int = 1) -> FeasibleGrid:
    """Evaluate every point of the Cartesian product of ``axes``.

    Points come out in lexicographic order (first variable outermost).  With
    ``workers > 1`` chunks are evaluated on a thread pool and re-joined in
    order, so the result does not depend on the worker count.
    """
    cap = default_grid_cap() if cap is None else cap
    shape = tuple(len(a) for a in axes)
    total = math.prod(shape)
    if total > cap:
        raise GridCapError(total, cap)
    bounds = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _scan_chunk(p, axes, shape, b[0], b[1], tol), bounds))
    else:
        parts = [_scan_chunk(p, axes, shape, a, b, tol) for a, b in bounds]
    if parts:
        X = np.concatenate([x for x, _ in parts])
        F = np.concatenate([f for _, f in parts])
    else:
        X = np.zeros((0, len(axes)))
        F = np.zeros((0, p.n_objectives))
    return FeasibleGrid(p.variable_names, X, F, total)


def feasible_grid(p: Problem, resolution: int, tol: float = DEFAULT_TOL,
                  cap: int | None = None, workers: int = 1) -> FeasibleGrid:
    grid = scan(p, grid_axes(p, resolution), tol, cap, workers)
    grid.resolution = resolution
    return grid


def enumerate_feasible(p: Problem, resolution: int, tol: float = DEFAULT_TOL,
                       cap: int | None = None) -> Iterator[Point]:
    """Yield feasible grid points in deterministic lexicographic order.

    Interval domains contribute ``resolution + 1`` equally spaced values,
    finite domains their listed values.
    """
    grid = feasible_grid(p, resolution, tol, cap)
    for i in range(len(grid)):
        yield grid.point(i)
