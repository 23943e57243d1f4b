"""Single-criterion transformations built on comparison standards.

Three scalar maps of an objective vector F:

* delta: Euclidean distance to the ideal point, minimized;
* theta: Euclidean distance to the anti-ideal point, maximized;
* gamma: delta / theta, minimized (``+inf`` at the anti-ideal itself).

Squared forms skip the square root and share the roots' optimizers, so the
solver compares squared values and takes roots only for reporting.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ConstantCriterionError
from .expr import BinOp, Const
from .problem import Direction, Objective, Problem
from .standards import ComparisonStandards


class Method(enum.Enum):
    DELTA_MIN = "delta"
    THETA_MAX = "theta"
    GAMMA_MIN = "gamma"

    @property
    def sense(self):
        return Direction.MAXIMIZE if self is Method.THETA_MAX else Direction.MINIMIZE


@dataclass(frozen=True)
class ScalarizationKind:
    method: Method
    squared: bool = False

    def __post_init__(self):
        object.__setattr__(self, "method", Method(self.method))

    @property
    def sense(self):
        return self.method.sense

    def __str__(self):
        return f"{self.method.value}{'^2' if self.squared else ''}"


def _vectors(s, f):
    f = np.asarray(f, dtype=float)
    if f.shape[-1] != s.n:
        raise ValueError(f"objective vector length {f.shape[-1]} != {s.n}")
    return f


def _sumsq(ref, f):
    d = np.asarray(ref) - f
    return np.sum(d * d, axis=-1)


def _out(x):
    return float(x) if np.ndim(x) == 0 else x


def delta_squared(s: ComparisonStandards, f):
    return _out(_sumsq(s.ideal, _vectors(s, f)))


def theta_squared(s: ComparisonStandards, f):
    return _out(_sumsq(s.anti_ideal, _vectors(s, f)))


def gamma_squared(s: ComparisonStandards, f):
    f = _vectors(s, f)
    d2, t2 = _sumsq(s.ideal, f), _sumsq(s.anti_ideal, f)
    with np.errstate(divide="ignore", invalid="ignore"):
        g = np.where(t2 > 0, d2 / np.where(t2 > 0, t2, 1.0), np.inf)
    return _out(g)


def delta(s: ComparisonStandards, f, squared: bool = False):
    """Distance from F to the ideal point; accepts one vector or a stack of rows."""
    d2 = delta_squared(s, f)
    return d2 if squared else _out(np.sqrt(d2))


def theta(s: ComparisonStandards, f, squared: bool = False):
    t2 = theta_squared(s, f)
    return t2 if squared else _out(np.sqrt(t2))


def gamma(s: ComparisonStandards, f, squared: bool = False):
    """delta / theta, or the ratio of squared sums when ``squared``.

    The unsquared value is computed as a ratio of roots, which equals the
    root of the ratio for nonnegative sums.
    """
    if squared:
        return gamma_squared(s, f)
    f = _vectors(s, f)
    d, t = np.sqrt(_sumsq(s.ideal, f)), np.sqrt(_sumsq(s.anti_ideal, f))
    with np.errstate(divide="ignore", invalid="ignore"):
        g = np.where(t > 0, d / np.where(t > 0, t, 1.0), np.inf)
    return _out(g)


_SQUARED = {Method.DELTA_MIN: delta_squared, Method.THETA_MAX: theta_squared,
            Method.GAMMA_MIN: gamma_squared}
_PLAIN = {Method.DELTA_MIN: delta, Method.THETA_MAX: theta, Method.GAMMA_MIN: gamma}


@dataclass(frozen=True)
class ScalarObjective:
    """Callable scalar map with its optimization sense."""

    kind: ScalarizationKind
    standards: ComparisonStandards

    @property
    def sense(self):
        return self.kind.sense

    def __call__(self, f):
        return _PLAIN[self.kind.method](self.standards, f, squared=self.kind.squared)

    def squared_value(self, f):
        return _SQUARED[self.kind.method](self.standards, f)

    def key(self, f):
        """Squared value oriented so that smaller is always better."""
        v = self.squared_value(f)
        return -v if self.sense is Direction.MAXIMIZE else v

    def report(self, squared_value):
        """Convert a squared-form value to this kind's reported form."""
        return float(squared_value) if self.kind.squared else float(np.sqrt(squared_value))


def scalarized_objective(kind: ScalarizationKind, s: ComparisonStandards) -> ScalarObjective:
    return ScalarObjective(kind, s)


@dataclass(frozen=True)
class NormalizedProblem:
    """Criteria rescaled to [0, 1] with the original ideal/anti-ideal values.

    ``f_i = (F_i - min(K_i, W_i)) / (max(K_i, W_i) - min(K_i, W_i))``;
    directions are kept, so the normalized ideal is 1 for maximized and 0
    for minimized criteria.
    """

    base: Problem
    standards: ComparisonStandards
    lower: tuple
    span: tuple

    def f(self, F):
        """Normalize one objective vector or a stack of rows."""
        F = np.asarray(F, dtype=float)
        out = (F - np.asarray(self.lower)) / np.asarray(self.span)
        return out if F.ndim > 1 else tuple(float(v) for v in out)

    @property
    def normalized_standards(self):
        ideal = tuple(1.0 if d is Direction.MAXIMIZE else 0.0 for d in self.base.directions)
        anti = tuple(1.0 - v for v in ideal)
        return ComparisonStandards(ideal, anti, self.base.directions)

    def as_problem(self) -> Problem:
        """The normalized system as an ordinary Problem over the same variables."""
        objectives = tuple(
            Objective(o.name, BinOp("/", BinOp("-", o.expr, Const(lo)), Const(sp)), o.direction)
            for o, lo, sp in zip(self.base.objectives, self.lower, self.span))
        return Problem(self.base.variables, objectives, self.base.constraints)


def normalize(p: Problem, s: ComparisonStandards) -> NormalizedProblem:
    lower, span = [], []
    for i, (k, w) in enumerate(zip(s.ideal, s.anti_ideal)):
        lo, hi = min(k, w), max(k, w)
        if hi == lo:
            raise ConstantCriterionError(i, p.objectives[i].name, k)
        lower.append(lo)
        span.append(hi - lo)
    return NormalizedProblem(p, s, tuple(lower), tuple(span))
