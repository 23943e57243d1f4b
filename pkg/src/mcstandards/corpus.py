"""Seeded random finite problems for property checks."""

from __future__ import annotations

import numpy as np

from .errors import ConstantCriterionError, InfeasibleError
from .expr import parse
from .problem import Constraint, FiniteSet, Objective, Problem, Relation, VariableDomain, feasible_grid
from .standards import standards_from_grid


def _term(rng, name):
    c = int(rng.integers(-3, 4)) or 1
    shape = rng.choice(3, p=[0.6, 0.25, 0.15])
    if shape == 0:
        return f"{c}*{name}"
    if shape == 1:
        return f"{c}*{name}^2"
    return f"{c}*({name} - {int(rng.integers(-2, 3))})^2"


def _objective_text(rng, names):
    k = int(rng.integers(1, len(names) + 1))
    chosen = rng.choice(names, size=k, replace=False)
    terms = [_term(rng, str(v)) for v in chosen]
    if rng.random() < 0.2 and len(names) > 1:
        a, b = rng.choice(names, size=2, replace=False)
        terms.append(f"{int(rng.integers(1, 3))}*{a}*{b}")
    return " + ".join(terms)


def random_problem(rng: np.random.Generator, max_feasible: int = 2000,
                   objectives=(2, 4), variables=(2, 4)) -> Problem:
    """Draw a finite problem with a non-empty feasible set of bounded size.

    Domains are small sets of integers and halves, objectives are low-order
    polynomials with integer coefficients, so objective values are exact
    and ties are frequent.  Draws that come out infeasible, too large or
    with a constant criterion are rejected and redrawn.
    """
    while True:
        nv = int(rng.integers(variables[0], variables[1] + 1))
        names = [f"x{i + 1}" for i in range(nv)]
        domains = []
        for name in names:
            size = int(rng.integers(3, 9))
            pool = np.arange(-6, 13) / (2 if rng.random() < 0.3 else 1)
            values = np.sort(rng.choice(pool, size=size, replace=False))
            domains.append(VariableDomain(name, FiniteSet(tuple(float(v) for v in values))))
        n = int(rng.integers(objectives[0], objectives[1] + 1))
        objs = [Objective(f"F{i + 1}", parse(_objective_text(rng, names)),
                          "max" if rng.random() < 0.5 else "min") for i in range(n)]
        constraints = []
        for _ in range(int(rng.integers(0, 3))):
            lhs = parse(_objective_text(rng, names))
            rel = Relation.GE if rng.random() < 0.3 else Relation.LE
            constraints.append(Constraint(lhs, rel, float(rng.integers(-4, 15))))
        p = Problem(tuple(domains), tuple(objs), tuple(constraints))
        grid = feasible_grid(p, 1)
        if not 2 <= len(grid) <= max_feasible:
            continue
        try:
            standards_from_grid(p, grid)
        except (ConstantCriterionError, InfeasibleError):
            continue
        return p


def random_corpus(seed: int, count: int, **kwargs):
    rng = np.random.default_rng(seed)
    return [random_problem(rng, **kwargs) for _ in range(count)]
