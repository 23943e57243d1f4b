"""Multi-criteria optimization through ideal/anti-ideal comparison standards.

A multi-criteria problem is reduced to one criterion by measuring how far
each feasible objective vector lies from the ideal point (best value of every
criterion) and from the anti-ideal point (worst value of every criterion).
Problems are solved by exhaustive enumeration of a feasible grid, and every
answer can be checked for Pareto-optimality against the same grid.
"""

from .circuits import (Circuit, CircuitSet, Digraph, PerCircuit, SumCost,
                       build_circulation_problem, enumerate_simple_circuits)
from .errors import *  # noqa: F401,F403
from .expr import Expr, evaluate, free_variables, parse, to_source
from .pareto import (DominanceResult, FrontReport, brute_force_front, certify_non_dominated,
                     dominates, verify_theorem5)
from .problem import (Constraint, Direction, FiniteSet, Interval, Objective, Point, Problem,
                      Relation, VariableDomain, enumerate_feasible, evaluate_objectives,
                      is_feasible)
from .scalarize import (Method, NormalizedProblem, ScalarizationKind, delta, gamma, normalize,
                        scalarized_objective, theta)
from .solver import LexOrder, SolveReport, solve, solve_lexicographic, solve_normalized
from .standards import ComparisonStandards, compute_standards, override_standards

__version__ = "0.1.0"
