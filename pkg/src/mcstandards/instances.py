"""Built-in instances: the three-circuit graph and its two circulation problems."""

from .circuits import (CircuitSet, Digraph, PerCircuit, SumCost, build_circulation_problem,
                       enumerate_simple_circuits)
from .problem import Problem, Relation

# Arc set recovered from the circuits (1,3,1), (2,3,2) and (1,2,3,1); all capacities 1.
FIGURE2_ARCS = ((1, 3, 1.0), (3, 1, 1.0), (2, 3, 1.0), (3, 2, 1.0), (1, 2, 1.0))


def figure2_graph() -> Digraph:
    return Digraph.from_arcs(FIGURE2_ARCS, vertices=(1, 2, 3))


def figure2_circuits() -> CircuitSet:
    return enumerate_simple_circuits(figure2_graph())


def example1() -> Problem:
    """Maximal circulation in every circuit, arc loads bounded by capacity."""
    g = figure2_graph()
    return build_circulation_problem(g, enumerate_simple_circuits(g), PerCircuit(), Relation.LE)


def example2() -> Problem:
    """Total circulation (max) against total cost (min), shared arcs saturated."""
    g = figure2_graph()
    return build_circulation_problem(g, enumerate_simple_circuits(g), SumCost(), Relation.EQ)


PROBLEMS = {"example1": example1, "example2": example2}
GRAPHS = {"figure2": figure2_graph, "example1": figure2_graph, "example2": figure2_graph}
