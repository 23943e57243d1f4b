import networkx as nx
import numpy as np
import pytest

from mcstandards.circuits import (Circuit, Digraph, PerCircuit, SumCost,
                                  build_circulation_problem, enumerate_simple_circuits)
from mcstandards.errors import CircuitCapError, CircuitError
from mcstandards.expr import evaluate
from mcstandards.formats import dumps_problem, loads_problem
from mcstandards.instances import example1, example2, figure2_graph
from mcstandards.problem import Interval, Relation, enumerate_feasible, evaluate_objectives
from mcstandards.scalarize import Method, ScalarizationKind
from mcstandards.solver import solve
from mcstandards.standards import compute_standards

from oracles import brute_force_cycles


def test_figure2_circuits():
    cs = enumerate_simple_circuits(figure2_graph())
    assert [c.vertices for c in cs] == [(1, 3), (2, 3), (1, 2, 3)]
    assert cs.variables == ("y1", "y2", "y3")


def test_acyclic_pair_has_no_circuits():
    assert len(enumerate_simple_circuits(Digraph.from_arcs([(1, 2)]))) == 0


def test_complete_digraph_on_three():
    g = Digraph.from_arcs([(a, b) for a in (1, 2, 3) for b in (1, 2, 3) if a != b])
    cs = enumerate_simple_circuits(g)
    assert [c.vertices for c in cs] == [(1, 2), (1, 3), (2, 3), (1, 2, 3), (1, 3, 2)]


def test_self_loop_counts():
    cs = enumerate_simple_circuits(Digraph.from_arcs([(1, 1), (1, 2), (2, 1)]))
    assert [c.vertices for c in cs] == [(1,), (1, 2)]


def test_circuit_cap():
    g = Digraph.from_arcs([(a, b) for a in range(5) for b in range(5) if a != b])
    with pytest.raises(CircuitCapError):
        enumerate_simple_circuits(g, cap=10)


def test_string_vertices_follow_given_order():
    g = Digraph(("b", "a", "c"), (("a", "b"), ("b", "a"), ("b", "c"), ("c", "b")))
    cs = enumerate_simple_circuits(g)
    assert [c.vertices for c in cs] == [("b", "a"), ("b", "c")]


@pytest.mark.parametrize("build", [
    lambda: Digraph((1, 2), ((1, 3),)),
    lambda: Digraph((1, 2), ((1, 2), (1, 2))),
    lambda: Digraph((1, 2), ((1, 2, 0.0),)),
    lambda: Digraph((1, 1), ()),
    lambda: enumerate_simple_circuits(Digraph((), ())),
])
def test_invalid_graphs(build):
    with pytest.raises(CircuitError):
        build()


def _random_digraph(rng):
    n = int(rng.integers(1, 7))
    density = rng.uniform(0.1, 0.8)
    arcs = [(a, b) for a in range(n) for b in range(n)
            if rng.random() < (density if a != b else 0.1)]
    return Digraph(tuple(range(n)), tuple(arcs))


def test_random_digraphs_match_brute_force_and_networkx():
    rng = np.random.default_rng(2024)
    for _ in range(120):
        g = _random_digraph(rng)
        got = {c.vertices for c in enumerate_simple_circuits(g)}
        arcs = [(a.tail, a.head) for a in g.arcs]
        assert got == brute_force_cycles(g.vertices, arcs)
        G = nx.DiGraph(arcs)
        G.add_nodes_from(g.vertices)
        assert len(got) == sum(1 for _ in nx.simple_cycles(G))


def test_canonical_order_is_length_then_lexicographic():
    rng = np.random.default_rng(1)
    for _ in range(30):
        cs = enumerate_simple_circuits(_random_digraph(rng))
        keys = [(len(c), c.vertices) for c in cs]
        assert keys == sorted(keys)
        for c in cs:
            assert c.vertices[0] == min(c.vertices)
            assert len(set(c.vertices)) == len(c.vertices)


def test_example1_system():
    p = example1()
    assert [o.direction.value for o in p.objectives] == ["max"] * 3
    assert [str(o.expr) for o in p.objectives] == ["y1", "y2", "y3"]
    rows = {(str(c.lhs), c.relation, c.rhs) for c in p.constraints}
    assert ("(y1 + y3)", Relation.LE, 1.0) in rows
    assert ("(y2 + y3)", Relation.LE, 1.0) in rows
    assert all(v.kind == Interval(0, 1) for v in p.variables)


def test_example2_system():
    p = example2()
    F1, F2 = p.objectives
    assert F1.direction.value == "max" and F2.direction.value == "min"
    pt = {"y1": 0.2, "y2": 0.3, "y3": 0.5}
    assert evaluate(F2.expr, pt) == 0 * 0.2 + 1 * 0.3 + 2 * 0.5
    shared = [(str(c.lhs), c.rhs) for c in p.constraints if c.relation is Relation.EQ]
    assert shared == [("(y1 + y3)", 1.0), ("(y2 + y3)", 1.0)]
    # the feasible set is the segment y1 = y2 = 1 - y3
    pts = list(enumerate_feasible(p, 10))
    assert len(pts) == 11
    assert all(x["y1"] == x["y2"] for x in pts)


def test_single_circuit_graph_with_capacities():
    g = Digraph.from_arcs([(1, 2, 3.0), (2, 1, 2.0)])
    cs = enumerate_simple_circuits(g)
    p = build_circulation_problem(g, cs)
    assert p.variables[0].kind == Interval(0, 2.0)
    assert len(p.objectives) == 1
    assert sorted(c.rhs for c in p.constraints) == [2.0, 3.0]
    assert all(str(c.lhs) == "y1" and c.relation is Relation.LE for c in p.constraints)


def test_objective_spec_errors():
    g = figure2_graph()
    cs = enumerate_simple_circuits(g)
    with pytest.raises(CircuitError):
        build_circulation_problem(g, cs, PerCircuit(circuits=(1, 4)))
    with pytest.raises(CircuitError):
        build_circulation_problem(g, cs, SumCost(costs={0: 1.0}))
    p = build_circulation_problem(g, cs, SumCost(costs={3: -1.5}))
    assert evaluate_objectives(p, {"y1": 0, "y2": 0, "y3": 1}) == (1.0, -1.5)


def test_build_rejects_foreign_circuit_set():
    g = figure2_graph()
    from mcstandards.circuits import CircuitSet
    cs = CircuitSet((Circuit((1, 2)),), ("y1",))
    with pytest.raises(CircuitError):
        build_circulation_problem(g, cs)


def test_built_problems_round_trip_through_file_format():
    for p in (example1(), example2()):
        back = loads_problem(dumps_problem(p))
        assert back == p


def test_example1_end_to_end_gamma():
    p = example1()
    s = compute_standards(p, 10)
    r = solve(p, s, ScalarizationKind(Method.GAMMA_MIN), 10)
    assert [tuple(x.values()) for x in r.best_points] == [(1.0, 1.0, 0.0)]
