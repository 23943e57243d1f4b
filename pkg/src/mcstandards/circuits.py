"""Weighted digraphs, simple-circuit enumeration and circulation problems."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import CircuitCapError, CircuitError
from .expr import parse
from .problem import Constraint, Interval, Objective, Problem, Relation, VariableDomain

DEFAULT_CIRCUIT_CAP = 10**5


@dataclass(frozen=True)
class Arc:
    tail: object
    head: object
    capacity: float = 1.0


@dataclass(frozen=True)
class Digraph:
    vertices: tuple
    arcs: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        arcs = tuple(a if isinstance(a, Arc) else Arc(*a) for a in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if len(set(self.vertices)) != len(self.vertices):
            raise CircuitError("duplicate vertex")
        known = set(self.vertices)
        seen = set()
        for a in arcs:
            if a.tail not in known or a.head not in known:
                raise CircuitError(f"arc {a.tail}->{a.head} has an unknown endpoint")
            if (a.tail, a.head) in seen:
                raise CircuitError(f"duplicate arc {a.tail}->{a.head}")
            if not a.capacity > 0:
                raise CircuitError(f"arc {a.tail}->{a.head} capacity must be positive")
            seen.add((a.tail, a.head))

    @classmethod
    def from_arcs(cls, arcs, vertices=None):
        """Build a graph from ``(tail, head[, capacity])`` tuples.

        Without explicit ``vertices`` the vertex order is sorted if the labels
        are mutually comparable, else first-appearance order.
        """
        arcs = [a if isinstance(a, Arc) else Arc(*a) for a in arcs]
        if vertices is None:
            found = list(dict.fromkeys(v for a in arcs for v in (a.tail, a.head)))
            try:
                vertices = sorted(found)
            except TypeError:
                vertices = found
        return cls(tuple(vertices), tuple(arcs))

    def successors(self):
        succ = {v: [] for v in self.vertices}
        for a in self.arcs:
            succ[a.tail].append(a.head)
        return succ

    def capacity(self, tail, head):
        for a in self.arcs:
            if a.tail == tail and a.head == head:
                return a.capacity
        raise KeyError((tail, head))


@dataclass(frozen=True)
class Circuit:
    """A simple directed cycle, stored from its smallest vertex; closure implied."""

    vertices: tuple

    @property
    def arcs(self):
        vs = self.vertices
        return tuple((vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class CircuitSet:
    circuits: tuple
    variables: tuple

    def __len__(self):
        return len(self.circuits)

    def __iter__(self):
        return iter(self.circuits)


def canonical_rotation(cycle, rank):
    i = min(range(len(cycle)), key=lambda j: rank[cycle[j]])
    return tuple(cycle[i:]) + tuple(cycle[:i])


def _scc_with(start, allowed, succ, pred):
    def reach(adj):
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen
    return reach(succ) & reach(pred)


def _johnson(g, cap):
    """Johnson's circuit search, one least start vertex at a time."""
    succ = g.successors()
    pred = {v: [] for v in g.vertices}
    for a in g.arcs:
        pred[a.head].append(a.tail)
    found = []
    for s_index, s in enumerate(g.vertices):
        allowed = set(g.vertices[s_index:])
        comp = _scc_with(s, allowed, succ, pred)
        adj = {v: [w for w in succ[v] if w in comp] for v in comp}
        blocked = {v: False for v in comp}
        B = {v: set() for v in comp}
        path = [s]

        def unblock(u):
            stack = [u]
            while stack:
                x = stack.pop()
                if blocked[x]:
                    blocked[x] = False
                    stack.extend(B[x])
                    B[x].clear()

        def circuit(v):
            closed = False
            blocked[v] = True
            for w in adj[v]:
                if w == s:
                    found.append(tuple(path))
                    if len(found) > cap:
                        raise CircuitCapError(cap)
                    closed = True
                elif not blocked[w]:
                    path.append(w)
                    if circuit(w):
                        closed = True
                    path.pop()
            if closed:
                unblock(v)
            else:
                for w in adj[v]:
                    B[w].add(v)
            return closed

        if adj.get(s):
            circuit(s)
    return found


def enumerate_simple_circuits(g: Digraph, cap: int = DEFAULT_CIRCUIT_CAP) -> CircuitSet:
    """All simple directed circuits of ``g``.

    Circuits start at their smallest vertex (by position in ``g.vertices``)
    and are ordered by length, then lexicographically by vertex position.
    Self-loops count as circuits of length one.
    """
    if not g.vertices:
        raise CircuitError("graph has no vertices")
    rank = {v: i for i, v in enumerate(g.vertices)}
    cycles = {canonical_rotation(c, rank) for c in _johnson(g, cap)}
    ordered = sorted(cycles, key=lambda c: (len(c), [rank[v] for v in c]))
    circuits = tuple(Circuit(c) for c in ordered)
    return CircuitSet(circuits, tuple(f"y{i + 1}" for i in range(len(circuits))))


@dataclass(frozen=True)
class PerCircuit:
    """One maximized objective per circuit: ``F_i = y_i``.

    ``circuits`` selects 1-based circuit indices; None means all.
    """

    circuits: Sequence[int] | None = None


@dataclass(frozen=True)
class SumCost:
    """Total circulation (maximized) and total cost (minimized).

    ``costs`` maps 1-based circuit index to unit cost; unlisted circuits cost
    ``index - 1``.
    """

    costs: Mapping[int, float] | None = None


def _fmt(x):
    x = float(x)
    return repr(int(x)) if x.is_integer() else repr(x)


def build_circulation_problem(g: Digraph, cs: CircuitSet, objectives=PerCircuit(),
                              arc_relation=Relation.LE) -> Problem:
    """Circulation problem over the circuits of ``g``.

    One variable ``y_i in [0, min capacity on circuit i]`` per circuit and one
    constraint per arc carried by a circuit: the circulations through the arc
    are bounded by its capacity.  ``arc_relation`` applies to arcs shared by
    two or more circuits; an arc on a single circuit always gets ``<=``, as
    an equality there would pin that circuit's flow outright.
    """
    arc_relation = Relation(arc_relation)
    if arc_relation not in (Relation.LE, Relation.EQ):
        raise CircuitError("arc relation must be <= or =")
    n = len(cs.circuits)
    if n == 0:
        raise CircuitError("graph has no circuits")
    caps = {(a.tail, a.head): a.capacity for a in g.arcs}
    variables = []
    for name, c in zip(cs.variables, cs.circuits):
        try:
            bound = min(caps[arc] for arc in c.arcs)
        except KeyError as err:
            raise CircuitError(f"circuit {c.vertices} uses arc {err.args[0]} not in graph") from None
        variables.append(VariableDomain(name, Interval(0.0, bound)))

    constraints = []
    for a in g.arcs:
        users = [name for name, c in zip(cs.variables, cs.circuits) if (a.tail, a.head) in c.arcs]
        if not users:
            continue
        rel = arc_relation if len(users) > 1 else Relation.LE
        constraints.append(Constraint(parse(" + ".join(users)), rel, a.capacity))

    def check(index):
        if not 1 <= index <= n:
            raise CircuitError(f"objective spec references unknown circuit {index}")
        return index

    if isinstance(objectives, PerCircuit):
        chosen = range(1, n + 1) if objectives.circuits is None else objectives.circuits
        objs = [Objective(f"F{k}", parse(cs.variables[check(k) - 1]), "max")
                for k in chosen]
    elif isinstance(objectives, SumCost):
        costs = {i: float(i - 1) for i in range(1, n + 1)}
        for k, v in (objectives.costs or {}).items():
            costs[check(k)] = float(v)
        total = " + ".join(cs.variables)
        cost = " + ".join(f"{_fmt(costs[i + 1])}*{y}" for i, y in enumerate(cs.variables))
        objs = [Objective("F1", parse(total), "max"), Objective("F2", parse(cost), "min")]
    else:
        raise CircuitError(f"unknown objective spec {objectives!r}")
    return Problem(tuple(variables), tuple(objs), tuple(constraints))
