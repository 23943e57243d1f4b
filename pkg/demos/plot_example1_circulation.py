"""
Circulations on a small digraph
===============================

Three simple circuits share the arcs of a four-arc digraph.  Each circuit
carries a circulation ``y_i`` in [0, 1] and we want all three as large as
possible, subject to the shared arc capacities.
"""

from mcstandards import (Method, ScalarizationKind, build_circulation_problem,
                         compute_standards, enumerate_simple_circuits, solve)
from mcstandards.expr import to_source
from mcstandards.instances import figure2_graph

g = figure2_graph()
circuits = enumerate_simple_circuits(g)
for y, c in zip(circuits.variables, circuits.circuits):
    print(y, " -> ".join(map(str, c.vertices + c.vertices[:1])))

###############################################################################
# One criterion per circuit, one capacity row per arc.

p = build_circulation_problem(g, circuits)
for c in p.constraints:
    print(to_source(c.lhs), c.relation.value, c.rhs)

###############################################################################
# The comparison standards are the per-criterion best and worst values over
# the grid.  K = (1, 1, 1) is not jointly attainable.

s = compute_standards(p, resolution=10)
print("K =", s.ideal, " W =", s.anti_ideal)

###############################################################################
# The ratio of distances picks the corner that saturates two circuits.

r = solve(p, s, ScalarizationKind(Method.GAMMA_MIN), resolution=10)
print("gamma:", [dict(x) for x in r.best_points], "value", r.best_value)

###############################################################################
# Distance to the ideal alone prefers a balanced flow.  On the half-step grid
# that is y = (0.5, 0.5, 0.5); a finer grid moves it toward (2/3, 2/3, 1/3).

for res in (2, 10):
    r = solve(p, s, ScalarizationKind(Method.DELTA_MIN), resolution=res)
    print(f"delta at resolution {res}:", [dict(x) for x in r.best_points])

r = solve(p, s, ScalarizationKind(Method.DELTA_MIN), resolution=10, refine_rounds=4)
print("delta after refinement:", {k: round(v, 4) for k, v in r.best_points[0].items()})
