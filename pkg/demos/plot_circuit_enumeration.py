"""
Enumerating simple circuits
===========================

Circuits come back in a canonical order: shorter first, then by the vertex
sequence rotated to start at its smallest vertex.
"""

import itertools

from mcstandards import Digraph, enumerate_simple_circuits

k4 = Digraph.from_arcs([(a, b) for a, b in itertools.permutations(range(1, 5), 2)])
cs = enumerate_simple_circuits(k4)
print(len(cs), "circuits in the complete digraph on 4 vertices")
for y, c in zip(cs.variables, cs.circuits):
    print(f"{y:>4}", c.vertices)
