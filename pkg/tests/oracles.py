"""Independent reference computations used only by the tests.

Nothing here calls into the package's solver, pareto or circuits code.
"""

from fractions import Fraction
from itertools import permutations, product


def fraction_grid(resolution, lo=0, hi=1):
    return [Fraction(lo) + (Fraction(hi) - Fraction(lo)) * k / resolution
            for k in range(resolution + 1)]


def example1_feasible(y):
    return y[0] + y[2] <= 1 and y[1] + y[2] <= 1


def example2_feasible(y):
    return y[0] + y[2] == 1 and y[1] + y[2] == 1


def example1_objectives(y):
    return tuple(y)


def example2_objectives(y):
    return (y[0] + y[1] + y[2], 0 * y[0] + 1 * y[1] + 2 * y[2])


def exact_points(feasible, resolution, nvars=3):
    return [y for y in product(fraction_grid(resolution), repeat=nvars) if feasible(y)]


def pairwise_dominates(signs, u, v):
    """u dominates v, with signs +1 for max and -1 for min."""
    not_worse = all(s * a >= s * b for s, a, b in zip(signs, u, v))
    better = any(s * a > s * b for s, a, b in zip(signs, u, v))
    return not_worse and better


def pairwise_front_indices(signs, vectors):
    return [i for i, v in enumerate(vectors)
            if not any(pairwise_dominates(signs, u, v) for u in vectors)]


def brute_force_cycles(vertices, arcs):
    """Every simple cycle as a rotation starting at its smallest vertex."""
    arcset = set(arcs)
    rank = {v: i for i, v in enumerate(vertices)}
    found = set()
    for length in range(1, len(vertices) + 1):
        for seq in permutations(vertices, length):
            if all((seq[i], seq[(i + 1) % length]) in arcset for i in range(length)):
                i = min(range(length), key=lambda j: rank[seq[j]])
                found.add(seq[i:] + seq[:i])
    return found
