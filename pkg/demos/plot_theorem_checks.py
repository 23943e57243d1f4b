"""
Checking Pareto optimality on random problems
=============================================

Every scalarized optimum should be non-dominated.  We draw small finite
problems, solve them every way the library offers, and compare against an
exhaustive dominance filter.
"""

from collections import Counter

from mcstandards.theorems import check_theorems
from mcstandards.corpus import random_corpus

tally = Counter()
for p in random_corpus(seed=7, count=40):
    for res in check_theorems(p, resolution=1):
        tally[(res.theorem, res.check, res.passed)] += 1

for (theorem, check, passed), n in sorted(tally.items()):
    print(f"theorem {theorem} {check:<40} {'pass' if passed else 'FAIL'} x{n}")
