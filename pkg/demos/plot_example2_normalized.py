"""
Mixed directions and normalization
==================================

Total circulation is maximized while a weighted cost is minimized.  The two
criteria live on different scales, so each is mapped to [0, 1] with its
ideal and anti-ideal values before distances are taken.
"""

from mcstandards import (Method, ScalarizationKind, compute_standards, normalize,
                         solve_normalized)
from mcstandards.instances import example2

p = example2()
s = compute_standards(p, resolution=10)
print("K =", s.ideal, " W =", s.anti_ideal)

###############################################################################
# After normalization the ideal sits at 1 for maximized criteria and at 0 for
# minimized ones.

norm = normalize(p, s)
print("normalized K =", norm.normalized_standards.ideal)

for m in Method:
    r = solve_normalized(p, s, ScalarizationKind(m), resolution=10)
    print(f"{m.value:>5}:", [dict(x) for x in r.best_points], "F =", r.objective_vectors)
