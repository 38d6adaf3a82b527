"""
The bound on random arrangements
================================

Draw random arrangements of d subspaces of P^n with mixed codimensions and
compare the regularity with d.  A histogram of reg - d shows how far from
sharp random arrangements usually are.
"""

import collections

from sareg import arrangement_ideal, random_arrangement, regularity
from sareg.harness import SuiteConfig, draw_arrangement

cfg = SuiteConfig(n_values=[2, 3, 4], d_values=[2, 3, 4])
gap = collections.Counter()
for seed in range(40):
    X = draw_arrangement(cfg, seed)
    r = regularity(arrangement_ideal(X), "both", seed=seed).value
    assert r <= X.d
    gap[X.d - r] += 1

print("d - reg : count")
for k in sorted(gap):
    print(f"{k:7d} : {'#' * gap[k]}")

# codimension one everywhere: X is a union of hyperplanes, I is principal of degree d
X = random_arrangement(3, 4, [1, 1, 1, 1], seed=2)
print("four planes:", regularity(arrangement_ideal(X)).value)
