"""
Two skew lines in P^3
=====================

The smallest arrangement with an interesting resolution.  We intersect the
ideals of two disjoint lines, resolve, and read the regularity off the
Betti table.
"""

from sareg import HomogeneousIdeal, Ring, intersect, minimal_resolution, regularity, resolve

R = Ring(4)
L1 = HomogeneousIdeal.parse(R, "x0", "x1")
L2 = HomogeneousIdeal.parse(R, "x2", "x3")

# the intersection is generated by the four products x_i x_j
I = intersect(L1, L2)
print("I =", I)

# Betti table: rows are j - i, columns the homological degree i
print(minimal_resolution(I))

# the differentials compose to zero and have no constant entries
res = resolve(I)
for i in range(1, len(res.maps)):
    assert res.maps[i - 1].compose(res.maps[i]).is_zero()
print("ranks:", res.ranks())

# both algorithms agree: reg = 2 = number of lines
print(regularity(I, "both"))
