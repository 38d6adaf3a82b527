"""
Lines meeting a common line
===========================

d general lines of P^3 that all meet the line x2 = x3 = 0 give an
arrangement whose ideal needs a generator of degree d.  The bound
reg <= d is attained.
"""

from sareg import arrangement_ideal, format_arrangement, minimal_resolution, regularity, sharp_example

for d in range(2, 6):
    X = sharp_example(d, seed=0)
    I = arrangement_ideal(X)
    table = minimal_resolution(I)
    print(f"d = {d}: reg = {regularity(I).value}, generators of degree d: {table[0, d]}")

# the arrangement itself, in the file format the CLI reads
print()
print(format_arrangement(sharp_example(3)))

# Betti table for d = 4
print(minimal_resolution(arrangement_ideal(sharp_example(4))))
