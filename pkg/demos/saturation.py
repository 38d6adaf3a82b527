"""
Saturation and the hyperplane recursion
=======================================

For x a linear nonzerodivisor modulo the saturation of I,
reg(I) = max(reg(I + (x)), sat(I)).  Non-saturated ideals make the second
term matter.
"""

from sareg import HomogeneousIdeal, Ring, regularity, saturate, saturation_degree
from sareg.ideal import hilbert_function

R = Ring(3)
I = HomogeneousIdeal.parse(R, "x0^2", "x0*x1^5", "x0*x2^5")
S = saturate(I)
print("I^sat =", S)

# the Hilbert functions of I and I^sat part ways below degree 10
for j in range(12):
    print(j, hilbert_function(I, j), hilbert_function(S, j))
print("sat(I) =", saturation_degree(I))
print(regularity(I, "both"))

# the same two generators behave differently in two and three variables
P1 = Ring(2)
J = HomogeneousIdeal.parse(P1, "x0^2", "x0*x1")
print("in P^1:", saturation_degree(J), " in P^2:", saturation_degree(HomogeneousIdeal.parse(R, "x0^2", "x0*x1")))
