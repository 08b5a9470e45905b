"""
The root form of the step
=========================

When the roots are known, the Laguerre step can be written with the sums
S1 = sum 1/(z - r) and S2 = sum 1/(z - r)^2 instead of p, p' and p''.  Both
forms give the same step.
"""
from laspa import RootSet, from_roots, laguerre_step, laguerre_step_from_roots, sums_at

rs = RootSet([1, -0.5 + 1j, -0.5 - 1j, 2j, -1.5])
z = 0.7 + 0.2j

print("S1, S2:", sums_at(rs, z))
print("root form:      ", laguerre_step_from_roots(rs, z))
print("polynomial form:", laguerre_step(from_roots(rs.roots), z))
