"""
Polynomial utilities
====================

Evaluation, deflation and reciprocal power sums on a small quartic.
Coefficients are stored constant term first.
"""
from laspa import Polynomial, deflate, eval_triple, from_roots, reciprocal_power_sums

# (z-1)(z-2)(z-3)(z-4)
p = Polynomial([24, -50, 35, -10, 1])
print("p from roots equals p:", from_roots([1, 2, 3, 4]) == p)

# value, first and second derivative in one Horner pass
print("p, p', p'' at 2.5:", eval_triple(p, 2.5))

# removing the root 4 leaves the cubic (z-1)(z-2)(z-3)
q = deflate(p, 4)
print("deflated coefficients:", [c.real for c in q.coeffs])

# sum of rho**-m over the roots, via Newton's identities
sums = reciprocal_power_sums(p, 3)
for m in range(1, 4):
    brute = sum(r ** -m for r in (1, 2, 3, 4))
    print(f"s_{m} = {sums[m].real:.12f}   brute force {brute:.12f}")
