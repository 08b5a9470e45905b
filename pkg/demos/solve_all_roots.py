"""
Certified roots of a polynomial
===============================

find_all_roots seeds each root with power sums, converges with Laguerre
steps and deflation, then certifies every root against the original
polynomial.
"""
import numpy as np

from laspa import Polynomial, find_all_roots

rng = np.random.default_rng(7)
coeffs = rng.normal(size=9) + 1j * rng.normal(size=9)
p = Polynomial(coeffs)

for est in find_all_roots(p):
    print(f"{est.value:.10f}  residual {est.residual:.1e}  certified {est.certified}  radius {est.disk.radius:.2e}")

# numpy's eigenvalue solver agrees; it takes coefficients highest power first
print(np.sort_complex(np.roots(coeffs[::-1])))
