"""
Laguerre's iteration and convergence disks
==========================================

Every simple root of a polynomial of degree at least 4 gets a disk inside
which Laguerre's iteration is guaranteed to converge to that root.
"""
import math

from laspa import Polynomial, a_priori_radius_bound, convergence_radius, iterate_to_root

p = Polynomial([-1, 0, 0, 0, 1])  # z^4 - 1

trace = iterate_to_root(p, 0.8)
for k, z in enumerate(trace.iterates):
    print(f"step {k}: z = {z.real:.17f}   error {abs(z - 1):.3e}")
print("stopped because:", trace.stop_reason.name)

# convergence is cubic; the error exponent per step sits close to 3
errs = [abs(z - 1) for z in trace.iterates if 1e-14 < abs(z - 1) < 1e-2]
print("log ratio of last errors:", math.log(errs[-1]) / math.log(errs[-2]))

for root in (1, 1j, -1, -1j):
    disk = convergence_radius(p, root)
    print(f"root {root}: radius {disk.radius:.6f}")

# a radius valid for every root, computed from the coefficients alone
print("a priori bound:", a_priori_radius_bound(p))
