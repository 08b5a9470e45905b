"""
Seeding with sums of powers
===========================

Shifted power sums point at the root nearest to the shift.  A few shifts
move any start into one of the convergence disks.
"""
from laspa import SpaOptions, convergence_radius, from_roots, nearest_root_estimate, spa_seed

roots = [0.5 + 0.5j, -1.2, 2 - 1j, 0.3 - 2j, -1 + 1.5j]
p = from_roots(roots)

# one estimate from a point near the first root
print("estimate from 0.4+0.3j:", nearest_root_estimate(p, 0.4 + 0.3j, 8))

disks = [convergence_radius(p, r) for r in roots]
for start in (0j, 3 + 3j, -4j):
    point, idx = spa_seed(p, disks, SpaOptions(order=8), start=start)
    print(f"start {start}: landed at {point:.6f} in the disk of {roots[idx]}")
