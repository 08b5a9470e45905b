"""
Basins of attraction
====================

Render which root each start point converges to, write a PPM image and
count pixels per basin.
"""
from laspa import RasterConfig, RootSet, basin_stats, convergence_radius, from_roots, render_basins, write_ppm

roots = [1, 1j, -1, -1j]
p = from_roots(roots)
disks = [convergence_radius(p, r) for r in roots]

cfg = RasterConfig(center=0, side=4.0, px=256, max_iters=64)
img = render_basins(RootSet(roots), disks, cfg, workers=4)
write_ppm(img, len(roots), "z4_basins.ppm")
print(basin_stats(img, len(roots)))
print("mean iterations:", img.iters.mean())
