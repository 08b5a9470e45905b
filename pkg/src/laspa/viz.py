"""Basin-of-attraction rasters for the root-form Laguerre iteration.

Each pixel center of a square in the complex plane is iterated until it
enters the convergence disk of a root; the pixel records which root and how
many steps it took.  Images are emitted as binary PPM (P6).
"""
from __future__ import annotations

import colorsys
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import BinaryIO, NamedTuple, Optional, Sequence, Union

import numpy as np

from .laguerre import DISK_MARGIN, ConvergenceDisk
from .roots_iteration import RootSet

NONE = -1
PROXIMITY_TOL = 1e-9


@dataclass(frozen=True)
class RasterConfig:
    center: complex = 0j
    side: float = 4.0
    px: int = 256
    max_iters: int = 64

    def __post_init__(self):
        if not self.side > 0:
            raise ValueError("side must be positive")
        if self.px < 1:
            raise ValueError("px must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        object.__setattr__(self, "center", complex(self.center))


class BasinPixel(NamedTuple):
    root_index: Optional[int]  # None when the start never reached a disk
    iters: int


@dataclass(frozen=True, eq=False)
class BasinImage:
    """Row-major basin grid; row 0 is the top edge (largest imaginary part).

    ``root_index`` holds -1 for unconverged pixels.
    """

    config: RasterConfig
    root_index: np.ndarray
    iters: np.ndarray

    @property
    def pixels(self) -> list[BasinPixel]:
        return [
            BasinPixel(None if k == NONE else int(k), int(it))
            for k, it in zip(self.root_index.ravel(), self.iters.ravel())
        ]

    def pixel(self, row: int, col: int) -> BasinPixel:
        k = int(self.root_index[row, col])
        return BasinPixel(None if k == NONE else k, int(self.iters[row, col]))

    def __eq__(self, other):
        if not isinstance(other, BasinImage):
            return NotImplemented
        return (
            self.config == other.config
            and np.array_equal(self.root_index, other.root_index)
            and np.array_equal(self.iters, other.iters)
        )


def _grid_axes(cfg: RasterConfig) -> tuple[np.ndarray, np.ndarray]:
    step = cfg.side / cfg.px
    half = cfg.side / 2
    idx = np.arange(cfg.px) + 0.5
    re = cfg.center.real - half + idx * step
    im = cfg.center.imag + half - idx * step
    return re, im


def _grid_array(cfg: RasterConfig) -> np.ndarray:
    re, im = _grid_axes(cfg)
    return (re[None, :] + 1j * im[:, None]).ravel()


def pixel_grid(cfg: RasterConfig) -> list[complex]:
    """Row-major pixel centers of the square described by ``cfg``."""
    return [complex(z) for z in _grid_array(cfg)]


def _iterate_block(roots: np.ndarray, disks, z0: np.ndarray, max_iters: int):
    """Vectorised pixel iteration; every element is independent of the others.

    Returns (root index or -1, iteration count, final iterate) per element.
    """
    n = len(roots)
    z = z0.astype(np.complex128, copy=True)
    index = np.full(z.shape, NONE, dtype=np.int64)
    iters = np.full(z.shape, max_iters, dtype=np.int64)
    active = np.ones(z.shape, dtype=bool)
    if disks:
        centers = [d.center for d in disks]
        limits = [d.radius * (1 - DISK_MARGIN) for d in disks]
    else:
        centers = list(roots)
        limits = [PROXIMITY_TOL * max(1.0, abs(r)) for r in roots]

    with np.errstate(all="ignore"):
        for k in range(max_iters + 1):
            for i, (c, lim) in enumerate(zip(centers, limits)):
                hit = active & (np.abs(z - c) < lim)
                index[hit] = i
                iters[hit] = k
                active &= ~hit
            if k == max_iters or not active.any():
                break
            za = z[active]
            s1 = np.zeros_like(za)
            s2 = np.zeros_like(za)
            for r in roots:
                inv = 1 / (za - r)
                s1 += inv
                s2 += inv * inv
            sq = np.sqrt((n - 1) * (n * s2 - s1 * s1))
            dp = s1 + sq
            dm = s1 - sq
            den = np.where(np.abs(dm) > np.abs(dp), dm, dp)
            z_new = za - n / den
            # singular steps and blow-ups end as unconverged pixels
            bad = (den == 0) | ~np.isfinite(z_new)
            where = np.flatnonzero(active)
            iters[where[bad]] = k
            active[where[bad]] = False
            z[where[~bad]] = z_new[~bad]
    return index, iters, z


def _check_disks(rs: RootSet, disks):
    if disks and len(disks) != len(rs):
        raise ValueError("need exactly one disk per root")


def iterate_pixel(
    rs: RootSet,
    disks: Optional[Sequence[ConvergenceDisk]],
    z0,
    max_iters: int,
) -> BasinPixel:
    """Iterate one start point; stop on the first disk (or root proximity) hit."""
    _check_disks(rs, disks)
    index, iters, _ = _iterate_block(np.asarray(rs.roots), disks, np.array([complex(z0)]), max_iters)
    k = int(index[0])
    return BasinPixel(None if k == NONE else k, int(iters[0]))


def render_basins(
    rs: RootSet,
    disks: Optional[Sequence[ConvergenceDisk]],
    cfg: RasterConfig,
    workers: int = 1,
    chunk_rows: int = 16,
) -> BasinImage:
    """Render the basin image; ``workers > 1`` splits rows across threads.

    Each chunk writes only its own slice, so the result is independent of
    the schedule.
    """
    _check_disks(rs, disks)
    roots = np.asarray(rs.roots)
    grid = _grid_array(cfg).reshape(cfg.px, cfg.px)
    index = np.empty((cfg.px, cfg.px), dtype=np.int64)
    iters = np.empty((cfg.px, cfg.px), dtype=np.int64)

    def work(row0):
        rows = slice(row0, min(row0 + chunk_rows, cfg.px))
        i, it, _ = _iterate_block(roots, disks, grid[rows].ravel(), cfg.max_iters)
        index[rows] = i.reshape(-1, cfg.px)
        iters[rows] = it.reshape(-1, cfg.px)

    starts = range(0, cfg.px, chunk_rows)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(work, starts))
    else:
        for row0 in starts:
            work(row0)
    return BasinImage(cfg, index, iters)


def colorize(pixel: BasinPixel, n: int, max_iters: int) -> tuple[int, int, int]:
    """Hue by root, brightness by iteration count; unconverged pixels are black."""
    if pixel.root_index is None:
        return (0, 0, 0)
    value = 0.35 + 0.65 * (1 - pixel.iters / max_iters)
    rgb = colorsys.hsv_to_rgb(pixel.root_index / n, 0.9, value)
    return tuple(math.floor(c * 255) for c in rgb)


def _palette(n: int, max_iters: int) -> np.ndarray:
    # row n is the unconverged colour so index -1 maps onto it
    table = np.zeros((n + 1, max_iters + 1, 3), dtype=np.uint8)
    for k in range(n):
        for it in range(max_iters + 1):
            table[k, it] = colorize(BasinPixel(k, it), n, max_iters)
    return table


def ppm_bytes(img: BasinImage, n: int) -> bytes:
    px = img.config.px
    table = _palette(n, img.config.max_iters)
    rgb = table[img.root_index.ravel(), img.iters.ravel()]
    return f"P6\n{px} {px}\n255\n".encode("ascii") + rgb.tobytes()


def write_ppm(img: BasinImage, n: int, out: Union[str, os.PathLike, BinaryIO, None] = None) -> bytes:
    """Binary PPM of the colourised image; also written to ``out`` if given."""
    data = ppm_bytes(img, n)
    if out is None:
        return data
    if hasattr(out, "write"):
        out.write(data)
    else:
        with open(out, "wb") as fh:
            fh.write(data)
    return data


def basin_stats(img: BasinImage, n: int) -> str:
    """Sidecar text: one ``root_index count`` line per root, then ``none count``."""
    counts = np.bincount(img.root_index.ravel() + 1, minlength=n + 1)
    lines = [f"{k} {counts[k + 1]}" for k in range(n)]
    lines.append(f"none {counts[0]}")
    return "\n".join(lines) + "\n"
