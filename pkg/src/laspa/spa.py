"""Sums-of-powers seeding.

For roots rho_j and a shift point a, the power sums
s_m = sum_j (rho_j - a)**(-m) are dominated by the root nearest to a as m
grows, so s_{M-1} / s_M tends to rho_near - a.  Repeatedly moving the shift
to that estimate drives it into the convergence disk of a root.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateSums, DegreeTooLow, RootAtShiftPoint, SeedingFailed
from .laguerre import ConvergenceDisk
from .polynomial import Polynomial, PowerSums, reciprocal_power_sums, taylor_shift

# |s_m| this far below the dominant growth rate means the leading terms cancelled
CANCELLATION_TOL = 1e-10


@dataclass(frozen=True)
class SpaOptions:
    order: int = 8
    max_shifts: int = 40
    perturbation: float = 1e-3

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be >= 2")
        if self.max_shifts < 1:
            raise ValueError("max_shifts must be >= 1")


def shifted_power_sums(p: Polynomial, a, order: int) -> PowerSums:
    """s_m = sum_j (rho_j - a)**(-m) for m = 1..order."""
    a = complex(a)
    sums = reciprocal_power_sums(taylor_shift(p, a), order)
    return PowerSums(sums.sums, a, order)


def _check_dominance(sums: PowerSums):
    s = sums.sums
    m_top = sums.order
    for m in (m_top - 1, m_top):
        if not cmath.isfinite(s[m - 1]):
            raise DegenerateSums(f"s_{m} is not finite")
        if abs(s[m - 1]) < 1e-300:
            raise DegenerateSums(f"s_{m} vanishes")
    # log of max_m |s_m|**(1/m), the growth rate a dominant root would give
    log_rate = max(math.log(abs(v)) / m for m, v in enumerate(s, 1) if v != 0)
    log_tol = math.log(CANCELLATION_TOL)
    for m in (m_top - 1, m_top):
        if math.log(abs(s[m - 1])) < log_tol + m * log_rate:
            raise DegenerateSums(f"s_{m} cancels; no dominant nearest root")


def nearest_root_estimate(p: Polynomial, a, order: int) -> complex:
    """Estimate of the root of p nearest to ``a``: a + s_{M-1} / s_M.

    Raises RootAtShiftPoint if ``a`` is a root and DegenerateSums if the
    sums cancel (several roots at nearly the same distance from ``a``).
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    sums = shifted_power_sums(p, a, order)
    _check_dominance(sums)
    est = sums.shift + sums[order - 1] / sums[order]
    if not cmath.isfinite(est):
        raise DegenerateSums("estimate is not finite")
    return est


# golden angle; successive perturbation directions never repeat an axis
_GOLDEN_ANGLE = math.pi * (3 - math.sqrt(5))


def perturb(a: complex, size: float, attempt: int = 0) -> complex:
    """Deterministic nudge of a shift point, rotating direction per attempt.

    The first direction (1 rad) is off every mirror axis through the origin
    at multiples of pi/12, so symmetric root sets cannot trap the shift.
    """
    direction = cmath.exp(1j * (1.0 + attempt * _GOLDEN_ANGLE))
    return a + size * direction * max(1.0, abs(a))


def spa_seed(
    p: Polynomial,
    disks: Sequence[ConvergenceDisk],
    opts: SpaOptions | None = None,
    start=0j,
) -> tuple[complex, int]:
    """Shift until the estimate lands strictly inside one of ``disks``.

    Returns the point and the index of the disk containing it.  Degenerate
    shift points are moved deterministically and the shift is retried.
    """
    opts = opts or SpaOptions()
    if not disks:
        raise ValueError("need at least one disk")
    if p.degree < 4:
        raise DegreeTooLow("degree must exceed 3")
    a = complex(start)
    attempts = 0
    for shift in range(opts.max_shifts + 1):
        for i, disk in enumerate(disks):
            if disk.contains(a):
                return a, i
        if shift == opts.max_shifts:
            break
        try:
            a = nearest_root_estimate(p, a, opts.order)
        except (DegenerateSums, RootAtShiftPoint):
            a = perturb(a, opts.perturbation, attempts)
            attempts += 1
    raise SeedingFailed(f"no disk reached after {opts.max_shifts} shifts", last=a)
