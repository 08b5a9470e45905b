"""Laguerre's iteration and guaranteed-convergence disks around simple roots.

Radius construction
-------------------
Let w = z - rho for a simple root rho of a degree-n polynomial, and let
every other root lie at distance >= d from rho.  Splitting the root sums
S1 = 1/w + A and S2 = 1/w**2 + B, the Laguerre update can be written as

    z' - rho = w * (A w + (n-1)(s - 1)) / (1 + A w + (n-1) s),
    s = sqrt(1 + eps),  eps = (-2 A w + (n B - A**2) w**2) / (n - 1).

With u = |w| / (d - |w|) we have |A w| <= (n-1) u, |B w**2| <= (n-1) u**2
and |eps| <= E = 2u + (2n-1) u**2.  If

    (1)  u + (n-2) / (2(n-1)) < sqrt(1 - E)          (contraction)
    (2)  asin((n-1) u) + asin(E) / 2 < pi / 2        (correct sign is chosen)

then |z' - rho| < |z - rho|, and since every bound is increasing in |w| the
iterates stay in the disk and converge.  The largest admissible u gives the
factor ``u / (1 + u)`` returned by :func:`radius_factor`; the disk radius is
that factor times d.

The distance d is not taken from computed roots.  For the shifted
polynomial P(w) = p(rho + w) = sum b_k w**k, Rouche's theorem applied to
``|b_1| x > |b_0| + sum_{k>=2} |b_k| x**k`` isolates exactly one root in
|w| <= x_lo and none in x_lo < |w| < x_hi, which bounds both the error of the
supplied root and the distance to every other root.
"""
from __future__ import annotations

import cmath
import enum
import math
import sys
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from scipy.optimize import brentq

from .errors import DegreeTooLow, NotASimpleRoot, SingularStep
from .polynomial import Polynomial, eval_triple, taylor_shift

EPS = sys.float_info.epsilon

# relative shrink applied by the strict "inside a disk" test
DISK_MARGIN = 1e-12


@dataclass(frozen=True)
class ConvergenceDisk:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"disk radius must be positive, got {self.radius}")

    def contains(self, z) -> bool:
        return abs(z - self.center) < self.radius * (1 - DISK_MARGIN)


class StopReason(enum.Enum):
    ResidualBelowTolerance = "ResidualBelowTolerance"
    StepBelowTolerance = "StepBelowTolerance"
    EnteredCertifiedDisk = "EnteredCertifiedDisk"
    MaxIterations = "MaxIterations"
    SingularStep = "SingularStep"


@dataclass(frozen=True)
class IterationOptions:
    max_iters: int = 80
    residual_tol: float = 1e-13
    step_tol: float = 1e-14

    def __post_init__(self):
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not (self.residual_tol > 0 and self.step_tol > 0):
            raise ValueError("tolerances must be positive")


@dataclass(frozen=True)
class IterationTrace:
    iterates: tuple[complex, ...]
    stop_reason: StopReason
    disk_index: Optional[int] = field(default=None)

    @property
    def final(self) -> complex:
        return self.iterates[-1]

    @property
    def steps(self) -> int:
        return len(self.iterates) - 1


def pick_denominator(g: complex, sq: complex) -> complex:
    """Larger-magnitude candidate of g +/- sq; exact ties go to g + sq."""
    dp = g + sq
    dm = g - sq
    if abs(dm) > abs(dp):
        return dm
    return dp


def laguerre_step(p: Polynomial, z) -> complex:
    """One Laguerre update z - n p / (p' +/- sqrt((n-1)((n-1) p'^2 - n p p''))).

    Returns ``z`` unchanged when p(z) vanishes to within one ulp of the
    magnitude scale of p at z.
    """
    n = p.degree
    if n < 2:
        raise DegreeTooLow("Laguerre step needs degree >= 2")
    z = complex(z)
    v, d1, d2 = eval_triple(p, z)
    if v == 0 or abs(v) <= math.ulp(p.scale(z)):
        return z
    sq = cmath.sqrt((n - 1) * ((n - 1) * d1 * d1 - n * v * d2))
    den = pick_denominator(d1, sq)
    if den == 0:
        raise SingularStep(f"both Laguerre denominators vanish at {z}")
    return z - n * v / den


@lru_cache(maxsize=None)
def radius_factor(n: int) -> float:
    """Ratio radius / (distance to the nearest other root) for degree n."""
    if n < 2:
        raise DegreeTooLow("radius factor needs degree >= 2")
    kappa = (n - 2) / (2 * (n - 1))
    # (1) squared: 2n u^2 + 2(kappa+1) u + kappa^2 - 1 = 0
    b = kappa + 1
    u_contract = (-b + math.sqrt(b * b - 2 * n * (kappa * kappa - 1))) / (2 * n)

    def angle_gap(u):
        e = min(1.0, 2 * u + (2 * n - 1) * u * u)
        return math.asin(min(1.0, (n - 1) * u)) + math.asin(e) / 2 - math.pi / 2

    u_angle = brentq(angle_gap, 0.0, 1.0 / (n - 1), xtol=1e-300, rtol=4 * EPS)
    u = min(u_contract, u_angle)
    return u / (1 + u)


def _isolation(p: Polynomial, root: complex) -> tuple[float, float]:
    """Rouche annulus (x_lo, x_hi) around ``root``: one root within x_lo, none up to x_hi."""
    n = p.degree
    b = [abs(c) for c in taylor_shift(p, root).coeffs]
    # forward error of the Horner value b[0]
    r = abs(root)
    slack = 4 * n * EPS * sum(abs(c) * r**k for k, c in enumerate(p.coeffs))
    b0 = b[0] + slack
    b1 = b[1]
    if b1 == 0:
        raise NotASimpleRoot(f"derivative vanishes at {root}")

    def f(x):
        tail = 0.0
        for c in reversed(b[2:]):
            tail = (tail + c) * x
        return b1 * x - b0 - tail * x

    def fprime(x):
        acc = 0.0
        for k in range(n, 1, -1):
            acc = acc * x + k * b[k]
        return b1 - acc * x

    hi = 1.0
    while fprime(hi) > 0:
        hi *= 2
    x_peak = brentq(fprime, 0.0, hi)
    if f(x_peak) <= 0:
        raise NotASimpleRoot(f"cannot isolate a simple root at {root}")
    x_lo = brentq(f, 0.0, x_peak, xtol=1e-300)
    top = 2 * x_peak
    while f(top) > 0:
        top *= 2
    x_hi = brentq(f, x_peak, top)
    return x_lo, x_hi


def _check_theorem_degree(p: Polynomial):
    if p.degree < 4:
        raise DegreeTooLow("degree must exceed 3")


def convergence_radius(p: Polynomial, root) -> ConvergenceDisk:
    """Disk around a simple root from which Laguerre's iteration converges to it.

    Raises
    ------
    DegreeTooLow
        if deg p < 4.
    NotASimpleRoot
        if p'(root) is negligible against the scale of p, or the root cannot
        be isolated from the others.
    """
    _check_theorem_degree(p)
    root = complex(root)
    _, d1, _ = eval_triple(p, root)
    if abs(d1) / p.scale(root) < 1e-8:
        raise NotASimpleRoot(f"|p'({root})| is negligible; not a simple root")
    x_lo, x_hi = _isolation(p, root)
    radius = radius_factor(p.degree) * (x_hi - x_lo) - x_lo
    if radius <= 0:
        raise NotASimpleRoot(f"root estimate {root} too inaccurate to certify")
    return ConvergenceDisk(root, radius)


def root_separation_bound(p: Polynomial) -> float:
    """Lower bound on the minimal distance between distinct roots of p.

    Mahler's discriminant inequality
        sep > sqrt(3 |D|) * n**(-(n+2)/2) * M(p)**(-(n-1)),
    with the Mahler measure bounded by the coefficient 2-norm.  The
    discriminant is evaluated exactly over the Gaussian rationals.
    """
    import sympy
    from sympy.polys.domains import QQ_I

    n = p.degree
    x = sympy.Symbol("x")
    exact = [sympy.Rational(c.real) + sympy.I * sympy.Rational(c.imag) for c in reversed(p.coeffs)]
    disc = sympy.Poly(exact, x, domain=QQ_I).discriminant()
    re, im = (sympy.Rational(t) for t in sympy.expand(disc).as_real_imag())
    mod2 = re * re + im * im
    if mod2 == 0:
        raise NotASimpleRoot("discriminant vanishes; p has a multiple root")
    log_abs_disc = 0.5 * (math.log(mod2.p) - math.log(mod2.q))
    log_norm = 0.5 * math.log(sum(abs(c) ** 2 for c in p.coeffs))
    log_sep = 0.5 * (math.log(3) + log_abs_disc) - 0.5 * (n + 2) * math.log(n) - (n - 1) * log_norm
    return math.exp(log_sep)


def a_priori_radius_bound(p: Polynomial) -> float:
    """Common lower bound for the convergence radii of all roots of p.

    Requires every root to be simple.  Uses only the coefficients: the
    radius factor for deg p times :func:`root_separation_bound`.
    """
    _check_theorem_degree(p)
    return radius_factor(p.degree) * root_separation_bound(p)


def iterate_to_root(
    p: Polynomial,
    z0,
    opts: Optional[IterationOptions] = None,
    disks: Optional[Sequence[ConvergenceDisk]] = None,
) -> IterationTrace:
    """Run Laguerre steps from z0 until one of the stopping rules fires."""
    opts = opts or IterationOptions()
    disks = disks or ()
    z = complex(z0)
    iterates = [z]
    for k in range(opts.max_iters + 1):
        for i, disk in enumerate(disks):
            if disk.contains(z):
                return IterationTrace(tuple(iterates), StopReason.EnteredCertifiedDisk, i)
        if abs(p(z)) <= opts.residual_tol * p.scale(z):
            return IterationTrace(tuple(iterates), StopReason.ResidualBelowTolerance)
        if k == opts.max_iters:
            break
        try:
            z_next = laguerre_step(p, z)
        except SingularStep:
            return IterationTrace(tuple(iterates), StopReason.SingularStep)
        iterates.append(z_next)
        if abs(z_next - z) <= opts.step_tol * max(1.0, abs(z)):
            return IterationTrace(tuple(iterates), StopReason.StepBelowTolerance)
        z = z_next
    return IterationTrace(tuple(iterates), StopReason.MaxIterations)
