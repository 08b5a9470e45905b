"""LaSPA: SPA seeding plus Laguerre iteration, with per-root certificates."""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Optional

from .errors import DegenerateSums, NotASimpleRoot, RootAtShiftPoint, SeedingFailed, SingularStep
from .laguerre import (
    ConvergenceDisk,
    IterationOptions,
    StopReason,
    convergence_radius,
    iterate_to_root,
    laguerre_step,
)
from .polynomial import Polynomial, deflate
from .spa import SpaOptions, nearest_root_estimate, perturb, spa_seed

CERTIFY_RESIDUAL = 1e-10
# relative shift below which the SPA approach hands over to Laguerre
SPA_HANDOVER = 1e-4
MAX_RESTARTS = 8


@dataclass(frozen=True)
class RootEstimate:
    value: complex
    residual: float
    certified: bool = False
    disk: Optional[ConvergenceDisk] = None
    reason: Optional[str] = None  # why certification was refused

    def __post_init__(self):
        if self.residual < 0:
            raise ValueError("residual must be non-negative")
        if self.certified and (self.disk is None or abs(self.value - self.disk.center) > self.disk.radius):
            raise ValueError("certified estimates must lie in their disk")


@dataclass(frozen=True)
class SolveConfig:
    iteration: IterationOptions = field(default_factory=IterationOptions)
    spa: SpaOptions = field(default_factory=SpaOptions)
    polish_steps: int = 2

    def __post_init__(self):
        if self.polish_steps < 0:
            raise ValueError("polish_steps must be >= 0")


def certify_root(p: Polynomial, estimate) -> RootEstimate:
    """Refine ``estimate`` by one Laguerre step and try to certify it on p.

    Never raises on a failed check; the returned estimate is uncertified and
    ``reason`` names the failing check.
    """
    z = complex(estimate)
    if p.degree < 4:
        return RootEstimate(z, p.residual(z), False, None, "DegreeTooLow")
    try:
        z = laguerre_step(p, z)
    except SingularStep:
        pass
    residual = p.residual(z)
    if residual >= CERTIFY_RESIDUAL:
        return RootEstimate(z, residual, False, None, "ResidualTooLarge")
    try:
        disk = convergence_radius(p, z)
    except NotASimpleRoot as exc:
        return RootEstimate(z, residual, False, None, f"NotASimpleRoot: {exc}")
    return RootEstimate(z, residual, True, disk)


def _quadratic_roots(q: Polynomial) -> list[complex]:
    c, b, a = q.coeffs
    disc = cmath.sqrt(b * b - 4 * a * c)
    # take the sign that avoids cancellation in b + sqrt
    if (b.conjugate() * disc).real < 0:
        disc = -disc
    t = -(b + disc) / 2
    if t == 0:
        return [0j, 0j]
    return [t / a, c / t]


def _converge(q: Polynomial, z0: complex, opts: IterationOptions) -> complex:
    """iterate_to_root with deterministic restarts from singular or stalled runs."""
    z = z0
    for _ in range(MAX_RESTARTS):
        trace = iterate_to_root(q, z, opts)
        if trace.stop_reason not in (StopReason.SingularStep, StopReason.MaxIterations):
            return trace.final
        z = trace.final + (1e-3 + 1e-3j) * max(1.0, abs(trace.final))
    return trace.final


def _spa_approach(q: Polynomial, start: complex, opts: SpaOptions) -> complex:
    """Shift toward the root of q nearest to ``start`` until the shifts stall."""
    a = start
    attempts = 0
    for _ in range(opts.max_shifts):
        try:
            est = nearest_root_estimate(q, a, opts.order)
        except RootAtShiftPoint:
            return a
        except DegenerateSums:
            a = perturb(a, opts.perturbation, attempts)
            attempts += 1
            continue
        done = abs(est - a) <= SPA_HANDOVER * max(1.0, abs(a))
        a = est
        if done:
            break
    return a


def _polish(p: Polynomial, z: complex, steps: int) -> complex:
    for _ in range(steps):
        try:
            z = laguerre_step(p, z)
        except SingularStep:
            break
    return z


def _finish(p: Polynomial, z: complex, seed: complex, cfg: SolveConfig, found: list) -> RootEstimate:
    """Polish z against p, certify it, and make sure ``seed`` lies in its disk.

    A certified root is one that Laguerre's iteration on p reaches from a seed
    strictly inside the root's convergence disk.
    """
    cert = certify_root(p, _polish(p, z, cfg.polish_steps))
    if not cert.certified:
        return cert
    disk = cert.disk
    if not disk.contains(seed):
        try:
            seed, _ = spa_seed(p, [disk], cfg.spa, start=seed)
        except SeedingFailed as exc:
            raise SeedingFailed(str(exc), last=exc.last, partial=found) from exc
    trace = iterate_to_root(p, seed, cfg.iteration)
    if abs(trace.final - disk.center) > disk.radius:
        return RootEstimate(cert.value, cert.residual, False, None, "SeedLeftDisk")
    return cert


def find_all_roots(p: Polynomial, cfg: Optional[SolveConfig] = None) -> list[RootEstimate]:
    """All deg(p) roots, sorted by (re, im).

    Degree >= 4 stages are seeded by the SPA on the current deflated
    polynomial; the cubic, quadratic and linear tails are solved by plain
    iteration or closed forms.  Every root is polished against the original
    p, and certified only if p itself has degree > 3.
    """
    cfg = cfg or SolveConfig()
    n = p.degree
    found: list[RootEstimate] = []

    if n <= 2:
        roots = [-p.coeffs[0] / p.coeffs[1]] if n == 1 else _quadratic_roots(p)
        if n == 2:
            roots = [_polish(p, r, cfg.polish_steps) for r in roots]
        found = [RootEstimate(r, p.residual(r), False, None, "DegreeTooLow") for r in roots]
        return sorted(found, key=_order)

    q = p
    while q.degree >= 4:
        seed = _spa_approach(q, 0j, cfg.spa)
        z = _converge(q, seed, cfg.iteration)
        est = _finish(p, z, seed, cfg, found)
        found.append(est)
        q = deflate(q, est.value)

    z = _converge(q, 0j, cfg.iteration)
    tail = [z]
    r = deflate(q, z)
    tail += _quadratic_roots(r)
    for z in tail:
        if n >= 4:
            found.append(_finish(p, z, z, cfg, found))
        else:
            z = _polish(p, z, cfg.polish_steps)
            found.append(RootEstimate(z, p.residual(z), False, None, "DegreeTooLow"))
    return sorted(found, key=_order)


def _order(est: RootEstimate):
    return (est.value.real, est.value.imag)
