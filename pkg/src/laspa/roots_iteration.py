"""Laguerre's step written purely in terms of the roots.

With S1 = sum 1/(z - rho_j) = p'/p and S2 = sum 1/(z - rho_j)**2
= (p'/p)**2 - p''/p the classical update becomes

    z' = z - n / (S1 +/- sqrt((n-1) (n S2 - S1**2)))

so neither p nor its derivatives (nor the leading coefficient) appear.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DegreeTooLow, PoleAtRoot, SingularStep
from .laguerre import pick_denominator
from .polynomial import as_complex


@dataclass(frozen=True)
class RootSet:
    roots: tuple[complex, ...]

    def __init__(self, roots: Sequence):
        rs = tuple(as_complex(r) for r in roots)
        if len(rs) < 2:
            raise DegreeTooLow("a root set needs at least two roots")
        for i in range(len(rs)):
            for j in range(i):
                if rs[i] == rs[j]:
                    raise ValueError(f"roots {j} and {i} coincide; only simple roots are supported")
        object.__setattr__(self, "roots", rs)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


class SumPair(NamedTuple):
    s1: complex
    s2: complex


def sums_at(rs: RootSet, z) -> SumPair:
    """Return (sum 1/(z - rho_j), sum 1/(z - rho_j)**2), accumulated in root order."""
    z = complex(z)
    s1 = 0j
    s2 = 0j
    for j, r in enumerate(rs.roots):
        d = z - r
        if d == 0:
            raise PoleAtRoot(f"z coincides with root {j}")
        inv = 1 / d
        s1 += inv
        s2 += inv * inv
    return SumPair(s1, s2)


def laguerre_step_from_roots(rs: RootSet, z) -> complex:
    n = len(rs)
    z = complex(z)
    s1, s2 = sums_at(rs, z)
    sq = cmath.sqrt((n - 1) * (n * s2 - s1 * s1))
    den = pick_denominator(s1, sq)
    if den == 0:
        raise SingularStep(f"both denominators vanish at {z}")
    return z - n / den
