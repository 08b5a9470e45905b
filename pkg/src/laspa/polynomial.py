"""Dense complex polynomials in ascending-power storage.

Coefficient ``k`` of a :class:`Polynomial` multiplies ``z**k``.  Everything
here is plain double-precision complex arithmetic.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    DegreeTooLow,
    EmptyRootList,
    NonFiniteValue,
    RootAtShiftPoint,
    ZeroLeadingCoefficient,
)


def as_complex(x) -> complex:
    z = complex(x)
    if not cmath.isfinite(z):
        raise NonFiniteValue(f"non-finite value {z!r}")
    return z


@dataclass(frozen=True)
class Polynomial:
    """p(z) = sum(coeffs[k] * z**k), with degree >= 1 and nonzero leading term."""

    coeffs: tuple[complex, ...]

    def __init__(self, coeffs: Iterable):
        cs = tuple(as_complex(c) for c in coeffs)
        if len(cs) < 2:
            raise DegreeTooLow("a polynomial needs degree >= 1")
        if abs(cs[-1]) == 0:
            raise ZeroLeadingCoefficient("leading coefficient is zero")
        object.__setattr__(self, "coeffs", cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        return self.coeffs[-1]

    def __call__(self, z) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __len__(self):
        return len(self.coeffs)

    def scale(self, z) -> float:
        """Magnitude scale sum |c_j| * max(1, |z|)**j used for relative residuals."""
        r = max(1.0, abs(z))
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * r + abs(c)
        return acc

    def residual(self, z) -> float:
        """Relative residual |p(z)| / scale(z)."""
        return abs(self(z)) / self.scale(z)


class EvalTriple(NamedTuple):
    value: complex
    d1: complex
    d2: complex


@dataclass(frozen=True)
class PowerSums:
    """s_m = sum_j (rho_j - shift)**(-m) for m = 1..order, stored at index m-1."""

    sums: tuple[complex, ...]
    shift: complex
    order: int

    def __getitem__(self, m: int) -> complex:
        # 1-based, mirrors the s_m notation
        if not 1 <= m <= self.order:
            raise IndexError(m)
        return self.sums[m - 1]


def eval_triple(p: Polynomial, z) -> EvalTriple:
    """Return p(z), p'(z), p''(z) from one second-order Horner pass."""
    z = complex(z)
    cs = p.coeffs
    b = cs[-1]
    d = 0j
    f = 0j  # accumulates p''/2
    for c in cs[-2::-1]:
        f = f * z + d
        d = d * z + b
        b = b * z + c
    return EvalTriple(b, d, 2 * f)


def from_roots(roots: Sequence, leading=1.0) -> Polynomial:
    """Expand leading * prod(z - r) by repeated multiplication with linear factors."""
    roots = [as_complex(r) for r in roots]
    if not roots:
        raise EmptyRootList("need at least one root")
    leading = as_complex(leading)
    if leading == 0:
        raise ZeroLeadingCoefficient("leading coefficient is zero")
    cs = [leading]
    for r in roots:
        # multiply by (z - r): new_k = old_{k-1} - r * old_k
        nxt = [0j] * (len(cs) + 1)
        for k, c in enumerate(cs):
            nxt[k + 1] += c
            nxt[k] -= r * c
        cs = nxt
    return Polynomial(cs)


def deflate(p: Polynomial, root) -> Polynomial:
    """Quotient of p(z) / (z - root) by forward synthetic division.

    The remainder, which equals p(root), is dropped.
    """
    if p.degree < 2:
        raise DegreeTooLow("deflating a linear polynomial leaves a constant")
    root = complex(root)
    cs = p.coeffs
    n = p.degree
    q = [0j] * n
    acc = cs[n]
    for k in range(n - 1, -1, -1):
        q[k] = acc
        acc = cs[k] + root * acc
    return Polynomial(q)


def taylor_shift(p: Polynomial, a) -> Polynomial:
    """Coefficients of q(z) = p(z + a) via repeated synthetic division."""
    a = complex(a)
    cs = list(p.coeffs)
    if a == 0:
        return Polynomial(cs)
    n = p.degree
    for i in range(n):
        for k in range(n - 1, i - 1, -1):
            cs[k] += a * cs[k + 1]
    return Polynomial(cs)


def reciprocal_power_sums(p: Polynomial, order: int) -> PowerSums:
    """Power sums of the reciprocal roots, s_m = sum_j rho_j**(-m), m = 1..order.

    Newton's identities are run on the reversed polynomial divided by its
    leading (that is, p's constant) coefficient, whose roots are 1/rho_j.
    Compose with :func:`taylor_shift` to expand about another point.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    c0 = p.coeffs[0]
    if abs(c0) == 0:
        raise RootAtShiftPoint("zero is a root; perturb the shift point")
    n = p.degree
    a = [c / c0 for c in p.coeffs[1:]]  # a[k-1] multiplies z**(n-k) in the monic reversal
    s: list[complex] = []
    for m in range(1, order + 1):
        acc = m * a[m - 1] if m <= n else 0j
        for k in range(1, min(m - 1, n) + 1):
            acc += a[k - 1] * s[m - k - 1]
        s.append(-acc)
    return PowerSums(tuple(s), 0j, order)
