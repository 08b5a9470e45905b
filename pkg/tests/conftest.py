import cmath
import random

import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment


def random_root_set(rng, n, min_sep=0.5, max_mod=3.0):
    """n roots uniform in the disk |z| <= max_mod, pairwise >= min_sep apart."""
    roots = []
    while len(roots) < n:
        z = cmath.rect(max_mod * rng.random() ** 0.5, rng.uniform(0, 2 * cmath.pi))
        if all(abs(z - w) >= min_sep for w in roots):
            roots.append(z)
    return roots


def suite(count, seed, degrees=(4, 8)):
    rng = random.Random(seed)
    return [random_root_set(rng, rng.randint(*degrees)) for _ in range(count)]


def sample_in_disk(rng, center, radius):
    return center + cmath.rect(radius * rng.random() ** 0.5, rng.uniform(0, 2 * cmath.pi))


def pairing_distance(a, b):
    """Largest distance under the optimal one-to-one matching of a and b."""
    cost = np.abs(np.subtract.outer(np.asarray(a), np.asarray(b)))
    i, j = linear_sum_assignment(cost)
    return cost[i, j].max()


def companion_roots(coeffs):
    """Eigenvalues of the companion matrix of an ascending coefficient list."""
    c = np.asarray(coeffs, dtype=complex)
    n = len(c) - 1
    m = np.zeros((n, n), dtype=complex)
    m[1:, :-1] = np.eye(n - 1)
    m[:, -1] = -c[:-1] / c[-1]
    return np.linalg.eigvals(m)


@pytest.fixture
def rng():
    return random.Random(20261016)


# filled by test_acceptance.py, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
