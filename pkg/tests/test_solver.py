import random

import pytest

from laspa.laguerre import iterate_to_root
from laspa.polynomial import Polynomial, from_roots
from laspa.solver import RootEstimate, SolveConfig, certify_root, find_all_roots

from conftest import companion_roots, pairing_distance, random_root_set, sample_in_disk

Z4 = Polynomial([-1, 0, 0, 0, 1])


class TestFindAll:
    def test_fourth_roots_of_unity(self):
        out = find_all_roots(Z4)
        assert pairing_distance([e.value for e in out], [1, 1j, -1, -1j]) < 1e-12
        assert all(e.residual < 1e-12 and e.certified for e in out)
        assert pairing_distance([e.value for e in out], companion_roots(Z4.coeffs)) < 1e-8

    def test_1234(self):
        out = find_all_roots(Polynomial([24, -50, 35, -10, 1]))
        assert [round(e.value.real) for e in out] == [1, 2, 3, 4]
        assert pairing_distance([e.value for e in out], [1, 2, 3, 4]) < 1e-12
        assert all(e.residual < 1e-11 and e.certified for e in out)

    def test_linear(self):
        (est,) = find_all_roots(Polynomial([-5, 1]))
        assert est.value == 5 and est.residual == 0 and not est.certified

    def test_quadratic_cancellation(self):
        # b^2 >> 4ac: the naive formula loses the small root entirely
        small, big = find_all_roots(Polynomial([1, 1e8, 1]))[::-1]
        assert abs(small.value + 1e-8) <= 1e-22
        assert abs(big.value + 1e8) <= 1e-7

    def test_cubic_uncertified(self):
        out = find_all_roots(Polynomial([-1, 0, 0, 1]))
        assert len(out) == 3 and not any(e.certified for e in out)
        assert all(e.residual < 1e-12 for e in out)

    def test_sorted_and_deterministic(self):
        p = from_roots(random_root_set(random.Random(4), 9))
        a, b = find_all_roots(p), find_all_roots(p)
        assert a == b
        keys = [(e.value.real, e.value.imag) for e in a]
        assert keys == sorted(keys)

    def test_suite_complete(self):
        rng = random.Random(77)
        for _ in range(40):
            roots = random_root_set(rng, rng.randint(4, 10))
            p = from_roots(roots)
            out = find_all_roots(p, SolveConfig())
            assert len(out) == len(roots)
            assert pairing_distance([e.value for e in out], roots) < 1e-8
            assert all(e.residual < 1e-10 for e in out)

    def test_certified_roots_attract(self):
        rng = random.Random(78)
        for _ in range(5):
            p = from_roots(random_root_set(rng, rng.randint(4, 8)))
            for est in find_all_roots(p):
                assert est.certified and est.disk.contains(est.value)
                for _ in range(20):
                    z0 = sample_in_disk(rng, est.disk.center, est.disk.radius)
                    assert abs(iterate_to_root(p, z0).final - est.value) < 1e-8

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SolveConfig(polish_steps=-1)


class TestCertify:
    def test_perturbed_exact_root(self):
        est = certify_root(Z4, 1 + 1e-14)
        assert est.certified and abs(est.value - 1) < 1e-13

    def test_far_estimate(self):
        est = certify_root(Z4, 0.5)
        assert not est.certified and est.reason == "ResidualTooLarge"

    def test_cubic(self):
        est = certify_root(Polynomial([-1, 0, 0, 1]), 1)
        assert not est.certified and est.reason == "DegreeTooLow"

    def test_invariants(self):
        with pytest.raises(ValueError):
            RootEstimate(1, -1.0)
        with pytest.raises(ValueError):
            RootEstimate(1, 0.0, certified=True)
