import math

import numpy as np
import pytest
from scipy import integrate, special

import colorpart as cp
from colorpart import errors

C1 = math.pi * math.sqrt(2 / 3)


def random_quadform(rng, k):
    return cp.QuadFormSpec(
        a0=float(rng.uniform(0.1, 10)),
        a_rest=tuple(float(x) for x in rng.uniform(0.1, 10, size=k)),
    )


class TestDetClosedForm:
    def test_two_by_two(self):
        q = cp.QuadFormSpec(1.0, (1.0, 1.0))
        assert cp.det_closed_form(q) == pytest.approx(3.0)
        assert np.linalg.det(q.matrix()) == pytest.approx(3.0)

    def test_one_by_one(self):
        q = cp.QuadFormSpec(2.0, (3.0,))
        assert cp.det_closed_form(q) == pytest.approx(5.0)
        assert np.allclose(q.matrix(), [[5.0]])

    def test_random_k9_vs_elimination(self):
        rng = np.random.default_rng(42)
        q = random_quadform(rng, 9)
        closed = cp.det_closed_form(q)
        elim = float(np.linalg.det(q.matrix()))
        assert abs(closed - elim) <= 1e-9 * abs(elim)

    def test_thousand_random_instances(self):
        rng = np.random.default_rng(0)
        for _ in range(1000):
            k = int(rng.integers(1, 9))
            q = random_quadform(rng, k)
            closed = cp.det_closed_form(q)
            elim = float(np.linalg.det(q.matrix()))
            assert abs(closed - elim) <= 1e-9 * abs(elim)

    def test_positivity_required(self):
        with pytest.raises(ValueError):
            cp.QuadFormSpec(1.0, (1.0, -2.0))
        with pytest.raises(ValueError):
            cp.QuadFormSpec(0.0, (1.0,))


class TestGaussianIntegral:
    def test_one_dimensional(self):
        # integral of exp(-2x^2) = sqrt(pi/2); det = 2
        q = cp.QuadFormSpec(1.0, (1.0,))
        assert cp.det_closed_form(q) == pytest.approx(2.0)
        assert cp.gaussian_quadform_integral(q) == pytest.approx(math.sqrt(math.pi / 2))

    def test_two_dimensional_closed_form(self):
        q = cp.QuadFormSpec(1.0, (1.0, 1.0))
        assert cp.gaussian_quadform_integral(q) == pytest.approx(math.pi / math.sqrt(3))

    def test_quadrature_cross_check(self):
        rng = np.random.default_rng(3)
        for k in (1, 2):
            for _ in range(3):
                q = random_quadform(rng, k)
                closed = cp.gaussian_quadform_integral(q)
                quad = cp.gaussian_integral_quadrature(q)
                assert abs(closed - quad) < 1e-6

    def test_monte_carlo_k3(self):
        rng = np.random.default_rng(1)
        q = random_quadform(rng, 3)
        est, se = cp.gaussian_integral_monte_carlo(q, samples=10**6, seed=0)
        closed = cp.gaussian_quadform_integral(q)
        assert abs(est - closed) < 3 * se

    def test_factorization_identity(self):
        rng = np.random.default_rng(9)
        for k in range(1, 7):
            q = random_quadform(rng, k)
            lhs = cp.gaussian_quadform_integral(q) * math.sqrt(cp.det_closed_form(q))
            assert lhs == pytest.approx(math.pi ** (k / 2), rel=1e-12)

    def test_quadform_value(self):
        q = cp.QuadFormSpec(2.0, (1.0, 3.0))
        from colorpart.quadform import quadform_value

        assert quadform_value(q, [1.0, -1.0]) == pytest.approx(0 + 1 + 3)


class TestTruncationBound:
    def test_radius_one(self):
        bound = cp.truncation_error_bound(1.0)
        assert bound == pytest.approx(math.exp(-1))
        true_tail = math.sqrt(math.pi) / 2 * special.erfc(1.0)
        assert true_tail == pytest.approx(0.1394, abs=1e-4)
        assert true_tail <= bound

    def test_radius_three(self):
        assert cp.truncation_error_bound(3.0) == pytest.approx(math.exp(-9))

    def test_bound_dominates_tail(self):
        for r in np.linspace(1.0, 6.0, 11):
            true_tail = math.sqrt(math.pi) / 2 * special.erfc(r)
            assert true_tail <= cp.truncation_error_bound(r)

    def test_radius_too_small(self):
        with pytest.raises(errors.RadiusTooSmall):
            cp.truncation_error_bound(0.5)


class TestSumVsIntegral:
    def test_constant(self):
        s, integral, bound = cp.sum_vs_integral(lambda x: 3.0, 0, 10, 0)
        assert s == pytest.approx(33.0)
        assert integral == pytest.approx(30.0)
        assert bound == pytest.approx(6.0)

    def test_monotone_exponential(self):
        f = lambda x: math.exp(C1 * math.sqrt(x))
        s, integral, bound = cp.sum_vs_integral(f, 1, 500, 0)
        assert abs(s - integral) <= bound

    def test_unimodal_two_sided(self):
        n = 100
        f = lambda x: math.exp(C1 * (math.sqrt(x) + math.sqrt(n - x)))
        s, integral, bound = cp.sum_vs_integral(f, 1, n - 1, 1)
        assert abs(s - integral) <= bound

    def test_generated_family(self):
        import random

        rng = random.Random(5)
        for _ in range(100):
            a = rng.uniform(0.1, 2.0)
            b = rng.uniform(5.0, 80.0)
            kind = rng.randrange(3)
            if kind == 0:
                f, lo, hi, m = (lambda x, a=a: math.exp(a * math.sqrt(x))), 1.0, b, 0
            elif kind == 1:
                f, lo, hi, m = (lambda x, a=a, b=b: math.exp(-a * (x - b / 2) ** 2)), 0.0, b, 1
            else:
                f, lo, hi, m = (lambda x, a=a, b=b: math.sin(a * x / b) + 2.0), 0.0, b, 1
            cp.sum_vs_integral(f, lo, hi, m)  # raises on violation

    def test_violation_detected(self):
        # a function resonant with the lattice: every sample is 1 but the
        # integral is ~0, and the claimed m=0 bound cannot absorb that
        f = lambda x: math.cos(2 * math.pi * x)
        with pytest.raises(errors.SumIntegralBoundError):
            cp.sum_vs_integral(f, 0, 50.5, 0)

    def test_short_interval_rejected(self):
        with pytest.raises(ValueError):
            cp.sum_vs_integral(lambda x: 1.0, 0, 0.5, 0)
