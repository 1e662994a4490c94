import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from eulerzeta.errors import DomainError, PoleError
from eulerzeta.polynomials import (
    apostol_bernoulli,
    bernoulli_polynomial,
    euler_polynomial,
)
from eulerzeta.zeta import (
    EvalOptions,
    beta_function,
    dirichlet_beta,
    dirichlet_lambda,
    g_e,
    gamma,
    hurwitz_zeta,
    lerch_e,
    lerch_e_neg_int,
    lerch_e_rational,
    phi_lerch,
    riemann_zeta,
    transcendental_f,
    zeta_e,
    zeta_e_fourier,
)

from oracles import abel_lerch, beta_alternating, eta_alternating, zeta_series_tail


class TestGamma:
    def test_half(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    def test_half_integers(self):
        for m in (1, 2, 3):
            expected = math.sqrt(math.pi) * math.factorial(2 * m) / (
                4**m * math.factorial(m)
            )
            assert gamma(m + 0.5) == pytest.approx(expected, rel=1e-13)

    def test_factorials(self):
        assert gamma(5.0) == pytest.approx(24.0, rel=1e-13)
        for n in range(1, 20):
            assert gamma(float(n)).real == pytest.approx(math.gamma(n), rel=1e-12)

    def test_reflection_region(self):
        for s in (-0.5, -1.5, -3.3, 0.25):
            assert gamma(s).real == pytest.approx(math.gamma(s), rel=1e-12)

    def test_poles(self):
        for s in (0.0, -1.0, -2.0, -7.0):
            with pytest.raises(PoleError):
                gamma(s)

    def test_conjugate_symmetry(self):
        s = 1.3 + 0.7j
        assert gamma(s.conjugate()) == pytest.approx(gamma(s).conjugate(), rel=1e-12)


class TestBetaFunction:
    def test_ones(self):
        assert beta_function(1.0, 1.0) == pytest.approx(1.0, rel=1e-13)

    def test_pochhammer_form(self):
        # B(1-s, m) = (m-1)!/(1-s)_m at s = -2, m = 3
        assert beta_function(3.0, 3.0) == pytest.approx(2.0 / (3 * 4 * 5), rel=1e-12)

    def test_half_half(self):
        assert beta_function(0.5, 0.5) == pytest.approx(math.pi, rel=1e-13)


class TestHurwitzZeta:
    def test_basel(self):
        z = hurwitz_zeta(2.0, 1.0)
        oracle = zeta_series_tail(2.0, 1.0)
        assert z.value.real == pytest.approx(oracle, abs=1e-12)
        assert z.value.real == pytest.approx(math.pi**2 / 6, abs=1e-12)

    def test_direct_series_oracle_points(self):
        for s, x in ((3.0, 0.25), (2.5, 0.7), (4.0, 1.5)):
            z = hurwitz_zeta(s, x)
            assert z.value.real == pytest.approx(zeta_series_tail(s, x), abs=1e-11)

    def test_negative_integers_are_bernoulli(self):
        for m in range(7):
            for x in (0.25, 0.5, 1.0):
                expected = -float(bernoulli_polynomial(m + 1)(x)) / (m + 1)
                z = hurwitz_zeta(float(-m), x)
                assert z.value.real == pytest.approx(expected, abs=1e-13)
                assert z.method == "closed-form"

    def test_half_argument_relation(self):
        # zeta(s, 1/2) = (2^s - 1) zeta(s)
        s = -3.5
        lhs = hurwitz_zeta(s, 0.5).value
        rhs = (2.0**s - 1.0) * hurwitz_zeta(s, 1.0).value
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_pole_and_domain(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1.0, 0.5)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, 0.0)

    def test_error_estimate_honest(self):
        for s, x in ((2.0, 1.0), (-3.5, 0.5), (0.5, 0.3)):
            z = hurwitz_zeta(s, x)
            assert z.est_error >= 0
        z = hurwitz_zeta(2.0, 1.0)
        assert abs(z.value.real - zeta_series_tail(2.0, 1.0)) <= 50 * z.est_error + 1e-15

    def test_complex_argument(self):
        z = hurwitz_zeta(2.0 + 1.0j, 0.7)
        n = np.arange(3 * 10**6)
        crude = complex(np.sum((n + 0.7) ** (-(2.0 + 1.0j))))
        assert z.value == pytest.approx(crude, abs=1e-6)

    def test_options_respected(self):
        opts = EvalOptions(em_tail_start=25, em_correction_terms=20)
        z = hurwitz_zeta(2.0, 1.0, opts)
        assert z.value.real == pytest.approx(math.pi**2 / 6, abs=1e-12)
        with pytest.raises(DomainError):
            EvalOptions(em_correction_terms=31)
        with pytest.raises(DomainError):
            EvalOptions(target_abs_tol=0.0)


class TestRiemannLambdaBeta:
    def test_riemann_values(self):
        assert riemann_zeta(2.0).value.real == pytest.approx(math.pi**2 / 6, rel=1e-13)
        assert riemann_zeta(-1.0).value.real == pytest.approx(-1.0 / 12, abs=1e-14)
        assert riemann_zeta(0.0).value.real == pytest.approx(-0.5, abs=1e-14)

    def test_lambda_even_values(self):
        assert dirichlet_lambda(2.0).value.real == pytest.approx(math.pi**2 / 8, rel=1e-13)
        assert dirichlet_lambda(4.0).value.real == pytest.approx(math.pi**4 / 96, rel=1e-13)
        assert dirichlet_lambda(6.0).value.real == pytest.approx(math.pi**6 / 960, rel=1e-13)

    def test_lambda_pole(self):
        with pytest.raises(PoleError):
            dirichlet_lambda(1.0)

    def test_beta_values(self):
        assert dirichlet_beta(1.0).value.real == pytest.approx(math.pi / 4, rel=1e-13)
        assert dirichlet_beta(3.0).value.real == pytest.approx(math.pi**3 / 32, rel=1e-13)
        catalan = beta_alternating(2.0)
        assert dirichlet_beta(2.0).value.real == pytest.approx(catalan, abs=1e-13)

    def test_beta_route_consistency(self):
        # accelerated series (used near s=1) against the Hurwitz difference
        s = 1.4
        series = dirichlet_beta(s)
        assert series.method == "direct-series"
        diff = 4.0**-s * (hurwitz_zeta(s, 0.25).value - hurwitz_zeta(s, 0.75).value)
        assert series.value == pytest.approx(diff, rel=1e-12)

    def test_beta_entire_at_one(self):
        assert dirichlet_beta(1.0).est_error < 1e-12


class TestZetaE:
    def test_constant_at_zero_order(self):
        for x in (0.1, 0.3, 0.5, 0.7, 1.0):
            z = zeta_e(0.0, x)
            assert z.value.real == pytest.approx(0.5, abs=1e-13)

    def test_euler_polynomial_values(self):
        for m in range(1, 7):
            poly = euler_polynomial(m)
            for x in (0.1, 0.4, 0.9):
                assert zeta_e(float(-m), x).value.real == pytest.approx(
                    poly(x) / 2.0, abs=1e-12
                )

    def test_eta_reduction(self):
        # zeta_e(s, 1) = (1 - 2^(1-s)) zeta(s); pi^2/12 at s = 2
        assert zeta_e(2.0, 1.0).value.real == pytest.approx(math.pi**2 / 12, rel=1e-12)

    def test_alternating_series_oracle(self):
        for s, x in ((2.5, 0.7), (2.0, 0.3), (3.5, 1.2)):
            oracle = eta_alternating(s, x)
            assert zeta_e(s, x).value.real == pytest.approx(oracle, abs=1e-11)

    def test_entire_at_one(self):
        z = zeta_e(1.0, 0.3)
        assert z.method == "hurwitz-difference-perturbed"
        oracle = eta_alternating(1.0, 0.3)
        assert z.value.real == pytest.approx(oracle, abs=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            zeta_e(2.0, 0.0)


class TestZetaEFourier:
    def test_odd_symmetry_zero(self):
        z = zeta_e_fourier(-1.0, 0.5, 10**5)
        assert abs(z.value) < 1e-6

    def test_euler_value(self):
        z = zeta_e_fourier(-2.0, 0.25, 10**5)
        expected = float(euler_polynomial(2)(Fraction(1, 4))) / 2.0
        assert z.value.real == pytest.approx(expected, abs=1e-5)
        assert abs(z.value.real - expected) <= z.est_error + 1e-12

    def test_cross_oracle_against_zeta_e(self):
        z = zeta_e_fourier(0.5, 0.3, 10**5)
        direct = zeta_e(0.5, 0.3)
        assert z.value.real == pytest.approx(direct.value.real, abs=z.est_error + 1e-9)

    def test_validity_strip(self):
        with pytest.raises(DomainError):
            zeta_e_fourier(1.5, 0.5, 100)
        with pytest.raises(DomainError):
            zeta_e_fourier(-1.0, 1.5, 100)


class TestGE:
    def test_midpoint_antisymmetry(self):
        for s in (-2.5, -1.0, 0.5):
            assert abs(g_e(s, 0.5)) < 1e-13

    def test_linear_case(self):
        for x in (0.2, 0.4, 0.8):
            assert g_e(-1.0, x).real == pytest.approx(x - 0.5, abs=1e-12)

    def test_even_case_vanishes(self):
        for x in (0.2, 0.7):
            assert abs(g_e(-2.0, x)) < 1e-12


class TestLerchE:
    def test_abel_value_at_zero_order(self):
        # Abel-summation oracle pins the convention at s = 0
        for x in (0.25, 0.5, 0.7):
            expected = 1j / (2.0 * math.sin(math.pi * x))
            oracle = abel_lerch(0, x)
            assert oracle == pytest.approx(expected, abs=1e-8)
            assert lerch_e(0.0, x) == pytest.approx(expected, abs=1e-11)

    def test_catalan_at_half(self):
        got = lerch_e(2.0, 0.5)
        assert got == pytest.approx(1j * beta_alternating(2.0), abs=1e-11)

    def test_half_point_relation(self):
        # at x = 1/2 the continuation collapses onto zeta_e(1-s, 1/2)
        s = -1.5
        lhs = lerch_e(s, 0.5)
        rhs = (
            1j
            * gamma(1.0 - s)
            * math.pi ** (s - 1.0)
            * cmath.sin(0.5 * math.pi * (1.0 - s))
            * zeta_e(1.0 - s, 0.5).value
        )
        assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_continuation_matches_rational_decomposition(self):
        for s in (-1.5, -0.5, 0.5):
            for p, q in ((1, 3), (2, 5)):
                assert lerch_e(complex(s), p / q) == pytest.approx(
                    lerch_e_rational(complex(s), p, q), abs=1e-10
                )

    def test_direct_series_matches_rational_decomposition(self):
        for s in (2.0, 3.0, 2.5):
            for p, q in ((1, 2), (1, 3)):
                assert lerch_e(complex(s), p / q) == pytest.approx(
                    lerch_e_rational(complex(s), p, q), abs=1e-9
                )

    def test_conjugate_antisymmetry(self):
        # ell(s, 1-x) = -conj(ell(s, x)) for real s; see FINDINGS.md for the
        # sign convention adjudication
        for s in (-2.5, -1.0, 0.0, 0.5, 2.0):
            for x in (0.2, 0.35, 0.6):
                a = lerch_e(float(s), x)
                b = lerch_e(float(s), 1.0 - x)
                assert b == pytest.approx(-a.conjugate(), abs=1e-9)

    def test_strict_antisymmetry_at_real_orders(self):
        # at s = -1 the function is real-valued, so the strict form holds
        for x in (0.2, 0.35):
            a = lerch_e(-1.0, x)
            b = lerch_e(-1.0, 1.0 - x)
            assert abs(a.imag) < 1e-10
            assert (a + b) == pytest.approx(0.0, abs=1e-10)

    def test_at_one_value(self):
        assert lerch_e(1.0, 0.5) == pytest.approx(0.25j * math.pi, abs=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            lerch_e(2.0, 0.0)
        with pytest.raises(DomainError):
            lerch_e(2.0, 1.0)


class TestLerchNegInt:
    def test_zero_order(self):
        expected = 1j / math.sqrt(2.0)
        assert lerch_e_neg_int(0, 0.25) == pytest.approx(expected, abs=1e-12)

    def test_first_order_signs(self):
        # oracle: Abel sum of sum (2n+1) e^((2n+1) pi i x)
        assert lerch_e_neg_int(1, 1 / 3) == pytest.approx(-1 / 3, abs=1e-12)
        assert lerch_e_neg_int(1, 2 / 3) == pytest.approx(1 / 3, abs=1e-12)
        for x in (1 / 3, 2 / 3, 0.21):
            assert lerch_e_neg_int(1, x) == pytest.approx(abel_lerch(1, x), abs=1e-7)

    def test_matches_continuation(self):
        for m in range(4):
            for x in (0.2, 0.5, 0.8):
                assert lerch_e_neg_int(m, x) == pytest.approx(
                    lerch_e(float(-m), x), abs=1e-10
                )


class TestPhiLerch:
    def test_lerch_relation(self):
        s, x = 3.0, 0.3
        lhs = phi_lerch(x, 0.5, s)
        rhs = 2.0**s * cmath.exp(-1j * math.pi * x) * lerch_e(s, x)
        assert lhs == pytest.approx(rhs, abs=1e-10)

    def test_apostol_special_value(self):
        x, a, m = 1 / 3, 0.5, 2
        lhs = phi_lerch(x, a, float(-m))
        rhs = -apostol_bernoulli(m + 1, a, cmath.exp(2j * math.pi * x)) / (m + 1)
        assert lhs == pytest.approx(rhs, abs=1e-12)

    def test_integer_x_reduces_to_hurwitz(self):
        assert phi_lerch(0.0, 1.0, 2.0) == pytest.approx(math.pi**2 / 6, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            phi_lerch(0.3, 0.0, 2.0)
        with pytest.raises(DomainError):
            phi_lerch(0.3, 0.7, 0.5)  # unsupported continuation combination


class TestTranscendentalF:
    def test_at_zero(self):
        assert transcendental_f(0.0, 0.0) == pytest.approx(math.pi**2 / 8, rel=1e-12)

    def test_double_sum_oracle(self):
        # brute-force sum over lambda(n+2) x^n with raw odd-denominator sums
        x = 0.5
        n_k = 2 * 10**4
        k = np.arange(n_k)
        odd = 2.0 * k + 1.0
        total = 0.0
        for n in range(60):
            lam = float(np.sum(odd ** (-(n + 2.0)))) + (2.0 * n_k) ** (-(n + 1.0)) / (
                2.0 * (n + 1.0)
            )
            total += lam * x**n
        assert transcendental_f(0.5, 0.0).real == pytest.approx(total, abs=1e-7)

    def test_tanh_closed_form(self):
        # real part at s = -2 against the tanh expression with one
        # subtracted lambda term
        t = 0.25
        f = transcendental_f(2j * t, -2.0)
        lam2 = dirichlet_lambda(2.0).value.real
        expected = -(
            0.5 * math.pi * t * math.tanh(math.pi * t) - lam2 * (2 * t) ** 2
        ) / (2 * t) ** 4
        assert f.real == pytest.approx(expected, abs=1e-12)

    def test_radius_guard(self):
        with pytest.raises(DomainError):
            transcendental_f(0.96, 0.0)
