"""The identity catalog.

Each entry pairs an independently computed left side (adaptive quadrature
of the defining integral, a truncated series, or an exact rational
computation) with a closed-form right side, over a default parameter grid
that respects the relation's preconditions.

Disputed entries (status "disputed") are reported side by side and never
fail a suite run; see FINDINGS.md at the repository root for the observed
numbers and analysis.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .identities import (
    GridSpec,
    IdentitySpec,
    rhs_apostol_multiplication,
    rhs_beta_even_series,
    rhs_eisenstein,
    rhs_euler_transform,
    rhs_exp_transform,
    rhs_fourier_coefficient,
    rhs_moment,
    rhs_product_integral,
    rhs_rational_argument,
    rhs_secant_transform,
)
from .polynomials import (
    apostol_bernoulli,
    bernoulli_polynomial,
    delta2,
    euler_number,
    euler_poly_at_zero,
    euler_polynomial,
    pochhammer,
)
from .quadrature import IntegrandSpec, integrate_oscillatory, integrate_unit
from .zeta import (
    dirichlet_beta,
    dirichlet_lambda,
    g_e,
    gamma,
    hurwitz_zeta,
    lerch_e,
    lerch_e_neg_int,
    lerch_e_rational,
    zeta_e,
)

__all__ = ["build_catalog", "catalog_as_json"]

_QUAD_TOL = 1e-10
_FOURIER_TERMS = 10**4
_HURWITZ_FOURIER_TERMS = 10**5


def _theta(s: float):
    """Endpoint exponent hint for integrands carrying zeta_e(s, x) ~ x^(-s)."""
    s = float(s)
    return None if s.is_integer() else 1.0 - s


def _not_odd_integer(value: float) -> bool:
    nearest = round(value)
    return abs(value - nearest) > 1e-9 or nearest % 2 == 0


# --------------------------------------------------------------------------
# left sides backed by quadrature
# --------------------------------------------------------------------------


def _lhs_fourier(kind: str):
    trig = math.sin if kind == "sin" else math.cos

    def ev(pt):
        s, k = float(pt["s"]), int(pt["k"])
        freq = (2 * k + 1) * math.pi

        def f(x):
            return trig(freq * x) * zeta_e(s, x).value

        spec = IntegrandSpec(f, left_exponent=_theta(s))
        return integrate_oscillatory(spec, 2 * k + 1, abs_tol=1e-11)

    return ev


def _lhs_trig_power(kind: str):
    trig = math.sin if kind == "sin" else math.cos

    def ev(pt):
        s, n = float(pt["s"]), int(pt["n"])
        power = 2 * n - 1

        def f(x):
            return trig(math.pi * x) ** power * zeta_e(s, x).value

        spec = IntegrandSpec(f, left_exponent=_theta(s))
        return integrate_oscillatory(spec, power, abs_tol=1e-11)

    return ev


def _rhs_trig_power(kind: str):
    def ev(pt):
        s, n = float(pt["s"]), int(pt["n"])
        acc = 0.0
        for k in range(n):
            term = comb(2 * n - 1, n - k - 1) / (2 * k + 1) ** (1.0 - s)
            acc += ((-1.0) ** k) * term if kind == "sin" else term
        trig = math.cos if kind == "sin" else math.sin
        return (
            gamma(1.0 - s).real
            / (math.pi ** (1.0 - s) * 2.0 ** (2 * n - 2))
            * trig(0.5 * math.pi * s)
            * acc
        )

    return ev


def _lhs_general_transform(pt):
    s = float(pt["s"])
    if pt["f"] == "sin3":

        def f(x):
            return math.sin(3 * math.pi * x) * zeta_e(s, x).value

        hint = 3
    else:  # cos1

        def f(x):
            return math.cos(math.pi * x) * zeta_e(s, x).value

        hint = 1
    spec = IntegrandSpec(f, left_exponent=_theta(s))
    return integrate_oscillatory(spec, hint, abs_tol=1e-11)


def _rhs_general_transform(pt):
    # single-harmonic inputs: sin(3 pi x) has b_1 = 1, cos(pi x) has a_0 = 1
    s = float(pt["s"])
    pref = gamma(1.0 - s).real / math.pi ** (1.0 - s)
    if pt["f"] == "sin3":
        return pref * math.cos(0.5 * math.pi * s) * 3.0 ** (s - 1.0)
    return pref * math.sin(0.5 * math.pi * s)


def _lhs_product(reflected: bool):
    def ev(pt):
        s, sp = float(pt["s"]), float(pt["sp"])
        if reflected:

            def f(x):
                return zeta_e(sp, x).value * zeta_e(s, 1.0 - x).value

            spec = IntegrandSpec(f, left_exponent=_theta(sp), right_exponent=_theta(s))
        else:

            def f(x):
                return zeta_e(sp, x).value * zeta_e(s, x).value

            theta = None
            if not (s.is_integer() and sp.is_integer()):
                theta = 1.0 - max(s, sp)
            spec = IntegrandSpec(f, left_exponent=theta)
        return integrate_unit(spec, abs_tol=_QUAD_TOL)

    return ev


def _lhs_square(reflected: bool):
    inner = _lhs_product(reflected)

    def ev(pt):
        s = float(pt["s"]) if "s" in pt else 0.5 - int(pt["m"])
        return inner({"s": s, "sp": s})

    return ev


def _lhs_euler_transform(pt):
    m, s = int(pt["m"]), float(pt["s"])
    poly = euler_polynomial(m - 1)

    def f(x):
        return poly(x) * zeta_e(s, x).value

    spec = IntegrandSpec(f, left_exponent=_theta(s))
    return integrate_unit(spec, abs_tol=_QUAD_TOL)


def _lhs_mean(pt):
    s = float(pt["s"])

    def f(x):
        return zeta_e(s, x).value

    spec = IntegrandSpec(f, left_exponent=_theta(s))
    return integrate_unit(spec, abs_tol=_QUAD_TOL)


def _rhs_mean(pt):
    s = float(pt["s"])
    lam = dirichlet_lambda(2.0 - s).value
    return (
        4.0
        * gamma(1.0 - s).real
        * math.pi ** (s - 2.0)
        * math.cos(0.5 * math.pi * s)
        * lam
    )


def _lhs_moment(pt):
    n, s = int(pt["n"]), float(pt["s"])

    def f(x):
        return x**n * zeta_e(s, x).value

    spec = IntegrandSpec(f, left_exponent=_theta(s))
    return integrate_unit(spec, abs_tol=_QUAD_TOL)


def _lhs_exp_transform(pt):
    t, s = float(pt["t"]), float(pt["s"])
    c = 2.0 * math.pi * t

    def f(x):
        return math.exp(c * x) * zeta_e(s, x).value

    spec = IntegrandSpec(f, left_exponent=_theta(s))
    return integrate_unit(spec, abs_tol=1e-11)


def _lhs_exp_euler(pt):
    t, m = float(pt["t"]), int(pt["m"])
    poly = euler_polynomial(m)
    c = 2.0 * math.pi * t

    def f(x):
        return math.exp(c * x) * poly(x)

    return integrate_unit(IntegrandSpec(f), abs_tol=1e-12)


def _rhs_exp_euler(pt):
    t, m = float(pt["t"]), int(pt["m"])
    acc = 0.5 * math.pi * t * math.tanh(math.pi * t)
    for r in range((m - 1) // 2 + 1):
        acc -= (-1.0) ** r * dirichlet_lambda(2.0 * r + 2.0).value.real * (
            2.0 * t
        ) ** (2 * r + 2)
    return (
        (-1.0) ** m
        * 4.0
        * (math.exp(2.0 * math.pi * t) + 1.0)
        * factorial(m)
        / (2.0 * math.pi * t) ** (m + 2)
        * acc
    )


def _lhs_secant_transform(pt):
    s = float(pt["s"])

    def f(x):
        return 0.5 * g_e(s, x) / math.cos(math.pi * x)

    spec = IntegrandSpec(f, split_points=(0.5,), left_exponent=_theta(s), right_exponent=_theta(s))
    return integrate_unit(spec, abs_tol=1e-11)


def _lhs_sec_euler(pt):
    m = int(pt["m"])
    poly = euler_polynomial(2 * m - 1)

    def f(x):
        return poly(x) / math.cos(math.pi * x)

    spec = IntegrandSpec(f, split_points=(0.5,))
    return integrate_unit(spec, abs_tol=1e-11)


def _lhs_catalan(pt):
    if pt["form"] == "half-minus-x":

        def f(x):
            return (0.5 - x) / math.cos(math.pi * x)

        result = integrate_unit(
            IntegrandSpec(f, split_points=(0.5,)), abs_tol=1e-11
        )
        scale = math.pi**2 / 4.0
    else:  # g-e form

        def f(x):
            return g_e(-1.0, x) / math.cos(math.pi * x)

        result = integrate_unit(
            IntegrandSpec(f, split_points=(0.5,)), abs_tol=1e-11
        )
        scale = -math.pi**2 / 4.0
    return (scale * result.value, abs(scale) * result.est_error)


def _lhs_beta_even_int(pt):
    m = int(pt["m"])
    poly = euler_polynomial(2 * m - 1)

    def f(x):
        return poly(x) / math.cos(math.pi * x)

    result = integrate_unit(IntegrandSpec(f, split_points=(0.5,)), abs_tol=1e-11)
    scale = (-1.0) ** m * math.pi ** (2 * m) / (4.0 * factorial(2 * m - 1))
    return (scale * result.value, abs(scale) * result.est_error)


# --------------------------------------------------------------------------
# series / functional-equation sides
# --------------------------------------------------------------------------


def _lhs_roundtrip(pt):
    s, x = float(pt["s"]), float(pt["x"])
    zx = zeta_e(1.0 - s, x)
    zr = zeta_e(1.0 - s, 1.0 - x)
    pref_inv = gamma(1.0 - s) / (2.0 * math.pi ** complex(1.0 - s))
    w = cmath.exp(0.5j * math.pi * (1.0 - s))
    ell_x = pref_inv * (w * zx.value - zr.value / w)
    ell_r = pref_inv * (w * zr.value - zx.value / w)
    pref_fwd = gamma(s) * math.pi ** complex(-s)
    u = cmath.exp(-0.5j * math.pi * s)
    value = pref_fwd * (u * ell_x - ell_r / u)
    return (value, zx.est_error + zr.est_error)


def _rhs_roundtrip(pt):
    s, x = float(pt["s"]), float(pt["x"])
    z = zeta_e(1.0 - s, x)
    return (z.value, z.est_error)


def _lhs_asym(pt):
    s = float(pt["s"])
    z = zeta_e(1.0 - s, 1.0)
    return (z.value, z.est_error)


def _rhs_asym(pt):
    s = float(pt["s"])
    lam = dirichlet_lambda(s).value
    return -2.0 * gamma(s).real * math.pi ** (-s) * math.cos(0.5 * math.pi * s) * lam


def _lhs_lerch_half(pt):
    return lerch_e(complex(pt["s"]), 0.5)


def _rhs_lerch_half(pt):
    s = complex(pt["s"])
    z = zeta_e(1.0 - s, 0.5).value
    return (
        1j
        * gamma(1.0 - s)
        * math.pi ** (s - 1.0)
        * cmath.sin(0.5 * math.pi * (1.0 - s))
        * z
    )


def _product_closed_form(s: complex, sp: complex, reflected: bool) -> complex:
    """Analytic continuation of the product-integral closed form."""
    angle = (s + sp) if reflected else (s - sp)
    lam = dirichlet_lambda(2.0 - s - sp).value
    return (
        2.0
        * gamma(1.0 - s)
        * gamma(1.0 - sp)
        * math.pi ** complex(s + sp - 2.0)
        * lam
        * cmath.cos(0.5 * math.pi * angle)
    )


def _lhs_zeta_lerch_composed(pt):
    # substitute the product closed forms into the lerch_e expansion of the
    # mixed integral; the bracket identity collapses it to the rhs
    s, sp = float(pt["s"]), float(pt["sp"])
    a = _product_closed_form(1.0 - s, sp, reflected=False)
    b = _product_closed_form(1.0 - s, sp, reflected=True)
    pref = 0.5j * gamma(1.0 - s) * math.pi ** complex(s - 1.0)
    u = cmath.exp(-0.5j * math.pi * s)
    return pref * (u * a + b / u)


def _rhs_zeta_lerch(pt):
    s, sp = float(pt["s"]), float(pt["sp"])
    lam = dirichlet_lambda(1.0 + s - sp).value
    return (
        math.pi ** (sp - 1.0)
        * gamma(1.0 - sp)
        * cmath.exp(0.5j * math.pi * (1.0 - sp))
        * lam
    )


def _lhs_bracket(pt):
    s, sp = float(pt["s"]), float(pt["sp"])
    return cmath.exp(-0.5j * math.pi * s) * cmath.cos(
        0.5 * math.pi * (1.0 - s - sp)
    ) + cmath.exp(0.5j * math.pi * s) * cmath.cos(0.5 * math.pi * (1.0 - s + sp))


def _rhs_bracket(pt):
    s, sp = float(pt["s"]), float(pt["sp"])
    return cmath.exp(-0.5j * math.pi * sp) * cmath.sin(math.pi * s)


def _lhs_refl_rewrite(pt):
    # original csc/sec form, only meaningful away from the gamma poles
    s, k = float(pt["s"]), int(pt["k"])
    pref = math.pi**s * (2 * k + 1) ** (s - 1.0) / (2.0 * gamma(s).real)
    if pt["kind"] == "sin":
        return pref / math.sin(0.5 * math.pi * s)
    return pref / math.cos(0.5 * math.pi * s)


def _rhs_refl_rewrite(pt):
    return rhs_fourier_coefficient(pt["kind"], float(pt["s"]), int(pt["k"]))


def _lhs_rational_argument(pt):
    s = complex(pt["s"])
    return zeta_e(1.0 - s, int(pt["p"]) / int(pt["q"])).value


def _rhs_rational_argument_pt(pt):
    return rhs_rational_argument(complex(pt["s"]), int(pt["p"]), int(pt["q"]))


def _lhs_euler_rational(pt):
    m, p, q = int(pt["m"]), int(pt["p"]), int(pt["q"])
    return float(euler_polynomial(m)(Fraction(p, q)))


def _rhs_euler_rational(pt):
    m, p, q = int(pt["m"]), int(pt["p"]), int(pt["q"])
    acc = 0.0
    for r in range(1, q + 1):
        angle = (2 * r - 1) * math.pi * p / q - 0.5 * math.pi * m
        acc += math.sin(angle) * hurwitz_zeta(float(m + 1), (2 * r - 1) / (2 * q)).value.real
    return 4.0 * factorial(m) / (2 * q * math.pi) ** (m + 1) * acc


def _lhs_apostol_mult(pt):
    m, p, q = int(pt["m"]), int(pt["p"]), int(pt["q"])
    alpha = cmath.exp(2j * math.pi * p / q)
    return apostol_bernoulli(m + 1, 0.5, alpha)


def _rhs_apostol_mult(pt):
    return rhs_apostol_multiplication(int(pt["m"]), int(pt["p"]), int(pt["q"]))


def _lhs_eisenstein(pt):
    s = complex(pt["s"])
    p, q = int(pt["p"]), int(pt["q"])
    return hurwitz_zeta(s, (2 * p - 1) / (2 * q)).value


def _rhs_eisenstein_pt(pt):
    return rhs_eisenstein(complex(pt["s"]), int(pt["p"]), int(pt["q"]))


def _lhs_bernoulli_eisen(pt):
    m, p, q = int(pt["m"]), int(pt["p"]), int(pt["q"])
    return float(bernoulli_polynomial(m + 1)(Fraction(2 * p - 1, 2 * q)))


def _rhs_bernoulli_eisen(pt):
    m, p, q = int(pt["m"]), int(pt["p"]), int(pt["q"])
    acc = 0j
    for r in range(1, q + 1):
        root = cmath.exp(-2j * math.pi * (p - 1) * r / q)
        alpha = cmath.exp(2j * math.pi * r / q)
        acc += root * apostol_bernoulli(m + 1, 0.5, alpha)
    return acc / q ** (m + 1)


def _eisenstein_lerch_sum(s: complex, numerator: int, q: int) -> complex:
    """sum_{r=1}^{q} (2q)^s e^(-numerator pi i r / q) lerch_e(s, r/q) / q."""
    scale = (2.0 * q) ** s
    acc = 0j
    for r in range(1, q):
        acc += cmath.exp(-1j * math.pi * numerator * r / q) * lerch_e(s, r / q)
    acc += cmath.exp(-1j * math.pi * numerator) * (-dirichlet_lambda(s).value)
    return scale * acc / q


def _lhs_mul_dis(pt):
    s = complex(pt["s"])
    p, q = int(pt["p"]), int(pt["q"])
    if pt["variant"] == "euler-side":
        return lerch_e_rational(s, p, q)
    return _eisenstein_lerch_sum(s, 2 * p + 1, q)


def _rhs_mul_dis(pt):
    s = complex(pt["s"])
    p, q = int(pt["p"]), int(pt["q"])
    x = p / q
    if pt["variant"] == "euler-side":
        w = cmath.exp(0.5j * math.pi * (1.0 - s))
        pref = gamma(1.0 - s) / (2.0 * math.pi ** complex(1.0 - s))
        return pref * (
            w * zeta_e(1.0 - s, x).value - zeta_e(1.0 - s, 1.0 - x).value / w
        )
    w = cmath.exp(0.5j * math.pi * (1.0 - s))
    pref = gamma(1.0 - s) * math.pi ** complex(s - 1.0)
    return pref * (lerch_e(1.0 - s, x) / w - w * lerch_e(1.0 - s, 1.0 - x))


def _lhs_exp_sum(pt):
    m, alpha, n = int(pt["m"]), int(pt["alpha"]), int(pt["n"])
    acc = 0j
    for r in range(1, m):
        acc += (
            (-1.0) ** r
            * cmath.exp(-2j * math.pi * r * alpha / m)
            * lerch_e_neg_int(n - 1, r / m)
        )
    return acc


def _rhs_exp_sum(pt):
    m, alpha, n = int(pt["m"]), int(pt["alpha"]), int(pt["n"])
    frac = Fraction(2 * alpha, m) % 1
    e_val = euler_polynomial(n - 1)
    b_val = bernoulli_polynomial(n)
    euler_part = (
        Fraction((-1) ** (n - 1), 4)
        * (Fraction(m) ** n * e_val(frac) + euler_poly_at_zero(n - 1))
    )
    bern_part = Fraction(1, 2 * n) * (
        Fraction(m) ** n * b_val(frac) + b_val(Fraction(0))
    )
    return float(euler_part - bern_part)


def _lhs_recurrence(pt):
    s, x = float(pt["s"]), float(pt["x"])
    a = zeta_e(s, x)
    b = zeta_e(s, x + 1.0)
    return (a.value + b.value, a.est_error + b.est_error)


def _rhs_recurrence(pt):
    s, x = float(pt["s"]), float(pt["x"])
    return x ** (-s)


def _lhs_mult_odd(pt):
    s, k, x = float(pt["s"]), int(pt["k"]), float(pt["x"])
    z = zeta_e(s, k * x)
    return (z.value, z.est_error)


def _rhs_mult_odd(pt):
    s, k, x = float(pt["s"]), int(pt["k"]), float(pt["x"])
    acc = 0j
    est = 0.0
    for n in range(k):
        z = zeta_e(s, n / k + x)
        acc += (-1.0) ** n * z.value
        est += z.est_error
    return (k ** (-s) * acc, k ** (-s) * est)


def _lhs_taylor(pt):
    s, x = float(pt["s"]), float(pt["x"])
    return zeta_e(s, x).value - x ** (-s)


def _rhs_taylor(pt):
    s, x = float(pt["s"]), float(pt["x"])
    acc = 0j
    for n in range(40):
        binom = (-1.0) ** n * pochhammer(s, n) / factorial(n)
        acc += binom * zeta_e(s + n, 1.0).value * x**n
    return -acc


def _lhs_hz_fourier(pt):
    s, x = float(pt["s"]), float(pt["x"])
    return hurwitz_zeta(s, x).value


def _rhs_hz_fourier(pt):
    s, x = float(pt["s"]), float(pt["x"])
    n = np.arange(1, _HURWITZ_FOURIER_TERMS + 1, dtype=np.float64)
    total = float(np.sum(np.sin(2.0 * np.pi * x * n + 0.5 * math.pi * s) * n ** (s - 1.0)))
    return 2.0 * gamma(1.0 - s).real / (2.0 * math.pi) ** (1.0 - s) * total


def _lhs_euler_fourier(pt):
    return float(euler_polynomial(int(pt["n"]))(float(pt["x"]) % 1.0))


def _rhs_euler_fourier(pt):
    n, x = int(pt["n"]), float(pt["x"])
    k = np.arange(_FOURIER_TERMS, dtype=np.float64)
    odd = 2.0 * k + 1.0
    if pt["form"] == "sine":
        total = float(
            np.sum(np.sin(odd * np.pi * x - 0.5 * math.pi * n) / odd ** (n + 1))
        )
        return 4.0 * factorial(n) / math.pi ** (n + 1) * total
    # complex recombination of the even/odd series; the tabulated version
    # flips sign at odd n (see FINDINGS.md), this is the consistent form
    phase = np.exp(1j * np.pi * x * odd)
    total = complex(
        np.sum(((-1.0) ** n * phase - 1.0 / phase) / (odd * math.pi) ** (n + 1))
    )
    return 2.0 * (1j) ** (n - 1) * factorial(n) * total


def _lhs_bernoulli_fourier(pt):
    return float(bernoulli_polynomial(int(pt["n"]))(float(pt["x"]) % 1.0))


def _rhs_bernoulli_fourier(pt):
    n, x = int(pt["n"]), float(pt["x"])
    k = np.arange(1, _FOURIER_TERMS + 1, dtype=np.float64)
    phase = np.exp(2j * np.pi * x * k)
    total = complex(
        np.sum((phase + (-1.0) ** n / phase) / (2.0 * np.pi * k) ** n)
    )
    return -((-1j) ** n) * factorial(n) * total


# --------------------------------------------------------------------------
# exact layer
# --------------------------------------------------------------------------


def _lhs_euler_mean(pt):
    m = int(pt["m"])
    return (euler_polynomial(2 * m).integral_unit(), 0.0)


def _rhs_euler_mean(pt):
    m = int(pt["m"])
    if pt["form"] == "lambda":
        lam = dirichlet_lambda(2.0 * m + 2.0).value.real
        return 8.0 * factorial(2 * m) * (-1.0) ** m / math.pi ** (2 * m + 2) * lam
    return float(
        Fraction(-2 * factorial(2 * m), factorial(2 * m + 1))
        * euler_poly_at_zero(2 * m + 1)
    )


def _lhs_euler_prod(pt):
    m, n = int(pt["m"]), int(pt["n"])
    return (euler_polynomial(m) * euler_polynomial(n)).integral_unit()


def _rhs_euler_prod(pt):
    m, n = int(pt["m"]), int(pt["n"])
    return (
        2
        * Fraction((-1) ** (n + 1) * factorial(m) * factorial(n), factorial(m + n + 1))
        * euler_poly_at_zero(m + n + 1)
    )


def _lhs_euler_prod_quad(pt):
    m, n = int(pt["m"]), int(pt["n"])
    pm, pn = euler_polynomial(m), euler_polynomial(n)

    def f(x):
        return pm(x) * pn(x)

    return integrate_unit(IntegrandSpec(f), abs_tol=1e-12)


def _lhs_xn_euler(pt):
    n, m = int(pt["n"]), int(pt["m"])
    xn = [Fraction(0)] * n + [Fraction(1)]
    from .polynomials import RationalPolynomial

    return (RationalPolynomial(xn) * euler_polynomial(m - 1)).integral_unit()


def _rhs_xn_euler(pt):
    n, m = int(pt["n"]), int(pt["m"])
    acc = Fraction(0)
    for j in range(n + 1):
        acc += Fraction(comb(n, j), comb(m + j, j)) * euler_poly_at_zero(m + j)
    acc += euler_poly_at_zero(m + n) / comb(m + n, n)
    return Fraction((-1) ** m, m) * acc


def _lhs_remark(pt):
    variant, n = int(pt["variant"]), int(pt["n"])
    acc = Fraction(0)
    for j in range(n + 1):
        if variant == 1:
            acc += Fraction(comb(n, j), j + 1) * euler_poly_at_zero(j + 1)
        else:
            acc += Fraction(comb(n, j), (j + 1) * (j + 2)) * euler_poly_at_zero(j + 2)
    return acc


def _rhs_remark(pt):
    variant, n = int(pt["variant"]), int(pt["n"])
    if variant == 1:
        return -Fraction(1, n + 1) * (euler_poly_at_zero(n + 1) + 1)
    return -Fraction(1, 2 * (n + 1) * (n + 2)) * (2 * euler_poly_at_zero(n + 2) - n)


def _lhs_prod_betaform(pt):
    s, sp = float(pt["s"]), float(pt["sp"])
    return rhs_product_integral(s, sp, bool(pt["reflected"]))


def _rhs_prod_betaform(pt):
    from .zeta import beta_function

    s, sp = float(pt["s"]), float(pt["sp"])
    lam = dirichlet_lambda(s + sp - 1.0).value
    base = delta2(1.0 - s - sp) * beta_function(1.0 - s, 1.0 - sp) * lam
    if bool(pt["reflected"]):
        return base
    return (
        base
        * math.cos(0.5 * math.pi * (s - sp))
        / math.cos(0.5 * math.pi * (s + sp))
    )


# --------------------------------------------------------------------------
# scalar special-value identities
# --------------------------------------------------------------------------


def _lhs_lambda_even(pt):
    m = int(pt["m"])
    z = dirichlet_lambda(2.0 * m)
    return (z.value, z.est_error)


def _rhs_lambda_even(pt):
    m = int(pt["m"])
    return (
        (-1.0) ** m
        * math.pi ** (2 * m)
        / (4.0 * factorial(2 * m - 1))
        * float(euler_poly_at_zero(2 * m - 1))
    )


def _lhs_lambda_neg(pt):
    m = int(pt["m"])
    z = dirichlet_lambda(1.0 - m)
    return (z.value, z.est_error)


def _rhs_lambda_neg(pt):
    m = int(pt["m"])
    return (-1.0) ** (m + 1) * float(euler_poly_at_zero(m - 1)) / (2.0 * delta2(m - 1.0))


def _lhs_beta_odd(pt):
    m = int(pt["m"])
    z = dirichlet_beta(2.0 * m + 1.0)
    return (z.value, z.est_error)


def _rhs_beta_odd(pt):
    m = int(pt["m"])
    return (
        (-1.0) ** m
        * euler_number(2 * m)
        * math.pi ** (2 * m + 1)
        / (2.0 ** (2 * m + 2) * factorial(2 * m))
    )


def _lhs_beta_even_series_pt(pt):
    z = dirichlet_beta(2.0 * int(pt["m"]))
    return (z.value, z.est_error)


def _rhs_beta_even_series_pt(pt):
    return rhs_beta_even_series(int(pt["m"]), int(pt["max_n"]))


# --------------------------------------------------------------------------
# catalog assembly
# --------------------------------------------------------------------------

_S_GRID_WIDE = tuple(-0.5 * i for i in range(9))  # 0 .. -4
_S_GRID_PROD = tuple(-0.5 * i for i in range(7))  # 0 .. -3


@lru_cache(maxsize=1)
def build_catalog() -> dict:
    entries = [
        IdentitySpec(
            id="FOUR-SIN",
            source="sine Fourier coefficient of the alternating Hurwitz zeta",
            lhs=_lhs_fourier("sin"),
            rhs=lambda pt: rhs_fourier_coefficient("sin", float(pt["s"]), int(pt["k"])),
            domain=GridSpec.of(s=_S_GRID_WIDE, k=(0, 1, 2, 5)),
            tol_abs=1e-9,
        ),
        IdentitySpec(
            id="FOUR-COS",
            source="cosine Fourier coefficient of the alternating Hurwitz zeta",
            lhs=_lhs_fourier("cos"),
            rhs=lambda pt: rhs_fourier_coefficient("cos", float(pt["s"]), int(pt["k"])),
            domain=GridSpec.of(s=_S_GRID_WIDE, k=(0, 1, 2, 5)),
            tol_abs=1e-9,
        ),
        IdentitySpec(
            id="SIN-POW",
            source="transform of odd powers of sine",
            lhs=_lhs_trig_power("sin"),
            rhs=_rhs_trig_power("sin"),
            domain=GridSpec.of(n=(1, 2, 3), s=(0.0, -1.5, -3.0)),
        ),
        IdentitySpec(
            id="COS-POW",
            source="transform of odd powers of cosine",
            lhs=_lhs_trig_power("cos"),
            rhs=_rhs_trig_power("cos"),
            domain=GridSpec.of(n=(1, 2, 3), s=(0.0, -1.5, -3.0)),
        ),
        IdentitySpec(
            id="GEN-TRANSFORM",
            source="general Fourier-series transform against single harmonics",
            lhs=_lhs_general_transform,
            rhs=_rhs_general_transform,
            domain=GridSpec.of(f=("sin3", "cos1"), s=(0.0, -0.5, -1.0, -2.0, -3.0)),
        ),
        IdentitySpec(
            id="PROD-SAME",
            source="product integral of two alternating zetas, same orientation",
            lhs=_lhs_product(False),
            rhs=lambda pt: rhs_product_integral(float(pt["s"]), float(pt["sp"]), False),
            domain=GridSpec.of(s=_S_GRID_PROD, sp=_S_GRID_PROD),
        ),
        IdentitySpec(
            id="PROD-REFL",
            source="product integral with one factor reflected",
            lhs=_lhs_product(True),
            rhs=lambda pt: rhs_product_integral(float(pt["s"]), float(pt["sp"]), True),
            domain=GridSpec.of(s=_S_GRID_PROD, sp=_S_GRID_PROD),
        ),
        IdentitySpec(
            id="PROD-BETAFORM",
            source="beta-function form of the product integral",
            lhs=_lhs_prod_betaform,
            rhs=_rhs_prod_betaform,
            domain=GridSpec.of(
                constraint=lambda pt: _not_odd_integer(float(pt["s"]) + float(pt["sp"])),
                s=_S_GRID_PROD,
                sp=_S_GRID_PROD,
                reflected=(False, True),
            ),
        ),
        IdentitySpec(
            id="SQUARE",
            source="integral of the squared alternating zeta",
            lhs=_lhs_square(False),
            rhs=lambda pt: 2.0
            * gamma(1.0 - float(pt["s"])) ** 2
            * math.pi ** (2.0 * float(pt["s"]) - 2.0)
            * dirichlet_lambda(2.0 - 2.0 * float(pt["s"])).value,
            domain=GridSpec.of(s=_S_GRID_PROD),
        ),
        IdentitySpec(
            id="SQUARE-REFL",
            source="squared integral with reflection",
            lhs=_lhs_square(True),
            rhs=lambda pt: 2.0
            * gamma(1.0 - float(pt["s"])) ** 2
            * math.pi ** (2.0 * float(pt["s"]) - 2.0)
            * dirichlet_lambda(2.0 - 2.0 * float(pt["s"])).value
            * math.cos(math.pi * float(pt["s"])),
            domain=GridSpec.of(s=_S_GRID_PROD),
        ),
        IdentitySpec(
            id="HALF-INT",
            source="squared integral at half-integer arguments",
            lhs=lambda pt: _lhs_product(False)(
                {"s": 0.5 - int(pt["m"]), "sp": 0.5 - int(pt["m"])}
            ),
            rhs=lambda pt: 2.0
            * (factorial(2 * int(pt["m"])) / (2 ** (2 * int(pt["m"])) * factorial(int(pt["m"])))) ** 2
            * dirichlet_lambda(2.0 * int(pt["m"]) + 1.0).value.real
            / math.pi ** (2 * int(pt["m"])),
            domain=GridSpec.of(m=(1, 2)),
        ),
        IdentitySpec(
            id="EULER-TRANSFORM",
            source="transform of an Euler polynomial against the alternating zeta",
            lhs=_lhs_euler_transform,
            rhs=lambda pt: rhs_euler_transform(int(pt["m"]), float(pt["s"])),
            domain=GridSpec.of(m=(1, 2, 3, 4), s=(0.0, -0.5, -1.5, -2.5, -3.0)),
        ),
        IdentitySpec(
            id="MEAN",
            source="mean value of the alternating zeta over the unit interval",
            lhs=_lhs_mean,
            rhs=_rhs_mean,
            domain=GridSpec.of(s=_S_GRID_WIDE),
        ),
        IdentitySpec(
            id="EULER-MEAN",
            source="mean value of even Euler polynomials, two closed forms",
            lhs=_lhs_euler_mean,
            rhs=_rhs_euler_mean,
            domain=GridSpec.of(m=(0, 1, 2, 3, 4), form=("lambda", "shifted-zero")),
            tol_abs=1e-12,
            tol_rel=1e-12,
        ),
        IdentitySpec(
            id="EULER-PROD",
            source="product integral of two Euler polynomials (exact layer)",
            lhs=_lhs_euler_prod,
            rhs=_rhs_euler_prod,
            domain=GridSpec.of(m=tuple(range(9)), n=tuple(range(9))),
            exact=True,
        ),
        IdentitySpec(
            id="EULER-PROD-QUAD",
            source="quadrature spot-check of the Euler product integral",
            lhs=_lhs_euler_prod_quad,
            rhs=lambda pt: float(_rhs_euler_prod(pt)),
            domain=GridSpec.of(
                constraint=lambda pt: (pt["m"], pt["n"]) in ((1, 1), (2, 3), (0, 4)),
                m=(0, 1, 2),
                n=(1, 3, 4),
            ),
            tol_abs=1e-11,
        ),
        IdentitySpec(
            id="MOMENTS",
            source="power moments of the alternating zeta",
            lhs=_lhs_moment,
            rhs=lambda pt: rhs_moment(int(pt["n"]), float(pt["s"])),
            domain=GridSpec.of(n=(0, 1, 2, 3), s=(0.0, -0.5, -1.5, -2.5)),
        ),
        IdentitySpec(
            id="XN-EULER",
            source="power moments of Euler polynomials (exact layer)",
            lhs=_lhs_xn_euler,
            rhs=_rhs_xn_euler,
            domain=GridSpec.of(n=tuple(range(9)), m=tuple(range(1, 9))),
            exact=True,
        ),
        IdentitySpec(
            id="REMARK-IDS",
            source="binomial identities for Euler-polynomial values at zero",
            lhs=_lhs_remark,
            rhs=_rhs_remark,
            domain=GridSpec.of(variant=(1, 2), n=tuple(range(9))),
            exact=True,
        ),
        IdentitySpec(
            id="EXP-TRANSFORM",
            source="exponential transform via the lambda power series",
            lhs=_lhs_exp_transform,
            rhs=lambda pt: rhs_exp_transform(float(pt["t"]), float(pt["s"])),
            domain=GridSpec.of(t=(0.05, 0.15, 0.25, 0.35, 0.45), s=(0.0, -1.0, -2.0, -3.0)),
        ),
        IdentitySpec(
            id="EXP-EULER",
            source="exponential transform of Euler polynomials, tanh closed form",
            lhs=_lhs_exp_euler,
            rhs=_rhs_exp_euler,
            domain=GridSpec.of(t=(0.05, 0.15, 0.25, 0.35, 0.45), m=(0, 1, 2, 3, 4, 5)),
        ),
        IdentitySpec(
            id="SEC-TRANSFORM",
            source="secant transform of the odd-reflection difference",
            lhs=_lhs_secant_transform,
            rhs=lambda pt: rhs_secant_transform(float(pt["s"])),
            domain=GridSpec.of(s=(0.0, -0.5, -1.0, -1.5, -2.0, -2.5, -3.0)),
        ),
        IdentitySpec(
            id="SEC-EULER",
            source="secant transform of odd Euler polynomials",
            lhs=_lhs_sec_euler,
            rhs=lambda pt: (-1.0) ** int(pt["m"])
            * 4.0
            * factorial(2 * int(pt["m"]) - 1)
            / math.pi ** (2 * int(pt["m"]))
            * dirichlet_beta(2.0 * int(pt["m"])).value.real,
            domain=GridSpec.of(m=(1, 2, 3)),
        ),
        IdentitySpec(
            id="CATALAN",
            source="integral representations of Catalan's constant",
            lhs=_lhs_catalan,
            rhs=lambda pt: dirichlet_beta(2.0).value.real,
            domain=GridSpec.of(form=("half-minus-x", "g-e")),
            tol_abs=1e-9,
        ),
        IdentitySpec(
            id="BETA-EVEN",
            source="Euler-type series for beta at even integers",
            lhs=_lhs_beta_even_series_pt,
            rhs=_rhs_beta_even_series_pt,
            domain=GridSpec.of(m=(1, 2), max_n=(8,)),
            status="disputed",
            notes=(
                "The tabulated series diverges: its terms grow like 4^n/n with a "
                "fixed sign, because the secant Taylor expansion (radius 1/2) was "
                "integrated term by term across the full unit interval.  Reported "
                "side by side; see FINDINGS.md."
            ),
        ),
        IdentitySpec(
            id="BETA-EVEN-INT",
            source="integral form of beta at even integers",
            lhs=_lhs_beta_even_int,
            rhs=lambda pt: dirichlet_beta(2.0 * int(pt["m"])).value.real,
            domain=GridSpec.of(m=(1, 2, 3)),
        ),
        IdentitySpec(
            id="BETA-ODD",
            source="closed form of beta at odd integers via Euler numbers",
            lhs=_lhs_beta_odd,
            rhs=_rhs_beta_odd,
            domain=GridSpec.of(m=(0, 1, 2, 3)),
            tol_abs=1e-11,
            tol_rel=1e-11,
        ),
        IdentitySpec(
            id="LAMBDA-EVEN",
            source="closed form of lambda at even integers",
            lhs=_lhs_lambda_even,
            rhs=_rhs_lambda_even,
            domain=GridSpec.of(m=(1, 2, 3)),
            tol_abs=1e-12,
            tol_rel=1e-12,
        ),
        IdentitySpec(
            id="LAMBDA-NEG",
            source="lambda at nonpositive integers via Euler values at zero",
            lhs=_lhs_lambda_neg,
            rhs=_rhs_lambda_neg,
            domain=GridSpec.of(m=(2, 3, 4, 5, 6, 7, 8)),
            tol_abs=1e-12,
            tol_rel=1e-12,
        ),
        IdentitySpec(
            id="FUNC-EQ-ROUNDTRIP",
            source="functional equation composed with its inverse",
            lhs=_lhs_roundtrip,
            rhs=_rhs_roundtrip,
            domain=GridSpec.of(
                s=(-3.3, -2.4, -1.7, -0.6, 0.4, 1.3, 2.6, 3.7),
                x=(0.1, 0.25, 0.4, 0.6, 0.85),
            ),
            tol_abs=1e-10,
            tol_rel=1e-10,
        ),
        IdentitySpec(
            id="FUNC-EQ-ASYM",
            source="asymmetric functional equation relating zeta_e and lambda",
            lhs=_lhs_asym,
            rhs=_rhs_asym,
            domain=GridSpec.of(s=(2.0, 3.0, 4.5)),
            tol_abs=1e-10,
        ),
        IdentitySpec(
            id="LERCH-HALF",
            source="lerch_e at the symmetry point x = 1/2",
            lhs=_lhs_lerch_half,
            rhs=_rhs_lerch_half,
            domain=GridSpec.of(s=(-2.5, -1.5, -0.5, 0.5, 2.5)),
            tol_abs=1e-10,
        ),
        IdentitySpec(
            id="ZETA-LERCH-PROD",
            source="mixed product integral verified by algebraic composition",
            lhs=_lhs_zeta_lerch_composed,
            rhs=_rhs_zeta_lerch,
            domain=GridSpec.of(
                # composition route needs gamma(s) finite, so s stays off
                # the nonpositive integers; s = s' is the lambda(1) pole
                constraint=lambda pt: abs(float(pt["s"]) - float(pt["sp"])) >= 0.5,
                s=(-0.25, -0.75, -1.25, -1.75, -2.25, -2.75),
                sp=_S_GRID_PROD,
            ),
            tol_abs=1e-10,
            tol_rel=1e-10,
        ),
        IdentitySpec(
            id="ZL-BRACKET",
            source="phase-bracket trig identity behind the mixed product integral",
            lhs=_lhs_bracket,
            rhs=_rhs_bracket,
            domain=GridSpec.of(
                s=(-4.3, -3.4, -2.1, -1.6, -0.7, 0.3, 1.2, 2.8, 3.6, 4.9),
                sp=(-4.6, -3.1, -2.7, -1.2, -0.4, 0.6, 1.4, 2.3, 3.8, 4.2),
            ),
            tol_abs=1e-12,
            tol_rel=1e-12,
        ),
        IdentitySpec(
            id="REFL-REWRITE",
            source="reflection rewriting of the csc/sec coefficient forms",
            lhs=_lhs_refl_rewrite,
            rhs=_rhs_refl_rewrite,
            domain=GridSpec.of(kind=("sin", "cos"), s=(-0.5, -1.5, -2.5, -3.7), k=(1,)),
            tol_abs=1e-12,
            tol_rel=1e-12,
        ),
        IdentitySpec(
            id="RATIONAL-ARG",
            source="rational-argument expansion over Hurwitz zetas",
            lhs=_lhs_rational_argument,
            rhs=_rhs_rational_argument_pt,
            domain=GridSpec.of(
                constraint=lambda pt: pt["p"] <= pt["q"],
                s=(1.5, 2.0, 3.0, 1.5 + 0.5j),
                q=(1, 2, 3, 5),
                p=(1, 2, 3, 4, 5),
            ),
            tol_abs=1e-9,
        ),
        IdentitySpec(
            id="EULER-RATIONAL",
            source="Euler polynomials at rational arguments via Hurwitz sums",
            lhs=_lhs_euler_rational,
            rhs=_rhs_euler_rational,
            domain=GridSpec.of(
                constraint=lambda pt: pt["p"] <= pt["q"],
                m=(1, 2, 3, 4),
                q=(1, 2, 3, 5),
                p=(1, 2, 3, 4, 5),
            ),
            tol_abs=1e-9,
        ),
        IdentitySpec(
            id="APOSTOL-MULT",
            source="multiplication relation for Apostol-Bernoulli values",
            lhs=_lhs_apostol_mult,
            rhs=_rhs_apostol_mult,
            domain=GridSpec.of(
                constraint=lambda pt: pt["p"] < pt["q"],
                m=(0, 1, 2, 3, 4),
                q=(2, 3, 5),
                p=(1, 2, 3, 4),
            ),
            tol_abs=1e-12,
            tol_rel=1e-12,
        ),
        IdentitySpec(
            id="EISENSTEIN",
            source="root-of-unity inversion recovering the Hurwitz zeta",
            lhs=_lhs_eisenstein,
            rhs=_rhs_eisenstein_pt,
            domain=GridSpec.of(
                constraint=lambda pt: pt["p"] < pt["q"],
                s=(2.0, 3.0, -1.0, 0.5, -2.5),
                q=(2, 3, 5),
                p=(1, 2, 3, 4),
            ),
            tol_abs=1e-9,
        ),
        IdentitySpec(
            id="BERNOULLI-EISEN",
            source="Bernoulli corollary of the root-of-unity inversion",
            lhs=_lhs_bernoulli_eisen,
            rhs=_rhs_bernoulli_eisen,
            domain=GridSpec.of(
                constraint=lambda pt: pt["p"] < pt["q"],
                m=(0, 1, 2, 3, 4),
                q=(2, 3, 5),
                p=(1, 2, 3, 4),
            ),
            tol_abs=1e-9,
        ),
        IdentitySpec(
            id="MUL-DIS",
            source="multiplication-dispute pair; one side has an unbound variable",
            lhs=_lhs_mul_dis,
            rhs=_rhs_mul_dis,
            domain=GridSpec.of(
                # s stays off {2, 3, ...} where gamma(1-s) blows up in the
                # functional-equation side
                constraint=lambda pt: pt["p"] < pt["q"],
                variant=("euler-side", "hurwitz-side"),
                s=(0.5, -1.0),
                q=(2, 3),
                p=(1, 2),
            ),
            status="disputed",
            notes=(
                "The hurwitz-side right-hand expression depends on a free variable "
                "x absent from its left side; evaluated here with x bound to p/q. "
                "The euler-side pairing is consistent and matches."
            ),
        ),
        IdentitySpec(
            id="EULER-FOURIER",
            source="Fourier series of the periodic Euler polynomial extension",
            lhs=_lhs_euler_fourier,
            rhs=_rhs_euler_fourier,
            domain=GridSpec.of(
                n=(2, 3, 4, 5), x=(0.1, 0.25, 0.5, 0.7), form=("sine", "complex")
            ),
            tol_abs=1e-5,
            tol_rel=1e-5,
        ),
        IdentitySpec(
            id="BERNOULLI-FOURIER",
            source="Fourier series of the periodic Bernoulli polynomial extension",
            lhs=_lhs_bernoulli_fourier,
            rhs=_rhs_bernoulli_fourier,
            domain=GridSpec.of(n=(2, 3, 4), x=(0.1, 0.25, 0.5, 0.7)),
            tol_abs=1e-5,
            tol_rel=1e-5,
        ),
        IdentitySpec(
            id="EXP-SUM",
            source="root-of-unity exponential sum of lerch_e at nonpositive orders",
            lhs=_lhs_exp_sum,
            rhs=_rhs_exp_sum,
            domain=GridSpec.of(
                constraint=lambda pt: pt["alpha"] < pt["m"],
                m=(3, 5),
                alpha=(1, 2, 3, 4),
                n=(1, 2, 3, 4),
            ),
            status="disputed",
            notes=(
                "Left side validated against the functional-equation and "
                "Abel-summation oracles; the closed-form right side disagrees "
                "(already at m=3, alpha=1, n=1: lhs=-1 vs rhs=+1).  See FINDINGS.md."
            ),
        ),
        IdentitySpec(
            id="RECURRENCE",
            source="shift recurrence of the alternating zeta",
            lhs=_lhs_recurrence,
            rhs=_rhs_recurrence,
            domain=GridSpec.of(s=(-3.5, -1.0, 0.5, 2.0), x=(0.25, 0.5, 1.0)),
            tol_abs=1e-10,
            tol_rel=1e-10,
        ),
        IdentitySpec(
            id="MULT-ODD",
            source="odd multiplication relation of the alternating zeta",
            lhs=_lhs_mult_odd,
            rhs=_rhs_mult_odd,
            domain=GridSpec.of(k=(3, 5), s=(-1.5, 0.5, 2.0), x=(0.2, 0.3)),
            tol_abs=1e-10,
            tol_rel=1e-10,
        ),
        IdentitySpec(
            id="TAYLOR",
            source="Taylor expansion of the alternating zeta around small x",
            lhs=_lhs_taylor,
            rhs=_rhs_taylor,
            domain=GridSpec.of(s=(2.5,), x=(0.1, 0.25, 0.4, 0.5)),
            tol_abs=1e-8,
        ),
        IdentitySpec(
            id="HZ-FOURIER",
            source="Fourier expansion oracle for the Hurwitz zeta",
            lhs=_lhs_hz_fourier,
            rhs=_rhs_hz_fourier,
            domain=GridSpec.of(s=(-1.5,), x=(0.25, 0.75)),
            tol_abs=1e-6,
        ),
    ]
    catalog = {}
    for spec in entries:
        if spec.id in catalog:
            raise ValueError(f"duplicate identity id {spec.id}")
        catalog[spec.id] = spec
    return catalog


def catalog_as_json() -> str:
    """Catalog metadata (id, source, domain, status) as a JSON document."""
    import json

    payload = []
    for ident in sorted(build_catalog()):
        spec = build_catalog()[ident]
        payload.append(
            {
                "id": spec.id,
                "source": spec.source,
                "domain": {
                    name: [repr(v) if isinstance(v, complex) else v for v in values]
                    for name, values in spec.domain.axes
                },
                "constrained": spec.domain.constraint is not None,
                "status": spec.status,
                "tol_abs": spec.tol_abs,
                "tol_rel": spec.tol_rel,
                "exact": spec.exact,
                "notes": spec.notes,
            }
        )
    return json.dumps(payload, indent=2, sort_keys=True)
