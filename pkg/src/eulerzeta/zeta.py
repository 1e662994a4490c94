"""Full-plane numerical evaluation of the zeta-function family.

Covers the Hurwitz zeta function (Euler-Maclaurin summation), its
alternating deformation ``zeta_e``, the Dirichlet lambda and beta
functions, the Lerch-type exponential counterpart ``lerch_e``, the power
Dirichlet series ``phi_lerch``, the lambda power series
``transcendental_f`` and the gamma/beta special functions.

Everything is binary64.  Evaluators are pure and reentrant; the only
shared state is append-only memoization in :mod:`eulerzeta.polynomials`
and a value cache for scalar zeta values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .errors import DomainError, PoleError
from .polynomials import bernoulli_number

__all__ = [
    "EvalOptions",
    "ZetaValue",
    "beta_function",
    "dirichlet_beta",
    "dirichlet_lambda",
    "g_e",
    "gamma",
    "hurwitz_zeta",
    "lerch_e",
    "lerch_e_neg_int",
    "lerch_e_rational",
    "phi_lerch",
    "riemann_zeta",
    "transcendental_f",
    "zeta_e",
    "zeta_e_fourier",
]

_EPS = 2.2e-16
# perturbation step for removable s = 1 singularities in differences
_POLE_SHIFT = 1e-6


@dataclass(frozen=True)
class EvalOptions:
    """Tuning knobs for series/Euler-Maclaurin evaluation."""

    target_abs_tol: float = 1e-13
    max_series_terms: int = 10**6
    em_tail_start: Optional[int] = None  # N; adaptive when None
    em_correction_terms: int = 15  # M, hard cap 30

    def __post_init__(self):
        if self.target_abs_tol <= 0:
            raise DomainError("EvalOptions: target_abs_tol must be > 0")
        if self.em_correction_terms > 30:
            raise DomainError("EvalOptions: em_correction_terms capped at 30")


DEFAULT_OPTIONS = EvalOptions()


@dataclass(frozen=True)
class ZetaValue:
    """An evaluated value together with an error estimate and route tag."""

    value: complex
    est_error: float
    method: str

    def __post_init__(self):
        if self.est_error < 0:
            raise ValueError("est_error must be >= 0")


# --------------------------------------------------------------------------
# gamma / beta
# --------------------------------------------------------------------------

# Lanczos g = 7, n = 9 coefficient set; ~1e-14 relative accuracy in double
# precision over the right half-plane.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _is_nonpositive_integer(s: complex) -> bool:
    return s.imag == 0.0 and s.real <= 0.0 and s.real == math.floor(s.real)


def gamma(s: complex) -> complex:
    """Gamma function via Lanczos approximation with reflection.

    Raises :class:`PoleError` exactly at the poles s = 0, -1, -2, ...
    """
    s = complex(s)
    if _is_nonpositive_integer(s):
        raise PoleError(f"gamma: pole at s = {s.real:g}")
    if s.real < 0.5:
        # reflection: gamma(s) gamma(1-s) = pi / sin(pi s)
        return math.pi / (cmath.sin(math.pi * s) * gamma(1.0 - s))
    z = s - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i in range(1, 9):
        acc += _LANCZOS_COEFFS[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    value = math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * acc
    if s.imag == 0.0:
        return complex(value.real, 0.0)
    return value


def beta_function(s: complex, t: complex) -> complex:
    """Euler beta B(s, t) = gamma(s) gamma(t) / gamma(s + t)."""
    return gamma(s) * gamma(t) / gamma(complex(s) + complex(t))


# --------------------------------------------------------------------------
# Hurwitz zeta via Euler-Maclaurin
# --------------------------------------------------------------------------

# B_{2k} / (2k)! as floats, k = 1 .. 31 (covers M <= 30 plus the first
# omitted term used for the error estimate)
_B2K_OVER_FACT = tuple(
    float(bernoulli_number(2 * k) / Fraction(math.factorial(2 * k)))
    for k in range(1, 32)
)


def _em_tail_start(s: complex, m_corr: int, opts: EvalOptions) -> int:
    if opts.em_tail_start is not None:
        return max(2, opts.em_tail_start)
    if s.real >= 0.0:
        n = max(10.0, abs(s.imag), s.real + 2.0 * m_corr)
    else:
        # head terms grow like n^|Re s|; keep N small to limit the rounding
        # noise of the head/tail cancellation while the correction terms
        # still decrease (2M + |Re s| < 2 pi (N + x))
        n = max(10.0, abs(s.imag), (2.0 * m_corr - s.real) / 4.0)
    return int(math.ceil(n))


def _hurwitz_real(s: float, x: float, n_start: int, m_corr: int):
    head = 0.0
    head_abs = 0.0
    for n in range(n_start):
        t = (n + x) ** (-s)
        head += t
        head_abs += abs(t)
    base = n_start + x
    value = head + base ** (1.0 - s) / (s - 1.0) + 0.5 * base ** (-s)
    poch = s  # (s)_{2k-1}, starting at k = 1
    power = base ** (-s - 1.0)
    inv_base2 = base**-2.0
    for k in range(1, m_corr + 1):
        value += _B2K_OVER_FACT[k - 1] * poch * power
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        power *= inv_base2
    omitted = abs(_B2K_OVER_FACT[m_corr] * poch * power)
    est = omitted + _EPS * (head_abs + abs(value))
    return value, est


def _hurwitz_complex(s: complex, x: float, n_start: int, m_corr: int):
    head = 0j
    head_abs = 0.0
    for n in range(n_start):
        t = (n + x) ** (-s)
        head += t
        head_abs += abs(t)
    base = n_start + x
    value = head + base ** (1.0 - s) / (s - 1.0) + 0.5 * base ** (-s)
    poch = s
    power = base ** (-s - 1.0)
    inv_base2 = base**-2.0
    for k in range(1, m_corr + 1):
        value += _B2K_OVER_FACT[k - 1] * poch * power
        poch *= (s + 2 * k - 1) * (s + 2 * k)
        power *= inv_base2
    omitted = abs(_B2K_OVER_FACT[m_corr] * poch * power)
    est = omitted + _EPS * (head_abs + abs(value))
    return value, est


def hurwitz_zeta(
    s: complex, x: float, opts: EvalOptions = DEFAULT_OPTIONS
) -> ZetaValue:
    """Hurwitz zeta zeta(s, x) for x > 0, any s != 1.

    Euler-Maclaurin: a head sum over n < N, the integral tail
    (N+x)^(1-s)/(s-1) + (N+x)^(-s)/2, and M Bernoulli correction terms
    B_{2k}/(2k)! (s)_{2k-1} (N+x)^(-s-2k+1).  N is scaled up with |s| so
    the correction series is asymptotically decreasing; the reported
    error is the first omitted correction term plus a rounding floor.
    """
    s = complex(s)
    if x <= 0.0:
        raise DomainError("hurwitz_zeta: requires x > 0")
    if s == 1.0:
        raise PoleError("hurwitz_zeta: pole at s = 1")
    if _is_nonpositive_integer(s):
        # Euler-Maclaurin is exact here but badly cancellative (head terms
        # ~ N^|s|); the Bernoulli special value is well conditioned instead.
        from .polynomials import bernoulli_polynomial

        m = int(-s.real)
        value = -bernoulli_polynomial(m + 1)(float(x)) / (m + 1)
        est = 5e-16 * (1.0 + abs(value)) * (m + 1)
        return ZetaValue(complex(value), est, "closed-form")
    m_corr = min(opts.em_correction_terms, 30)
    n_start = _em_tail_start(s, m_corr, opts)
    if s.imag == 0.0:
        value, est = _hurwitz_real(s.real, x, n_start, m_corr)
        return ZetaValue(complex(value), est, "euler-maclaurin")
    value, est = _hurwitz_complex(s, x, n_start, m_corr)
    return ZetaValue(value, est, "euler-maclaurin")


def riemann_zeta(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> ZetaValue:
    """Riemann zeta as the x = 1 case of the Hurwitz zeta function."""
    return hurwitz_zeta(s, 1.0, opts)


# scalar value caches; keyed on the exact complex argument
_lambda_cache: dict[complex, ZetaValue] = {}
_beta_cache: dict[complex, ZetaValue] = {}


def dirichlet_lambda(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> ZetaValue:
    """Odd-denominator zeta lambda(s) = (1 - 2^(-s)) zeta(s), s != 1."""
    s = complex(s)
    cached = _lambda_cache.get(s)
    if cached is not None:
        return cached
    z = riemann_zeta(s, opts)
    factor = 1.0 - 2.0 ** (-s)
    result = ZetaValue(factor * z.value, abs(factor) * z.est_error, z.method)
    _lambda_cache[s] = result
    return result


def _alternating_sum(term, n: int = 50) -> complex:
    """Accelerated sum of sum_k (-1)^k term(k) (Cohen-Rodriguez-Zagier)."""
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    acc = 0j
    for k in range(n):
        c = b - c
        acc += c * term(k)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return acc / d


def dirichlet_beta(s: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> ZetaValue:
    """Dirichlet beta function; entire, no preconditions.

    Away from s = 1 this is 4^(-s) (zeta(s, 1/4) - zeta(s, 3/4)); the two
    poles at s = 1 cancel, so near s = 1 the accelerated alternating
    series is used instead of the ill-conditioned difference.
    """
    s = complex(s)
    cached = _beta_cache.get(s)
    if cached is not None:
        return cached
    if abs(s - 1.0) <= 0.5:
        value = _alternating_sum(lambda k: (2 * k + 1) ** (-s))
        result = ZetaValue(value, 1e-15 * (1.0 + abs(value)), "direct-series")
    else:
        za = hurwitz_zeta(s, 0.25, opts)
        zb = hurwitz_zeta(s, 0.75, opts)
        factor = 4.0 ** (-s)
        value = factor * (za.value - zb.value)
        est = abs(factor) * (za.est_error + zb.est_error)
        result = ZetaValue(value, est, "hurwitz-difference")
    _beta_cache[s] = result
    return result


# --------------------------------------------------------------------------
# Hurwitz-type Euler zeta
# --------------------------------------------------------------------------


def _zeta_e_difference(s: complex, x: float, opts: EvalOptions):
    za = hurwitz_zeta(s, x / 2.0, opts)
    zb = hurwitz_zeta(s, (x + 1.0) / 2.0, opts)
    factor = 2.0 ** (-s)
    return factor * (za.value - zb.value), abs(factor) * (
        za.est_error + zb.est_error
    )


def zeta_e(s: complex, x: float, opts: EvalOptions = DEFAULT_OPTIONS) -> ZetaValue:
    """Alternating Hurwitz zeta sum_n (-1)^n / (n+x)^s, entire in s.

    Evaluated for all s through the Hurwitz difference
    2^(-s) (zeta(s, x/2) - zeta(s, (x+1)/2)); the s = 1 pole of each term
    cancels and is handled by averaging evaluations at s = 1 +/- h.
    """
    s = complex(s)
    if x <= 0.0:
        raise DomainError("zeta_e: requires x > 0")
    if abs(s - 1.0) <= 1e-8:
        vp, ep = _zeta_e_difference(s + _POLE_SHIFT, x, opts)
        vm, em = _zeta_e_difference(s - _POLE_SHIFT, x, opts)
        value = 0.5 * (vp + vm)
        est = max(ep, em) + 0.5 * _POLE_SHIFT * abs(vp - vm)
        return ZetaValue(value, est, "hurwitz-difference-perturbed")
    value, est = _zeta_e_difference(s, x, opts)
    return ZetaValue(value, est, "hurwitz-difference")


def zeta_e_fourier(s: complex, x: float, terms: int) -> ZetaValue:
    """Truncated Fourier expansion of zeta_e, valid for Re(s) < 1, 0 < x <= 1.

    (2 Gamma(1-s) / pi^(1-s)) sum_{n<terms} sin((2n+1) pi x + pi s/2)
    / (2n+1)^(1-s).  Serves as an independent oracle for :func:`zeta_e`.
    """
    s = complex(s)
    if not (0.0 < x <= 1.0):
        raise DomainError("zeta_e_fourier: requires 0 < x <= 1")
    if s.real >= 1.0:
        raise DomainError("zeta_e_fourier: requires Re(s) < 1")
    if terms < 1:
        raise DomainError("zeta_e_fourier: requires terms >= 1")
    odd = np.arange(1, 2 * terms, 2, dtype=np.float64)
    phase = np.pi * x * odd
    half_shift = 0.5 * math.pi * s
    if s.imag == 0.0:
        sines = np.sin(phase + half_shift.real)
        total = complex(np.sum(sines * odd ** (s.real - 1.0)))
    else:
        sines = np.sin(phase) * cmath.cos(half_shift) + np.cos(phase) * cmath.sin(
            half_shift
        )
        total = complex(np.sum(sines * odd ** complex(s - 1.0)))
    prefactor = 2.0 * gamma(1.0 - s) * math.pi ** -complex(1.0 - s)
    # Dirichlet-test tail bound: partial sums of sin((2n+1) pi x + c) are
    # bounded by 1/|sin(pi x)|
    tail = (
        2.0
        * (2.0 * terms + 1.0) ** (s.real - 1.0)
        / max(abs(math.sin(math.pi * x)), 1e-3)
    )
    est = abs(prefactor) * (tail + _EPS * terms ** max(s.real, 0.0))
    return ZetaValue(prefactor * total, est, "fourier-expansion")


def g_e(s: complex, x: float) -> complex:
    """Odd reflection difference zeta_e(s, x) - zeta_e(s, 1-x), 0 < x < 1."""
    if not (0.0 < x < 1.0):
        raise DomainError("g_e: requires 0 < x < 1")
    return zeta_e(s, x).value - zeta_e(s, 1.0 - x).value


# --------------------------------------------------------------------------
# Lerch-type Euler zeta and relatives
# --------------------------------------------------------------------------


def _lerch_direct_series(s: complex, x: float, max_terms: int) -> complex:
    sin_px = abs(math.sin(math.pi * x))
    # tail bound 2 (2N+1)^(-Re s) / (2 |sin(pi x)|) below 1e-13
    target = 1e-13 * sin_px
    n_terms = int(min(max_terms, math.ceil((1.0 / target) ** (1.0 / s.real) / 2.0)))
    n_terms = max(n_terms, 8)
    odd = np.arange(1, 2 * n_terms, 2, dtype=np.float64)
    phases = np.exp(1j * np.pi * x * odd)
    if s.imag == 0.0:
        weights = odd ** (-s.real)
    else:
        weights = odd ** complex(-s)
    return complex(np.sum(phases * weights))


def _lerch_continuation(s: complex, x: float, opts: EvalOptions) -> complex:
    w = cmath.exp(0.5j * math.pi * (1.0 - s))
    zx = zeta_e(1.0 - s, x, opts).value
    zr = zeta_e(1.0 - s, 1.0 - x, opts).value
    pref = gamma(1.0 - s) / (2.0 * math.pi ** complex(1.0 - s))
    return pref * (w * zx - zr / w)


def lerch_e(s: complex, x: float, opts: EvalOptions = DEFAULT_OPTIONS) -> complex:
    """Lerch-type Euler zeta sum_n e^((2n+1) pi i x) / (2n+1)^s, 0 < x < 1.

    The defining series is used for Re(s) > 1; elsewhere the functional
    equation transfers the evaluation to :func:`zeta_e` at 1 - s.  The
    continuation agrees with the Abel regularization of the series at
    nonpositive integer s (see :func:`lerch_e_neg_int`).
    """
    s = complex(s)
    if not (0.0 < x < 1.0):
        raise DomainError("lerch_e: requires 0 < x < 1")
    if s == 1.0:
        # sum z^(2n+1)/(2n+1) = artanh(z) on the open unit arc
        return cmath.atanh(cmath.exp(1j * math.pi * x))
    if s == 0.0:
        # Abel-regularized geometric sum; avoids the continuation's
        # zeta_e(1, .) perturbation
        return 0.5j / math.sin(math.pi * x)
    if abs(s - 1.0) <= 1e-8:
        vp = _lerch_continuation(s + _POLE_SHIFT, x, opts)
        vm = _lerch_continuation(s - _POLE_SHIFT, x, opts)
        return 0.5 * (vp + vm)
    if s.real > 1.0:
        near_int = abs(s - round(s.real)) <= 1e-8
        if near_int or s.real >= 1.7:
            return _lerch_direct_series(s, x, opts.max_series_terms)
    return _lerch_continuation(s, x, opts)


def lerch_e_rational(
    s: complex, p: int, q: int, opts: EvalOptions = DEFAULT_OPTIONS
) -> complex:
    """lerch_e at x = p/q as a finite Hurwitz-zeta combination, any s.

    (2q)^(-s) sum_{r=1}^{q} e^((2r-1) pi i p/q) zeta(s, (2r-1)/(2q)).
    Valid on the whole s-plane by continuation of the Hurwitz zeta; the
    s = 1 poles cancel for p < q and are handled by perturbation.
    """
    s = complex(s)
    if not (1 <= p <= q):
        raise DomainError("lerch_e_rational: requires 1 <= p <= q")
    if abs(s - 1.0) <= 1e-8:
        if p == q:
            raise PoleError("lerch_e_rational: pole at s = 1 for integer x")
        vp = lerch_e_rational(s + _POLE_SHIFT, p, q, opts)
        vm = lerch_e_rational(s - _POLE_SHIFT, p, q, opts)
        return 0.5 * (vp + vm)
    acc = 0j
    for r in range(1, q + 1):
        root = cmath.exp(1j * math.pi * (2 * r - 1) * p / q)
        acc += root * hurwitz_zeta(s, (2 * r - 1) / (2 * q), opts).value
    return (2.0 * q) ** (-s) * acc


def lerch_e_neg_int(m: int, x: float) -> complex:
    """lerch_e at s = -m via the Apostol-Bernoulli special value.

    ell_{E,-m}(x) = -2^m e^(pi i x) B_{m+1}(1/2, e^(2 pi i x)) / (m+1).
    """
    from .polynomials import apostol_bernoulli

    if m < 0:
        raise DomainError("lerch_e_neg_int: requires m >= 0")
    if not (0.0 < x < 1.0):
        raise DomainError("lerch_e_neg_int: requires 0 < x < 1")
    alpha = cmath.exp(2j * math.pi * x)
    value = apostol_bernoulli(m + 1, 0.5, alpha)
    return -(2.0**m) * cmath.exp(1j * math.pi * x) * value / (m + 1)


def phi_lerch(
    x: float, a: float, s: complex, opts: EvalOptions = DEFAULT_OPTIONS
) -> complex:
    """Power Dirichlet series phi(x, a, s) = sum_n e^(2 n pi i x) / (n+a)^s.

    Routes: integer x reduces to the Hurwitz zeta; nonpositive integer s
    uses the Apostol-Bernoulli special value -B_{m+1}(a, e^(2 pi i x))/(m+1);
    Re(s) > 1 sums the series directly; a = 1/2 maps through lerch_e via
    phi(x, 1/2, s) = 2^s e^(-pi i x) lerch_e(s, x).
    """
    from .polynomials import apostol_bernoulli

    s = complex(s)
    if a <= 0.0:
        raise DomainError("phi_lerch: requires a > 0")
    x_frac = x - math.floor(x)
    if abs(x_frac) <= 1e-12 or abs(x_frac - 1.0) <= 1e-12:
        return hurwitz_zeta(s, a, opts).value
    if (
        s.imag == 0.0
        and s.real <= 1e-9
        and abs(s.real - round(s.real)) <= 1e-9
    ):
        m = int(round(-s.real))
        alpha = cmath.exp(2j * math.pi * x)
        return -apostol_bernoulli(m + 1, a, alpha) / (m + 1)
    if s.real > 1.0:
        sin_px = abs(math.sin(math.pi * x_frac))
        target = 1e-13 * sin_px
        n_terms = int(
            min(
                opts.max_series_terms,
                max(8, math.ceil((1.0 / target) ** (1.0 / s.real))),
            )
        )
        n = np.arange(n_terms, dtype=np.float64)
        phases = np.exp(2j * np.pi * x_frac * n)
        if s.imag == 0.0:
            weights = (n + a) ** (-s.real)
        else:
            weights = (n + a) ** complex(-s)
        return complex(np.sum(phases * weights))
    if a == 0.5:
        return 2.0 ** complex(s) * cmath.exp(-1j * math.pi * x_frac) * lerch_e(
            s, x_frac, opts
        )
    raise DomainError(
        "phi_lerch: continuation for Re(s) <= 1 requires a = 1/2, an integer x, "
        "or s at a nonpositive integer"
    )


def transcendental_f(
    x: complex, s: complex, opts: EvalOptions = DEFAULT_OPTIONS
) -> complex:
    """Lambda power series F(x, s) = sum_{n>=0} lambda(n+2-s) x^n, |x| < 1.

    Arguments with |x| >= 0.95 are rejected so the geometric tail bound
    stays certifiable (lambda(k) -> 1 as k grows).
    """
    x = complex(x)
    s = complex(s)
    r = abs(x)
    if r >= 0.95:
        raise DomainError("transcendental_f: requires |x| < 0.95")
    first = dirichlet_lambda(2.0 - s).value
    if r == 0.0:
        return first  # 0^0 = 1 convention: only the n = 0 term survives
    acc = first
    power = complex(1.0)
    scale = max(abs(first), 1.0)
    for n in range(1, 2048):
        power *= x
        lam = dirichlet_lambda(n + 2.0 - s).value
        acc += lam * power
        bound = max(abs(lam), 1.3) * r ** (n + 1) / (1.0 - r)
        if bound < opts.target_abs_tol * scale:
            break
    return acc
