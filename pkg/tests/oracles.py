"""Independent oracles used to pin expected values.

Everything here is deliberately primitive and separate from the package's
evaluation routes: exact generating-function series division, raw partial
sums with elementary tail corrections, alternating-sum averaging, and
Abel regularization by radial extrapolation.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np


def series_quotient(num, den, n_terms):
    """Coefficients of num(z)/den(z) to order n_terms - 1; den[0] != 0."""
    out = []
    for n in range(n_terms):
        acc = num[n] if n < len(num) else type(den[0])(0)
        for k in range(n):
            if n - k < len(den):
                acc -= out[k] * den[n - k]
        out.append(acc / den[0])
    return out


def bernoulli_series(n_terms):
    """B_m via exact division of 1 by (e^z - 1)/z = sum z^k/(k+1)!."""
    den = [Fraction(1, math.factorial(k + 1)) for k in range(n_terms)]
    q = series_quotient([Fraction(1)], den, n_terms)
    return [q[m] * math.factorial(m) for m in range(n_terms)]


def euler_number_series(n_terms):
    """Integer Euler numbers via exact division of 1 by cosh's series."""
    den = [
        Fraction(1, math.factorial(k)) if k % 2 == 0 else Fraction(0)
        for k in range(n_terms)
    ]
    q = series_quotient([Fraction(1)], den, n_terms)
    values = [q[m] * math.factorial(m) for m in range(n_terms)]
    assert all(v.denominator == 1 for v in values)
    return [int(v) for v in values]


def euler_at_zero_series(n_terms):
    """E_m(0) via exact division of 2 by e^z + 1."""
    den = [Fraction(1 + (k == 0), math.factorial(k)) for k in range(n_terms)]
    q = series_quotient([Fraction(2)], den, n_terms)
    return [q[m] * math.factorial(m) for m in range(n_terms)]


def apostol_bernoulli_series(m, a, alpha, n_terms=None):
    """B_m(a, alpha) by complex power-series division of z e^(az)/(alpha e^z - 1)."""
    n_terms = n_terms or (m + 2)
    num = [0j] + [a**k / math.factorial(k) for k in range(n_terms - 1)]
    den = [alpha / math.factorial(k) - (k == 0) for k in range(n_terms)]
    q = series_quotient(num, den, n_terms)
    return q[m] * math.factorial(m)


def zeta_series_tail(s, x, n_head=2 * 10**6):
    """Hurwitz zeta for Re(s) > 1 by raw summation + integral tail.

    Tail uses only the elementary bound terms (no Bernoulli corrections),
    so this stays independent of the Euler-Maclaurin evaluator.
    """
    n = np.arange(n_head, dtype=np.float64)
    head = float(np.sum((n + x) ** (-s)))
    base = n_head + x
    return head + base ** (1.0 - s) / (s - 1.0) + 0.5 * base ** (-s)


def alternating_sum_averaged(terms):
    """Sum of sum_k (-1)^k a_k by iterated averaging of partial sums."""
    partial = []
    acc = 0.0
    for k, a in enumerate(terms):
        acc += a if k % 2 == 0 else -a
        partial.append(acc)
    row = partial
    while len(row) > 1:
        row = [(u + v) / 2.0 for u, v in zip(row[:-1], row[1:])]
    return row[0]


def beta_alternating(s, n_terms=40):
    """Dirichlet beta by averaged alternating partial sums."""
    return alternating_sum_averaged([(2 * k + 1) ** (-s) for k in range(n_terms)])


def eta_alternating(s, x=1.0, n_terms=48):
    """Alternating zeta sum_n (-1)^n/(n+x)^(-s) by averaged partial sums."""
    return alternating_sum_averaged([(k + x) ** (-s) for k in range(n_terms)])


def neville_to_zero(us, ys):
    """Polynomial extrapolation of y(u) to u = 0."""
    ys = list(ys)
    n = len(ys)
    for level in range(1, n):
        for i in range(n - level):
            ys[i] = ys[i + 1] + (ys[i + 1] - ys[i]) * us[i + level] / (
                us[i] - us[i + level]
            )
    return ys[0]


def abel_lerch(power, x, us=None):
    """Abel regularization of sum_n (2n+1)^power e^((2n+1) pi i x).

    Evaluates the power series at radius r = 1 - u and extrapolates u -> 0.
    The ladder deepens with the power so the polynomial extrapolation keeps
    up with the growing derivatives in u.
    """
    if us is None:
        us = tuple(0.02 * 2.0**-i for i in range(7 + 2 * power))
    values = []
    for u in us:
        r = 1.0 - u
        n_terms = int(max(64, 45.0 / u))
        n = np.arange(n_terms, dtype=np.float64)
        odd = 2.0 * n + 1.0
        z_pow = r**odd * np.exp(1j * math.pi * x * odd)
        values.append(complex(np.sum(odd**power * z_pow)))
    return neville_to_zero(list(us), values)
