"""Exact Bernoulli, Euler and Apostol-Bernoulli kernels.

Everything in this module is computed in exact rational arithmetic
(`fractions.Fraction`); floats only appear at explicit evaluation
boundaries such as `RationalPolynomial.__call__` with a float argument or
the Apostol-Bernoulli values at a complex weight.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence, Union

from .errors import DomainError

__all__ = [
    "RationalPolynomial",
    "apostol_bernoulli",
    "bernoulli_number",
    "bernoulli_polynomial",
    "delta2",
    "euler_number",
    "euler_poly_at_zero",
    "euler_polynomial",
    "pochhammer",
]

Scalar = Union[int, Fraction, float, complex]


class RationalPolynomial:
    """Univariate polynomial with exact rational coefficients.

    Coefficients are indexed by power of x; trailing zeros are trimmed on
    construction so ``degree`` is well defined.  Evaluation at an ``int`` or
    ``Fraction`` is exact; at a ``float`` or ``complex`` it rounds once per
    Horner step.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[Union[int, Fraction]]):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[Fraction, ...] = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x: Scalar):
        if isinstance(x, float):
            acc = 0.0
            for c in reversed(self.coefficients):
                acc = acc * x + float(c)
            return acc
        if isinstance(x, complex):
            acc_c = 0j
            for c in reversed(self.coefficients):
                acc_c = acc_c * x + float(c)
            return acc_c
        acc_q = Fraction(0)
        for c in reversed(self.coefficients):
            acc_q = acc_q * x + c
        return acc_q

    def shift(self, c: Union[int, Fraction]) -> "RationalPolynomial":
        """Return the polynomial p(x + c)."""
        c = Fraction(c)
        n = len(self.coefficients)
        out = [Fraction(0)] * n
        for k, a in enumerate(self.coefficients):
            # binomial expansion of a*(x+c)^k
            power = Fraction(1)
            for j in range(k, -1, -1):
                out[j] += a * comb(k, j) * power
                power *= c
        return RationalPolynomial(out)

    def integral_unit(self) -> Fraction:
        """Exact integral over [0, 1]."""
        return sum(
            (c / (k + 1) for k, c in enumerate(self.coefficients)),
            start=Fraction(0),
        )

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return RationalPolynomial(out)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-1) * other

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients))
            for i, a in enumerate(self.coefficients):
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return RationalPolynomial(out)
        return RationalPolynomial([Fraction(other) * c for c in self.coefficients])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalPolynomial)
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"RationalPolynomial({list(self.coefficients)!r})"


_cache_lock = threading.Lock()
_bernoulli_cache: list[Fraction] = [Fraction(1)]
_euler_cache: list[int] = [1]


def bernoulli_number(m: int) -> Fraction:
    """Bernoulli number B_m (convention B_1 = -1/2), exact and memoized.

    Uses the triangular recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0.
    """
    if m < 0:
        raise DomainError("bernoulli_number: index must be >= 0")
    if m >= len(_bernoulli_cache):
        with _cache_lock:
            while m >= len(_bernoulli_cache):
                n = len(_bernoulli_cache)
                if n > 1 and n % 2 == 1:
                    _bernoulli_cache.append(Fraction(0))
                    continue
                acc = Fraction(0)
                for k in range(n):
                    acc += comb(n + 1, k) * _bernoulli_cache[k]
                _bernoulli_cache.append(-acc / (n + 1))
    return _bernoulli_cache[m]


def euler_number(m: int) -> int:
    """Integer Euler number E_m = 2^m E_m(1/2); odd-index values are 0.

    Even-index values follow the sech recurrence
    sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0 for n >= 1.
    """
    if m < 0:
        raise DomainError("euler_number: index must be >= 0")
    if m % 2 == 1:
        return 0
    half = m // 2
    if half >= len(_euler_cache):
        with _cache_lock:
            while half >= len(_euler_cache):
                n = len(_euler_cache)
                acc = 0
                for j in range(n):
                    acc += comb(2 * n, 2 * j) * _euler_cache[j]
                _euler_cache.append(-acc)
    return _euler_cache[half]


@lru_cache(maxsize=512)
def bernoulli_polynomial(m: int) -> RationalPolynomial:
    """Bernoulli polynomial B_m(x) = sum_k C(m,k) B_k x^(m-k), exact."""
    if m < 0:
        raise DomainError("bernoulli_polynomial: index must be >= 0")
    coeffs = [Fraction(0)] * (m + 1)
    for k in range(m + 1):
        coeffs[m - k] = comb(m, k) * bernoulli_number(k)
    return RationalPolynomial(coeffs)


@lru_cache(maxsize=512)
def euler_polynomial(m: int) -> RationalPolynomial:
    """Euler polynomial E_m(x) = sum_i C(m,i) (E_i / 2^i) (x - 1/2)^(m-i)."""
    if m < 0:
        raise DomainError("euler_polynomial: index must be >= 0")
    acc = RationalPolynomial([0])
    base = RationalPolynomial([Fraction(-1, 2), Fraction(1)])  # x - 1/2
    powers = [RationalPolynomial([1])]
    for _ in range(m):
        powers.append(powers[-1] * base)
    for i in range(0, m + 1, 2):  # odd Euler numbers vanish
        weight = Fraction(euler_number(i), 2**i)
        acc = acc + comb(m, i) * weight * powers[m - i]
    return acc


def euler_poly_at_zero(m: int) -> Fraction:
    """E_m(0) = (2/(m+1)) (1 - 2^(m+1)) B_(m+1), exact."""
    if m < 0:
        raise DomainError("euler_poly_at_zero: index must be >= 0")
    return Fraction(2, m + 1) * (1 - 2 ** (m + 1)) * bernoulli_number(m + 1)


def apostol_bernoulli(m: int, a: float, alpha: complex) -> complex:
    """Apostol-Bernoulli value B_m(a, alpha).

    For alpha within 1e-12 of 1 this is the classical Bernoulli polynomial
    value B_m(a).  Otherwise the coefficients of z e^(az) / (alpha e^z - 1)
    satisfy the triangular system

        B_0 = 0,
        B_m = (m a^(m-1) - alpha * sum_{k<m} C(m,k) B_k) / (alpha - 1),

    obtained by multiplying the generating function through by
    (alpha e^z - 1) and matching coefficients of z^m / m!.
    """
    if m < 0:
        raise DomainError("apostol_bernoulli: index must be >= 0")
    alpha = complex(alpha)
    if abs(alpha - 1.0) <= 1e-12:
        return complex(bernoulli_polynomial(m)(float(a)))
    a = float(a)
    values = [0j]  # B_0(a, alpha) = 0 for alpha != 1
    for n in range(1, m + 1):
        acc = 0j
        for k in range(n):
            acc += comb(n, k) * values[k]
        values.append((n * a ** (n - 1) - alpha * acc) / (alpha - 1.0))
    return values[m]


def pochhammer(s: complex, k: int) -> complex:
    """Rising factorial (s)_k = s (s+1) ... (s+k-1), with (s)_0 = 1."""
    if k < 0:
        raise DomainError("pochhammer: k must be >= 0")
    acc: complex = 1
    for j in range(k):
        acc *= s + j
    return acc


def delta2(s: float) -> float:
    """The ratio (1 - 2^(s+1)) / (1 - 2^s); undefined at s = 0."""
    if s == 0:
        raise DomainError("delta2: undefined at s = 0")
    return (1.0 - 2.0 ** (s + 1)) / (1.0 - 2.0**s)
