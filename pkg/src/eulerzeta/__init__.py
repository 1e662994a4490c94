"""Hurwitz-type Euler zeta functions and a numerical identity harness.

The package has four layers: exact rational polynomial kernels
(:mod:`eulerzeta.polynomials`), binary64 evaluators for the zeta family
(:mod:`eulerzeta.zeta`), adaptive quadrature on [0, 1]
(:mod:`eulerzeta.quadrature`), and the identity catalog plus grid runner
(:mod:`eulerzeta.identities`, :mod:`eulerzeta.catalog`).  ``eulerzeta.cli``
exposes everything on the command line.
"""

from .errors import DomainError, PoleError
from .polynomials import (
    RationalPolynomial,
    apostol_bernoulli,
    bernoulli_number,
    bernoulli_polynomial,
    delta2,
    euler_number,
    euler_poly_at_zero,
    euler_polynomial,
    pochhammer,
)
from .quadrature import IntegrandSpec, QuadratureResult, integrate_oscillatory, integrate_unit
from .zeta import (
    EvalOptions,
    ZetaValue,
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

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EvalOptions",
    "IntegrandSpec",
    "PoleError",
    "QuadratureResult",
    "RationalPolynomial",
    "ZetaValue",
    "apostol_bernoulli",
    "bernoulli_number",
    "bernoulli_polynomial",
    "beta_function",
    "delta2",
    "dirichlet_beta",
    "dirichlet_lambda",
    "euler_number",
    "euler_poly_at_zero",
    "euler_polynomial",
    "g_e",
    "gamma",
    "hurwitz_zeta",
    "integrate_oscillatory",
    "integrate_unit",
    "lerch_e",
    "lerch_e_neg_int",
    "lerch_e_rational",
    "phi_lerch",
    "pochhammer",
    "riemann_zeta",
    "transcendental_f",
    "zeta_e",
    "zeta_e_fourier",
]
