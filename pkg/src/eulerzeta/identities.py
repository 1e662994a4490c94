"""Identity verification harness: grid types, closed-form right sides,
point checks and the suite runner.

Each catalog entry (see :mod:`eulerzeta.catalog`) pairs an independently
computed left side (quadrature or series) with a closed-form right side
over a parameter grid.  ``check_identity`` produces one verdict per grid
point; ``run_suite`` iterates the catalog deterministically.
"""

from __future__ import annotations

import cmath
import fnmatch
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator, Mapping, Optional, Sequence, Union

from .errors import DomainError
from .polynomials import (
    bernoulli_polynomial,
    delta2,
    euler_number,
    euler_poly_at_zero,
    pochhammer,
)
from .quadrature import QuadratureResult
from .zeta import dirichlet_beta, dirichlet_lambda, gamma, hurwitz_zeta, lerch_e, transcendental_f

__all__ = [
    "GridSpec",
    "IdentityCheckReport",
    "IdentitySpec",
    "beta_even_series_terms",
    "check_identity",
    "report_to_csv",
    "report_to_json_lines",
    "rhs_apostol_multiplication",
    "rhs_beta_even_series",
    "rhs_eisenstein",
    "rhs_euler_transform",
    "rhs_exp_transform",
    "rhs_fourier_coefficient",
    "rhs_moment",
    "rhs_product_integral",
    "rhs_rational_argument",
    "rhs_secant_transform",
    "run_suite",
    "suite_summary",
]

Value = Union[int, float, complex, Fraction]
Point = dict


# --------------------------------------------------------------------------
# grids
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class GridSpec:
    """Cartesian parameter grid with an optional constraint predicate.

    ``axes`` maps axis names to finite value lists; iteration order is the
    cartesian product with the first axis slowest, which makes the point
    order deterministic and lexicographic in the declared axis order.
    """

    axes: tuple[tuple[str, tuple[Value, ...]], ...]
    constraint: Optional[Callable[[Point], bool]] = None

    @staticmethod
    def of(constraint: Optional[Callable[[Point], bool]] = None, **axes) -> "GridSpec":
        packed = tuple((name, tuple(values)) for name, values in axes.items())
        grid = GridSpec(packed, constraint)
        if not list(grid.points()):
            raise DomainError("GridSpec: empty after constraint filtering")
        return grid

    def points(self) -> Iterator[Point]:
        def recurse(i: int, acc: Point):
            if i == len(self.axes):
                if self.constraint is None or self.constraint(acc):
                    yield dict(acc)
                return
            name, values = self.axes[i]
            for v in values:
                acc[name] = v
                yield from recurse(i + 1, acc)
            del acc[name]

        yield from recurse(0, {})

    def override(self, replacements: Mapping[str, Sequence[Value]]) -> "GridSpec":
        names = {name for name, _ in self.axes}
        unknown = set(replacements) - names
        if unknown:
            raise DomainError(f"GridSpec: unknown axes {sorted(unknown)}")
        packed = tuple(
            (name, tuple(replacements.get(name, values)))
            for name, values in self.axes
        )
        grid = GridSpec(packed, self.constraint)
        if not list(grid.points()):
            raise DomainError("GridSpec: override empties the grid")
        return grid


# --------------------------------------------------------------------------
# identity specifications and reports
# --------------------------------------------------------------------------

Evaluator = Callable[[Point], Union[Value, tuple, QuadratureResult]]


@dataclass(frozen=True)
class IdentitySpec:
    """One catalog entry: an lhs/rhs evaluator pair over a domain grid."""

    id: str
    source: str  # short description of where the relation comes from
    lhs: Evaluator
    rhs: Evaluator
    domain: GridSpec
    tol_abs: float = 1e-8
    tol_rel: float = 1e-7
    status: str = "asserted"  # or "disputed"
    exact: bool = False  # both sides are exact rationals; zero error required
    notes: str = ""


@dataclass(frozen=True)
class IdentityCheckReport:
    identity: str
    point: Point
    lhs_value: complex
    rhs_value: complex
    abs_err: float
    rel_err: float
    est_error: float  # combined evaluator error estimates
    evaluations: int
    subdivisions: int
    converged: Optional[bool]
    verdict: str  # pass / fail / skipped
    status: str
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "point": {k: _encode_value(v) for k, v in self.point.items()},
            "lhs": _encode_value(self.lhs_value),
            "rhs": _encode_value(self.rhs_value),
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "est_error": self.est_error,
            "evaluations": self.evaluations,
            "subdivisions": self.subdivisions,
            "converged": self.converged,
            "verdict": self.verdict,
            "status": self.status,
            "detail": self.detail,
        }


def _encode_value(v):
    if isinstance(v, Fraction):
        return {"fraction": f"{v.numerator}/{v.denominator}"}
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, float, str)):
        return v
    return repr(v)


def _normalize(result):
    """Coerce an evaluator result to (value, est_error, evals, subdivisions, converged)."""
    if isinstance(result, QuadratureResult):
        return (
            result.value,
            result.est_error,
            result.evaluations,
            result.subdivisions,
            result.converged,
        )
    if isinstance(result, tuple):
        value, est = result
        return value, float(est), 0, 0, None
    return result, 0.0, 0, 0, None


def check_identity(spec: IdentitySpec, point: Point) -> IdentityCheckReport:
    """Evaluate one grid point and return the verdict.

    Evaluator exceptions yield a ``skipped`` verdict with the diagnostic
    attached; they never propagate.  Quadrature error estimates are added
    to the absolute pass threshold.
    """
    try:
        lhs_raw = spec.lhs(point)
        rhs_raw = spec.rhs(point)
    except Exception as exc:  # harness contract: never crash on a point
        return IdentityCheckReport(
            identity=spec.id,
            point=dict(point),
            lhs_value=complex("nan"),
            rhs_value=complex("nan"),
            abs_err=math.inf,
            rel_err=math.inf,
            est_error=math.inf,
            evaluations=0,
            subdivisions=0,
            converged=None,
            verdict="skipped",
            status=spec.status,
            detail=f"{type(exc).__name__}: {exc}",
        )
    lhs_v, lhs_e, ev1, sub1, conv1 = _normalize(lhs_raw)
    rhs_v, rhs_e, ev2, sub2, conv2 = _normalize(rhs_raw)
    if spec.exact and isinstance(lhs_v, Fraction) and isinstance(rhs_v, Fraction):
        exact_equal = lhs_v == rhs_v
        diff = abs(float(lhs_v - rhs_v))
        abs_err = 0.0 if exact_equal else (diff if diff > 0 else math.inf)
        denom = abs(float(rhs_v))
        rel_err = 0.0 if exact_equal else (abs_err / denom if denom else math.inf)
        verdict = "pass" if exact_equal else "fail"
        return IdentityCheckReport(
            identity=spec.id,
            point=dict(point),
            lhs_value=complex(float(lhs_v)),
            rhs_value=complex(float(rhs_v)),
            abs_err=abs_err,
            rel_err=rel_err,
            est_error=0.0,
            evaluations=0,
            subdivisions=0,
            converged=None,
            verdict=verdict,
            status=spec.status,
        )
    lhs_c = complex(lhs_v) if not isinstance(lhs_v, complex) else lhs_v
    rhs_c = complex(rhs_v) if not isinstance(rhs_v, complex) else rhs_v
    abs_err = abs(lhs_c - rhs_c)
    denom = abs(rhs_c)
    rel_err = abs_err / denom if denom > 0 else math.inf
    est = lhs_e + rhs_e
    passed = abs_err <= spec.tol_abs + est or rel_err <= spec.tol_rel
    converged = None
    for c in (conv1, conv2):
        if c is not None:
            converged = c if converged is None else (converged and c)
    return IdentityCheckReport(
        identity=spec.id,
        point=dict(point),
        lhs_value=lhs_c,
        rhs_value=rhs_c,
        abs_err=abs_err,
        rel_err=rel_err,
        est_error=est,
        evaluations=ev1 + ev2,
        subdivisions=sub1 + sub2,
        converged=converged,
        verdict="pass" if passed else "fail",
        status=spec.status,
    )


def run_suite(
    pattern: str = "",
    grid_overrides: Optional[Mapping[str, Mapping[str, Sequence[Value]]]] = None,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
    jobs: int = 1,
    catalog: Optional[Mapping[str, IdentitySpec]] = None,
) -> list[IdentityCheckReport]:
    """Run every catalog identity whose id matches ``pattern``.

    Iteration is deterministic: ids sorted alphabetically, points in grid
    order.  With ``jobs > 1`` points are evaluated on a thread pool and the
    reports re-sorted into the same deterministic order afterwards.
    """
    if catalog is None:
        from .catalog import build_catalog

        catalog = build_catalog()
    ids = sorted(catalog)
    if pattern:
        ids = [i for i in ids if fnmatch.fnmatchcase(i, pattern)]
    tasks: list[tuple[int, IdentitySpec, Point]] = []
    for ident in ids:
        spec = catalog[ident]
        if tol_abs is not None or tol_rel is not None:
            spec = IdentitySpec(
                id=spec.id,
                source=spec.source,
                lhs=spec.lhs,
                rhs=spec.rhs,
                domain=spec.domain,
                tol_abs=tol_abs if tol_abs is not None else spec.tol_abs,
                tol_rel=tol_rel if tol_rel is not None else spec.tol_rel,
                status=spec.status,
                exact=spec.exact,
                notes=spec.notes,
            )
        domain = spec.domain
        if grid_overrides and spec.id in grid_overrides:
            domain = domain.override(grid_overrides[spec.id])
        for point in domain.points():
            tasks.append((len(tasks), spec, point))
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            indexed = list(
                pool.map(lambda t: (t[0], check_identity(t[1], t[2])), tasks)
            )
        indexed.sort(key=lambda pair: pair[0])
        return [report for _, report in indexed]
    return [check_identity(spec, point) for _, spec, point in tasks]


def suite_summary(reports: Sequence[IdentityCheckReport]) -> dict:
    """Aggregate counts; disputed identities never count as failures."""
    counts = {"pass": 0, "fail": 0, "skipped": 0, "disputed": 0, "total": len(reports)}
    for r in reports:
        if r.status == "disputed":
            counts["disputed"] += 1
        elif r.verdict == "pass":
            counts["pass"] += 1
        elif r.verdict == "fail":
            counts["fail"] += 1
        else:
            counts["skipped"] += 1
    return counts


def report_to_json_lines(reports: Sequence[IdentityCheckReport]) -> str:
    return "\n".join(
        json.dumps(r.as_dict(), sort_keys=True, allow_nan=True) for r in reports
    ) + ("\n" if reports else "")


_CSV_COLUMNS = (
    "identity",
    "verdict",
    "status",
    "point",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_err",
    "rel_err",
    "est_error",
    "evaluations",
    "subdivisions",
    "converged",
    "detail",
)


def report_to_csv(reports: Sequence[IdentityCheckReport]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for r in reports:
        point = json.dumps(
            {k: _encode_value(v) for k, v in r.point.items()}, sort_keys=True
        )
        writer.writerow(
            [
                r.identity,
                r.verdict,
                r.status,
                point,
                repr(r.lhs_value.real),
                repr(r.lhs_value.imag),
                repr(r.rhs_value.real),
                repr(r.rhs_value.imag),
                repr(r.abs_err),
                repr(r.rel_err),
                repr(r.est_error),
                r.evaluations,
                r.subdivisions,
                r.converged,
                r.detail,
            ]
        )
    return buf.getvalue()


# --------------------------------------------------------------------------
# closed-form right sides
# --------------------------------------------------------------------------


def rhs_fourier_coefficient(kind: str, s: float, k: int) -> complex:
    """Fourier coefficient of zeta_e against sin/cos((2k+1) pi x), s <= 0.

    Pole-free rewriting of the csc/sec forms through the reflection
    formula: sin-kind -> pi^(s-1) (2k+1)^(s-1) Gamma(1-s) cos(pi s/2),
    cos-kind -> same with sin(pi s/2).
    """
    if kind not in ("sin", "cos"):
        raise DomainError("rhs_fourier_coefficient: kind must be 'sin' or 'cos'")
    if s > 0:
        raise DomainError("rhs_fourier_coefficient: requires s <= 0")
    pref = math.pi ** (s - 1.0) * (2 * k + 1) ** (s - 1.0) * gamma(1.0 - s)
    trig = math.cos(0.5 * math.pi * s) if kind == "sin" else math.sin(0.5 * math.pi * s)
    return pref * trig


def rhs_product_integral(s: float, sp: float, reflected: bool) -> complex:
    """Closed form of int zeta_e(s', x) zeta_e(s, +/-x) dx for s, s' <= 0."""
    if s > 0 or sp > 0:
        raise DomainError("rhs_product_integral: requires s, s' <= 0")
    angle = (s + sp) if reflected else (s - sp)
    lam = dirichlet_lambda(2.0 - s - sp).value
    return (
        2.0
        * gamma(1.0 - s)
        * gamma(1.0 - sp)
        * math.pi ** (s + sp - 2.0)
        * lam
        * math.cos(0.5 * math.pi * angle)
    )


def rhs_euler_transform(m: int, s: float) -> complex:
    """Closed form of int E_{m-1}(x) zeta_e(s, x) dx, s <= 0, m >= 1."""
    if m < 1:
        raise DomainError("rhs_euler_transform: requires m >= 1")
    if s > 0:
        raise DomainError("rhs_euler_transform: requires s <= 0")
    lam = dirichlet_lambda(s - m).value
    return (
        (-1.0) ** (m + 1)
        * 2.0
        * delta2(m - s)
        * factorial(m - 1)
        * lam
        / pochhammer(1.0 - s, m)
    )


def rhs_moment(n: int, s: float) -> complex:
    """Closed form of the moments int x^n zeta_e(s, x) dx, s <= 0."""
    if n < 0:
        raise DomainError("rhs_moment: requires n >= 0")
    if s > 0:
        raise DomainError("rhs_moment: requires s <= 0")
    acc: complex = 0.0
    for j in range(n + 1):
        lam = dirichlet_lambda(s - j - 1.0).value
        acc += (
            comb(n, j)
            * (-1.0) ** j
            * delta2(j - s + 1.0)
            * factorial(j)
            * lam
            / pochhammer(1.0 - s, j + 1)
        )
    lam = dirichlet_lambda(s - n - 1.0).value
    acc += (
        (-1.0) ** n
        * delta2(n - s + 1.0)
        * factorial(n)
        * lam
        / pochhammer(1.0 - s, n + 1)
    )
    return acc


def rhs_exp_transform(t: float, s: float) -> complex:
    """Closed form of int e^(2 pi t x) zeta_e(s, x) dx for |t| <= 0.45, s <= 0.

    The |t| bound keeps the argument 2it of the lambda power series inside
    its certified disc.
    """
    if abs(t) > 0.45:
        raise DomainError("rhs_exp_transform: requires |t| <= 0.45")
    if s > 0:
        raise DomainError("rhs_exp_transform: requires s <= 0")
    fval = transcendental_f(2j * t, s)
    projected = (cmath.exp(0.5j * math.pi * s) * fval).real
    return (
        2.0
        * (math.exp(2.0 * math.pi * t) + 1.0)
        * gamma(1.0 - s).real
        * math.pi ** (s - 2.0)
        * projected
    )


def rhs_secant_transform(s: float) -> complex:
    """Closed form of (1/2) int G_E(s, x) sec(pi x) dx, s <= 0."""
    if s > 0:
        raise DomainError("rhs_secant_transform: requires s <= 0")
    return (
        2.0
        * gamma(1.0 - s).real
        * math.pi ** (s - 1.0)
        * math.sin(0.5 * math.pi * s)
        * dirichlet_beta(1.0 - s).value
    )


def beta_even_series_terms(m: int, max_n: int) -> list[float]:
    """Terms of the tabulated Euler-type series for beta(2m).

    term_n = (-1)^(n+m) pi^(2m+2n) E_{2n} / 4
             * sum_{j=1}^{n} E_{2m+2j-1}(0) / ((2n-2j+1)! (2m+2j-1)!)

    Inner coefficients are exact rationals, converted to float only when
    the term is assembled.
    """
    if m < 1:
        raise DomainError("beta_even_series_terms: requires m >= 1")
    terms = []
    for n in range(1, max_n + 1):
        inner = Fraction(0)
        for j in range(1, n + 1):
            inner += euler_poly_at_zero(2 * m + 2 * j - 1) / (
                factorial(2 * n - 2 * j + 1) * factorial(2 * m + 2 * j - 1)
            )
        scale = Fraction(euler_number(2 * n), 4) * inner
        term = (-1.0) ** (n + m) * math.pi ** (2 * m + 2 * n) * float(scale)
        terms.append(term)
    return terms


def rhs_beta_even_series(m: int, max_n: int) -> float:
    """Partial sum of the Euler-type series for beta(2m) up to max_n terms."""
    return math.fsum(beta_even_series_terms(m, max_n))


def rhs_rational_argument(s: complex, p: int, q: int) -> complex:
    """Hurwitz-sum form of zeta_e(1-s, p/q).

    (2 Gamma(s) / (2 q pi)^s) sum_{r=0}^{q-1}
        cos(pi s/2 - (2r+1) pi p/q) zeta(s, (2r+1)/(2q)).
    """
    if not (1 <= p <= q):
        raise DomainError("rhs_rational_argument: requires 1 <= p <= q")
    s = complex(s)
    acc = 0j
    for r in range(q):
        angle = 0.5 * math.pi * s - (2 * r + 1) * math.pi * p / q
        acc += cmath.cos(angle) * hurwitz_zeta(s, (2 * r + 1) / (2 * q)).value
    return 2.0 * gamma(s) * (2.0 * q * math.pi) ** (-s) * acc


def rhs_eisenstein(s: complex, p: int, q: int) -> complex:
    """Root-of-unity average of lerch_e reproducing zeta(s, (2p-1)/(2q)).

    (1/q) sum_{r=1}^{q} (2q)^s e^(-(2p-1) pi i r/q) lerch_e(s, r/q); the
    r = q term uses lerch_e at x = 1, which equals -lambda(s).
    """
    if not (1 <= p < q):
        raise DomainError("rhs_eisenstein: requires 1 <= p < q")
    s = complex(s)
    scale = (2.0 * q) ** s
    acc = 0j
    for r in range(1, q):
        root = cmath.exp(-1j * math.pi * (2 * p - 1) * r / q)
        acc += root * lerch_e(s, r / q)
    # x = 1 term: every series phase is e^((2n+1) pi i) = -1
    root_q = cmath.exp(-1j * math.pi * (2 * p - 1))
    acc += root_q * (-dirichlet_lambda(s).value)
    return scale * acc / q


def rhs_apostol_multiplication(m: int, p: int, q: int) -> complex:
    """Multiplication-side value q^m sum_r e^(2(r-1) pi i p/q) B_{m+1}((2r-1)/(2q)).

    Bernoulli polynomial values are exact rationals; the roots of unity
    bring in the only floating point.
    """
    if not (1 <= p < q):
        raise DomainError("rhs_apostol_multiplication: requires 1 <= p < q")
    poly = bernoulli_polynomial(m + 1)
    acc = 0j
    for r in range(1, q + 1):
        root = cmath.exp(2j * math.pi * (r - 1) * p / q)
        acc += root * float(poly(Fraction(2 * r - 1, 2 * q)))
    return q**m * acc
