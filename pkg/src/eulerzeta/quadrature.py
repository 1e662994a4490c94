"""Adaptive quadrature on [0, 1] for complex-valued integrands.

Two panel rules cooperate: adaptive Gauss-Kronrod (G7, K15) bisection on
smooth panels, and a level-refined tanh-sinh rule on panels abutting a
flagged singular endpoint or an interior split point.  Tanh-sinh nodes
never touch their endpoints, so removable 0/0 points and integrable
endpoint singularities u^(theta-1) with theta > 0 are integrated without
patching the integrand.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import DomainError

__all__ = ["IntegrandSpec", "QuadratureResult", "integrate_oscillatory", "integrate_unit"]

MAX_SUBDIVISIONS = 4096
_TS_MAX_LEVEL = 9
_TS_INITIAL_LEVEL = 3

# QUADPACK (G7, K15) nodes and weights on [-1, 1]
_K15_NODES = (
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
)
_K15_WEIGHTS = (
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
)
_G7_WEIGHTS = {1: 0.129484966168870, 3: 0.279705391489277, 5: 0.381830050505119, 7: 0.417959183673469}


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    est_error: float
    evaluations: int
    subdivisions: int
    converged: bool


@dataclass(frozen=True)
class IntegrandSpec:
    """An integrand on [0, 1] with structural hints.

    ``split_points`` are interior abscissas where the integrand has a
    removable singularity (the quadrature never samples them);
    ``left_exponent`` / ``right_exponent`` flag integrable endpoint
    behaviour ~ u^(theta-1) (theta > 0).
    """

    evaluator: Callable[[float], complex]
    split_points: tuple[float, ...] = ()
    left_exponent: Optional[float] = None
    right_exponent: Optional[float] = None

    def __post_init__(self):
        pts = tuple(sorted(self.split_points))
        if any(not (0.0 < p < 1.0) for p in pts):
            raise DomainError("IntegrandSpec: split points must lie strictly inside (0, 1)")
        if len(set(pts)) != len(pts):
            raise DomainError("IntegrandSpec: split points must be distinct")
        object.__setattr__(self, "split_points", pts)
        for theta in (self.left_exponent, self.right_exponent):
            if theta is not None and theta <= 0.0:
                raise DomainError("IntegrandSpec: endpoint exponent hint requires theta > 0")


def _safe_eval(f, x: float):
    try:
        v = complex(f(x))
    except (OverflowError, ZeroDivisionError):
        return None
    if math.isfinite(v.real) and math.isfinite(v.imag):
        return v
    return None


def _gauss_kronrod(f, a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)
    kronrod = 0j
    gauss = 0j
    bad = 0
    for i, u in enumerate(_K15_NODES):
        wk = _K15_WEIGHTS[i]
        wg = _G7_WEIGHTS.get(i)
        if u == 0.0:
            fv = _safe_eval(f, mid)
            if fv is None:
                bad += 1
                fv = 0j
            kronrod += wk * fv
            gauss += wg * fv
            continue
        fp = _safe_eval(f, mid + half * u)
        fm = _safe_eval(f, mid - half * u)
        if fp is None:
            bad += 1
            fp = 0j
        if fm is None:
            bad += 1
            fm = 0j
        kronrod += wk * (fp + fm)
        if wg is not None:
            gauss += wg * (fp + fm)
    value = kronrod * half
    err = abs(kronrod - gauss) * abs(half)
    if bad:
        err = max(err, abs(value)) + abs(half)
    return value, err, 15, bad


class _TanhSinhPanel:
    """Level-refined tanh-sinh rule on [a, b]; endpoints are never sampled.

    A flagged singular endpoint away from zero carries an irreducible
    representation floor: abscissas can approach it only to ~4 eps |e|, so
    the unresolvable mass under u^(theta-1) is folded into the error.
    """

    def __init__(self, f, a: float, b: float, theta_left=None, theta_right=None):
        self.f = f
        self.a = a
        self.b = b
        self.half = 0.5 * (b - a)
        self.level = 0
        self.gsum = 0j  # running sum of transformed integrand values
        self.value = 0j
        self.prev_value: Optional[complex] = None
        self.err = math.inf
        self.evaluations = 0
        self.bad_nodes = 0
        self.floor_err = 0.0
        for endpoint, theta, sign in ((a, theta_left, 1.0), (b, theta_right, -1.0)):
            if theta is None or theta >= 1.0 or endpoint == 0.0:
                continue
            probe = 1e-10
            fv = _safe_eval(f, endpoint + sign * probe)
            if fv is None:
                continue
            delta = 4.0 * 2.2e-16 * abs(endpoint)
            self.floor_err += abs(fv) * probe ** (1.0 - theta) * delta**theta / theta
        h = 2.0 ** -_TS_INITIAL_LEVEL
        self.gsum += self._node(0.0)
        self._sweep(h, step=1)
        self.level = _TS_INITIAL_LEVEL
        self.value = self.gsum * self.half * h
        self.refine()  # one refinement up front so err is a level difference

    def _node(self, t: float) -> complex:
        w = 0.5 * math.pi * math.sinh(t)
        if abs(w) > 350.0:
            return 0j  # abscissa indistinguishable from the endpoint
        cosh_w = math.cosh(w)
        weight = 0.5 * math.pi * math.cosh(t) / (cosh_w * cosh_w)
        if t >= 0.0:
            offset = self.half * 2.0 / (math.exp(2.0 * w) + 1.0)
            x = self.b - offset
            at_end = offset == 0.0 or x >= self.b
        else:
            offset = self.half * 2.0 / (math.exp(-2.0 * w) + 1.0)
            x = self.a + offset
            at_end = offset == 0.0 or x <= self.a
        if at_end:
            return 0j
        fv = complex(self.f(x))
        self.evaluations += 1
        if not (math.isfinite(fv.real) and math.isfinite(fv.imag)):
            self.bad_nodes += 1
            return 0j
        contrib = weight * fv
        if not (math.isfinite(contrib.real) and math.isfinite(contrib.imag)):
            self.bad_nodes += 1
            return 0j
        return contrib

    def _sweep(self, h: float, step: int):
        # walk outward on both sides; stop a side once contributions are
        # negligible past |t| = 3 or the abscissa collapses onto an endpoint
        for direction in (1.0, -1.0):
            k = 1  # step 2 visits only odd multiples (the new level's nodes)
            negligible = 0
            while True:
                t = direction * k * h
                contrib = self._node(t)
                self.gsum += contrib
                mag = abs(contrib)
                scale = max(abs(self.gsum), 1e-300)
                if abs(t) > 3.0 and mag < 1e-18 * scale:
                    negligible += 1
                    if negligible >= 3:
                        break
                else:
                    negligible = 0
                if abs(t) > 7.0 or k > 20000:
                    break
                k += step

    def refine(self):
        if self.level >= _TS_MAX_LEVEL:
            return False
        self.level += 1
        h = 2.0**-self.level
        self._sweep(h, step=2)
        new_value = self.gsum * self.half * h
        self.prev_value = self.value
        self.value = new_value
        self.err = (
            abs(new_value - self.prev_value)
            + self.floor_err
            + 1e-16 * abs(new_value)
        )
        return True

    @property
    def exhausted(self) -> bool:
        return self.level >= _TS_MAX_LEVEL or self.bad_nodes > 10


class _GKPanel:
    def __init__(self, f, a: float, b: float):
        self.f = f
        self.a = a
        self.b = b
        self.value, self.err, self.evaluations, self.bad_nodes = _gauss_kronrod(f, a, b)


def _requested_tolerance(abs_tol: float, rel_tol: float, total: complex) -> float:
    tol = 0.0
    if abs_tol > 0.0:
        tol = abs_tol
    if rel_tol > 0.0:
        tol = max(tol, rel_tol * abs(total))
    return tol


def _initial_boundaries(spec: IntegrandSpec) -> list[float]:
    return [0.0, *spec.split_points, 1.0]


def _run(panels: list, abs_tol: float, rel_tol: float) -> QuadratureResult:
    total = sum(p.value for p in panels)
    total_err = sum(p.err for p in panels)
    evaluations = sum(p.evaluations for p in panels)
    subdivisions = 0
    counter = 0
    heap: list = []
    for p in panels:
        heapq.heappush(heap, (-p.err, counter, p))
        counter += 1
    done: list = []
    while heap:
        if total_err <= _requested_tolerance(abs_tol, rel_tol, total):
            break
        if subdivisions >= MAX_SUBDIVISIONS:
            break
        neg_err, _, panel = heapq.heappop(heap)
        if -neg_err != panel.err:
            continue  # stale entry
        if isinstance(panel, _TanhSinhPanel):
            if panel.exhausted:
                done.append(panel)
                continue
            old_value, old_err, old_evals = panel.value, panel.err, panel.evaluations
            panel.refine()
            subdivisions += 1
            total += panel.value - old_value
            total_err += panel.err - old_err
            evaluations += panel.evaluations - old_evals
            heapq.heappush(heap, (-panel.err, counter, panel))
            counter += 1
        else:
            mid = 0.5 * (panel.a + panel.b)
            if panel.bad_nodes or mid <= panel.a or mid >= panel.b:
                # evaluator blew up inside, or the interval is already at
                # floating-point resolution: keep the honest error
                done.append(panel)
                continue
            left = _GKPanel(panel.f, panel.a, mid)
            right = _GKPanel(panel.f, mid, panel.b)
            subdivisions += 1
            total += left.value + right.value - panel.value
            total_err += left.err + right.err - panel.err
            evaluations += left.evaluations + right.evaluations
            for child in (left, right):
                heapq.heappush(heap, (-child.err, counter, child))
                counter += 1
    converged = total_err <= _requested_tolerance(abs_tol, rel_tol, total)
    return QuadratureResult(total, total_err, evaluations, subdivisions, converged)


def _build_panels(spec: IntegrandSpec, boundaries: Sequence[float]) -> list:
    flagged = set(spec.split_points)
    panels = []
    for a, b in zip(boundaries[:-1], boundaries[1:]):
        open_left = a in flagged or (a == 0.0 and spec.left_exponent is not None)
        open_right = b in flagged or (b == 1.0 and spec.right_exponent is not None)
        if open_left or open_right:
            theta_l = spec.left_exponent if a == 0.0 else None
            theta_r = spec.right_exponent if b == 1.0 else None
            panels.append(_TanhSinhPanel(spec.evaluator, a, b, theta_l, theta_r))
        else:
            panels.append(_GKPanel(spec.evaluator, a, b))
    return panels


def integrate_unit(
    spec: IntegrandSpec, abs_tol: float = 1e-10, rel_tol: float = 0.0
) -> QuadratureResult:
    """Integrate ``spec`` over [0, 1] to the requested tolerance.

    On failure to converge within the subdivision budget the best estimate
    is returned with ``converged = False``; the error estimate stays honest.
    """
    if abs_tol <= 0.0 and rel_tol <= 0.0:
        raise DomainError("integrate_unit: need abs_tol > 0 or rel_tol > 0")
    panels = _build_panels(spec, _initial_boundaries(spec))
    return _run(panels, abs_tol, rel_tol)


def integrate_oscillatory(
    spec: IntegrandSpec, frequency_hint: int, abs_tol: float = 1e-10
) -> QuadratureResult:
    """Integrate with pre-partitioning that resolves an oscillatory factor.

    [0, 1] is cut into at least 4 * frequency_hint panels before adaptive
    refinement so that no panel spans more than a fraction of a period.
    """
    if frequency_hint < 1:
        raise DomainError("integrate_oscillatory: frequency_hint must be >= 1")
    if abs_tol <= 0.0:
        raise DomainError("integrate_oscillatory: abs_tol must be > 0")
    boundaries: list[float] = []
    pieces = _initial_boundaries(spec)
    for a, b in zip(pieces[:-1], pieces[1:]):
        n = max(1, math.ceil(4 * frequency_hint * (b - a)))
        boundaries.extend(a + (b - a) * i / n for i in range(n))
    boundaries.append(1.0)
    panels = _build_panels(spec, boundaries)
    return _run(panels, abs_tol, 0.0)
