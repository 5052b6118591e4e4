"""Radial kernel of the hypersphere fundamental solution.

I_d(theta) = integral of 1/sin^{d-1} from theta to pi/2, evaluated through
several equivalent routes (defining integral, closed-form finite sums, the
antiderivative recurrence, two hypergeometric series and a Ferrers-Q form),
plus the normalized fundamental solution on the sphere and the Euclidean
reference solution.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .quadrature import QuadratureSpec, integrate
from .specfun import (
    DEFAULT_SERIES,
    FerrersOrderDegree,
    SeriesControl,
    double_factorial,
    ferrers_q,
    gamma_real,
    gauss_2f1,
)

__all__ = [
    "Representation",
    "KernelValue",
    "SeriesWindowError",
    "THETA_EDGE",
    "SERIES_WINDOW",
    "i_d_quadrature",
    "i_d_finite_sum",
    "i_d_recurrence",
    "i_d_hyp2f1",
    "i_d_ferrers",
    "radial_kernel",
    "normalization_constant",
    "fundamental_solution",
    "euclidean_fundamental",
    "log_cot_half",
]

# polar angles closer than this to 0 or pi are rejected: the kernel genuinely
# diverges at both poles
THETA_EDGE = 1e-12
# direct series routes are only offered while cos^2(theta) stays below this
SERIES_WINDOW = 0.98


class SeriesWindowError(ValueError):
    """Series route refused outside its reliability window.

    Callers should fall back to the finite-sum, recurrence or quadrature
    representation, which are valid on all of (0, pi).
    """


class Representation(enum.Enum):
    """Evaluation route for the radial kernel; AUTO resolves to FINITE_SUM."""

    QUADRATURE = "quadrature"
    FINITE_SUM = "finite_sum"
    RECURRENCE = "recurrence"
    HYP2F1 = "hyp2f1"
    HYP2F1_EULER = "hyp2f1_euler"
    FERRERS_Q = "ferrers"
    AUTO = "auto"


@dataclass(frozen=True)
class KernelValue:
    """Kernel value with the route that produced it and a rough error bound.

    ``overflowed`` flags saturation to +/-inf in the cot/log terms very close
    to the poles.
    """

    value: float
    method: Representation
    est_error: float
    overflowed: bool = False


def _check_dimension(d: int) -> None:
    if int(d) != d or d < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {d}")


def _check_theta(theta: float) -> None:
    if not THETA_EDGE <= theta <= math.pi - THETA_EDGE:
        raise ValueError(
            f"polar angle {theta} outside [{THETA_EDGE}, pi - {THETA_EDGE}]")


def log_cot_half(theta: float) -> float:
    """log cot(theta/2), the d = 2 kernel."""
    return -math.log(math.tan(0.5 * theta))


def _wrap(value: float, method: Representation, est_error: float) -> KernelValue:
    overflowed = not math.isfinite(value)
    return KernelValue(value, method, est_error if math.isfinite(est_error) else math.inf,
                       overflowed)


def _saturated(theta: float, method: Representation) -> KernelValue:
    # the kernel tends to +inf at the near pole and -inf at the far one
    sign = 1.0 if theta < 0.5 * math.pi else -1.0
    return KernelValue(sign * math.inf, method, math.inf, True)


def i_d_quadrature(d: int, theta: float, tol: float = 1e-11) -> KernelValue:
    """Adaptive quadrature of the defining integral; the verification route."""
    _check_dimension(d)
    _check_theta(theta)
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    half_pi = 0.5 * math.pi
    if theta == half_pi:
        return KernelValue(0.0, Representation.QUADRATURE, 0.0)
    a, b, sign = (theta, half_pi, 1.0) if theta < half_pi else (half_pi, theta, -1.0)
    spec = QuadratureSpec(abs_tol=tol, rel_tol=tol, max_subdivisions=200)
    value, estimate = integrate(lambda x: math.sin(x) ** (1 - d), a, b, spec)
    return _wrap(sign * value, Representation.QUADRATURE, estimate)


def i_d_finite_sum(d: int, theta: float) -> KernelValue:
    """Closed-form evaluation, exact in O(d) arithmetic operations.

    Even d uses the log-cot form; odd d evaluates both printed closed forms
    (factorial-weighted cotangent powers and double-factorial-weighted inverse
    sine powers), requires them to agree to 1e-12, and returns the first.
    """
    _check_dimension(d)
    _check_theta(theta)
    c, s = math.cos(theta), math.sin(theta)
    try:
        if d % 2 == 0:
            acc = 0.0
            for k in range(1, d // 2):
                acc += double_factorial(2 * k - 2) / double_factorial(2 * k - 1) / s ** (2 * k)
            value = (double_factorial(d - 3) / double_factorial(d - 2)
                     * (log_cot_half(theta) + c * acc))
            return _wrap(value, Representation.FINITE_SUM, 0.0)
        half = (d - 1) // 2
        cot = c / s
        first = 0.0
        for k in range(1, half + 1):
            first += cot ** (2 * k - 1) / (
                (2 * k - 1) * math.factorial(k - 1) * math.factorial((d - 2 * k - 1) // 2))
        first *= math.factorial((d - 3) // 2)
        second = 0.0
        for k in range(1, half + 1):
            second += double_factorial(2 * k - 3) / double_factorial(2 * k - 2) / s ** (2 * k - 1)
        second *= double_factorial(d - 3) / double_factorial(d - 2) * c
    except (OverflowError, ZeroDivisionError):
        # cot/inverse-sine powers past double range right next to a pole
        return _saturated(theta, Representation.FINITE_SUM)
    spread = abs(first - second)
    if spread > 1e-12 * max(1.0, abs(first), abs(second)):
        raise ArithmeticError(
            f"odd-d closed-form variants disagree at d={d}, theta={theta}: "
            f"{first} vs {second}")
    return _wrap(first, Representation.FINITE_SUM, spread)


def i_d_recurrence(d: int, theta: float) -> KernelValue:
    """Climb J_m = cos/((m-1) sin^{m-1}) + (m-2)/(m-1) J_{m-2} up to m = d-1.

    Bases: J_0 = pi/2 - theta and J_1 = log cot(theta/2).  All recurrence
    terms share the sign of cos(theta), so the climb is cancellation-free.
    """
    _check_dimension(d)
    _check_theta(theta)
    m = d - 1
    c, s = math.cos(theta), math.sin(theta)
    if m % 2 == 0:
        j = 0.5 * math.pi - theta
        start = 0
    else:
        j = log_cot_half(theta)
        start = 1
    try:
        for k in range(start + 2, m + 1, 2):
            j = c / ((k - 1) * s ** (k - 1)) + (k - 2) / (k - 1) * j
    except (OverflowError, ZeroDivisionError):
        return _saturated(theta, Representation.RECURRENCE)
    return _wrap(j, Representation.RECURRENCE, 0.0)


def i_d_hyp2f1(d: int, theta: float, euler: bool = False,
               ctl: SeriesControl = DEFAULT_SERIES) -> KernelValue:
    """Hypergeometric series route, valid while cos^2(theta) <= 0.98.

    Direct form: cos(theta) 2F1(1/2, d/2; 3/2; cos^2 theta).  With ``euler``
    the transformed series cos/sin^{d-2} 2F1(1, (3-d)/2; 3/2; cos^2 theta)
    is used instead.
    """
    _check_dimension(d)
    _check_theta(theta)
    c = math.cos(theta)
    z = c * c
    if z > SERIES_WINDOW:
        raise SeriesWindowError(
            f"cos^2(theta) = {z:.6f} > {SERIES_WINDOW}: use finite_sum, "
            "recurrence or quadrature here")
    if euler:
        value = c / math.sin(theta) ** (d - 2) * gauss_2f1(1.0, (3.0 - d) / 2.0, 1.5, z, ctl)
        method = Representation.HYP2F1_EULER
    else:
        value = c * gauss_2f1(0.5, d / 2.0, 1.5, z, ctl)
        method = Representation.HYP2F1
    return _wrap(value, method, abs(value) * ctl.rel_tol)


def i_d_ferrers(d: int, theta: float, ctl: SeriesControl = DEFAULT_SERIES) -> KernelValue:
    """Ferrers-Q route: prefactor times sin^{1-d/2} Q_{d/2-1}^{1-d/2}(cos)."""
    _check_dimension(d)
    _check_theta(theta)
    x = math.cos(theta)
    if x * x >= 1.0:
        raise SeriesWindowError(
            f"cos^2(theta) rounds to 1 in double precision at theta={theta}: "
            "use finite_sum, recurrence or quadrature here")
    nu = d / 2.0 - 1.0
    q = ferrers_q(FerrersOrderDegree(nu, -nu, x), ctl)
    prefactor = math.factorial(d - 2) / (gamma_real(d / 2.0) * 2.0 ** (d / 2.0 - 1.0))
    value = prefactor * math.sin(theta) ** (1.0 - d / 2.0) * q
    return _wrap(value, Representation.FERRERS_Q, abs(value) * ctl.rel_tol)


def radial_kernel(d: int, theta: float, rep: Representation = Representation.AUTO,
                  tol: float = 1e-11, ctl: SeriesControl = DEFAULT_SERIES) -> KernelValue:
    """Evaluate I_d(theta) through the requested representation."""
    if rep is Representation.AUTO:
        rep = Representation.FINITE_SUM
    if rep is Representation.QUADRATURE:
        return i_d_quadrature(d, theta, tol)
    if rep is Representation.FINITE_SUM:
        return i_d_finite_sum(d, theta)
    if rep is Representation.RECURRENCE:
        return i_d_recurrence(d, theta)
    if rep is Representation.HYP2F1:
        return i_d_hyp2f1(d, theta, euler=False, ctl=ctl)
    if rep is Representation.HYP2F1_EULER:
        return i_d_hyp2f1(d, theta, euler=True, ctl=ctl)
    if rep is Representation.FERRERS_Q:
        return i_d_ferrers(d, theta, ctl)
    raise ValueError(f"unknown representation {rep!r}")


def normalization_constant(d: int) -> float:
    """Gamma(d/2) / (2 pi^{d/2}), fixed by matching the local singularity."""
    _check_dimension(d)
    return gamma_real(d / 2.0) / (2.0 * math.pi ** (d / 2.0))


def fundamental_solution(d: int, radius: float, theta: float,
                         rep: Representation = Representation.AUTO) -> float:
    """Spherically symmetric fundamental solution of -Laplace on the sphere.

    Value is c0(d) / R^{d-2} * I_d(theta) with theta the geodesic angle; it
    vanishes at theta = pi/2 and diverges to +inf/-inf at the two poles.
    """
    if not radius > 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    kv = radial_kernel(d, theta, rep)
    return normalization_constant(d) / radius ** (d - 2) * kv.value


def euclidean_fundamental(d: int, r: float) -> float:
    """Fundamental solution of -Laplace in flat d-space at distance r."""
    if int(d) != d or d < 1:
        raise ValueError(f"dimension must be an integer >= 1, got {d}")
    if not r > 0.0:
        raise ValueError(f"distance must be positive, got {r}")
    if d == 2:
        return math.log(1.0 / r) / (2.0 * math.pi)
    return gamma_real(d / 2.0) / (2.0 * math.pi ** (d / 2.0) * (d - 2)) * r ** (2 - d)
