"""Real-argument special functions used by the hypersphere kernel.

Gamma (exact on integers and half-integers), double factorial, Pochhammer,
the Gauss 2F1 series on (-1, 1), and Ferrers functions of the first and
second kind (associated Legendre functions on the cut).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "SeriesControl",
    "FerrersOrderDegree",
    "GammaPoleError",
    "NonConvergenceError",
    "DEFAULT_SERIES",
    "gamma_real",
    "reciprocal_gamma",
    "double_factorial",
    "pochhammer",
    "gauss_2f1",
    "ferrers_p",
    "ferrers_q",
]

_SQRT_PI = math.sqrt(math.pi)
# largest argument before Gamma overflows a double
_GAMMA_OVERFLOW = 171.62


class GammaPoleError(ValueError):
    """Gamma evaluated at a nonpositive integer."""


class NonConvergenceError(ArithmeticError):
    """Series truncation cap reached before the stopping rule was met."""

    def __init__(self, message: str, partial_sum: float, terms: int):
        super().__init__(message)
        self.partial_sum = partial_sum
        self.terms = terms


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for hypergeometric series evaluation."""

    rel_tol: float = 1e-15
    max_terms: int = 100000

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_SERIES = SeriesControl()


def _is_integer(z: float) -> bool:
    return z == round(z)


def double_factorial(n: int) -> int:
    """n!! = n(n-2)... down to 1 or 2, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial requires n >= -1, got {n}")
    out = 1
    k = n
    while k >= 2:
        out *= k
        k -= 2
    return out


def pochhammer(z: float, n: int) -> float:
    """Rising factorial (z)_n = z(z+1)...(z+n-1); empty product is 1."""
    if n < 0:
        raise ValueError(f"pochhammer requires n >= 0, got {n}")
    out = 1.0
    for i in range(n):
        out *= z + i
    return out


def gamma_real(z: float) -> float:
    """Gamma function for real z outside the nonpositive integers.

    Integer and half-integer arguments (the only ones reached by the rest of
    the library) are evaluated exactly by recursion from Gamma(1) = 1 and
    Gamma(1/2) = sqrt(pi); other real arguments fall through to the C-library
    approximation.
    """
    if z <= 0.0 and _is_integer(z):
        raise GammaPoleError(f"gamma pole at z={z}")
    if z > _GAMMA_OVERFLOW:
        return math.inf
    if _is_integer(2.0 * z) and z <= 170.5:
        if _is_integer(z):
            return float(math.factorial(int(round(z)) - 1))
        m = int(round(z - 0.5))
        if m >= 0:
            return double_factorial(2 * m - 1) / 2.0**m * _SQRT_PI
        # negative half-integer: climb to Gamma(1/2) with Gamma(z+1) = z Gamma(z)
        k = int(round(0.5 - z))
        return _SQRT_PI / pochhammer(z, k)
    return math.gamma(z)


def reciprocal_gamma(z: float) -> float:
    """1/Gamma(z), defined as 0 at the nonpositive-integer poles."""
    if z <= 0.0 and _is_integer(z):
        return 0.0
    g = gamma_real(z)
    return 0.0 if math.isinf(g) else 1.0 / g


def gauss_2f1(a: float, b: float, c: float, z: float,
              ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Gauss hypergeometric series sum_n (a)_n (b)_n / ((c)_n n!) z^n.

    Summation stops once three consecutive terms fall below ``ctl.rel_tol``
    relative to the running sum; hitting ``ctl.max_terms`` first raises
    NonConvergenceError (expected as z -> 1 with c - a - b <= 0).
    """
    if c <= 0.0 and _is_integer(c):
        raise GammaPoleError(f"2F1 undefined for nonpositive integer c={c}")
    if not abs(z) < 1.0:
        raise ValueError(f"series requires |z| < 1, got z={z}")
    total = 1.0
    term = 1.0
    below = 0
    for n in range(ctl.max_terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
        if abs(term) <= ctl.rel_tol * max(abs(total), 1e-300):
            below += 1
            if below == 3:
                return total
        else:
            below = 0
    raise NonConvergenceError(
        f"2F1({a},{b};{c};{z}) did not converge in {ctl.max_terms} terms",
        total, ctl.max_terms)


@dataclass(frozen=True)
class FerrersOrderDegree:
    """Degree nu, order mu and argument x of a Ferrers function.

    The argument must lie strictly inside (-1, 1) and nu + mu must not be a
    negative integer (the two-term hypergeometric definitions below break
    down there).
    """

    degree: float
    order: float
    argument: float

    def __post_init__(self):
        if not -1.0 < self.argument < 1.0:
            raise ValueError(f"argument must lie in (-1, 1), got {self.argument}")
        s = self.degree + self.order
        if s < -0.5 and _is_integer(s):
            raise ValueError(
                f"degree + order = {s} is a negative integer; "
                "Ferrers definitions used here require nu + mu not in -N")


def _sin_half_pi(v: float) -> float:
    """sin(pi v / 2), exact at integer v."""
    if _is_integer(v):
        return (0.0, 1.0, 0.0, -1.0)[int(round(v)) % 4]
    return math.sin(0.5 * math.pi * v)


def _cos_half_pi(v: float) -> float:
    """cos(pi v / 2), exact at integer v."""
    if _is_integer(v):
        return (1.0, 0.0, -1.0, 0.0)[int(round(v)) % 4]
    return math.cos(0.5 * math.pi * v)


def _ferrers_terms(pd: FerrersOrderDegree, ctl: SeriesControl):
    """The two building blocks shared by the P and Q definitions.

    Each is (gamma ratio) * (power prefactor) * 2F1; a vanishing trigonometric
    coefficient suppresses its term before the gammas are touched, so the
    gamma poles that the definitions implicitly cancel never raise.
    """
    nu, mu, x = pd.degree, pd.order, pd.argument
    pow_fac = (1.0 - x * x) ** (-mu / 2.0)

    def odd_term():
        return (gamma_real((nu + mu + 2.0) / 2.0)
                * reciprocal_gamma((nu - mu + 1.0) / 2.0)
                * x * pow_fac
                * gauss_2f1((1.0 - nu - mu) / 2.0, (nu - mu + 2.0) / 2.0,
                            1.5, x * x, ctl))

    def even_term():
        return (gamma_real((nu + mu + 1.0) / 2.0)
                * reciprocal_gamma((nu - mu + 2.0) / 2.0)
                * pow_fac
                * gauss_2f1((-nu - mu) / 2.0, (nu - mu + 1.0) / 2.0,
                            0.5, x * x, ctl))

    return odd_term, even_term


def ferrers_p(pd: FerrersOrderDegree, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Ferrers function of the first kind P_nu^mu(x) on the cut."""
    nu, mu = pd.degree, pd.order
    odd_term, even_term = _ferrers_terms(pd, ctl)
    s = _sin_half_pi(nu + mu)
    c = _cos_half_pi(nu + mu)
    value = 0.0
    if s != 0.0:
        value += 2.0 ** (mu + 1.0) / _SQRT_PI * s * odd_term()
    if c != 0.0:
        value += 2.0**mu / _SQRT_PI * c * even_term()
    return value


def ferrers_q(pd: FerrersOrderDegree, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Ferrers function of the second kind Q_nu^mu(x) on the cut."""
    nu, mu = pd.degree, pd.order
    odd_term, even_term = _ferrers_terms(pd, ctl)
    s = _sin_half_pi(nu + mu)
    c = _cos_half_pi(nu + mu)
    value = 0.0
    if c != 0.0:
        value += _SQRT_PI * 2.0**mu * c * odd_term()
    if s != 0.0:
        value -= _SQRT_PI * 2.0 ** (mu - 1.0) * s * even_term()
    return value
