"""Points on the d-dimensional radius-R hypersphere.

Standard hyperspherical coordinates, ambient (d+1)-space embedding,
separation angle between directions, geodesic distance and the volume-measure
weight.

Direction-angle convention: a point of the unit direction sphere S^{d-1} is
held as the tuple (alpha_1, alpha_2, ..., alpha_{d-1}) where alpha_1 = phi in
[0, 2pi) is the azimuth and alpha_2..alpha_{d-1} in [0, pi] are the polar-type
angles, innermost first.  The embedding consumes them outermost-in (the last
entry produces the leading Cartesian component after x0), and the
separation-angle product formula enumerates them in that same outermost-first
order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "HyperPoint",
    "embed",
    "embed_direction",
    "separation_angle",
    "geodesic_distance",
    "volume_weight",
]

_TWO_PI = 2.0 * math.pi


def _clamped_acos(x: float) -> float:
    # floating drift at near-coincident/antipodal points pushes |x| past 1
    return math.acos(min(1.0, max(-1.0, x)))


@dataclass(frozen=True)
class HyperPoint:
    """A point of the dimension-d, radius-R hypersphere.

    ``polar`` is the geodesic angle theta in [0, pi] from the origin
    (R, 0, ..., 0); ``direction`` holds the d-1 direction angles described in
    the module docstring.
    """

    dimension: int
    radius: float
    polar: float
    direction: tuple[float, ...]

    def __post_init__(self):
        if int(self.dimension) != self.dimension or self.dimension < 2:
            raise ValueError(f"dimension must be an integer >= 2, got {self.dimension}")
        if not self.radius > 0.0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if not 0.0 <= self.polar <= math.pi:
            raise ValueError(f"polar angle must lie in [0, pi], got {self.polar}")
        object.__setattr__(self, "dimension", int(self.dimension))
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "polar", float(self.polar))
        direction = tuple(float(a) for a in self.direction)
        object.__setattr__(self, "direction", direction)
        if len(direction) != self.dimension - 1:
            raise ValueError(
                f"need {self.dimension - 1} direction angles, got {len(direction)}")
        if not 0.0 <= direction[0] < _TWO_PI:
            raise ValueError(f"azimuth must lie in [0, 2pi), got {direction[0]}")
        for a in direction[1:]:
            if not 0.0 <= a <= math.pi:
                raise ValueError(f"direction angle must lie in [0, pi], got {a}")


def embed_direction(direction: tuple[float, ...]) -> np.ndarray:
    """Unit vector in R^d for a direction on S^{d-1} (d = len(direction) + 1)."""
    phi = direction[0]
    k = len(direction) + 1
    v = np.empty(k)
    sin_prod = 1.0
    for i, ang in enumerate(reversed(direction[1:])):
        v[i] = sin_prod * math.cos(ang)
        sin_prod *= math.sin(ang)
    v[k - 2] = sin_prod * math.cos(phi)
    v[k - 1] = sin_prod * math.sin(phi)
    return v


def embed(p: HyperPoint) -> np.ndarray:
    """Cartesian coordinates (x0, ..., xd) in the ambient Euclidean space.

    x0 = R cos(theta) and the remaining block is R sin(theta) times the
    direction unit vector, so (x, x) = R^2.
    """
    out = np.empty(p.dimension + 1)
    out[0] = p.radius * math.cos(p.polar)
    out[1:] = p.radius * math.sin(p.polar) * embed_direction(p.direction)
    return out


def separation_angle(u: tuple[float, ...], v: tuple[float, ...]) -> float:
    """Angle gamma in [0, pi] between two directions on the same S^{d-1}.

    Product formula: cos(gamma) accumulates cos*cos terms weighted by the
    running product of outer sines, plus cos(phi - phi') times the full sine
    product.  For d = 2 it degenerates to cos(gamma) = cos(phi - phi').
    """
    if len(u) != len(v):
        raise ValueError(f"direction lists differ in length: {len(u)} vs {len(v)}")
    if len(u) < 1:
        raise ValueError("need at least the azimuth angle")
    cos_g = 0.0
    sin_prod = 1.0
    for a, b in zip(reversed(u[1:]), reversed(v[1:])):
        cos_g += math.cos(a) * math.cos(b) * sin_prod
        sin_prod *= math.sin(a) * math.sin(b)
    cos_g += math.cos(u[0] - v[0]) * sin_prod
    return _clamped_acos(cos_g)


def geodesic_distance(x: HyperPoint, xp: HyperPoint) -> float:
    """Geodesic distance R * arccos(cos t cos t' + sin t sin t' cos gamma)."""
    if x.dimension != xp.dimension:
        raise ValueError("points live on spheres of different dimension")
    if x.radius != xp.radius:
        raise ValueError("points live on spheres of different radius")
    gamma = separation_angle(x.direction, xp.direction)
    inner = (math.cos(x.polar) * math.cos(xp.polar)
             + math.sin(x.polar) * math.sin(xp.polar) * math.cos(gamma))
    return x.radius * _clamped_acos(inner)


def volume_weight(p: HyperPoint) -> float:
    """Density of the volume measure w.r.t. the coordinate differentials.

    R^d sin^{d-1}(theta) times sin^{k-1}(alpha_k) for k = 2..d-1; the azimuth
    carries no weight.
    """
    w = p.radius**p.dimension * math.sin(p.polar) ** (p.dimension - 1)
    for k, ang in enumerate(p.direction[1:], start=2):
        w *= math.sin(ang) ** (k - 1)
    return w
