"""Ideal points, Poincare-disk geodesics and the cross-ratio distance."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from . import mobius
from .errors import (
    CoincidentIdealPoints,
    CoincidentPoints,
    IdenticalGeodesics,
    NumericalInstability,
)
from .models import PoincarePoint, k2p

TWO_PI = 2.0 * math.pi
EPS_SEP = 1e-9
EPS_ANTI = 1e-9


def angular_separation(t1: float, t2: float) -> float:
    d = (t1 - t2) % TWO_PI
    return min(d, TWO_PI - d)


def chord(a: "IdealPoint", b: "IdealPoint") -> float:
    """Euclidean distance ``|u_a - u_b|``, computed from the angles for relative accuracy."""
    return 2.0 * abs(math.sin(0.5 * (a.theta - b.theta)))


@dataclass(frozen=True)
class IdealPoint:
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % TWO_PI)

    @property
    def u(self) -> complex:
        return cmath.exp(1j * self.theta)

    @classmethod
    def from_complex(cls, w: complex) -> "IdealPoint":
        return cls(cmath.phase(w))

    @classmethod
    def from_degrees(cls, deg: float) -> "IdealPoint":
        return cls(math.radians(deg))


@dataclass(frozen=True)
class Diameter:
    direction: float


@dataclass(frozen=True)
class OrthoCircle:
    center: complex
    radius: float


@dataclass(frozen=True)
class Geodesic:
    """Poincare line with ideal endpoints ``a`` and ``b``; the carrier is derived."""

    a: IdealPoint
    b: IdealPoint
    carrier: Diameter | OrthoCircle = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if angular_separation(self.a.theta, self.b.theta) <= EPS_SEP:
            raise CoincidentIdealPoints(f"{self.a} and {self.b} coincide")
        if abs((self.a.theta - self.b.theta) % TWO_PI - math.pi) < EPS_ANTI:
            carrier = Diameter(self.a.theta % math.pi)
        else:
            # (u_a + u_b) / (1 + Re(u_a conj(u_b))) in half-angle form, which
            # keeps full precision as the endpoints approach antipodal
            half = 0.5 * (self.a.theta - self.b.theta)
            mid = 0.5 * (self.a.theta + self.b.theta)
            carrier = OrthoCircle(cmath.exp(1j * mid) / math.cos(half), abs(math.tan(half)))
        object.__setattr__(self, "carrier", carrier)

    @property
    def endpoints(self) -> tuple[complex, complex]:
        return self.a.u, self.b.u

    def same_line(self, other: "Geodesic") -> bool:
        mine = (self.a.theta, self.b.theta)
        theirs = (other.a.theta, other.b.theta)
        return all(angular_separation(x, y) <= EPS_SEP for x, y in zip(mine, theirs)) or all(
            angular_separation(x, y) <= EPS_SEP for x, y in zip(mine, reversed(theirs))
        )


def geodesic_from_ideal(a: IdealPoint, b: IdealPoint) -> Geodesic:
    return Geodesic(a, b)


def _endpoints(b: complex, c: complex) -> tuple[complex, complex]:
    # Move b to the origin; the line is then a diameter through J(c).
    J = mobius.isometry_to_zero(b)
    w = J(c)
    if w == 0:
        raise CoincidentPoints(f"{b!r} and {c!r} are numerically the same point")
    e = w / abs(w)
    d = J(e)
    a = J(-e)
    return a / abs(a), d / abs(d)


def ideal_endpoints(b, c) -> tuple[IdealPoint, IdealPoint]:
    """Endpoints ``(a, d)`` of the geodesic through ``b`` and ``c``, ordered a, b, c, d."""
    b, c = complex(b), complex(c)
    if abs(b - c) <= 1e-12:
        raise CoincidentPoints(f"{b!r} and {c!r} coincide")
    a, d = _endpoints(b, c)
    return IdealPoint.from_complex(a), IdealPoint.from_complex(d)


def cross_ratio_distance_argument(b: complex, c: complex) -> complex:
    a, d = _endpoints(b, c)
    return (a - c) * (b - d) / ((a - b) * (c - d))


def hyp_distance(b, c) -> float:
    """Hyperbolic distance as the log of the cross ratio with the ideal endpoints.

    The cross ratio is evaluated in complex arithmetic and must come out real
    and at least 1; otherwise ``NumericalInstability`` is raised.
    """
    b, c = complex(b), complex(c)
    if b == c:
        return 0.0
    try:
        value = cross_ratio_distance_argument(b, c)
    except CoincidentPoints:
        return 0.0
    if abs(value.imag) >= 1e-9 * (1.0 + abs(value)) or value.real < 1.0 - 1e-12:
        raise NumericalInstability(f"cross ratio {value!r} for {b!r}, {c!r} is not real >= 1")
    return math.log(max(value.real, 1.0))


def _cross(x: complex, y: complex) -> float:
    return (x.conjugate() * y).imag


def intersect(G1: Geodesic, G2: Geodesic) -> PoincarePoint | None:
    """Crossing point of two geodesics, found on their Klein chords.

    Returns None if the chords do not cross strictly inside the disk
    (disjoint or asymptotic geodesics).
    """
    if G1.same_line(G2):
        raise IdenticalGeodesics(f"{G1} and {G2} are the same line")
    z = chord_crossing(*G1.endpoints, *G2.endpoints)
    return None if z is None else PoincarePoint.from_complex(z)


def chord_crossing(p1: complex, p2: complex, q1: complex, q2: complex) -> complex | None:
    e1, e2, r = p2 - p1, q2 - q1, q1 - p1
    den = _cross(e1, e2)
    if abs(den) <= 1e-15:
        return None
    t = _cross(r, e2) / den
    s = _cross(r, e1) / den
    if not (0.0 < t < 1.0 and 0.0 < s < 1.0):
        return None
    k = p1 + t * e1
    if not abs(k) < 1.0:
        return None
    return k2p(k)


def carrier_distance(G: Geodesic, p) -> float:
    """Euclidean distance from ``p`` to the carrier line or circle of ``G``."""
    p = complex(p)
    carrier = G.carrier
    if isinstance(carrier, Diameter):
        return abs(_cross(cmath.exp(1j * carrier.direction), p))
    # ||p-c| - R| rewritten with |c|^2 = 1 + R^2 so huge carriers do not cancel
    cos_half = math.cos(0.5 * (G.a.theta - G.b.theta))
    mid = cmath.exp(1j * 0.5 * (G.a.theta + G.b.theta))
    num = (abs(p) ** 2 + 1.0) * cos_half - 2.0 * (p * mid.conjugate()).real
    return abs(num) / abs(cos_half * (abs(p - carrier.center) + carrier.radius))


def on_geodesic(G: Geodesic, p, tol: float = 1e-9) -> bool:
    return carrier_distance(G, p) <= tol
