"""Hyperbolic disks, horodisks, and horocycle-clipped lengths.

A horodisk based at the ideal point ``u`` is described by its *size*
``s = 2r / (1 - r)``, ``r`` its Euclidean radius. In this coordinate two
horodisks at ``u`` and ``v`` are tangent exactly when ``|u - v|^2 = s_u s_v``,
and the length of the geodesic ``uv`` outside both of them is
``log(|u - v|^2 / (s_u s_v))`` (negative when they overlap).

Any function that takes horodisk sizes defaults to all-ones when sizes are
omitted; the alternating sums built here do not depend on that choice.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import mobius
from .errors import NotAHorodisk, NotInDisk, SameBasePoint
from .geodesics import EPS_SEP, IdealPoint, angular_separation, chord
from .models import PoincarePoint

HORO_TANGENCY_TOL = 1e-9


@dataclass(frozen=True)
class HyperbolicDisk:
    center: PoincarePoint
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius!r}")
        if not isinstance(self.center, PoincarePoint):
            object.__setattr__(self, "center", PoincarePoint.from_complex(self.center))


@dataclass(frozen=True)
class Horodisk:
    base: IdealPoint
    size: float

    def __post_init__(self):
        if not self.size > 0:
            raise ValueError(f"horodisk size must be positive, got {self.size!r}")

    @property
    def euclidean_radius(self) -> float:
        return self.size / (self.size + 2.0)

    @property
    def euclidean_center(self) -> complex:
        return (1.0 - self.euclidean_radius) * self.base.u


@dataclass(frozen=True)
class SemiIdealTriangle:
    """Triangle with ideal vertices ``ideal1``, ``ideal2`` and a finite ``apex``."""

    ideal1: IdealPoint
    ideal2: IdealPoint
    apex: complex

    def __post_init__(self):
        if angular_separation(self.ideal1.theta, self.ideal2.theta) <= EPS_SEP:
            raise SameBasePoint("semi-ideal triangle needs two distinct ideal vertices")
        apex = complex(self.apex)
        if not abs(apex) < 1.0:
            raise NotInDisk(f"apex {apex!r} is not inside the disk")
        object.__setattr__(self, "apex", apex)


def hyperbolic_disk_to_euclidean(D: HyperbolicDisk) -> tuple[complex, float]:
    """Euclidean (center, radius) of the boundary circle of ``D``."""
    rho = math.tanh(0.5 * D.radius)
    J = mobius.isometry_to_zero(D.center.z)
    return mobius.circle_image(J, 0j, rho)


def horodisk_from_euclidean(center: complex, radius: float, tol: float = HORO_TANGENCY_TOL) -> Horodisk:
    center = complex(center)
    if not 0.0 < radius < 1.0:
        raise NotAHorodisk(f"radius {radius!r} is not in (0, 1)")
    if abs(abs(center) + radius - 1.0) > tol:
        raise NotAHorodisk(f"circle ({center!r}, {radius!r}) is not internally tangent to the unit circle")
    return Horodisk(IdealPoint(cmath.phase(center)), 2.0 * radius / (1.0 - radius))


def transport_horodisk(T: mobius.MobiusTransform, H: Horodisk) -> Horodisk:
    """Image of ``H`` under a disk isometry, re-measured from the image circle."""
    center, radius = mobius.circle_image(T, H.euclidean_center, H.euclidean_radius)
    return horodisk_from_euclidean(center, radius)


def _check_distinct(a: IdealPoint, b: IdealPoint) -> None:
    if angular_separation(a.theta, b.theta) <= EPS_SEP:
        raise SameBasePoint(f"{a} and {b} share a base point")


def are_tangent(H1: Horodisk, H2: Horodisk, tol: float = HORO_TANGENCY_TOL) -> bool:
    _check_distinct(H1.base, H2.base)
    chord2 = chord(H1.base, H2.base) ** 2
    prod = H1.size * H2.size
    return abs(chord2 - prod) <= tol * max(chord2, prod)


def clipped_length_ideal(a: IdealPoint, sa: float, b: IdealPoint, sb: float) -> float:
    """Signed length of the geodesic ``ab`` outside the horodisks of sizes ``sa``, ``sb``."""
    _check_distinct(a, b)
    return math.log(chord(a, b) ** 2 / (sa * sb))


def clipped_length_mixed(p, a: IdealPoint, sa: float) -> float:
    """Signed length of the ray from ``p`` to ``a`` outside the horodisk at ``a``."""
    p = complex(p)
    return math.log(2.0 * abs(p - a.u) ** 2 / (sa * (1.0 - abs(p) ** 2)))


def alternating_perimeter(vertices: Iterable[IdealPoint], sizes: Sequence[float] | None = None) -> float:
    """Regularised alternating perimeter of an even ideal polygon.

    Side ``k`` joins vertex ``k`` to vertex ``k + 1`` (cyclically); odd sides
    count positively, starting from the first.
    """
    verts = list(vertices)
    n = len(verts)
    if n % 2:
        raise ValueError("alternating perimeter needs an even number of vertices")
    if sizes is None:
        sizes = [1.0] * n
    if len(sizes) != n or any(not s > 0 for s in sizes):
        raise ValueError(f"need {n} positive sizes, got {sizes!r}")
    total = 0.0
    for k in range(n):
        j = (k + 1) % n
        sign = 1.0 if k % 2 == 0 else -1.0
        total += sign * clipped_length_ideal(verts[k], sizes[k], verts[j], sizes[j])
    return total


def semi_ideal_A(V: SemiIdealTriangle, s1: float = 1.0, s2: float = 1.0) -> float:
    """Two finite-to-ideal sides minus the ideal side, all horocycle-clipped."""
    return (
        clipped_length_mixed(V.apex, V.ideal1, s1)
        + clipped_length_mixed(V.apex, V.ideal2, s2)
        - clipped_length_ideal(V.ideal1, s1, V.ideal2, s2)
    )
