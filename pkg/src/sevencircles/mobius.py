"""Mobius transformations of the Riemann sphere, specialised to isometries of the unit disk.

Transforms are stored as 2x2 complex coefficient tuples normalised to
determinant 1, so ``(a, b, c, d)`` and ``(-a, -b, -c, -d)`` are the same map.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateTransform, NotInDisk, PoleError

EPS_DEGEN = 1e-12


@dataclass(frozen=True)
class MobiusTransform:
    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        a, b, c, d = (complex(v) for v in (self.a, self.b, self.c, self.d))
        det = a * d - b * c
        if abs(det) <= EPS_DEGEN:
            raise DegenerateTransform(f"ad - bc = {det!r} is numerically zero")
        k = cmath.sqrt(det)
        object.__setattr__(self, "a", a / k)
        object.__setattr__(self, "b", b / k)
        object.__setattr__(self, "c", c / k)
        object.__setattr__(self, "d", d / k)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    def __call__(self, z: complex) -> complex:
        return apply(self, z)

    def __matmul__(self, other: "MobiusTransform") -> "MobiusTransform":
        return compose(self, other)

    def isclose(self, other: "MobiusTransform", tol: float = 1e-12) -> bool:
        """Coefficient equality up to the global sign ambiguity."""
        mine = (self.a, self.b, self.c, self.d)
        theirs = (other.a, other.b, other.c, other.d)
        return any(
            max(abs(x - sign * y) for x, y in zip(mine, theirs)) <= tol for sign in (1, -1)
        )


IDENTITY = MobiusTransform(1, 0, 0, 1)


def apply(T: MobiusTransform, z: complex) -> complex:
    den = T.c * z + T.d
    if abs(den) <= EPS_DEGEN:
        raise PoleError(f"{z!r} is the pole of {T!r}")
    return (T.a * z + T.b) / den


def compose(T1: MobiusTransform, T2: MobiusTransform) -> MobiusTransform:
    """The map ``z -> T1(T2(z))``."""
    return MobiusTransform(
        T1.a * T2.a + T1.b * T2.c,
        T1.a * T2.b + T1.b * T2.d,
        T1.c * T2.a + T1.d * T2.c,
        T1.c * T2.b + T1.d * T2.d,
    )


def inverse(T: MobiusTransform) -> MobiusTransform:
    return MobiusTransform(T.d, -T.b, -T.c, T.a)


def disk_normal_form(T: MobiusTransform) -> tuple[float, complex] | None:
    """Recover ``(theta, alpha)`` with ``T(z) = e^{i theta} (z - alpha) / (1 - conj(alpha) z)``.

    Returns None when ``T`` is not of that shape at all (leading coefficient
    vanishes). The caller still has to check that the reconstruction matches.
    """
    if abs(T.a) <= EPS_DEGEN:
        return None
    alpha = -T.b / T.a
    theta = 2.0 * cmath.phase(T.a)
    return theta, alpha


def from_normal_form(theta: float, alpha: complex) -> MobiusTransform:
    half = cmath.exp(0.5j * theta)
    return MobiusTransform(half, -half * alpha, -alpha.conjugate() / half, 1 / half)


def is_disk_isometry(T: MobiusTransform, tol: float = 1e-10) -> bool:
    """Decide whether ``T`` maps the open unit disk onto itself.

    Recovers the normal-form parameters, rebuilds the transform from them and
    compares coefficients (up to sign), then requires ``|alpha| < 1``.
    """
    params = disk_normal_form(T)
    if params is None:
        return False
    theta, alpha = params
    if not abs(alpha) < 1.0:
        return False
    if abs(1 - abs(alpha) ** 2) <= EPS_DEGEN:
        return False
    return from_normal_form(theta, alpha).isclose(T, tol)


def isometry_to_zero(p: complex) -> MobiusTransform:
    """The involutive isometry ``z -> (z - p) / (conj(p) z - 1)`` swapping ``p`` and 0."""
    p = complex(p)
    if not abs(p) < 1.0:
        raise NotInDisk(f"|p| = {abs(p)!r} is not < 1")
    return MobiusTransform(1, -p, p.conjugate(), -1)


def rotation(theta: float) -> MobiusTransform:
    half = cmath.exp(0.5j * theta)
    return MobiusTransform(half, 0, 0, 1 / half)


NEGATION = rotation(math.pi)


def point_reflection(p: complex) -> MobiusTransform:
    """The order-two isometry fixing ``p``: conjugate of ``z -> -z`` by ``isometry_to_zero(p)``."""
    J = isometry_to_zero(p)
    return compose(J, compose(NEGATION, J))


def three_point_map(z1, z2, z3, w1, w2, w3) -> MobiusTransform:
    """The unique Mobius map sending ``z_k`` to ``w_k``."""

    def to_standard(p, q, r):
        # p -> 0, q -> 1, r -> infinity
        return MobiusTransform(q - r, -p * (q - r), q - p, -r * (q - p))

    return compose(inverse(to_standard(w1, w2, w3)), to_standard(z1, z2, z3))


def fixed_points(T: MobiusTransform) -> tuple[complex, complex]:
    """Both fixed points of ``T`` (``inf`` stands for the point at infinity)."""
    a, b, c, d = T.a, T.b, T.c, T.d
    if abs(c) <= EPS_DEGEN:
        if abs(a - d) <= EPS_DEGEN:
            raise DegenerateTransform("parabolic or identity map fixing infinity")
        return b / (d - a), complex(math.inf)
    disc = cmath.sqrt((a - d) ** 2 + 4 * b * c)
    return (a - d + disc) / (2 * c), (a - d - disc) / (2 * c)


def circumcircle(p: complex, q: complex, r: complex) -> tuple[complex, float]:
    """Euclidean circle through three points."""
    qp, rp = q - p, r - p
    den = 2 * (qp.conjugate() * rp).imag
    # scale-free test: den is 2 |qp| |rp| sin(angle)
    if abs(den) <= EPS_DEGEN * abs(qp) * abs(rp):
        raise DegenerateTransform("points are collinear")
    center = p - 1j * (abs(qp) ** 2 * rp - abs(rp) ** 2 * qp) / den
    return center, abs(center - p)


def circle_image(T: MobiusTransform, center: complex, radius: float) -> tuple[complex, float]:
    """Image of the Euclidean circle ``|z - center| = radius`` under ``T``.

    The image is assumed to be a circle, i.e. the pole of ``T`` is off the circle.
    """
    pts = [apply(T, center + radius * w) for w in (1, 1j, -1)]
    return circumcircle(*pts)
