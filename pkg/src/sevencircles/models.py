"""Klein, Poincare and hemisphere models of the hyperbolic plane and the maps between them.

``f`` is vertical projection from the hemisphere to the Klein disk and ``g``
is stereographic projection from the south pole onto the Poincare disk.
Klein <-> Poincare is ``g o f^-1`` and ``f o g^-1``, shipped here in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotInDisk, NotOnSphere

DISK_MARGIN = 1e-14
SPHERE_RENORM_TOL = 1e-9


def _check_disk(x: float, y: float) -> None:
    if not x * x + y * y < 1.0 - DISK_MARGIN:
        raise NotInDisk(f"({x!r}, {y!r}) is not inside the open unit disk")


@dataclass(frozen=True)
class KleinPoint:
    x: float
    y: float

    def __post_init__(self):
        _check_disk(self.x, self.y)

    def __complex__(self) -> complex:
        return complex(self.x, self.y)

    @classmethod
    def from_complex(cls, z: complex) -> "KleinPoint":
        return cls(z.real, z.imag)


@dataclass(frozen=True)
class PoincarePoint:
    x: float
    y: float

    def __post_init__(self):
        _check_disk(self.x, self.y)

    def __complex__(self) -> complex:
        return complex(self.x, self.y)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)

    @classmethod
    def from_complex(cls, z: complex) -> "PoincarePoint":
        z = complex(z)
        return cls(z.real, z.imag)


@dataclass(frozen=True)
class HemispherePoint:
    """Point of the open northern unit hemisphere.

    Inputs off the sphere by less than ``SPHERE_RENORM_TOL`` (in ``|p|^2 - 1``)
    are projected back onto it; larger violations are rejected.
    """

    x: float
    y: float
    z: float

    def __post_init__(self):
        n2 = self.x**2 + self.y**2 + self.z**2
        if abs(n2 - 1.0) >= SPHERE_RENORM_TOL:
            raise NotOnSphere(f"|p|^2 = {n2!r} is not 1")
        if not self.z > 0:
            raise NotOnSphere(f"z = {self.z!r} is not in the northern hemisphere")
        # leave rounding-level deviations alone so f(f_inv(k)) == k exactly
        if abs(n2 - 1.0) > 4e-16:
            n = math.sqrt(n2)
            object.__setattr__(self, "x", self.x / n)
            object.__setattr__(self, "y", self.y / n)
            object.__setattr__(self, "z", self.z / n)


def f(h: HemispherePoint) -> KleinPoint:
    return KleinPoint(h.x, h.y)


def f_inv(k: KleinPoint) -> HemispherePoint:
    _check_disk(k.x, k.y)
    return HemispherePoint(k.x, k.y, math.sqrt(1.0 - k.x * k.x - k.y * k.y))


def g(h: HemispherePoint) -> PoincarePoint:
    return PoincarePoint(h.x / (1.0 + h.z), h.y / (1.0 + h.z))


def g_inv(p: PoincarePoint) -> HemispherePoint:
    _check_disk(p.x, p.y)
    r2 = p.x * p.x + p.y * p.y
    s = 1.0 / (1.0 + r2)
    return HemispherePoint(2 * p.x * s, 2 * p.y * s, (1.0 - r2) * s)


# complex-valued kernels, shared with geodesics; callers guarantee |z| < 1


def k2p(k: complex) -> complex:
    return k / (1.0 + math.sqrt(max(0.0, 1.0 - abs(k) ** 2)))


def p2k(p: complex) -> complex:
    return 2 * p / (1.0 + abs(p) ** 2)


def klein_to_poincare(k: KleinPoint) -> PoincarePoint:
    _check_disk(k.x, k.y)
    return PoincarePoint.from_complex(k2p(complex(k)))


def poincare_to_klein(p: PoincarePoint) -> KleinPoint:
    _check_disk(p.x, p.y)
    return KleinPoint.from_complex(p2k(complex(p)))


MODELS = ("klein", "poincare", "hemisphere")


def convert(coords: tuple[float, ...], from_model: str, to_model: str) -> tuple[float, ...]:
    """Convert raw coordinates between any two of the three models."""
    if from_model not in MODELS or to_model not in MODELS:
        raise ValueError(f"unknown model; expected one of {MODELS}")
    arity = 3 if from_model == "hemisphere" else 2
    if len(coords) != arity:
        raise ValueError(f"{from_model} points take {arity} coordinates, got {len(coords)}")
    if from_model == "hemisphere":
        h = HemispherePoint(*coords)
    elif from_model == "klein":
        h = f_inv(KleinPoint(*coords))
    else:
        h = g_inv(PoincarePoint(*coords))

    # direct formulas for Klein <-> Poincare to avoid the sphere detour
    if from_model == "klein" and to_model == "poincare":
        p = klein_to_poincare(KleinPoint(*coords))
        return (p.x, p.y)
    if from_model == "poincare" and to_model == "klein":
        k = poincare_to_klein(PoincarePoint(*coords))
        return (k.x, k.y)
    if to_model == "hemisphere":
        return (h.x, h.y, h.z)
    if to_model == "klein":
        k = f(h)
        return (k.x, k.y)
    p = g(h)
    return (p.x, p.y)
