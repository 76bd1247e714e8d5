"""Ideal hexagons, their main diagonals and small triangle, and six-circle chains.

The checkers here verify numerically that

* the alternating perimeter of an ideal hexagon is, up to sign, twice the
  perimeter of the triangle cut out by its three main diagonals;
* concurrent diagonals, point-reflection symmetry and vanishing alternating
  perimeter go together;
* a closed chain of six tangent horodisks has concurrent diagonals
  (the Seven Circles Theorem).
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from . import mobius
from .circles import (
    Horodisk,
    SemiIdealTriangle,
    alternating_perimeter,
    are_tangent,
    semi_ideal_A,
    transport_horodisk,
)
from .errors import (
    DegenerateTriangle,
    InternalError,
    InvalidAngles,
    InvalidArc,
    InvalidHexagon,
    NumericalInstability,
)
from .geodesics import (
    EPS_SEP,
    TWO_PI,
    Geodesic,
    IdealPoint,
    chord,
    chord_crossing,
    hyp_distance,
)
from .models import PoincarePoint

DEFAULT_TOL = 1e-8
MIN_SAMPLE_SEP = 1e-3
DEGENERATE_PERIMETER = 1e-9


def _cyclic_offsets(thetas: Sequence[float]) -> list[float]:
    return [(t - thetas[0]) % TWO_PI for t in thetas]


def _is_cyclically_ordered(thetas: Sequence[float], min_sep: float = EPS_SEP) -> bool:
    offs = _cyclic_offsets(thetas) + [TWO_PI]
    return all(b - a > min_sep for a, b in zip(offs, offs[1:]))


@dataclass(frozen=True)
class IdealHexagon:
    vertices: tuple[IdealPoint, ...]

    def __post_init__(self):
        verts = tuple(v if isinstance(v, IdealPoint) else IdealPoint(v) for v in self.vertices)
        if len(verts) != 6:
            raise InvalidHexagon(f"need 6 vertices, got {len(verts)}")
        if not _is_cyclically_ordered([v.theta for v in verts]):
            raise InvalidHexagon("vertices must be distinct and in counter-clockwise cyclic order")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_radians(cls, thetas: Sequence[float]) -> "IdealHexagon":
        return cls(tuple(IdealPoint(t) for t in thetas))

    @classmethod
    def from_degrees(cls, degrees: Sequence[float]) -> "IdealHexagon":
        return cls.from_radians([math.radians(d) for d in degrees])

    @property
    def thetas(self) -> tuple[float, ...]:
        return tuple(v.theta for v in self.vertices)

    @property
    def points(self) -> tuple[complex, ...]:
        return tuple(v.u for v in self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, k: int) -> IdealPoint:
        return self.vertices[k % 6]

    def transformed(self, T: mobius.MobiusTransform) -> "IdealHexagon":
        return IdealHexagon(tuple(IdealPoint.from_complex(T(u)) for u in self.points))


@dataclass(frozen=True)
class SmallTriangle:
    """Pairwise crossings of the main diagonals.

    ``q1`` is on diagonals 1 and 2, ``q2`` on 3 and 1, ``q3`` on 2 and 3.
    """

    q1: complex
    q2: complex
    q3: complex
    perimeter: float

    @property
    def vertices(self) -> tuple[complex, complex, complex]:
        return self.q1, self.q2, self.q3

    @property
    def degenerate(self) -> bool:
        return self.perimeter <= DEGENERATE_PERIMETER


def main_diagonals(P: IdealHexagon) -> tuple[Geodesic, Geodesic, Geodesic]:
    return tuple(Geodesic(P[k], P[k + 3]) for k in range(3))


def _crossing(P: IdealHexagon, i: int, j: int) -> complex:
    z = chord_crossing(P[i].u, P[i + 3].u, P[j].u, P[j + 3].u)
    if z is None:
        raise InternalError(f"diagonals {i + 1} and {j + 1} do not cross; vertex order is broken")
    return z


def small_triangle(P: IdealHexagon) -> SmallTriangle:
    q1 = _crossing(P, 0, 1)
    q2 = _crossing(P, 2, 0)
    q3 = _crossing(P, 1, 2)
    perimeter = hyp_distance(q1, q2) + hyp_distance(q2, q3) + hyp_distance(q3, q1)
    return SmallTriangle(q1, q2, q3, perimeter)


def triangle_perimeter(T: SmallTriangle) -> float:
    return T.perimeter


def theorem3_residual(P: IdealHexagon) -> float:
    """``|A(P)| - 2 perim(T_P)``; vanishes for every ideal hexagon."""
    return abs(alternating_perimeter(P)) - 2.0 * small_triangle(P).perimeter


def semi_ideal_triangles(P: IdealHexagon) -> list[tuple[SemiIdealTriangle, SemiIdealTriangle, int, int]]:
    """Pairs ``(Y_k, G_k)`` sharing the apex where diagonals ``k`` and ``k+1`` cross.

    Each entry also carries the vertex indices of ``Y_k``'s ideal vertices; ``G_k``
    uses the opposite ones (index + 3).
    """
    pairs = []
    for k in range(3):
        apex = _crossing(P, k, (k + 1) % 3)
        Y = SemiIdealTriangle(P[k], P[k + 1], apex)
        G = SemiIdealTriangle(P[k + 3], P[k + 4], apex)
        pairs.append((Y, G, k, (k + 1) % 6))
    return pairs


def trisum_residual(P: IdealHexagon, sizes: Sequence[float] | None = None) -> float:
    """``sum A(Y_k) - sum A(G_k)`` with horodisks of the given sizes at the vertices."""
    if sizes is None:
        sizes = [1.0] * 6
    if small_triangle(P).perimeter <= DEGENERATE_PERIMETER:
        raise DegenerateTriangle("diagonals are concurrent; the semi-ideal triangles collapse")
    total = 0.0
    for Y, G, i, j in semi_ideal_triangles(P):
        total += semi_ideal_A(Y, sizes[i], sizes[j])
        total -= semi_ideal_A(G, sizes[(i + 3) % 6], sizes[(j + 3) % 6])
    return total


def check_triple_point(P: IdealHexagon, tol: float = DEFAULT_TOL) -> bool:
    return small_triangle(P).perimeter < tol


_PROBES = (0j, 0.5, -0.5j, 0.3 + 0.3j, -0.6 + 0.1j)


def point_reflection_symmetry(P: IdealHexagon, tol: float = DEFAULT_TOL) -> PoincarePoint | None:
    """Fixed point of an isometric involution swapping opposite vertices, if one exists."""
    u = P.points
    M = mobius.three_point_map(u[0], u[1], u[2], u[3], u[4], u[5])
    if not mobius.is_disk_isometry(M, tol):
        return None
    try:
        if any(abs(M(M(z)) - z) > tol for z in _PROBES):
            return None
        if any(abs(M(u[k + 3]) - u[k]) > tol for k in range(3)):
            return None
        candidates = mobius.fixed_points(M)
    except (mobius.PoleError, mobius.DegenerateTransform):
        return None
    inside = [z for z in candidates if abs(z) < 1.0]
    if not inside:
        return None
    return PoincarePoint.from_complex(min(inside, key=abs))


@dataclass(frozen=True)
class CircleChain:
    """Six horodisks, each tangent to the next; the sixth-to-first contact is measured.

    ``closure_residual`` is ``s7 / s1``, where ``s7`` is the size the tangency
    law would assign to the first horodisk after going once around.
    """

    bases: tuple[IdealPoint, ...]
    sizes: tuple[float, ...]
    closure_residual: float

    @property
    def horodisks(self) -> tuple[Horodisk, ...]:
        return tuple(Horodisk(b, s) for b, s in zip(self.bases, self.sizes))

    @property
    def s7(self) -> float:
        return self.closure_residual * self.sizes[0]

    def closes(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.closure_residual - 1.0) < tol

    @classmethod
    def from_horodisks(cls, horodisks: Sequence[Horodisk]) -> "CircleChain":
        bases = tuple(h.base for h in horodisks)
        sizes = tuple(h.size for h in horodisks)
        s7 = chord(bases[5], bases[0]) ** 2 / sizes[5]
        return cls(bases, sizes, s7 / sizes[0])

    def transformed(self, T: mobius.MobiusTransform) -> "CircleChain":
        return CircleChain.from_horodisks([transport_horodisk(T, h) for h in self.horodisks])


def build_tangent_chain(thetas: Sequence[float], s1: float = 1.0) -> CircleChain:
    """Propagate tangency ``s_{k+1} = |u_k - u_{k+1}|^2 / s_k`` around six base points."""
    if len(thetas) != 6 or not _is_cyclically_ordered(thetas):
        raise InvalidAngles(f"need six distinct cyclically ordered angles, got {thetas!r}")
    if not s1 > 0:
        raise InvalidAngles(f"s1 must be positive, got {s1!r}")
    bases = tuple(IdealPoint(t) for t in thetas)
    sizes = [float(s1)]
    for k in range(6):
        sizes.append(chord(bases[k], bases[(k + 1) % 6]) ** 2 / sizes[k])
    return CircleChain(bases, tuple(sizes[:6]), sizes[6] / sizes[0])


def _log_closure(thetas5: Sequence[float], theta6: float) -> float:
    pts = [IdealPoint(t) for t in (*thetas5, theta6)]
    chords = [chord(pts[k], pts[(k + 1) % 6]) for k in range(6)]
    # s7/s1 is independent of s1: (c2 c4 c6 / (c1 c3 c5))^2
    return 2.0 * (
        math.log(chords[1]) + math.log(chords[3]) + math.log(chords[5])
        - math.log(chords[0]) - math.log(chords[2]) - math.log(chords[4])
    )


def solve_closure(
    thetas5: Sequence[float],
    s1: float = 1.0,
    search_arc: tuple[float, float] | None = None,
) -> float | None:
    """Sixth base angle that closes the chain, by bisection over ``search_arc``.

    ``search_arc`` defaults to the whole free arc between the fifth and first
    angle (minus a 1e-9 margin). Returns None when the closure residual does not
    cross 1 on the arc.
    """
    if len(thetas5) != 5 or not _is_cyclically_ordered(thetas5):
        raise InvalidAngles(f"need five distinct cyclically ordered angles, got {thetas5!r}")
    t1 = thetas5[0]
    off5 = (thetas5[4] - t1) % TWO_PI
    if search_arc is None:
        lo_off, hi_off = off5 + EPS_SEP, TWO_PI - EPS_SEP
    else:
        lo_off = (search_arc[0] - t1) % TWO_PI
        hi_off = (search_arc[1] - t1) % TWO_PI
        if not (off5 < lo_off < hi_off < TWO_PI):
            raise InvalidArc(f"arc {search_arc!r} is not inside the free arc after the fifth angle")
    lo, hi = t1 + lo_off, t1 + hi_off

    def h(t):
        return _log_closure(thetas5, t)

    grid = [h(t) for t in np.linspace(lo, hi, 17)]
    if any(b >= a for a, b in zip(grid, grid[1:])):
        raise NumericalInstability("log closure residual is not decreasing along the arc")
    if grid[0] * grid[-1] > 0:
        return None
    if grid[0] == 0.0:
        return lo % TWO_PI
    if grid[-1] == 0.0:
        return hi % TWO_PI
    return _bisect_to_resolution(h, lo, hi, grid[0]) % TWO_PI


def _bisect_to_resolution(fn, lo: float, hi: float, f_lo: float) -> float:
    # halve until the midpoint is no longer representable between the endpoints
    f_hi = fn(hi)
    while True:
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        f_mid = fn(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return lo if abs(f_lo) <= abs(f_hi) else hi


def chain_to_hexagon(C: CircleChain) -> IdealHexagon:
    return IdealHexagon(C.bases)


@dataclass(frozen=True)
class HexagonReport:
    thetas: tuple[float, ...]
    sizes: tuple[float, ...]
    alternating_perimeter: float
    triangle: SmallTriangle
    triple_point: bool
    fixed_point: complex | None
    theorem3_residual: float
    trisum_residual: float | None
    tol: float

    @property
    def abs_alternating_perimeter(self) -> float:
        return abs(self.alternating_perimeter)


def analyze_hexagon(P: IdealHexagon, sizes: Sequence[float] | None = None, tol: float = DEFAULT_TOL) -> HexagonReport:
    sizes = tuple(sizes) if sizes is not None else (1.0,) * 6
    A = alternating_perimeter(P, sizes)
    T = small_triangle(P)
    fixed = point_reflection_symmetry(P, tol)
    try:
        trisum = trisum_residual(P, sizes)
    except DegenerateTriangle:
        trisum = None
    return HexagonReport(
        thetas=P.thetas,
        sizes=sizes,
        alternating_perimeter=A,
        triangle=T,
        triple_point=T.perimeter < tol,
        fixed_point=None if fixed is None else fixed.z,
        theorem3_residual=abs(A) - 2.0 * T.perimeter,
        trisum_residual=trisum,
        tol=tol,
    )


@dataclass(frozen=True)
class SevenCirclesReport:
    chain: CircleChain
    hexagon: HexagonReport
    tangent_pairs: tuple[bool, ...]
    closed: bool
    passed: bool

    @property
    def closure_residual(self) -> float:
        return self.chain.closure_residual

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def verify_seven_circles(C: CircleChain, tol: float = DEFAULT_TOL) -> SevenCirclesReport:
    """Check closure, vanishing alternating perimeter, a triple point and a point reflection."""
    hexagon = analyze_hexagon(chain_to_hexagon(C), C.sizes, tol)
    disks = C.horodisks
    tangent = tuple(are_tangent(disks[k], disks[(k + 1) % 6], tol) for k in range(6))
    closed = C.closes(tol)
    passed = (
        closed
        and hexagon.abs_alternating_perimeter < tol
        and hexagon.triangle.perimeter < tol
        and hexagon.fixed_point is not None
    )
    return SevenCirclesReport(C, hexagon, tangent, closed, passed)


# samplers; every one takes an explicit numpy Generator


def random_angles(rng: np.random.Generator, n: int = 6, min_sep: float = MIN_SAMPLE_SEP) -> list[float]:
    while True:
        thetas = sorted(rng.uniform(0.0, TWO_PI, n))
        if _is_cyclically_ordered(thetas, min_sep):
            return thetas


def random_hexagon(rng: np.random.Generator, min_sep: float = MIN_SAMPLE_SEP) -> IdealHexagon:
    return IdealHexagon.from_radians(random_angles(rng, 6, min_sep))


def random_isometry(rng: np.random.Generator, max_radius: float = 0.8) -> mobius.MobiusTransform:
    radius = max_radius * math.sqrt(rng.uniform())
    alpha = radius * complex(math.cos(phi := rng.uniform(0.0, TWO_PI)), math.sin(phi))
    return mobius.from_normal_form(rng.uniform(0.0, TWO_PI), alpha)


def random_symmetric_hexagon(
    rng: np.random.Generator, push_radius: float = 0.8, min_sep: float = MIN_SAMPLE_SEP
) -> tuple[IdealHexagon, complex]:
    """Point-symmetric hexagon moved by a random isometry, with its symmetry centre."""
    while True:
        first = sorted(rng.uniform(0.0, math.pi, 3))
        thetas = first + [t + math.pi for t in first]
        if _is_cyclically_ordered(thetas, min_sep):
            break
    J = random_isometry(rng, push_radius)
    return IdealHexagon.from_radians(thetas).transformed(J), J(0j)
