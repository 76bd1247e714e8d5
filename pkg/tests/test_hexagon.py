import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sevencircles import mobius
from sevencircles.circles import Horodisk, alternating_perimeter, semi_ideal_A, transport_horodisk
from sevencircles.errors import DegenerateTriangle, InvalidAngles, InvalidArc, InvalidHexagon
from sevencircles.geodesics import Diameter, OrthoCircle, hyp_distance, on_geodesic
from sevencircles.hexagon import (
    CircleChain,
    IdealHexagon,
    analyze_hexagon,
    build_tangent_chain,
    chain_to_hexagon,
    check_triple_point,
    main_diagonals,
    point_reflection_symmetry,
    random_angles,
    random_hexagon,
    random_isometry,
    random_symmetric_hexagon,
    semi_ideal_triangles,
    small_triangle,
    solve_closure,
    theorem3_residual,
    triangle_perimeter,
    trisum_residual,
    verify_seven_circles,
)

from oracles import arccosh_distance, horocircle

PI = math.pi
LOG = math.log(1 + math.sqrt(3))
REGULAR = [0, 60, 120, 180, 240, 300]
WORKED = [0, 60, 120, 180, 240, 330]
SYMMETRIC = [0, 50, 120, 180, 230, 300]

seeds = st.integers(0, 2**32 - 1)


def hexagon(degrees):
    return IdealHexagon.from_degrees(degrees)


def radians(degrees):
    return [math.radians(d) for d in degrees]


# hexagon type


def test_hexagon_validation():
    with pytest.raises(InvalidHexagon):
        hexagon([0, 60, 120, 180, 240])
    with pytest.raises(InvalidHexagon):
        hexagon([0, 120, 60, 180, 240, 300])
    with pytest.raises(InvalidHexagon):
        hexagon([0, 0, 120, 180, 240, 300])
    # cyclic order may start anywhere
    P = hexagon([300, 0, 60, 120, 180, 240])
    assert P[0].theta == pytest.approx(math.radians(300))
    assert P[6] == P[0]


def test_transformed_keeps_order(rng):
    P = hexagon(WORKED)
    Q = P.transformed(random_isometry(rng))
    assert len(list(Q)) == 6


# diagonals and the small triangle


def test_main_diagonals_regular():
    d = main_diagonals(hexagon(REGULAR))
    assert all(isinstance(g.carrier, Diameter) for g in d)
    dirs = sorted(g.carrier.direction for g in d)
    assert dirs == pytest.approx([0, PI / 3, 2 * PI / 3], abs=1e-12)


def test_main_diagonals_worked():
    P = hexagon(WORKED)
    d1, d2, d3 = main_diagonals(P)
    assert isinstance(d1.carrier, Diameter)
    assert isinstance(d2.carrier, Diameter)
    assert isinstance(d3.carrier, OrthoCircle)
    for k, g in enumerate((d1, d2, d3)):
        assert (g.a, g.b) == (P[k], P[k + 3])


def test_small_triangle_degenerate_cases():
    for degrees in (REGULAR, SYMMETRIC):
        T = small_triangle(hexagon(degrees))
        assert T.degenerate
        assert triangle_perimeter(T) < 1e-12
        assert all(abs(q) < 1e-12 for q in T.vertices)


def test_small_triangle_worked():
    P = hexagon(WORKED)
    T = small_triangle(P)
    assert abs(T.q1) < 1e-12
    assert T.q2.real == pytest.approx(0.18960, abs=1e-4)
    assert abs(T.q2.imag) < 1e-12
    d1, d2, d3 = main_diagonals(P)
    assert on_geodesic(d2, T.q3)
    assert not T.degenerate


def test_small_triangle_vertices_lie_on_their_diagonals(rng):
    for _ in range(100):
        P = random_hexagon(rng)
        d1, d2, d3 = main_diagonals(P)
        T = small_triangle(P)
        for q, pair in ((T.q1, (d1, d2)), (T.q2, (d3, d1)), (T.q3, (d2, d3))):
            assert all(on_geodesic(g, q) for g in pair)


def test_worked_perimeter_against_oracle():
    T = small_triangle(hexagon(WORKED))
    q1, q2, q3 = T.vertices
    oracle = arccosh_distance(q1, q2) + arccosh_distance(q2, q3) + arccosh_distance(q3, q1)
    assert oracle == pytest.approx(LOG, abs=1e-10)
    assert T.perimeter == pytest.approx(LOG, abs=1e-10)


def test_perimeter_isometry_invariant(rng):
    P = hexagon(WORKED)
    for _ in range(20):
        Q = P.transformed(random_isometry(rng))
        assert small_triangle(Q).perimeter == pytest.approx(LOG, abs=1e-9)


# theorem 3 and the semi-ideal decomposition


def test_theorem3_examples():
    assert theorem3_residual(hexagon(REGULAR)) == pytest.approx(0, abs=1e-12)
    assert theorem3_residual(hexagon(WORKED)) == pytest.approx(0, abs=1e-10)


@given(seeds)
def test_theorem3_random(seed):
    P = random_hexagon(np.random.default_rng(seed))
    perimeter = small_triangle(P).perimeter
    assert abs(theorem3_residual(P)) / (1 + perimeter) < 1e-8


def test_trisum_examples(rng):
    P = hexagon(WORKED)
    assert abs(trisum_residual(P)) < 1e-9
    for _ in range(10):
        assert abs(trisum_residual(P, np.exp(rng.uniform(-2, 2, 6)))) < 1e-9
    with pytest.raises(DegenerateTriangle):
        trisum_residual(hexagon(REGULAR))


@given(seeds)
def test_trisum_random(seed):
    rng = np.random.default_rng(seed)
    P = random_hexagon(rng)
    if small_triangle(P).degenerate:
        return
    assert abs(trisum_residual(P, np.exp(rng.uniform(-2, 2, 6)))) < 1e-9


def test_point_reflection_swaps_semi_ideal_triangles(rng):
    for _ in range(30):
        P = random_hexagon(rng)
        sizes = np.exp(rng.uniform(-2, 2, 6))
        for Y, G, i, j in semi_ideal_triangles(P):
            R = mobius.point_reflection(Y.apex)
            assert abs(R(Y.ideal1.u) - G.ideal1.u) < 1e-9
            assert abs(R(Y.ideal2.u) - G.ideal2.u) < 1e-9
            H1 = transport_horodisk(R, Horodisk(Y.ideal1, float(sizes[i])))
            H2 = transport_horodisk(R, Horodisk(Y.ideal2, float(sizes[j])))
            a_y = semi_ideal_A(Y, sizes[i], sizes[j])
            assert semi_ideal_A(G, H1.size, H2.size) == pytest.approx(a_y, abs=1e-9)
            assert semi_ideal_A(G) == pytest.approx(a_y, abs=1e-9)


# theorem 4


def test_check_triple_point_examples():
    assert check_triple_point(hexagon(REGULAR), 1e-8)
    assert check_triple_point(hexagon(SYMMETRIC), 1e-8)
    assert not check_triple_point(hexagon(WORKED), 1e-8)


def test_point_reflection_symmetry_examples(rng):
    assert abs(point_reflection_symmetry(hexagon(REGULAR)).z) < 1e-12
    assert abs(point_reflection_symmetry(hexagon(SYMMETRIC)).z) < 1e-12
    assert point_reflection_symmetry(hexagon(WORKED)) is None
    for _ in range(20):
        J = random_isometry(rng)
        fixed = point_reflection_symmetry(hexagon(REGULAR).transformed(J))
        assert abs(fixed.z - J(0j)) < 1e-8


@given(seeds)
def test_theorem4_symmetric_side(seed):
    P, centre = random_symmetric_hexagon(np.random.default_rng(seed))
    assert abs(alternating_perimeter(P)) < 1e-9
    T = small_triangle(P)
    assert T.perimeter < 1e-7
    fixed = point_reflection_symmetry(P)
    assert fixed is not None
    assert abs(fixed.z - centre) < 1e-7
    assert abs(fixed.z - T.q1) < 1e-7


@given(seeds)
def test_theorem4_asymmetric_side(seed):
    P = random_hexagon(np.random.default_rng(seed))
    if abs(alternating_perimeter(P)) > 0.1:
        assert small_triangle(P).perimeter > 0.05 - 1e-8
        assert point_reflection_symmetry(P) is None


# chains


def test_regular_chain():
    C = build_tangent_chain(radians(REGULAR), 1.0)
    assert C.sizes == pytest.approx([1.0] * 6, abs=1e-12)
    assert C.closure_residual == pytest.approx(1.0, abs=1e-12)
    # each horocircle has Euclidean radius 1/3 and touches its neighbours
    circles = [horocircle(h.base.u, h.size) for h in C.horodisks]
    for k in range(6):
        (c1, r1), (c2, r2) = circles[k], circles[(k + 1) % 6]
        assert r1 == pytest.approx(1 / 3)
        assert abs(c1 - c2) == pytest.approx(r1 + r2, abs=1e-12)


def test_regular_chain_any_s1():
    C = build_tangent_chain(radians(REGULAR), 2.0)
    assert C.sizes == pytest.approx([2, 0.5, 2, 0.5, 2, 0.5], abs=1e-12)
    assert C.closure_residual == pytest.approx(1.0, abs=1e-12)


def test_worked_chain_does_not_close():
    C = build_tangent_chain(radians(WORKED), 1.0)
    # chords are 1 on the first four sides, sqrt(2) on the fifth and 2 sin 15deg on the last
    tail = (2 * math.sin(math.radians(15))) ** 2 / 2
    assert C.sizes == pytest.approx([1, 1, 1, 1, 1, 2], abs=1e-12)
    assert C.closure_residual == pytest.approx(tail, abs=1e-12)
    assert C.s7 == pytest.approx(tail)
    assert not C.closes()


def test_build_chain_validation():
    with pytest.raises(InvalidAngles):
        build_tangent_chain(radians([0, 60, 120, 180, 240]))
    with pytest.raises(InvalidAngles):
        build_tangent_chain(radians([0, 120, 60, 180, 240, 300]))
    with pytest.raises(InvalidAngles):
        build_tangent_chain(radians(REGULAR), 0.0)


def test_chain_from_horodisks_round_trip():
    C = build_tangent_chain(radians(WORKED), 0.7)
    D = CircleChain.from_horodisks(C.horodisks)
    assert D.sizes == C.sizes
    assert D.closure_residual == pytest.approx(C.closure_residual, rel=1e-14)


def test_solve_closure_examples():
    t6 = solve_closure(radians([0, 60, 120, 180, 240]), 1.0, (math.radians(241), math.radians(359)))
    assert math.degrees(t6) == pytest.approx(300, abs=1e-9)
    five = radians([0, 50, 120, 180, 230])
    s1 = 3.7  # closure does not depend on s1
    t6 = solve_closure(five, s1)
    assert math.degrees(t6) == pytest.approx(300, abs=1e-9)
    assert build_tangent_chain([*five, t6], s1).closes(1e-10)


def test_solve_closure_no_root():
    # for 0..240 the root is at 300; the arc (250, 290) stays on one side
    assert solve_closure(radians([0, 60, 120, 180, 240]), 1.0, radians([250, 290])) is None


def test_solve_closure_bad_arc():
    five = radians([0, 60, 120, 180, 240])
    with pytest.raises(InvalidArc):
        solve_closure(five, 1.0, radians([200, 300]))
    with pytest.raises(InvalidArc):
        solve_closure(five, 1.0, radians([300, 250]))
    with pytest.raises(InvalidAngles):
        solve_closure(five[:4], 1.0)


@given(seeds)
def test_solved_chains_close(seed):
    rng = np.random.default_rng(seed)
    five = random_angles(rng, 5)
    t6 = solve_closure(five, 1.0)
    assert t6 is not None
    C = build_tangent_chain([*five, t6], float(np.exp(rng.uniform(-2, 2))))
    assert abs(C.closure_residual - 1) < 1e-10


def test_chain_to_hexagon():
    C = build_tangent_chain(radians(WORKED))
    P = chain_to_hexagon(C)
    assert P.thetas == tuple(b.theta for b in C.bases)


@given(seeds)
def test_chain_identity(seed):
    rng = np.random.default_rng(seed)
    C = build_tangent_chain(random_angles(rng), float(np.exp(rng.uniform(-2, 2))))
    A = alternating_perimeter(chain_to_hexagon(C), C.sizes)
    assert A == pytest.approx(math.log(C.sizes[0] / C.s7), abs=1e-10)


# seven circles verification


def test_verify_regular_chain():
    report = verify_seven_circles(build_tangent_chain(radians(REGULAR)), 1e-8)
    assert report.verdict == "PASS"
    assert abs(report.hexagon.fixed_point) < 1e-12
    assert all(report.tangent_pairs)


def test_verify_solved_chain():
    five = radians([0, 40, 110, 170, 250])
    C = build_tangent_chain([*five, solve_closure(five)])
    report = verify_seven_circles(C, 1e-8)
    assert report.verdict == "PASS"
    assert report.closed


def test_verify_open_chain():
    C = build_tangent_chain(radians(WORKED))
    report = verify_seven_circles(C, 1e-8)
    assert report.verdict == "FAIL"
    assert report.closure_residual == pytest.approx(0.13397, abs=1e-5)
    assert report.hexagon.alternating_perimeter == pytest.approx(2 * LOG, abs=1e-10)
    assert report.hexagon.alternating_perimeter == pytest.approx(-math.log(report.closure_residual), abs=1e-10)
    assert report.tangent_pairs == (True,) * 5 + (False,)


@given(seeds)
def test_verdict_isometry_equivariant(seed):
    rng = np.random.default_rng(seed)
    five = random_angles(rng, 5)
    C = build_tangent_chain([*five, solve_closure(five)], float(np.exp(rng.uniform(-1, 1))))
    T = random_isometry(rng, 0.5)
    closed = verify_seven_circles(C, 1e-7)
    moved = verify_seven_circles(C.transformed(T), 1e-7)
    assert closed.verdict == moved.verdict == "PASS"
    opened = build_tangent_chain(random_angles(rng))
    if abs(opened.closure_residual - 1) > 1e-3:
        assert verify_seven_circles(opened.transformed(T)).verdict == "FAIL"


def test_analyze_hexagon_worked():
    report = analyze_hexagon(hexagon(WORKED))
    assert report.alternating_perimeter == pytest.approx(2 * LOG, abs=1e-12)
    assert report.triangle.perimeter == pytest.approx(LOG, abs=1e-10)
    assert not report.triple_point
    assert report.fixed_point is None
    assert abs(report.theorem3_residual) < 1e-10
    assert abs(report.trisum_residual) < 1e-9
    degenerate = analyze_hexagon(hexagon(REGULAR))
    assert degenerate.trisum_residual is None
    assert degenerate.triple_point


# samplers


def test_samplers_are_seeded():
    a = random_hexagon(np.random.default_rng(5))
    b = random_hexagon(np.random.default_rng(5))
    assert a == b
    thetas = random_angles(np.random.default_rng(1), 6)
    offs = sorted(thetas)
    gaps = [y - x for x, y in zip(offs, offs[1:])] + [2 * PI - offs[-1] + offs[0]]
    assert min(gaps) > 1e-3


def test_random_symmetric_hexagon_centre(rng):
    P, centre = random_symmetric_hexagon(rng)
    R = mobius.point_reflection(centre)
    for k in range(3):
        assert abs(R(P[k].u) - P[k + 3].u) < 1e-10


def test_distance_sanity_on_triangle():
    T = small_triangle(hexagon(WORKED))
    assert hyp_distance(T.q1, T.q2) > 0
