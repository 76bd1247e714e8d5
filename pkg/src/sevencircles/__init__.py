"""Numerical hyperbolic geometry for the Seven Circles Theorem.

Poincare-disk points are plain ``complex`` numbers throughout the engine;
``PoincarePoint`` and ``KleinPoint`` wrap them where model membership matters.
"""

from .circles import (
    Horodisk,
    HyperbolicDisk,
    SemiIdealTriangle,
    alternating_perimeter,
    are_tangent,
    clipped_length_ideal,
    clipped_length_mixed,
    horodisk_from_euclidean,
    hyperbolic_disk_to_euclidean,
    semi_ideal_A,
)
from .geodesics import Geodesic, IdealPoint, hyp_distance, ideal_endpoints, intersect, on_geodesic
from .hexagon import (
    CircleChain,
    IdealHexagon,
    SmallTriangle,
    build_tangent_chain,
    chain_to_hexagon,
    check_triple_point,
    main_diagonals,
    point_reflection_symmetry,
    small_triangle,
    solve_closure,
    theorem3_residual,
    trisum_residual,
    verify_seven_circles,
)
from .mobius import MobiusTransform, isometry_to_zero, point_reflection, rotation
from .models import HemispherePoint, KleinPoint, PoincarePoint, klein_to_poincare, poincare_to_klein

__version__ = "0.1.0"

__all__ = [
    "CircleChain",
    "Geodesic",
    "HemispherePoint",
    "Horodisk",
    "HyperbolicDisk",
    "IdealHexagon",
    "IdealPoint",
    "KleinPoint",
    "MobiusTransform",
    "PoincarePoint",
    "SemiIdealTriangle",
    "SmallTriangle",
    "alternating_perimeter",
    "are_tangent",
    "build_tangent_chain",
    "chain_to_hexagon",
    "check_triple_point",
    "clipped_length_ideal",
    "clipped_length_mixed",
    "horodisk_from_euclidean",
    "hyp_distance",
    "hyperbolic_disk_to_euclidean",
    "ideal_endpoints",
    "intersect",
    "isometry_to_zero",
    "klein_to_poincare",
    "main_diagonals",
    "on_geodesic",
    "poincare_to_klein",
    "point_reflection",
    "point_reflection_symmetry",
    "rotation",
    "semi_ideal_A",
    "small_triangle",
    "solve_closure",
    "theorem3_residual",
    "trisum_residual",
    "verify_seven_circles",
]
