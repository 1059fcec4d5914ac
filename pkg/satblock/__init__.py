"""Saturated blockers for triangulations of convex polygons."""

from __future__ import annotations

from .characterization import (
    MinBlockerShape,
    NearMinimumClassification,
    NearMinimumVariant,
    build_bouquet,
    build_butterfly,
    build_seagull,
    classify_near_minimum,
    extend_by_vertex,
    recognize_min_blocker,
    stability_distance,
)
from .constructions import (
    QuadPartition,
    build_matrioshka,
    build_min_blocker,
    build_quadrilateral,
    build_spectrum_blocker,
    enumerate_min_blockers,
    max_reachable,
    recursion_coefficients,
)
from .core import (
    Edge,
    EdgeSet,
    Polygon,
    Triangulation,
    contains_triangulation,
    crosses,
    degree,
    is_blocker,
    is_saturated_blocker,
    is_triangulation,
    vertex_deletion,
    witness_triangulation,
)
from .enumeration import (
    SymmetryGroup,
    all_saturated_blockers,
    canonicalize,
    enumerate_triangulations,
    is_blocker_bruteforce,
    saturation_spectrum_exhaustive,
)

__all__ = [
    "Edge",
    "EdgeSet",
    "MinBlockerShape",
    "NearMinimumClassification",
    "NearMinimumVariant",
    "Polygon",
    "QuadPartition",
    "SymmetryGroup",
    "Triangulation",
    "all_saturated_blockers",
    "build_bouquet",
    "build_butterfly",
    "build_matrioshka",
    "build_min_blocker",
    "build_quadrilateral",
    "build_seagull",
    "build_spectrum_blocker",
    "canonicalize",
    "classify_near_minimum",
    "contains_triangulation",
    "crosses",
    "degree",
    "enumerate_min_blockers",
    "enumerate_triangulations",
    "extend_by_vertex",
    "is_blocker",
    "is_blocker_bruteforce",
    "is_saturated_blocker",
    "is_triangulation",
    "max_reachable",
    "recognize_min_blocker",
    "recursion_coefficients",
    "saturation_spectrum_exhaustive",
    "stability_distance",
    "vertex_deletion",
    "witness_triangulation",
]
