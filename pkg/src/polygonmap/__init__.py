# Circular-arc polygons: inversions, reflection groups and integrability cases
from .moebius import INFINITY, MoebiusLike, is_infinity, moebius_matrix_for_pair
from .circles import GenCircle, circle_angle, moebius_image, reflect
from .polygon import PolygonSpec, Side, transform_polygon
from .cases import (
    ClosureResult, NetTag, classify_polygon, common_point_of_sides, normalize_symmetric_pair,
    reflection_group_closure, symmetric_pair,
)

__all__ = [
    "INFINITY", "MoebiusLike", "is_infinity", "moebius_matrix_for_pair",
    "GenCircle", "circle_angle", "moebius_image", "reflect",
    "PolygonSpec", "Side", "transform_polygon",
    "ClosureResult", "NetTag", "classify_polygon", "common_point_of_sides", "normalize_symmetric_pair",
    "reflection_group_closure", "symmetric_pair",
]
