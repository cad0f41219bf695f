"""
Circular-arc polygons
"""

from dataclasses import dataclass
from typing import List, Tuple

from .circles import GenCircle, circle_angle, moebius_image
from .moebius import MoebiusLike, is_infinity

ENDPOINT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Side:
    circle: GenCircle
    start: complex
    end: complex


@dataclass(frozen=True)
class PolygonSpec:
    """Sides in boundary order; side i ends where side i + 1 starts"""
    sides: Tuple[Side, ...]

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(self.sides))
        if len(self.sides) < 2:
            raise ValueError("A polygon needs at least two sides")
        for index, side in enumerate(self.sides):
            for point in (side.start, side.end):
                if is_infinity(point):
                    raise ValueError(f"Side {index} has an endpoint at infinity")
                if not side.circle.contains(point, ENDPOINT_TOLERANCE):
                    raise ValueError(f"Endpoint {point} of side {index} is off its circle")
            following = self.sides[(index + 1) % len(self.sides)]
            if abs(side.end - following.start) > ENDPOINT_TOLERANCE * max(1.0, abs(side.end)):
                raise ValueError(f"Side {index} does not end where side {index + 1} starts")

    @property
    def circles(self) -> List[GenCircle]:
        return [s.circle for s in self.sides]

    @property
    def vertices(self) -> List[complex]:
        return [s.end for s in self.sides]

    def vertex_angles(self) -> List[float]:
        """Angle between the circles meeting at each vertex (0 for tangency)"""
        n = len(self.sides)
        return [circle_angle(self.sides[i].circle, self.sides[(i + 1) % n].circle) for i in range(n)]


def transform_polygon(polygon: PolygonSpec, transform: MoebiusLike) -> PolygonSpec:
    """Image of the polygon under a holomorphic fractional linear map"""
    sides = []
    for side in polygon.sides:
        start, end = transform(side.start), transform(side.end)
        if is_infinity(start) or is_infinity(end):
            raise ValueError("Transformation sends a vertex to infinity")
        sides.append(Side(moebius_image(side.circle, transform), start, end))
    return PolygonSpec(tuple(sides))
