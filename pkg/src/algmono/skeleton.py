"""
Loop skeletons: a base point and one petal loop per puncture, ordered so the
composite loop encircles every puncture once counterclockwise
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..numkernel import PathPolyline

logger = logging.getLogger(__name__)

RADIUS_FACTOR = 0.4
CLEARANCE_FACTOR = 0.2
MIN_CIRCLE_SAMPLES = 64
ROTATION_STEPS = 64


@dataclass(frozen=True)
class LoopSkeleton:
    """
    Attributes:
        base_point: common start and end of every loop
        punctures: punctures in loop order
        loops: closed petal loops, loops[i] winds once counterclockwise around punctures[i]
        radii: petal circle radius per puncture
        clearance: smallest distance from a petal stem to a foreign puncture, relative
            to that puncture's nearest-neighbour distance
    """
    base_point: complex
    punctures: Tuple[complex, ...]
    loops: Tuple[PathPolyline, ...]
    radii: Tuple[float, ...]
    clearance: float

    def __len__(self) -> int:
        return len(self.loops)

    def composite(self) -> PathPolyline:
        """All loops in order; homotopic to a clockwise loop around infinity"""
        path = PathPolyline.constant(self.base_point)
        for loop in self.loops:
            path = path.then(loop)
        return path


def puncture_gap(punctures: Sequence[complex]) -> float:
    """Smallest pairwise distance, 1 for fewer than two punctures"""
    if len(punctures) < 2:
        return 1.0
    return min(abs(a - b) for i, a in enumerate(punctures) for b in punctures[i + 1:])


def nearest_distances(punctures: Sequence[complex]) -> List[float]:
    if len(punctures) < 2:
        return [1.0] * len(punctures)
    return [min(abs(p - q) for j, q in enumerate(punctures) if j != i) for i, p in enumerate(punctures)]


def petal(base: complex, center: complex, radius: float, samples: int = MIN_CIRCLE_SAMPLES) -> PathPolyline:
    """Stem from base to the circle, one counterclockwise turn, back along the stem"""
    direction = (base - center) / abs(base - center)
    start_angle = cmath.phase(direction)
    entry = center + radius * direction
    ring = [center + radius * cmath.exp(1j * (start_angle + 2 * math.pi * k / samples))
            for k in range(1, samples)]
    return PathPolyline((base, entry, *ring, entry, base))


def _stem_clearance(base: complex, punctures: Sequence[complex], nearest: Sequence[float],
                    radii: Sequence[float]) -> float:
    worst = math.inf
    for i, center in enumerate(punctures):
        entry = center + radii[i] * (base - center) / abs(base - center)
        stem = PathPolyline((base, entry))
        for j, other in enumerate(punctures):
            if j != i:
                worst = min(worst, stem.distance_to(other) / nearest[j])
    return worst


def _rotation_order(steps: int):
    yield 0
    for k in range(1, steps // 2 + 1):
        yield k
        if k != steps // 2:
            yield -k


def build_skeleton(punctures: Sequence[complex], tol: float = 1e-10) -> LoopSkeleton:
    """
    Canonical loop skeleton around a set of distinct punctures

    The base point sits at distance max|b| + 2*gap from the origin, first on the
    positive real axis, then rotated in steps of 2*pi/64 until every petal stem stays
    0.2 nearest-neighbour distances away from the foreign punctures.
    """
    points = [complex(p) for p in punctures]
    if not points:
        return LoopSkeleton(0j, (), (), (), math.inf)
    gap = puncture_gap(points)
    if gap <= tol:
        raise ValueError(f"Punctures closer than {tol}; they must be distinct")

    nearest = nearest_distances(points)
    radii = [RADIUS_FACTOR * d for d in nearest]
    distance = max(abs(p) for p in points) + 2 * gap

    best: Tuple[float, complex] = (-math.inf, complex(distance))
    for k in _rotation_order(ROTATION_STEPS):
        base = distance * cmath.exp(2j * math.pi * k / ROTATION_STEPS)
        clearance = _stem_clearance(base, points, nearest, radii)
        if clearance > best[0]:
            best = (clearance, base)
        if clearance >= CLEARANCE_FACTOR:
            break
    clearance, base = best
    if clearance < CLEARANCE_FACTOR:
        logger.warning(f"Best base point {base:.6g} leaves clearance {clearance:.3g} only")

    away = cmath.phase(base)
    order = sorted(range(len(points)),
                   key=lambda i: (cmath.phase(points[i] - base) - away) % (2 * math.pi))
    loops = tuple(petal(base, points[i], radii[i]) for i in order)
    logger.debug(f"Skeleton with {len(points)} petals, base point {base:.6g}, clearance {clearance:.3g}")
    return LoopSkeleton(
        base_point=base,
        punctures=tuple(points[i] for i in order),
        loops=loops,
        radii=tuple(radii[i] for i in order),
        clearance=clearance,
    )


def infinity_loop(skeleton: LoopSkeleton) -> PathPolyline:
    """
    Counterclockwise circle |x| = |base point| starting at the base point

    Encloses every puncture, so it is homotopic to the composite of the petals. The polygon
    is fine enough that its chords stay outside max|b| + gap.
    """
    if not skeleton.punctures:
        raise ValueError("A skeleton without punctures has no loop around infinity")
    base = skeleton.base_point
    radius = abs(base)
    gap = puncture_gap(skeleton.punctures)
    samples = max(MIN_CIRCLE_SAMPLES, math.ceil(4 * math.sqrt(radius / gap)))
    start_angle = cmath.phase(base)
    ring = [radius * cmath.exp(1j * (start_angle + 2 * math.pi * k / samples)) for k in range(1, samples)]
    return PathPolyline((base, *ring, base))
