"""
Integrability cases of circular-arc polygons and the resulting verdict
"""

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .circles import GenCircle, moebius_image, reflect
from .moebius import INFINITY, MoebiusLike, element_order, is_infinity, moebius_matrix_for_pair, projective_distances
from .polygon import PolygonSpec
from ..algmono import Verdict, VerdictClass, VerdictStatus
from ..utils.errors import ParabolicComposition, PoleOfInversion, WitnessVerificationFailed

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 400
NORMAL_FORM_FACTOR = 1e3


class NetTag(str, Enum):
    PYRAMID = "pyramid"
    DIHERON = "diheron"
    TETRAHEDRAL = "tetrahedral"
    OCTAHEDRAL = "octahedral"
    ICOSAHEDRAL = "icosahedral"
    UNRECOGNIZED = "unrecognized"


@dataclass
class ClosureResult:
    """Outcome of the reflection-group closure; order is None when the bound was exceeded"""
    order: Optional[int]
    rotation_order: Optional[int] = None
    max_rotation_order: Optional[int] = None
    net: Optional[NetTag] = None

    @property
    def finite(self) -> bool:
        return self.order is not None

    def to_dict(self) -> Dict[str, Any]:
        if not self.finite:
            return {"finite": False}
        return {"finite": True, "order": self.order, "rotation_order": self.rotation_order,
                "max_rotation_order": self.max_rotation_order, "net": self.net.value}


def _distinct_circles(polygon: PolygonSpec, tol: float) -> List[GenCircle]:
    circles: List[GenCircle] = []
    for c in polygon.circles:
        if not any(c.same_as(other, tol) for other in circles):
            circles.append(c)
    return circles


def _close(p: complex, q: complex, tol: float) -> bool:
    if is_infinity(p) or is_infinity(q):
        return is_infinity(p) and is_infinity(q)
    return abs(p - q) <= tol * max(1.0, abs(p), abs(q))


def common_point_of_sides(polygon: PolygonSpec, tol: float = 1e-9) -> Optional[complex]:
    """A point (possibly infinity) on the continuation of every side, or None"""
    circles = _distinct_circles(polygon, tol)
    if len(circles) == 1:
        return None
    first, second = circles[:2]
    candidates = first.intersections(second, tol)
    if first.is_line and second.is_line:
        candidates.append(INFINITY)
    for candidate in candidates:
        if all(c.contains(candidate, tol) for c in circles[2:]):
            return candidate
    return None


def _pair_candidates(first: GenCircle, second: GenCircle, tol: float) -> Tuple[complex, complex]:
    composition = first.reflection().compose(second.reflection())
    points = composition.fixed_points(tol)
    if len(points) < 2:
        raise ParabolicComposition(f"Inversions compose to a parabolic map fixing {points[0]}")
    p, q = points
    # finite point first
    return (q, p) if is_infinity(p) else (p, q)


def _symmetric_for(circle: GenCircle, p: complex, q: complex, tol: float) -> bool:
    if circle.contains(p, tol) and circle.contains(q, tol):
        return True
    try:
        return _close(reflect(circle, p), q, tol)
    except PoleOfInversion:
        return is_infinity(q)


def symmetric_pair(polygon: PolygonSpec, tol: float = 1e-9) -> Optional[Tuple[complex, complex]]:
    """
    Two points that every side either swaps by inversion or passes through

    Candidates are the fixed points of compositions of inversions in pairs of side circles,
    scanned from the first pair on.
    """
    circles = _distinct_circles(polygon, tol)
    for first, second in itertools.combinations(circles, 2):
        try:
            p, q = _pair_candidates(first, second, tol)
        except ParabolicComposition as e:
            logger.debug(str(e))
            continue
        if all(_symmetric_for(c, p, q, tol) for c in circles):
            return p, q
    return None


def normalize_symmetric_pair(polygon: PolygonSpec, pair: Tuple[complex, complex],
                             tol: float = 1e-9) -> Tuple[MoebiusLike, int, int]:
    """
    Send the pair to (0, infinity); every side must become a ray from 0 or an arc centered at 0

    Returns:
        Tuple of (map, number of ray sides, number of concentric arc sides)

    Raises:
        WitnessVerificationFailed: an image side is neither a line through 0 nor a circle about 0
    """
    transform = moebius_matrix_for_pair(*pair)
    rays = arcs = 0
    for circle in _distinct_circles(polygon, tol):
        image = moebius_image(circle, transform)
        limit = NORMAL_FORM_FACTOR * tol * max(abs(image.A), abs(image.B), abs(image.C))
        if abs(image.B) <= limit:
            arcs += 1
        elif abs(image.A) <= limit and abs(image.C) <= limit:
            rays += 1
        else:
            raise WitnessVerificationFailed(
                f"Side circle maps to center {image.center}, radius {image.radius} instead of a ray or "
                f"a circle about 0")
    return transform, rays, arcs


def _net_tag(rotation_order: int, max_order: int) -> NetTag:
    if max_order == rotation_order:
        return NetTag.PYRAMID
    if 2 * max_order == rotation_order:
        return NetTag.DIHERON
    if (rotation_order, max_order) == (12, 3):
        return NetTag.TETRAHEDRAL
    if (rotation_order, max_order) == (24, 4):
        return NetTag.OCTAHEDRAL
    if (rotation_order, max_order) == (60, 5):
        return NetTag.ICOSAHEDRAL
    return NetTag.UNRECOGNIZED


def reflection_group_closure(polygon: PolygonSpec, bound: int = DEFAULT_BOUND,
                             tol: float = 1e-9) -> ClosureResult:
    """
    Breadth-first closure of the group generated by the side reflections

    Elements are compared projectively: M and omega*M (|omega| = 1) are one element when
    their distance is at most 100*tol.
    """
    generators = [c.reflection() for c in _distinct_circles(polygon, tol)]
    elements: List[MoebiusLike] = [MoebiusLike.identity()]
    stacks = {False: [elements[0].unit().ravel()], True: []}
    queue = [elements[0]]
    threshold = 100 * tol

    while queue:
        current = queue.pop(0)
        for g in generators:
            candidate = g.compose(current)
            vector = candidate.unit().ravel()
            known = stacks[candidate.conjugating]
            if known and projective_distances(np.array(known), vector).min() <= threshold:
                continue
            known.append(vector)
            elements.append(candidate)
            queue.append(candidate)
            if len(elements) > bound:
                logger.info(f"Reflection group exceeds {bound} elements")
                return ClosureResult(None)

    rotations = [e for e in elements if not e.conjugating]
    h = len(rotations)
    max_order = max(element_order(r, h, threshold) or 0 for r in rotations)
    net = _net_tag(h, max_order)
    logger.info(f"Finite reflection group of order {len(elements)}, rotations {h}, net {net.value}")
    return ClosureResult(len(elements), h, max_order, net)


def classify_polygon(polygon: PolygonSpec, tol: float = 1e-9, bound: int = DEFAULT_BOUND) -> Verdict:
    """
    Check the common-point, symmetric-pair and finite-net cases in that order

    The first case that holds decides the verdict; the others that also hold are listed as
    flags. Without any case the Riemann map is strongly non-representable by generalized
    quadratures.
    """
    common = common_point_of_sides(polygon, tol)
    pair = symmetric_pair(polygon, tol)
    closure = reflection_group_closure(polygon, bound, tol)
    finite_net = closure.finite and closure.net is not NetTag.UNRECOGNIZED

    holding = [name for name, ok in (("case1", common is not None), ("case2", pair is not None),
                                     ("case3", finite_net)) if ok]
    evidence: Dict[str, Any] = {
        "case": holding[0] if holding else None,
        "flags": holding[1:],
        "vertex_angles": polygon.vertex_angles(),
        "closure": closure.to_dict(),
    }
    if common is not None:
        evidence["common_point"] = common
    if pair is not None:
        evidence["symmetric_pair"] = list(pair)

    if not holding:
        return Verdict(VerdictClass.GENERALIZED_QUADRATURES, VerdictStatus.STRONGLY_NON_REPRESENTABLE,
                       "no common point, no symmetric pair and no finite net of circles",
                       evidence=evidence)
    if holding[0] == "case1":
        return Verdict(VerdictClass.GENERALIZED_QUADRATURES, VerdictStatus.REPRESENTABLE,
                       "continuations of all sides meet in one point (Christoffel-Schwarz type, "
                       "integrable by quadratures)", evidence=evidence)
    if holding[0] == "case2":
        transform, rays, arcs = normalize_symmetric_pair(polygon, pair, tol)
        evidence["normal_form"] = {"map": transform.matrix.tolist(), "rays": rays, "concentric_arcs": arcs}
        return Verdict(VerdictClass.QUADRATURES, VerdictStatus.REPRESENTABLE,
                       "a point pair is symmetric with respect to every side", evidence=evidence)
    if closure.net is NetTag.ICOSAHEDRAL:
        return Verdict(VerdictClass.K_RADICALS, VerdictStatus.REPRESENTABLE,
                       "sides lie on the icosahedral net of circles", k=5, evidence=evidence)
    return Verdict(VerdictClass.RADICALS, VerdictStatus.REPRESENTABLE,
                   f"sides lie on a finite {closure.net.value} net of circles", evidence=evidence)
