"""
Processor for circular-arc polygons
"""

import logging
from typing import Dict, Any

from ..config.settings import RunConfig
from ..polygonmap import PolygonSpec, classify_polygon
from ..utils.errors import TopoGaloisError


class PolygonProcessor:
    """Integrability case of the Riemann map onto a circular-arc polygon"""

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def process(self, polygon: PolygonSpec, config: RunConfig) -> Dict[str, Any]:
        self.logger.info(f"Classifying polygon with {len(polygon.sides)} sides")
        try:
            verdict = classify_polygon(polygon, config.tolerances.cluster)
        except TopoGaloisError as e:
            self.logger.error(f"Polygon classification failed: {e}")
            raise

        intermediates = {
            "sides": len(polygon.sides),
            "vertices": polygon.vertices,
            "vertex_angles": polygon.vertex_angles(),
        }
        return {"intermediates": intermediates, "verdicts": [verdict]}
