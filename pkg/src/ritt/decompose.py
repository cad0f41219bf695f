"""
Complete decompositions of rational polynomials into primitive components
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from .recognize import recognize_chebyshev, recognize_power
from ..numkernel import UniPoly

logger = logging.getLogger(__name__)

MAX_DEGREE = 64


class TagKind(str, Enum):
    LINEAR = "Linear"
    POWER = "PowerUpToLinear"
    CHEBYSHEV = "ChebyshevUpToLinear"
    DEGREE_AT_MOST_4 = "DegreeAtMost4"
    DEGREE_AT_MOST_K = "DegreeAtMostK"
    OTHER = "OtherPrimitive"


@dataclass(frozen=True)
class ComponentTag:
    kind: TagKind
    n: Optional[int] = None

    @property
    def solvable_by_shape(self) -> bool:
        return self.kind is not TagKind.OTHER

    def __str__(self) -> str:
        return self.kind.value if self.n is None else f"{self.kind.value}({self.n})"


@dataclass(frozen=True)
class Decomposition:
    """Components outermost first: p = components[0] o components[1] o ..."""
    components: Tuple[UniPoly, ...]
    tags: Tuple[ComponentTag, ...]

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(c.degree for c in self.components)

    def compose(self) -> UniPoly:
        result = self.components[-1]
        for outer in reversed(self.components[:-1]):
            result = outer.compose(result)
        return result

    def verifies(self, p: UniPoly) -> bool:
        return self.compose() == p

    def to_dict(self):
        return {
            "degrees": list(self.degrees),
            "components": [list(map(str, c.coefficients)) for c in self.components],
            "tags": [str(t) for t in self.tags],
        }


def tag_component(component: UniPoly) -> ComponentTag:
    """Tag of a primitive component"""
    n = component.degree
    if n <= 1:
        return ComponentTag(TagKind.LINEAR)
    if recognize_power(component, check_primitive=False):
        return ComponentTag(TagKind.POWER, n)
    if n >= 3 and recognize_chebyshev(component, check_primitive=False):
        return ComponentTag(TagKind.CHEBYSHEV, n)
    if n <= 4:
        return ComponentTag(TagKind.DEGREE_AT_MOST_4, n)
    return ComponentTag(TagKind.OTHER, n)


def right_component(p: UniPoly, d: int) -> Optional[Tuple[UniPoly, UniPoly]]:
    """
    Split p = q o r with deg r = d, r monic and r(0) = 0

    The top d - 1 coefficients of the normalized p are those of r^m and fix r; q is read
    off the r-adic expansion, which must leave constant remainders.
    """
    n = p.degree
    if n % d or not 1 < d < n:
        return None
    m = n // d
    lead, constant = p.leading, p[0]
    normalized = (p - constant) * (Fraction(1) / lead)

    r_coefficients = [Fraction(0)] * (d + 1)
    r_coefficients[d] = Fraction(1)
    for k in range(1, d):
        partial = UniPoly(r_coefficients) ** m
        r_coefficients[d - k] = (normalized[n - k] - partial[n - k]) / m
    r = UniPoly(r_coefficients)

    digits = []
    remaining = normalized
    while not remaining.is_zero:
        remaining, digit = divmod(remaining, r)
        if not digit.is_constant:
            return None
        digits.append(digit[0])
    q = UniPoly(digits) * lead + constant
    if q.compose(r) != p:
        return None
    return q, r


@lru_cache(maxsize=256)
def _chains(p: UniPoly) -> Tuple[Tuple[UniPoly, ...], ...]:
    n = p.degree
    found = {}
    for d in range(2, n):
        split = right_component(p, d)
        if split is None:
            continue
        q, r = split
        for left in _chains(q):
            for right in _chains(r):
                chain = left + right
                found.setdefault(tuple(c.degree for c in chain), chain)
    if not found:
        return ((p,),)
    return tuple(found[key] for key in sorted(found))


def decompose(p: UniPoly) -> List[Decomposition]:
    """
    All complete decompositions of p, one representative per chain of component degrees

    Raises:
        ValueError: constant input, non-rational coefficients or degree above 64
    """
    if p.is_constant:
        raise ValueError("decompose needs a nonconstant polynomial")
    if not p.is_exact:
        raise ValueError("decompose needs rational coefficients")
    if p.degree > MAX_DEGREE:
        raise ValueError(f"Degree {p.degree} exceeds {MAX_DEGREE}")
    result = []
    for chain in _chains(p):
        decomposition = Decomposition(chain, tuple(tag_component(c) for c in chain))
        if not decomposition.verifies(p):
            raise RuntimeError(f"Decomposition {decomposition.degrees} does not reproduce the input")
        result.append(decomposition)
    logger.debug(f"Degree {p.degree}: {len(result)} decomposition(s) {[d.degrees for d in result]}")
    return result
