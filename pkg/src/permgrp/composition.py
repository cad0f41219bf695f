"""
Composition factors, solvability, k-solvability and monodromy pairs of finite permutation groups
"""

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .group import ENUMERATION_CAP, PermutationGroup
from .permutation import Permutation
from .simple_groups import candidates_for_order
from ..utils.errors import NotTransitive, OrderTooLarge, UnidentifiedSimpleFactor

logger = logging.getLogger(__name__)

MAX_SIGNATURE_ORDER = 10 ** 9
AFFINE_SEARCH_SAMPLES = 4000
SPECTRUM_SAMPLES = 5000


@dataclass(frozen=True)
class CyclicOfPrime:
    p: int

    @property
    def order(self) -> int:
        return self.p

    @property
    def is_cyclic(self) -> bool:
        return True

    def __str__(self) -> str:
        return f"C{self.p}"


@dataclass(frozen=True)
class NonabelianSimple:
    order: int
    min_degree: int
    name: str = ""

    @property
    def is_cyclic(self) -> bool:
        return False

    def __str__(self) -> str:
        return self.name or f"Simple({self.order})"


Factor = Union[CyclicOfPrime, NonabelianSimple]


@dataclass(frozen=True)
class FactorSignature:
    """Composition factors listed from the top of the series down"""
    factors: Tuple[Factor, ...]

    @property
    def order(self) -> int:
        result = 1
        for f in self.factors:
            result *= f.order
        return result

    @property
    def all_cyclic(self) -> bool:
        return all(f.is_cyclic for f in self.factors)

    def nonabelian(self) -> List[NonabelianSimple]:
        return [f for f in self.factors if not f.is_cyclic]

    def to_dict(self) -> List[Dict]:
        out = []
        for f in self.factors:
            if f.is_cyclic:
                out.append({"type": "cyclic", "order": f.order})
            else:
                out.append({"type": "simple", "order": f.order, "min_degree": f.min_degree, "name": f.name})
        return out

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.factors)) + "}"


@dataclass(frozen=True)
class MonodromyPair:
    group: PermutationGroup
    stabilized_point: int
    stabilizer: PermutationGroup = field(compare=False)

    def __post_init__(self):
        if not 0 <= self.stabilized_point < self.group.degree:
            raise ValueError("stabilized point outside the permutation domain")


def prime_factors(n: int) -> List[int]:
    """Prime factors with multiplicity, ascending"""
    out = []
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _prime_power_base(n: int) -> Optional[int]:
    factors = prime_factors(n)
    if factors and len(set(factors)) == 1:
        return factors[0]
    return None


def _has_element_of_order(group: PermutationGroup, target: int, rng: random.Random) -> bool:
    if group.order() <= ENUMERATION_CAP:
        return any(e.order == target for e in group.elements())
    return any(group.random_element(rng).order == target for _ in range(SPECTRUM_SAMPLES))


def _identify_simple(group: PermutationGroup, rng: random.Random) -> NonabelianSimple:
    order = group.order()
    candidates = candidates_for_order(order)
    if not candidates:
        raise UnidentifiedSimpleFactor(order)
    if len(candidates) > 1:
        names = {c.name for c in candidates}
        if names == {"A8", "PSL(3,4)"}:
            # A8 has elements of order 15, PSL(3,4) has none
            chosen = "A8" if _has_element_of_order(group, 15, rng) else "PSL(3,4)"
            candidates = [c for c in candidates if c.name == chosen]
        else:
            logger.warning(f"Ambiguous simple factor of order {order}: {sorted(names)}")
    entry = candidates[0]
    return NonabelianSimple(entry.order, entry.min_degree, entry.name)


def _regular_abelian_normal_subgroup(group: PermutationGroup, p: int,
                                     rng: random.Random) -> Optional[PermutationGroup]:
    """Socle of an affine primitive group, found from a fixed-point-free element of order p"""
    tried = set()
    for _ in range(AFFINE_SEARCH_SAMPLES):
        g = group.random_element(rng)
        order = g.order
        if order % p:
            continue
        h = g ** (order // p)
        if h.images in tried or any(h(i) == i for i in range(group.degree)):
            continue
        tried.add(h.images)
        closure = group.normal_closure([h])
        if closure.order() == group.degree and closure.is_abelian():
            return closure
    return None


def _factors(group: PermutationGroup, rng: random.Random) -> List[Factor]:
    order = group.order()
    if order == 1:
        return []

    derived = group.derived_subgroup()
    derived_order = derived.order()
    if derived_order < order:
        top = [CyclicOfPrime(p) for p in prime_factors(order // derived_order)]
        return top + _factors(derived, rng)

    # perfect group: split along an orbit, a block system, or an affine socle
    orbits = [o for o in group.orbits() if len(o) > 1]
    if len(orbits) > 1:
        first = orbits[0]
        image = group.restriction(first)
        kernel = group.pointwise_stabilizer(first)
        return _factors(image, rng) + _factors(kernel, rng)

    support = orbits[0]
    if len(support) < group.degree:
        return _factors(group.restriction(support), rng)

    blocks = group.block_system()
    if blocks is not None:
        image, kernel = group.block_action(blocks)
        return _factors(image, rng) + _factors(kernel, rng)

    p = _prime_power_base(group.degree)
    if p is not None and not candidates_for_order(order):
        socle = _regular_abelian_normal_subgroup(group, p, rng)
        if socle is not None:
            logger.debug(f"Affine primitive group of degree {group.degree}: socle order {socle.order()}")
            return [CyclicOfPrime(q) for q in prime_factors(socle.order())] + \
                _factors(group.stabilizer(0), rng)

    return [_identify_simple(group, rng)]


def composition_factor_signature(group: PermutationGroup, seed: int = 0) -> FactorSignature:
    """
    Composition factors of a permutation group

    Abelian sections come from the derived series; perfect sections are split through
    intransitive or imprimitive actions and affine socles until a simple primitive group
    remains, which is identified by order against the bundled table.
    """
    if group.degree > 32:
        raise ValueError("composition_factor_signature supports degree <= 32")
    order = group.order()
    if order > MAX_SIGNATURE_ORDER:
        raise OrderTooLarge(f"Group order {order} exceeds {MAX_SIGNATURE_ORDER}")
    signature = FactorSignature(tuple(_factors(group, random.Random(seed))))
    if signature.order != order:
        raise RuntimeError(f"Composition factors multiply to {signature.order}, group order is {order}")
    return signature


def is_k_solvable(group: PermutationGroup, k: int, signature: Optional[FactorSignature] = None) -> bool:
    """Every composition factor is cyclic or a simple group of minimal degree <= k"""
    if k < 1:
        raise ValueError("k must be at least 1")
    signature = signature or composition_factor_signature(group)
    return all(f.is_cyclic or f.min_degree <= k for f in signature.factors)


def is_almost_solvable_finite(group: PermutationGroup) -> Tuple[bool, List[int]]:
    """Finite groups are almost solvable; the witness chain is G ⊇ {e}"""
    return True, [group.order(), 1]


def monodromy_pair(group: PermutationGroup, point: int = 0) -> MonodromyPair:
    if not group.is_transitive():
        raise NotTransitive("Monodromy pairs are built for transitive groups")
    return MonodromyPair(group, point, group.stabilizer(point))


def riemann_hurwitz_genus(permutations: Sequence[Permutation], degree: int) -> int:
    """Genus of the connected cover with these local monodromies (infinity included)"""
    ramification = sum(degree - len(p.cycles(include_fixed=True)) for p in permutations)
    genus = Fraction(ramification - 2 * degree + 2, 2)
    if genus.denominator != 1 or genus < 0:
        raise ValueError(f"Permutations violate the Riemann-Hurwitz formula (genus {genus})")
    return int(genus)
