"""
Finitely generated permutation groups: order, membership, orbits, blocks,
normal closures, derived series, stabilizers
"""

import itertools
import logging
import random
import threading
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .chain import Perm, StabilizerChain, build_chain, inv, is_identity, mul
from .permutation import Permutation
from ..utils.errors import NotTransitive, OrderTooLarge

logger = logging.getLogger(__name__)

MAX_DEGREE = 32
ENUMERATION_CAP = 10 ** 6


class PermutationGroup:
    """Permutation group given by generators; the stabilizer chain is built once on demand"""

    def __init__(self, degree: int, generators: Sequence[Permutation] = ()):
        if degree < 1:
            raise ValueError("Permutation groups need degree >= 1")
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"Generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(g for g in generators if not g.is_identity)
        self._lock = threading.Lock()
        self._chains: Dict[Tuple[int, ...], StabilizerChain] = {}

    @classmethod
    def symmetric(cls, degree: int) -> "PermutationGroup":
        if degree < 2:
            return cls(max(degree, 1))
        return cls(degree, [Permutation.from_cycles(degree, [(0, 1)]),
                            Permutation.from_cycles(degree, [tuple(range(degree))])])

    @classmethod
    def cyclic(cls, degree: int) -> "PermutationGroup":
        return cls(degree, [Permutation.from_cycles(degree, [tuple(range(degree))])])

    @classmethod
    def from_tuples(cls, degree: int, perms: Sequence[Perm]) -> "PermutationGroup":
        return cls(degree, [Permutation(p) for p in perms])

    # Stabilizer chain cache

    def chain(self, base_prefix: Sequence[int] = ()) -> StabilizerChain:
        key = tuple(base_prefix)
        cached = self._chains.get(key)
        if cached is not None:
            return cached
        with self._lock:
            if key not in self._chains:
                self._chains[key] = build_chain(self.degree, self._raw_generators(), key)
            return self._chains[key]

    def _raw_generators(self) -> List[Perm]:
        return [g.images for g in self.generators]

    # Basic queries

    def order(self) -> int:
        return self.chain().order

    @property
    def is_trivial(self) -> bool:
        return not self.generators

    def contains(self, perm: Permutation) -> bool:
        return self.chain().contains(perm.images)

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return all(other.contains(g) for g in self.generators)

    def orbit(self, point: int) -> List[int]:
        seen = {point}
        queue = [point]
        for current in queue:
            for g in self.generators:
                image = g(current)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return sorted(seen)

    def orbits(self) -> List[List[int]]:
        remaining = set(range(self.degree))
        result = []
        while remaining:
            orbit = self.orbit(min(remaining))
            result.append(orbit)
            remaining -= set(orbit)
        return result

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def is_abelian(self) -> bool:
        gens = self.generators
        return all((a * b) == (b * a) for a, b in itertools.combinations(gens, 2))

    # Blocks

    def minimal_block_system(self, first: int, second: int) -> List[List[int]]:
        """Finest block system with first and second in one block (union-find closure)"""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        parent[find(second)] = find(first)
        queue = [(first, second)]
        for a, b in queue:
            for g in self.generators:
                ra, rb = find(g(a)), find(g(b))
                if ra != rb:
                    parent[rb] = ra
                    queue.append((g(a), g(b)))

        blocks: Dict[int, List[int]] = {}
        for point in range(self.degree):
            blocks.setdefault(find(point), []).append(point)
        return sorted(blocks.values())

    def block_system(self) -> Optional[List[List[int]]]:
        """A nontrivial block system, or None when the group is primitive"""
        if not self.is_transitive():
            raise NotTransitive("Primitivity is only defined for transitive groups")
        for other in range(1, self.degree):
            blocks = self.minimal_block_system(0, other)
            if len(blocks) > 1:
                return blocks
        return None

    def is_primitive(self) -> bool:
        return self.block_system() is None

    # Subgroup constructions

    def normal_closure(self, elements: Sequence[Permutation]) -> "PermutationGroup":
        """Smallest subgroup normal in self containing elements"""
        chain = StabilizerChain(self.degree)
        gens: List[Perm] = []
        queue = [e.images for e in elements if not e.is_identity]
        for candidate in queue:
            if chain.add_generator(candidate):
                gens.append(candidate)
                for g in self.generators:
                    queue.append(mul(mul(inv(g.images), candidate), g.images))
        closure = PermutationGroup.from_tuples(self.degree, gens)
        closure._chains[()] = chain
        return closure

    def derived_subgroup(self) -> "PermutationGroup":
        commutators = []
        for a, b in itertools.combinations(self.generators, 2):
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity:
                commutators.append(c)
        return self.normal_closure(commutators)

    def derived_series(self) -> List["PermutationGroup"]:
        """G, G', G'', ... ending at the first term equal to its own derived subgroup"""
        series = [self]
        while True:
            current = series[-1]
            nxt = current.derived_subgroup()
            if nxt.order() == current.order():
                return series
            series.append(nxt)

    def is_solvable(self) -> bool:
        return self.derived_series()[-1].order() == 1

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermutationGroup":
        chain = self.chain(tuple(points))
        return PermutationGroup.from_tuples(self.degree, chain.strong_generators(len(points)))

    def stabilizer(self, point: int) -> "PermutationGroup":
        """Point stabilizer generated by the Schreier generators kept in the chain"""
        if not self.is_transitive():
            raise NotTransitive("stabilizer is only provided for transitive groups")
        if not 0 <= point < self.degree:
            raise ValueError(f"Point {point} outside [0, {self.degree})")
        return self.pointwise_stabilizer([point])

    def restriction(self, points: Sequence[int]) -> "PermutationGroup":
        """Action on an invariant set, relabelled to 0..len(points)-1"""
        index = {p: i for i, p in enumerate(points)}
        gens = [tuple(index[g(p)] for p in points) for g in self.generators]
        return PermutationGroup.from_tuples(len(points), gens)

    def block_action(self, blocks: Sequence[Sequence[int]]) -> Tuple["PermutationGroup", "PermutationGroup"]:
        """Image and kernel of the action on a block system"""
        owner = {p: b for b, block in enumerate(blocks) for p in block}
        m = len(blocks)
        images = [tuple(owner[g(block[0])] for block in blocks) for g in self.generators]
        image = PermutationGroup.from_tuples(m, images)
        # kernel = pointwise stabilizer of the block points in the combined action
        extended = PermutationGroup.from_tuples(
            self.degree + m, [g.images + tuple(self.degree + b for b in img)
                              for g, img in zip(self.generators, images)])
        stab = extended.pointwise_stabilizer(range(self.degree, self.degree + m))
        kernel = PermutationGroup.from_tuples(self.degree, [g.images[:self.degree] for g in stab.generators])
        return image, kernel

    # Elements

    def elements(self, cap: int = ENUMERATION_CAP) -> Iterator[Permutation]:
        """All elements via the stabilizer chain; OrderTooLarge beyond cap"""
        if self.order() > cap:
            raise OrderTooLarge(f"Group of order {self.order()} exceeds enumeration cap {cap}")
        transversals = self.chain().transversals()
        identity = tuple(range(self.degree))
        for choice in itertools.product(*reversed(transversals)):
            element = identity
            for u in choice:
                element = mul(element, u)
            yield Permutation(element)

    def random_element(self, rng: random.Random) -> Permutation:
        """Uniformly distributed element"""
        element = tuple(range(self.degree))
        for transversal in reversed(self.chain().transversals()):
            element = mul(element, rng.choice(transversal))
        return Permutation(element)

    def contains_full_cycle(self, infinity_permutation: Optional[Permutation] = None) -> bool:
        """
        Whether the group contains an n-cycle

        Checks the designated infinity-loop permutation and the generators first,
        then enumerates the group (order at most 10^6).
        """
        if infinity_permutation is not None and infinity_permutation.is_full_cycle:
            return True
        if any(g.is_full_cycle for g in self.generators):
            return True
        if self.degree == 1:
            return True
        return any(e.is_full_cycle for e in self.elements())

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, generators=[{', '.join(map(str, self.generators))}])"
