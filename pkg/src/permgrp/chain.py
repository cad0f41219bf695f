"""
Stabilizer chains built by the incremental Schreier-Sims algorithm

Permutations are plain tuples here; products act left to right like Permutation.
"""

from collections import deque
from typing import Deque, Dict, List, Optional, Sequence, Tuple

Perm = Tuple[int, ...]


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


class _Level:
    """One base point with its strong generators, orbit and transversal"""

    def __init__(self, base: int, degree: int):
        self.base = base
        self.generators: List[Perm] = []
        identity = tuple(range(degree))
        self.transversal: Dict[int, Perm] = {base: identity}
        self._inverses: Dict[int, Perm] = {base: identity}
        self.pending: Deque[Tuple[int, int]] = deque()

    def inverse_of(self, point: int) -> Perm:
        cached = self._inverses.get(point)
        if cached is None:
            cached = inv(self.transversal[point])
            self._inverses[point] = cached
        return cached

    def add_generator(self, h: Perm):
        index = len(self.generators)
        self.generators.append(h)
        for point in list(self.transversal):
            self.pending.append((point, index))
        queue = deque(self.transversal)
        while queue:
            point = queue.popleft()
            for s in self.generators:
                image = s[point]
                if image not in self.transversal:
                    self.transversal[image] = mul(self.transversal[point], s)
                    queue.append(image)
                    for j in range(len(self.generators)):
                        self.pending.append((image, j))

    @property
    def orbit_size(self) -> int:
        return len(self.transversal)


class StabilizerChain:
    """Base, strong generating set and transversals of a permutation group"""

    def __init__(self, degree: int, base_prefix: Sequence[int] = ()):
        self.degree = degree
        self.levels: List[_Level] = [_Level(b, degree) for b in base_prefix]

    @property
    def base(self) -> List[int]:
        return [level.base for level in self.levels]

    @property
    def order(self) -> int:
        result = 1
        for level in self.levels:
            result *= level.orbit_size
        return result

    def sift(self, g: Perm, start: int = 0) -> Tuple[Perm, int]:
        for index in range(start, len(self.levels)):
            level = self.levels[index]
            point = g[level.base]
            if point not in level.transversal:
                return g, index
            g = mul(g, level.inverse_of(point))
        return g, len(self.levels)

    def contains(self, g: Perm) -> bool:
        residue, _ = self.sift(g)
        return is_identity(residue)

    def add_generator(self, g: Perm) -> bool:
        """Extend the group by g; returns False when g is already a member"""
        residue, depth = self.sift(g)
        if is_identity(residue):
            return False
        self._add_strong(residue, 0, depth)
        self._saturate(depth)
        return True

    def _add_strong(self, h: Perm, first: int, last: int):
        if last == len(self.levels):
            bases = set(self.base)
            # smallest point with a nontrivial orbit
            new_base = min(p for p in range(self.degree) if h[p] != p and p not in bases)
            self.levels.append(_Level(new_base, self.degree))
        for index in range(first, last + 1):
            self.levels[index].add_generator(h)

    def _saturate(self, index: int):
        while index >= 0:
            level = self.levels[index]
            if not level.pending:
                index -= 1
                continue
            point, gen_index = level.pending.popleft()
            s = level.generators[gen_index]
            schreier = mul(mul(level.transversal[point], s), level.inverse_of(s[point]))
            if is_identity(schreier):
                continue
            residue, depth = self.sift(schreier, index + 1)
            if not is_identity(residue):
                self._add_strong(residue, index + 1, depth)
                index = depth

    def strong_generators(self, depth: int) -> List[Perm]:
        """Generators of the pointwise stabilizer of the first depth base points"""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].generators)

    def transversals(self) -> List[List[Perm]]:
        return [list(level.transversal.values()) for level in self.levels]


def build_chain(degree: int, generators: Sequence[Perm], base_prefix: Sequence[int] = ()) -> StabilizerChain:
    chain = StabilizerChain(degree, base_prefix)
    for g in generators:
        if not is_identity(g):
            chain.add_generator(g)
    return chain
