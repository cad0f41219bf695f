"""
Permutations of {0, ..., n-1} with cycle-notation text I/O
"""

import math
import re
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

CYCLE_RE = re.compile(r'\(\s*(\d+(?:[\s,]+\d+)*)?\s*\)')


@dataclass(frozen=True)
class Permutation:
    """images[i] is the image of point i; products act left to right: (p * q)(i) = q(p(i))"""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int = 0) -> "Permutation":
        """Parse cycle notation such as "(0 1 2)(3 4)"; "()" is the identity"""
        stripped = text.strip()
        cycles: List[List[int]] = []
        position = 0
        for match in CYCLE_RE.finditer(stripped):
            if stripped[position:match.start()].strip():
                raise ValueError(f"could not parse permutation {text!r}")
            position = match.end()
            if match.group(1):
                cycles.append([int(t) for t in re.split(r'[\s,]+', match.group(1).strip())])
        if stripped[position:].strip():
            raise ValueError(f"could not parse permutation {text!r}")
        degree = max(degree, max((max(c) for c in cycles), default=-1) + 1)
        result = cls.identity(degree)
        for cycle in cycles:
            result = result * cls.from_cycles(degree, [cycle])
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other.images[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, exponent: int) -> "Permutation":
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent) % max(1, self.order)):
            result = result * base
        return result

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    @property
    def cycle_type(self) -> Tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    @property
    def order(self) -> int:
        return math.lcm(*self.cycle_type) if self.images else 1

    @property
    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    @property
    def is_full_cycle(self) -> bool:
        return len(self.cycle_type) == 1

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
