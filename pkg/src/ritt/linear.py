"""
Affine changes of variable z -> a z + b
"""

from dataclasses import dataclass

from ..numkernel import UniPoly, to_scalar
from ..numkernel.polynomials import Scalar


@dataclass(frozen=True)
class LinearChange:
    a: Scalar
    b: Scalar = 0

    def __post_init__(self):
        object.__setattr__(self, "a", to_scalar(self.a))
        object.__setattr__(self, "b", to_scalar(self.b))
        if self.a == 0:
            raise ValueError("A linear change needs a != 0")

    @classmethod
    def identity(cls) -> "LinearChange":
        return cls(1, 0)

    @property
    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0

    @property
    def is_exact(self) -> bool:
        return not isinstance(self.a, complex) and not isinstance(self.b, complex)

    def as_poly(self) -> UniPoly:
        return UniPoly([self.b, self.a])

    def __call__(self, z):
        return self.a * z + self.b

    def inverse(self) -> "LinearChange":
        return LinearChange(1 / self.a, -self.b / self.a)

    def __str__(self) -> str:
        return f"z -> ({self.a})*z + ({self.b})"
