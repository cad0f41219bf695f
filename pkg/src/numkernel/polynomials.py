"""
Exact-rational and complex polynomials in one (UniPoly) and two (BiPoly) variables
"""

from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

Scalar = Union[Fraction, complex]


def to_scalar(value) -> Scalar:
    """Normalize a coefficient: integers and rationals stay exact, floats become complex"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, (float, complex, np.floating, np.complexfloating)):
        return complex(value)
    raise TypeError(f"Unsupported coefficient type {type(value).__name__}")


def _is_zero(value: Scalar) -> bool:
    return value == 0


class UniPoly:
    """Univariate polynomial; coefficients[i] multiplies z**i"""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = (0,)):
        coeffs = [to_scalar(c) for c in coefficients]
        if any(isinstance(c, complex) for c in coeffs):
            coeffs = [complex(c) for c in coeffs]
        while len(coeffs) > 1 and _is_zero(coeffs[-1]):
            coeffs.pop()
        if not coeffs:
            coeffs = [Fraction(0)]
        self.coefficients: Tuple[Scalar, ...] = tuple(coeffs)

    # Construction helpers

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "UniPoly":
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_roots(cls, roots: Sequence) -> "UniPoly":
        result = cls([1])
        for r in roots:
            result = result * cls([-to_scalar(r), 1])
        return result

    # Basic properties

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coefficients)

    @property
    def is_zero(self) -> bool:
        return self.degree == 0 and _is_zero(self.coefficients[0])

    @property
    def is_constant(self) -> bool:
        return self.degree == 0

    @property
    def leading(self) -> Scalar:
        return self.coefficients[-1]

    def __getitem__(self, power: int) -> Scalar:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return Fraction(0)

    def __call__(self, x):
        result = 0 * x
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    # Arithmetic

    def _coerce(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other])

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return UniPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coefficients])

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        other = self._coerce(other)
        out: List[Scalar] = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UniPoly":
        if exponent < 0:
            raise ValueError("Negative polynomial power")
        result, base = UniPoly([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other: "UniPoly") -> Tuple["UniPoly", "UniPoly"]:
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("Polynomial division by zero")
        remainder = list(self.coefficients)
        quotient: List[Scalar] = [Fraction(0)] * max(1, self.degree - other.degree + 1)
        lead = other.leading
        for shift in range(self.degree - other.degree, -1, -1):
            factor = remainder[shift + other.degree] / lead
            if _is_zero(factor):
                continue
            quotient[shift] = factor
            for i, c in enumerate(other.coefficients):
                remainder[shift + i] = remainder[shift + i] - factor * c
            remainder[shift + other.degree] = factor * 0
        return UniPoly(quotient), UniPoly(remainder[:max(1, other.degree)])

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    # Calculus and composition

    def derivative(self) -> "UniPoly":
        if self.degree == 0:
            return UniPoly([0])
        return UniPoly([i * c for i, c in enumerate(self.coefficients)][1:])

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Return self(inner(z))"""
        result = UniPoly([self.coefficients[-1]])
        for c in reversed(self.coefficients[:-1]):
            result = result * inner + c
        return result

    def monic(self) -> "UniPoly":
        return UniPoly([c / self.leading for c in self.coefficients])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd by the Euclidean algorithm (exact inputs)"""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a % b
        return a.monic() if not a.is_zero else a

    # Numeric views

    def to_numpy(self) -> np.ndarray:
        """Complex coefficient array, highest power first (numpy.polyval order)"""
        return np.array([complex(c) for c in reversed(self.coefficients)], dtype=complex)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coefficients)!r})"


Monomial = Tuple[int, int]


class BiPoly:
    """Polynomial in x and y, exact over the rationals or numeric; keys are (power of x, power of y)"""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Dict[Monomial, object]):
        cleaned: Dict[Monomial, Scalar] = {}
        for (i, j), value in coefficients.items():
            value = to_scalar(value)
            if value != 0:
                cleaned[(int(i), int(j))] = value
        self.coefficients = cleaned

    @classmethod
    def inverse_relation(cls, p: UniPoly) -> "BiPoly":
        """The relation p(y) - x = 0 defining the inverse function of p"""
        coeffs = {(0, j): c for j, c in enumerate(p.coefficients)}
        coeffs[(1, 0)] = coeffs.get((1, 0), Fraction(0)) - 1
        return cls(coeffs)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coefficients.values())

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.coefficients), default=0)

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.coefficients), default=0)

    def coefficient_in_y(self, j: int) -> UniPoly:
        """Coefficient of y**j as a polynomial in x"""
        terms = [Fraction(0)] * (self.deg_x + 1)
        for (i, jj), c in self.coefficients.items():
            if jj == j:
                terms[i] = c
        return UniPoly(terms)

    def at_x(self, x0) -> UniPoly:
        """Specialize x = x0 and return the polynomial in y"""
        return UniPoly([self.coefficient_in_y(j)(x0) for j in range(self.deg_y + 1)])

    def diff_y(self) -> "BiPoly":
        return BiPoly({(i, j - 1): j * c for (i, j), c in self.coefficients.items() if j > 0})

    def diff_x(self) -> "BiPoly":
        return BiPoly({(i - 1, j): i * c for (i, j), c in self.coefficients.items() if i > 0})

    def scaled(self, factor) -> "BiPoly":
        return BiPoly({k: c * factor for k, c in self.coefficients.items()})

    def numeric_rows(self) -> List[np.ndarray]:
        """Per power of y, the x-coefficients as complex arrays (highest x power first)"""
        return [self.coefficient_in_y(j).to_numpy() for j in range(self.deg_y + 1)]

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self.coefficients.items()))

    def __repr__(self) -> str:
        return f"BiPoly({dict(sorted(self.coefficients.items()))!r})"


def chebyshev(n: int) -> UniPoly:
    """Chebyshev polynomial T_n from T_{k+1} = 2 z T_k - T_{k-1}"""
    previous, current = UniPoly([1]), UniPoly([0, 1])
    if n == 0:
        return previous
    for _ in range(n - 1):
        previous, current = current, UniPoly([0, 2]) * current - previous
    return current
