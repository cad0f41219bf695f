"""
Polynomial text syntax: integer, rational and decimal coefficients, variables x, y, z,
operators + - * / ^ and parentheses

Precedence: ^ over unary minus over * and / over + and -. Division is by constants only.
Decimals are read as exact base-10 rationals. Text in z alone gives a UniPoly, text in x
and y gives a BiPoly; z cannot be mixed with x or y.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from ..numkernel import BiPoly, UniPoly
from ..utils.errors import ParseError

MAX_EXPONENT = 256
VARIABLES = ("x", "y", "z")
OPERATORS = set("+-*/^()")

_NUMBER = re.compile(r"\d+(?:\.\d*)?|\.\d+")
OPERAND_START = ("number", "x", "y", "z", "(", "-", "+")
BINARY_OPERATORS = ("+", "-", "*", "/", "^")
AFTER_OPERAND = BINARY_OPERATORS + ("end of input",)

Exponents = Tuple[int, int, int]
Terms = Dict[Exponents, Fraction]


@dataclass(frozen=True)
class Token:
    kind: str  # "number", "variable", "operator" or "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        match = _NUMBER.match(text, i)
        if match:
            tokens.append(Token("number", match.group(), i))
            i = match.end()
        elif ch in VARIABLES:
            tokens.append(Token("variable", ch, i))
            i += 1
        elif ch in OPERATORS:
            tokens.append(Token("operator", ch, i))
            i += 1
        else:
            raise ParseError(f"Unexpected character {ch!r}", i, OPERAND_START + BINARY_OPERATORS)
    tokens.append(Token("end", "", len(text)))
    return tokens


# Sparse polynomial arithmetic on exponent triples

def _constant(value: Fraction) -> Terms:
    return {(0, 0, 0): value} if value else {}


def _add(a: Terms, b: Terms, sign: int = 1) -> Terms:
    out = dict(a)
    for key, value in b.items():
        total = out.get(key, Fraction(0)) + sign * value
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def _mul(a: Terms, b: Terms) -> Terms:
    out: Terms = {}
    for (i1, j1, k1), v1 in a.items():
        for (i2, j2, k2), v2 in b.items():
            key = (i1 + i2, j1 + j2, k1 + k2)
            out[key] = out.get(key, Fraction(0)) + v1 * v2
    return {k: v for k, v in out.items() if v}


def _pow(base: Terms, exponent: int) -> Terms:
    result, factor = _constant(Fraction(1)), base
    while exponent:
        if exponent & 1:
            result = _mul(result, factor)
        factor = _mul(factor, factor)
        exponent >>= 1
    return result


def _constant_value(terms: Terms):
    if not terms:
        return Fraction(0)
    if set(terms) == {(0, 0, 0)}:
        return terms[(0, 0, 0)]
    return None


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0
        self.seen: Dict[str, int] = {}

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _at(self, *operators: str) -> bool:
        return self.current.kind == "operator" and self.current.text in operators

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def parse(self) -> Terms:
        value = self.expression()
        if self.current.kind != "end":
            raise ParseError(f"Unexpected {self.current.text!r}", self.current.position, AFTER_OPERAND)
        return value

    def expression(self) -> Terms:
        value = self.term()
        while self._at("+", "-"):
            sign = 1 if self._advance().text == "+" else -1
            value = _add(value, self.term(), sign)
        return value

    def term(self) -> Terms:
        value = self.unary()
        while self._at("*", "/"):
            operator = self._advance().text
            position = self.current.position
            rhs = self.unary()
            if operator == "*":
                value = _mul(value, rhs)
                continue
            divisor = _constant_value(rhs)
            if divisor is None:
                raise ParseError("Division by a non-constant", position, ["number"])
            if divisor == 0:
                raise ParseError("Division by zero", position, ["nonzero number"])
            value = {k: v / divisor for k, v in value.items()}
        return value

    def unary(self) -> Terms:
        if self._at("+", "-"):
            sign = 1 if self._advance().text == "+" else -1
            return {k: sign * v for k, v in self.unary().items()}
        return self.power()

    def power(self) -> Terms:
        base = self.atom()
        if not self._at("^"):
            return base
        self._advance()
        token = self.current
        if token.kind != "number" or not token.text.isdigit():
            raise ParseError("Exponent must be a nonnegative integer", token.position, ["integer"])
        exponent = int(token.text)
        if exponent > MAX_EXPONENT:
            raise ParseError(f"Exponent above {MAX_EXPONENT}", token.position, ["integer"])
        self._advance()
        return _pow(base, exponent)

    def atom(self) -> Terms:
        token = self.current
        if token.kind == "number":
            self._advance()
            return _constant(Fraction(token.text))
        if token.kind == "variable":
            self._advance()
            self.seen.setdefault(token.text, token.position)
            exponents = tuple(int(token.text == v) for v in VARIABLES)
            return {exponents: Fraction(1)}
        if self._at("("):
            self._advance()
            value = self.expression()
            if not self._at(")"):
                raise ParseError("Unbalanced parenthesis", self.current.position, (")",) + BINARY_OPERATORS)
            self._advance()
            return value
        what = "end of input" if token.kind == "end" else repr(token.text)
        raise ParseError(f"Unexpected {what}", token.position, OPERAND_START)


def parse_polynomial(text: str) -> Union[UniPoly, BiPoly]:
    """
    Parse polynomial text

    Args:
        text: e.g. "y^5 + y - x" or "32*z^6 - 48*z^4 + 18*z^2 - 1"

    Returns:
        BiPoly when x or y occurs, UniPoly in z otherwise

    Raises:
        ParseError: with the offending position and the expected tokens
    """
    parser = _Parser(text)
    terms = parser.parse()
    bivariate = [parser.seen[v] for v in ("x", "y") if v in parser.seen]
    if "z" in parser.seen and bivariate:
        first_z, first_xy = parser.seen["z"], min(bivariate)
        if first_z > first_xy:
            raise ParseError("z cannot be combined with x or y", first_z, ["x", "y"])
        raise ParseError("x and y cannot be combined with z", first_xy, ["z"])

    if bivariate:
        return BiPoly({(i, j): c for (i, j, _), c in terms.items()})
    degree = max((k for _, _, k in terms), default=0)
    coefficients = [Fraction(0)] * (degree + 1)
    for (_, _, k), c in terms.items():
        coefficients[k] = c
    return UniPoly(coefficients)


def _monomial(powers: List[Tuple[str, int]]) -> str:
    parts = [name if e == 1 else f"{name}^{e}" for name, e in powers if e]
    return "*".join(parts)


def _join(terms: List[Tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for index, (c, monomial) in enumerate(terms):
        magnitude = abs(c)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if index == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def print_polynomial(p: Union[UniPoly, BiPoly]) -> str:
    """Text form that parse_polynomial reads back to the same polynomial"""
    if isinstance(p, BiPoly):
        if not p.is_exact:
            raise TypeError("Only rational polynomials have a text form")
        ordered = sorted(p.coefficients.items(), key=lambda item: (item[0][1], item[0][0]), reverse=True)
        return _join([(c, _monomial([("x", i), ("y", j)])) for (i, j), c in ordered])
    if not p.is_exact:
        raise TypeError("Only rational polynomials have a text form")
    terms = [(c, _monomial([("z", k)])) for k, c in reversed(list(enumerate(p.coefficients))) if c != 0]
    return _join(terms)
