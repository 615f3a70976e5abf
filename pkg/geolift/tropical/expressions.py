"""
Subtraction-free rational expressions in t1..tN.

Grammar accepted by :func:`parse_sf` (ASCII, no '-' anywhere)::

    expr   := term ('+' term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' int)?
    atom   := 't' k | posint | '(' expr ')'
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from ..exceptions import (
    ArityMismatch,
    NonPositivePoint,
    NotSubtractionFree,
    ParseError,
    SubtractionForbidden,
)

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class SFExpr:
    """Base class of the expression tree; nodes are immutable"""

    def __add__(self, other: "SFExpr") -> "SFExpr":
        return Add(self, _coerce(other))

    def __radd__(self, other) -> "SFExpr":
        return Add(_coerce(other), self)

    def __mul__(self, other: "SFExpr") -> "SFExpr":
        return Mul(self, _coerce(other))

    def __rmul__(self, other) -> "SFExpr":
        return Mul(_coerce(other), self)

    def __truediv__(self, other: "SFExpr") -> "SFExpr":
        return Div(self, _coerce(other))

    def __rtruediv__(self, other) -> "SFExpr":
        return Div(_coerce(other), self)

    def __pow__(self, k: int) -> "SFExpr":
        return Pow(self, int(k))

    def __str__(self) -> str:
        return format_sf(self)


@dataclass(frozen=True, eq=True, repr=True)
class Var(SFExpr):
    index: int


@dataclass(frozen=True, eq=True, repr=True)
class Const(SFExpr):
    value: int

    def __post_init__(self):
        if self.value <= 0:
            raise NotSubtractionFree(f"constant {self.value} is not positive", coefficients=[self.value])


@dataclass(frozen=True, eq=True, repr=True)
class Add(SFExpr):
    left: SFExpr
    right: SFExpr


@dataclass(frozen=True, eq=True, repr=True)
class Mul(SFExpr):
    left: SFExpr
    right: SFExpr


@dataclass(frozen=True, eq=True, repr=True)
class Div(SFExpr):
    left: SFExpr
    right: SFExpr


@dataclass(frozen=True, eq=True, repr=True)
class Pow(SFExpr):
    base: SFExpr
    exponent: int


def _coerce(value) -> SFExpr:
    if isinstance(value, SFExpr):
        return value
    if isinstance(value, int):
        return Const(value)
    raise TypeError(f"cannot use {type(value).__name__} in a subtraction-free expression")


def var(k: int) -> Var:
    return Var(k)


# --- parsing ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, position=self.pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def parse(self) -> SFExpr:
        if "-" in self.text:
            self.pos = self.text.index("-")
            raise SubtractionForbidden("subtraction is not allowed", position=self.pos)
        node = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self) -> SFExpr:
        node = self.term()
        while self.peek() == "+":
            self.pos += 1
            node = Add(node, self.term())
        return node

    def term(self) -> SFExpr:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.factor()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def factor(self) -> SFExpr:
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            node = Pow(node, self.integer())
        return node

    def atom(self) -> SFExpr:
        c = self.peek()
        if c == "t":
            self.pos += 1
            start = self.pos
            k = self.integer()
            if k < 1:
                self.pos = start
                raise self.error("variables are numbered from t1")
            return Var(k)
        if c.isdigit():
            start = self.pos
            value = self.integer()
            if value == 0:
                self.pos = start
                raise self.error("constants must be positive")
            return Const(value)
        if c == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return node
        if not c:
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {c!r}")


def parse_sf(text: str) -> SFExpr:
    """Parse text into an expression tree; any '-' raises SubtractionForbidden"""
    return _Parser(text).parse()


def format_sf(expr: SFExpr) -> str:
    """Text form that :func:`parse_sf` reads back to the same function"""
    if isinstance(expr, Var):
        return f"t{expr.index}"
    if isinstance(expr, Const):
        return str(expr.value)
    if isinstance(expr, Pow):
        base = format_sf(expr.base)
        if not isinstance(expr.base, (Var, Const)):
            base = f"({base})"
        if expr.exponent < 0:
            return f"(1/{base})^{-expr.exponent}"
        return f"{base}^{expr.exponent}"
    if isinstance(expr, Add):
        right = format_sf(expr.right)
        if isinstance(expr.right, Add):
            right = f"({right})"
        return f"{format_sf(expr.left)} + {right}"
    if isinstance(expr, (Mul, Div)):
        left = format_sf(expr.left)
        if isinstance(expr.left, Add):
            left = f"({left})"
        right = format_sf(expr.right)
        if isinstance(expr.right, (Add, Mul, Div)):
            right = f"({right})"
        op = "*" if isinstance(expr, Mul) else "/"
        return f"{left}{op}{right}"
    raise TypeError(f"not an expression node: {expr!r}")


# --- evaluation -------------------------------------------------------------


def arity(expr: SFExpr) -> int:
    """Largest variable index occurring in the expression (0 for constants)"""
    if isinstance(expr, Var):
        return expr.index
    if isinstance(expr, Const):
        return 0
    if isinstance(expr, Pow):
        return arity(expr.base)
    return max(arity(expr.left), arity(expr.right))


def _fractions(point: Iterable) -> Tuple[Fraction, ...]:
    values = tuple(Fraction(x) for x in point)
    for k, x in enumerate(values, start=1):
        if x <= 0:
            raise NonPositivePoint(f"t{k} = {x} is not positive")
    return values


def _eval(expr: SFExpr, point: Tuple[Fraction, ...]) -> Fraction:
    if isinstance(expr, Var):
        return point[expr.index - 1]
    if isinstance(expr, Const):
        return Fraction(expr.value)
    if isinstance(expr, Pow):
        return _eval(expr.base, point) ** expr.exponent
    a, b = _eval(expr.left, point), _eval(expr.right, point)
    if isinstance(expr, Add):
        return a + b
    if isinstance(expr, Mul):
        return a * b
    return a / b


def sf_eval(expr: SFExpr, point: Sequence) -> Fraction:
    """Exact value at a strictly positive point"""
    values = _fractions(point)
    if arity(expr) > len(values):
        raise ArityMismatch(f"expression uses t{arity(expr)} but the point has {len(values)} coordinates")
    return _eval(expr, values)


def sf_eval_map(exprs: Sequence[SFExpr], point: Sequence) -> Tuple[Fraction, ...]:
    values = _fractions(point)
    return tuple(sf_eval(e, values) for e in exprs)


def sf_compose(f: SFExpr, g: Sequence[SFExpr]) -> SFExpr:
    """Substitute g[k-1] for tk in f"""
    if arity(f) > len(g):
        raise ArityMismatch(f"expression uses t{arity(f)} but only {len(g)} substitutes were given")

    def walk(node: SFExpr) -> SFExpr:
        if isinstance(node, Var):
            return g[node.index - 1]
        if isinstance(node, Const):
            return node
        if isinstance(node, Pow):
            return Pow(walk(node.base), node.exponent)
        return type(node)(walk(node.left), walk(node.right))

    return walk(f)


# --- polynomial normal form ---------------------------------------------------


@lru_cache(maxsize=None)
def sf_symbols(n: int) -> Tuple[sympy.Symbol, ...]:
    """The positive symbols t1..tn shared by every sympy conversion"""
    return tuple(sympy.Symbol(f"t{k}", positive=True) for k in range(1, n + 1))


def to_sympy(expr: SFExpr, n: int = 0) -> sympy.Expr:
    gens = sf_symbols(max(n, arity(expr)))
    if isinstance(expr, Var):
        return gens[expr.index - 1]
    if isinstance(expr, Const):
        return sympy.Integer(expr.value)
    if isinstance(expr, Pow):
        return to_sympy(expr.base, n) ** expr.exponent
    a, b = to_sympy(expr.left, n), to_sympy(expr.right, n)
    if isinstance(expr, Add):
        return a + b
    if isinstance(expr, Mul):
        return a * b
    return a / b


def sf_normalize(expr: SFExpr, n: int = 0) -> Tuple[sympy.Poly, sympy.Poly]:
    """
    Numerator/denominator pair (P, Q) with non-negative integer coefficients.

    Denominators are cleared bottom-up and no gcd is ever cancelled, so the pair
    stays a certificate even where the reduced fraction would lose it.
    """
    gens = sf_symbols(max(n, arity(expr), 1))

    def walk(node: SFExpr) -> Tuple[sympy.Poly, sympy.Poly]:
        if isinstance(node, Var):
            return sympy.Poly(gens[node.index - 1], *gens, domain="ZZ"), sympy.Poly(1, *gens, domain="ZZ")
        if isinstance(node, Const):
            return sympy.Poly(node.value, *gens, domain="ZZ"), sympy.Poly(1, *gens, domain="ZZ")
        if isinstance(node, Pow):
            p, q = walk(node.base)
            k = node.exponent
            return (p ** k, q ** k) if k >= 0 else (q ** -k, p ** -k)
        p1, q1 = walk(node.left)
        p2, q2 = walk(node.right)
        if isinstance(node, Add):
            return p1 * q2 + p2 * q1, q1 * q2
        if isinstance(node, Mul):
            return p1 * p2, q1 * q2
        return p1 * q2, q1 * p2

    return walk(expr)


def _monomial(coeff: int, exponents: Sequence[int]) -> SFExpr:
    factors: List[SFExpr] = []
    if coeff != 1:
        factors.append(Const(coeff))
    for k, e in enumerate(exponents, start=1):
        if e == 1:
            factors.append(Var(k))
        elif e > 1:
            factors.append(Pow(Var(k), e))
    if not factors:
        return Const(1)
    node = factors[0]
    for f in factors[1:]:
        node = Mul(node, f)
    return node


def _polynomial(poly: sympy.Poly) -> SFExpr:
    terms = poly.terms()
    coeffs = [int(c) for _, c in terms]
    if not terms or any(c <= 0 for c in coeffs):
        raise NotSubtractionFree(f"{poly.as_expr()} has a non-positive coefficient", coefficients=coeffs)
    node = _monomial(coeffs[0], terms[0][0])
    for exponents, c in terms[1:]:
        node = Add(node, _monomial(int(c), exponents))
    return node


def sf_from_polynomials(p: sympy.Poly, q: sympy.Poly) -> SFExpr:
    """Expression P/Q from polynomials with positive coefficients"""
    num = _polynomial(p)
    if q.is_one:
        return num
    return Div(num, _polynomial(q))


def certify_rational(expr: sympy.Expr, n: int) -> Tuple[sympy.Poly, sympy.Poly]:
    """
    Reduced P/Q of a sympy rational function in t1..tn, signs normalized so Q
    leads with a positive coefficient; NotSubtractionFree unless every
    coefficient of both is positive.
    """
    gens = sf_symbols(n)
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    p = sympy.Poly(num, *gens, domain="QQ")
    q = sympy.Poly(den, *gens, domain="QQ")
    if q.LC() < 0:
        p, q = -p, -q
    # clear rational content so both sides are integral
    scale = reduce(sympy.ilcm, [sympy.Rational(c).q for c in p.coeffs() + q.coeffs()], 1)
    p = sympy.Poly((p * scale).as_expr(), *gens, domain="ZZ")
    q = sympy.Poly((q * scale).as_expr(), *gens, domain="ZZ")
    coeffs = [int(c) for c in p.coeffs() + q.coeffs()]
    if any(c <= 0 for c in coeffs):
        raise NotSubtractionFree(f"{expr} has no positive certificate", coefficients=coeffs)
    logger.debug(f"certified ({p.as_expr()})/({q.as_expr()})")
    return p, q
