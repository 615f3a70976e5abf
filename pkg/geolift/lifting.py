"""
Matrix realization of the geometric lifting in type A (SL_{n+1}).

    x_i(t) = I + t E_{i,i+1}        y_i(t) = I + t E_{i+1,i}
    t^{alpha_i^vee} = diag(1, ..., t, 1/t, ..., 1)     (t at position i)

All arithmetic is exact: entries are sympy Rationals, or rational functions of
positive symbols when deriving the rank-2 moves.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

import sympy

from .cartan import build_cartan, letters_of, require_longest, WordLike
from .exceptions import (
    IndexOutOfRange,
    LengthMismatch,
    LiftingError,
    NonPositiveParameter,
    NotInG0,
    UnsupportedRank2Type,
    UnsupportedType,
    ZeroTorusParameter,
)
from .models import CartanDatum, VerificationReport
from .tropical import (
    PLMap,
    SFExpr,
    Var,
    certify_rational,
    normal_form_tropical,
    sf_eval_map,
    sf_from_polynomials,
    sf_symbols,
)

logger = logging.getLogger(__name__)


def to_rational(value: Any) -> sympy.Expr:
    """Exact sympy number (or expression) from int, Fraction, str or sympy input"""
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, float):
        raise TypeError("floating point parameters are not accepted")
    return sympy.Rational(value)


def to_fraction(value: sympy.Expr) -> Fraction:
    r = sympy.Rational(value)
    return Fraction(int(r.p), int(r.q))


def _is_zero(value: sympy.Expr) -> bool:
    if value.is_Number:
        return value == 0
    return sympy.cancel(value) == 0


@dataclass(frozen=True)
class GroupMatrix:
    """Exact square matrix of determinant 1"""
    entries: sympy.ImmutableMatrix

    def __post_init__(self):
        m = self.entries
        if not isinstance(m, sympy.ImmutableMatrix):
            m = sympy.ImmutableMatrix(m)
            object.__setattr__(self, "entries", m)
        if m.rows != m.cols:
            raise LiftingError(f"matrix is {m.rows}x{m.cols}, not square")
        det = m.det()
        if not _is_zero(det - 1):
            raise LiftingError(f"determinant is {sympy.cancel(det)}, not 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "GroupMatrix":
        return cls(sympy.ImmutableMatrix([[to_rational(v) for v in row] for row in rows]))

    @classmethod
    def identity(cls, dim: int) -> "GroupMatrix":
        return cls(sympy.ImmutableMatrix.eye(dim))

    @property
    def dim(self) -> int:
        return self.entries.rows

    def __getitem__(self, key):
        return self.entries[key]

    def __matmul__(self, other: "GroupMatrix") -> "GroupMatrix":
        return GroupMatrix(self.entries * other.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupMatrix):
            return NotImplemented
        if self.entries.shape != other.entries.shape:
            return False
        if not (self.entries.free_symbols or other.entries.free_symbols):
            return self.entries == other.entries
        return all(_is_zero(d) for d in (self.entries - other.entries))

    def __hash__(self) -> int:
        return hash(self.entries)

    def inverse(self) -> "GroupMatrix":
        # det = 1, so the adjugate is the inverse and stays polynomial
        return GroupMatrix(self.entries.adjugate().applyfunc(sympy.cancel))

    def transpose(self) -> "GroupMatrix":
        return GroupMatrix(self.entries.T)

    def is_upper_unipotent(self) -> bool:
        d = self.dim
        return all(
            _is_zero(self.entries[r, c] - (1 if r == c else 0))
            for r in range(d) for c in range(d) if r >= c
        )

    def to_json(self) -> List[List[str]]:
        return [[str(self.entries[r, c]) for c in range(self.dim)] for r in range(self.dim)]


def _require_type_a(datum: CartanDatum) -> int:
    if datum.series != "A":
        raise UnsupportedType(f"matrix realization is only available in type A, not {datum.name}")
    return datum.rank + 1


def _elementary(d: int, row: int, col: int, t: sympy.Expr) -> GroupMatrix:
    m = sympy.eye(d)
    m[row, col] = t
    return GroupMatrix(sympy.ImmutableMatrix(m))


def _check_index(datum: CartanDatum, i: int) -> int:
    d = _require_type_a(datum)
    if not 1 <= i <= datum.rank:
        raise IndexOutOfRange(f"index {i} outside 1..{datum.rank}")
    return d


def gen_x(datum: CartanDatum, i: int, t: Any) -> GroupMatrix:
    d = _check_index(datum, i)
    return _elementary(d, i - 1, i, to_rational(t))


def gen_y(datum: CartanDatum, i: int, t: Any) -> GroupMatrix:
    d = _check_index(datum, i)
    return _elementary(d, i, i - 1, to_rational(t))


def gen_torus(datum: CartanDatum, i: int, t: Any) -> GroupMatrix:
    """t^{alpha_i^vee}"""
    d = _check_index(datum, i)
    t = to_rational(t)
    if _is_zero(t):
        raise ZeroTorusParameter(f"t^alpha_{i}^vee needs t != 0")
    diag = [sympy.Integer(1)] * d
    diag[i - 1] = t
    diag[i] = 1 / t
    return GroupMatrix(sympy.ImmutableMatrix(sympy.diag(*diag)))


def _params(word: WordLike, t: Sequence[Any]) -> Tuple[Tuple[int, ...], List[sympy.Expr]]:
    letters = letters_of(word)
    if len(t) != len(letters):
        raise LengthMismatch(f"|t| = {len(t)} but the word has length {len(letters)}")
    return letters, [to_rational(v) for v in t]


def _product(d: int, factors: Sequence[GroupMatrix]) -> GroupMatrix:
    m = sympy.eye(d)
    for f in factors:
        m = m * f.entries
    return GroupMatrix(sympy.ImmutableMatrix(m.applyfunc(sympy.cancel) if m.free_symbols else m))


def x_word(datum: CartanDatum, word: WordLike, t: Sequence[Any]) -> GroupMatrix:
    """x_{i_1}(t_1) ... x_{i_m}(t_m)"""
    d = _require_type_a(datum)
    letters, values = _params(word, t)
    return _product(d, [gen_x(datum, i, v) for i, v in zip(letters, values)])


def _require_positive(values: Sequence[sympy.Expr]) -> None:
    for k, v in enumerate(values, start=1):
        if v.is_positive is not True:
            raise NonPositiveParameter(f"t{k} = {v} is not positive")


def x_minus_word(datum: CartanDatum, word: WordLike, t: Sequence[Any]) -> GroupMatrix:
    """prod_k y_{i_k}(t_k) t_k^{-alpha_{i_k}^vee}"""
    d = _require_type_a(datum)
    letters, values = _params(word, t)
    _require_positive(values)
    factors: List[GroupMatrix] = []
    for i, v in zip(letters, values):
        factors += [gen_y(datum, i, v), gen_torus(datum, i, 1 / v)]
    return _product(d, factors)


def _sign_matrix(d: int) -> sympy.ImmutableMatrix:
    return sympy.ImmutableMatrix(sympy.diag(*[(-1) ** k for k in range(d)]))


def chevalley_omega(x: GroupMatrix) -> GroupMatrix:
    """x^{iota T} = D (x^T)^{-1} D^{-1}, D = diag(1, -1, 1, ...)"""
    d = _sign_matrix(x.dim)
    inv_t = x.entries.adjugate().T
    if inv_t.free_symbols:
        inv_t = inv_t.applyfunc(sympy.cancel)
    # D is its own inverse
    return GroupMatrix(sympy.ImmutableMatrix(d * inv_t * d))


def omega_of_minus_word(datum: CartanDatum, word: WordLike, t: Sequence[Any]) -> GroupMatrix:
    """Generator-level image of x_{-i}(t): prod_k x_{i_k}(t_k) t_k^{alpha_{i_k}^vee}"""
    d = _require_type_a(datum)
    letters, values = _params(word, t)
    _require_positive(values)
    factors: List[GroupMatrix] = []
    for i, v in zip(letters, values):
        factors += [gen_x(datum, i, v), gen_torus(datum, i, v)]
    return _product(d, factors)


def leading_minors(x: GroupMatrix) -> List[sympy.Expr]:
    return [sympy.cancel(x.entries[:k, :k].det()) for k in range(1, x.dim + 1)]


def gauss_decompose(x: GroupMatrix) -> Tuple[GroupMatrix, GroupMatrix, GroupMatrix]:
    """
    Gaussian decomposition x = L H U, L lower unipotent, H diagonal, U upper unipotent.

    Doolittle elimination without pivoting; the k-th pivot is the ratio of the
    k-th and (k-1)-th leading principal minors.

    Raises:
        NotInG0: a leading principal minor vanishes
    """
    n = x.dim
    a = sympy.Matrix(x.entries)
    lower = sympy.eye(n)
    for k in range(n):
        pivot = sympy.cancel(a[k, k])
        if pivot == 0:
            raise NotInG0(f"leading principal minor {k + 1} vanishes", minor=k + 1)
        for r in range(k + 1, n):
            m = sympy.cancel(a[r, k] / pivot)
            lower[r, k] = m
            for c in range(k, n):
                a[r, c] = sympy.cancel(a[r, c] - m * a[k, c])
    pivots = [a[k, k] for k in range(n)]
    upper = sympy.Matrix(n, n, lambda r, c: sympy.cancel(a[r, c] / pivots[r]) if c >= r else 0)
    return (
        GroupMatrix(sympy.ImmutableMatrix(lower)),
        GroupMatrix(sympy.ImmutableMatrix(sympy.diag(*pivots))),
        GroupMatrix(sympy.ImmutableMatrix(upper)),
    )


def zeta(x: GroupMatrix) -> GroupMatrix:
    """zeta(x) = [x^{iota T}]_+"""
    return gauss_decompose(chevalley_omega(x))[2]


def zeta_formula(datum: CartanDatum, word: WordLike, t: Sequence[Any]) -> Tuple[sympy.Expr, ...]:
    """t'_k = t_k^{-1} prod_{j>k} t_j^{-a_{i_j i_k}}; valid for any Cartan matrix"""
    letters, values = _params(word, t)
    _require_positive(values)
    out = []
    for k, ik in enumerate(letters):
        value = 1 / values[k]
        for j in range(k + 1, len(letters)):
            value *= values[j] ** (-datum.a(letters[j], ik))
        out.append(sympy.cancel(value) if value.free_symbols else value)
    return tuple(out)


def zeta_formula_expressions(datum: CartanDatum, word: WordLike) -> List[SFExpr]:
    """The closed form of zeta in the coordinates of ``word``, as monomial expressions"""
    letters = letters_of(word)
    exprs: List[SFExpr] = []
    for k, ik in enumerate(letters):
        node: SFExpr = Var(k + 1) ** -1
        for j in range(k + 1, len(letters)):
            e = -datum.a(letters[j], ik)
            if e:
                node = node * Var(j + 1) ** e
        exprs.append(node)
    return exprs


def verify_zeta_formula(datum: CartanDatum, word: WordLike, t: Sequence[Any]) -> VerificationReport:
    """Check x_i(t') == zeta(x_{-i}(t)) exactly, t' from the closed form"""
    letters = require_longest(datum, word)
    _require_type_a(datum)
    report = VerificationReport(name=f"zeta-formula {datum.name} {list(letters)}")
    t_prime = zeta_formula(datum, letters, t)
    minus = x_minus_word(datum, letters, t)
    omega = chevalley_omega(minus)
    report.record(
        omega == omega_of_minus_word(datum, letters, t),
        check="omega-generators", word=list(letters), t=[str(v) for v in t],
    )
    lhs = x_word(datum, letters, t_prime)
    rhs = zeta(minus)
    ok = report.record(
        lhs == rhs,
        check="formula", word=list(letters), t=[str(to_rational(v)) for v in t],
        lhs=lhs.to_json(), rhs=rhs.to_json(),
    )
    report.details["t_prime"] = [str(v) for v in t_prime]
    if not ok:
        logger.warning(f"zeta formula mismatch for {list(letters)} at {list(t)}")
    return report


# --- rank-2 moves -------------------------------------------------------------


@dataclass(frozen=True)
class RationalMap:
    """Components P_k/Q_k with positive integer coefficients in t1..tN"""
    arity: int
    components: Tuple[Tuple[sympy.Poly, sympy.Poly], ...]

    def __post_init__(self):
        for p, q in self.components:
            if q.is_zero:
                raise LiftingError("denominator is identically zero")

    def __len__(self) -> int:
        return len(self.components)

    def evaluate(self, point: Sequence[Any]) -> Tuple[Fraction, ...]:
        values = [Fraction(x) for x in point]
        if len(values) != self.arity:
            raise LengthMismatch(f"map takes {self.arity} arguments, got {len(values)}")
        return tuple(_poly_value(p, values) / _poly_value(q, values) for p, q in self.components)

    def to_sf(self) -> List[SFExpr]:
        return [sf_from_polynomials(p, q) for p, q in self.components]

    def tropicalize(self) -> PLMap:
        return PLMap(self.arity, tuple(normal_form_tropical(p, q) for p, q in self.components))

    def to_json(self) -> Dict[str, Any]:
        return {
            "arity": self.arity,
            "components": [{"num": str(p.as_expr()), "den": str(q.as_expr())} for p, q in self.components],
        }


def _poly_value(poly: sympy.Poly, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for exponents, c in poly.terms():
        term = Fraction(int(c))
        for x, e in zip(point, exponents):
            term *= x ** e
        total += term
    return total


# (realization, word before, word after) per move kind
_REALIZATIONS = {
    "commuting": (("A", 3), (1, 3), (3, 1)),
    "A2": (("A", 2), (1, 2, 1), (2, 1, 2)),
}


def rank2_words(kind: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    if kind not in _REALIZATIONS:
        raise UnsupportedRank2Type(f"no matrix realization for {kind} moves")
    _, before, after = _REALIZATIONS[kind]
    return before, after


def _triangular_solve(equations: List[sympy.Expr], unknowns: List[sympy.Symbol]) -> Dict[sympy.Symbol, sympy.Expr]:
    solution: Dict[sympy.Symbol, sympy.Expr] = {}
    pending = list(unknowns)
    while pending:
        for eq in equations:
            e = sympy.numer(sympy.together(eq.subs(solution)))
            free = [u for u in pending if e.has(u)]
            if len(free) != 1:
                continue
            poly = sympy.Poly(sympy.expand(e), free[0])
            if poly.degree() != 1:
                continue
            c1, c0 = poly.all_coeffs()
            solution[free[0]] = sympy.cancel(-c0 / c1)
            pending.remove(free[0])
            break
        else:
            raise LiftingError(f"cannot triangularize the remaining unknowns {pending}")
    return solution


@lru_cache(maxsize=None)
def solve_rank2_move(kind: str, side: str) -> RationalMap:
    """
    Parameter map of the elementary braid move of the given kind.

    Lusztig side solves x_{i'}(u) = x_i(t); string side solves x_{-i'}(u) = x_{-i}(t).
    The solution is re-verified symbolically and every component is certified
    subtraction-free.
    """
    if side not in ("lusztig", "string"):
        raise ValueError(f"side must be 'lusztig' or 'string', not {side!r}")
    if kind not in _REALIZATIONS:
        raise UnsupportedRank2Type(f"no matrix realization for {kind} moves")
    (series, rank), before, after = _REALIZATIONS[kind]
    datum = build_cartan(series, rank)
    m = len(before)
    t = sf_symbols(m)
    u = tuple(sympy.Symbol(f"u{k}", positive=True) for k in range(1, m + 1))
    build = x_word if side == "lusztig" else x_minus_word
    lhs, rhs = build(datum, after, u), build(datum, before, t)

    diff = lhs.entries - rhs.entries
    equations = [sympy.numer(sympy.together(e)) for e in diff]
    equations = [e for e in equations if not _is_zero(e)]
    solution = _triangular_solve(equations, list(u))

    solved = build(datum, after, [solution[s] for s in u])
    if solved != rhs:
        raise LiftingError(f"{kind}/{side} move does not reproduce the matrix identity")
    components = tuple(certify_rational(solution[s], m) for s in u)
    logger.debug(f"{kind}/{side} move: {[str(solution[s]) for s in u]}")
    return RationalMap(m, components)


def verify_rank2_move(kind: str, side: str, points: Sequence[Sequence[Any]]) -> VerificationReport:
    """Check the defining matrix identity of a solved move, and its certificate, at exact rational points"""
    before, after = rank2_words(kind)
    (series, rank), _, _ = _REALIZATIONS[kind]
    datum = build_cartan(series, rank)
    move = solve_rank2_move(kind, side)
    certificate = move.to_sf()
    build = x_word if side == "lusztig" else x_minus_word
    report = VerificationReport(name=f"rank2 {kind}/{side}")
    for point in points:
        out = move.evaluate(point)
        # the subtraction-free certificate must take the same values
        report.record(
            build(datum, after, out) == build(datum, before, point) and sf_eval_map(certificate, point) == out,
            point=[str(Fraction(x)) for x in point], out=[str(x) for x in out],
        )
    if not report.passed:
        logger.warning(f"{report.name}: {len(report.failures)} failures")
    return report
