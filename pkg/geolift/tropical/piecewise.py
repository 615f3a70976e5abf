"""
Min-plus piecewise-linear maps.

Tropicalization replaces (x, /, +) by (+, -, min) and sends every positive
constant to 0. A component is stored as a difference of two minima of integer
affine forms, each form being a tuple ``(c_1, ..., c_N, const)``::

    value(t) = min(f(t) for f in pos) - min(g(t) for g in neg)
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import sympy

from ..exceptions import ArityMismatch
from ..models import AffineMap
from .expressions import Add, Const, Div, Mul, Pow, SFExpr, Var, arity as sf_arity

logger = logging.getLogger(__name__)

Form = Tuple[int, ...]


def _zero(n: int) -> Form:
    return (0,) * (n + 1)


def _unit(n: int, k: int) -> Form:
    return tuple(1 if j == k - 1 else 0 for j in range(n)) + (0,)


def _canonical(forms: Iterable[Form]) -> Tuple[Form, ...]:
    # equal linear parts: only the smallest constant can ever attain the min
    best: Dict[Form, int] = {}
    for f in forms:
        linear, const = f[:-1], f[-1]
        if linear not in best or const < best[linear]:
            best[linear] = const
    return tuple(sorted(linear + (const,) for linear, const in best.items()))


def _minkowski(a: Sequence[Form], b: Sequence[Form]) -> List[Form]:
    return [tuple(x + y for x, y in zip(f, g)) for f, g in product(a, b)]


def _eval_form(form: Form, point: Sequence[int]) -> int:
    return sum(c * x for c, x in zip(form, point)) + form[-1]


@dataclass(frozen=True)
class PLComponent:
    """min(pos) - min(neg) over integer affine forms in ``arity`` variables"""
    arity: int
    pos: Tuple[Form, ...]
    neg: Tuple[Form, ...]

    def __post_init__(self):
        if not self.pos or not self.neg:
            raise ValueError("a component needs at least one form on each side")
        for f in self.pos + self.neg:
            if len(f) != self.arity + 1:
                raise ArityMismatch(f"form {f} does not have {self.arity} coefficients plus a constant")
        object.__setattr__(self, "pos", _canonical(self.pos))
        object.__setattr__(self, "neg", _canonical(self.neg))

    def __call__(self, point: Sequence[int]) -> int:
        if len(point) != self.arity:
            raise ArityMismatch(f"component has arity {self.arity}, point has {len(point)} coordinates")
        return min(_eval_form(f, point) for f in self.pos) - min(_eval_form(g, point) for g in self.neg)

    # tropical semifield operations

    def __mul__(self, other: "PLComponent") -> "PLComponent":
        _same_arity(self, other)
        return PLComponent(self.arity, tuple(_minkowski(self.pos, other.pos)), tuple(_minkowski(self.neg, other.neg)))

    def __truediv__(self, other: "PLComponent") -> "PLComponent":
        _same_arity(self, other)
        return PLComponent(self.arity, tuple(_minkowski(self.pos, other.neg)), tuple(_minkowski(self.neg, other.pos)))

    def __add__(self, other: "PLComponent") -> "PLComponent":
        _same_arity(self, other)
        pos = _minkowski(self.pos, other.neg) + _minkowski(other.pos, self.neg)
        return PLComponent(self.arity, tuple(pos), tuple(_minkowski(self.neg, other.neg)))

    def __pow__(self, k: int) -> "PLComponent":
        if k < 0:
            return PLComponent(self.arity, self.neg, self.pos) ** -k
        if k == 0:
            return constant_component(self.arity, 0)
        scale = lambda forms: tuple(tuple(k * c for c in f) for f in forms)  # noqa: E731
        return PLComponent(self.arity, scale(self.pos), scale(self.neg))

    def shift(self, c: int) -> "PLComponent":
        return PLComponent(self.arity, tuple(f[:-1] + (f[-1] + c,) for f in self.pos), self.neg)

    def to_json(self) -> Dict[str, List[List[int]]]:
        return {"pos": [list(f) for f in self.pos], "neg": [list(g) for g in self.neg]}

    def __str__(self) -> str:
        def show(forms: Sequence[Form]) -> str:
            texts = [_format_form(f) for f in forms]
            return texts[0] if len(texts) == 1 else f"min({', '.join(texts)})"
        if self.neg == (_zero(self.arity),):
            return show(self.pos)
        return f"{show(self.pos)} - {show(self.neg)}"


def _format_form(form: Form) -> str:
    parts = []
    for k, c in enumerate(form[:-1], start=1):
        if c:
            parts.append(f"{c}*t{k}" if c not in (1, -1) else f"{'-' if c < 0 else ''}t{k}")
    if form[-1] or not parts:
        parts.append(str(form[-1]))
    return " + ".join(parts).replace("+ -", "- ")


def _same_arity(a: PLComponent, b: PLComponent) -> None:
    if a.arity != b.arity:
        raise ArityMismatch(f"arity {a.arity} vs {b.arity}")


def constant_component(n: int, c: int = 0) -> PLComponent:
    return PLComponent(n, (_zero(n)[:-1] + (c,),), (_zero(n),))


def variable_component(n: int, k: int) -> PLComponent:
    return PLComponent(n, (_unit(n, k),), (_zero(n),))


def affine_component(form: Sequence[int]) -> PLComponent:
    """The component equal to a single affine form (coefficients..., constant)"""
    form = tuple(int(c) for c in form)
    n = len(form) - 1
    return PLComponent(n, (form,), (_zero(n),))


@dataclass(frozen=True)
class PLMap:
    """A tuple of components sharing one arity"""
    arity: int
    components: Tuple[PLComponent, ...]

    def __post_init__(self):
        for c in self.components:
            if c.arity != self.arity:
                raise ArityMismatch(f"component of arity {c.arity} in a map of arity {self.arity}")

    def __call__(self, point: Sequence[int]) -> Tuple[int, ...]:
        return pl_eval(self, point)

    def __len__(self) -> int:
        return len(self.components)

    def to_json(self) -> List[Dict[str, List[List[int]]]]:
        return [c.to_json() for c in self.components]


def identity_map(n: int) -> PLMap:
    return PLMap(n, tuple(variable_component(n, k) for k in range(1, n + 1)))


def affine_pl_map(affine: AffineMap) -> PLMap:
    n = len(affine.constant)
    return PLMap(n, tuple(
        affine_component(tuple(row) + (c,)) for row, c in zip(affine.linear, affine.constant)
    ))


def tropicalize(expr: SFExpr, n: Optional[int] = None) -> PLComponent:
    """[expr]_Trop as a component in n variables (default: the largest index used)"""
    n = sf_arity(expr) if n is None else n
    if sf_arity(expr) > n:
        raise ArityMismatch(f"expression uses t{sf_arity(expr)} but arity is {n}")

    def walk(node: SFExpr) -> PLComponent:
        if isinstance(node, Var):
            return variable_component(n, node.index)
        if isinstance(node, Const):
            return constant_component(n, 0)
        if isinstance(node, Pow):
            return walk(node.base) ** node.exponent
        a, b = walk(node.left), walk(node.right)
        if isinstance(node, Add):
            return a + b
        if isinstance(node, Mul):
            return a * b
        if isinstance(node, Div):
            return a / b
        raise TypeError(f"not an expression node: {node!r}")

    return walk(expr)


def tropicalize_map(exprs: Sequence[SFExpr], n: Optional[int] = None) -> PLMap:
    if n is None:
        n = max((sf_arity(e) for e in exprs), default=0)
    return PLMap(n, tuple(tropicalize(e, n) for e in exprs))


def normal_form_tropical(p: sympy.Poly, q: sympy.Poly) -> PLComponent:
    """Tropicalization of P/Q read off the exponent vectors of the two polynomials"""
    n = len(p.gens)
    pos = tuple(tuple(int(e) for e in m) + (0,) for m in p.monoms())
    neg = tuple(tuple(int(e) for e in m) + (0,) for m in q.monoms())
    return PLComponent(n, pos, neg)


def pl_eval(pl: PLMap, point: Sequence[int]) -> Tuple[int, ...]:
    point = tuple(int(x) for x in point)
    if len(point) != pl.arity:
        raise ArityMismatch(f"map has arity {pl.arity}, point has {len(point)} coordinates")
    return tuple(c(point) for c in pl.components)


def _substitute_form(form: Form, g: PLMap) -> PLComponent:
    result = constant_component(g.arity, form[-1])
    for c, comp in zip(form[:-1], g.components):
        if c:
            result = result * comp ** c
    return result


def _tropical_sum(parts: Sequence[PLComponent]) -> PLComponent:
    total = parts[0]
    for part in parts[1:]:
        total = total + part
    return total


def pl_compose(f: PLMap, g: PLMap) -> PLMap:
    """f o g, computed by substituting the components of g into the forms of f"""
    if f.arity != len(g.components):
        raise ArityMismatch(f"f takes {f.arity} arguments, g returns {len(g.components)}")
    components = []
    for comp in f.components:
        top = _tropical_sum([_substitute_form(form, g) for form in comp.pos])
        bottom = _tropical_sum([_substitute_form(form, g) for form in comp.neg])
        components.append(top / bottom)
    logger.debug(f"composed PL maps: {sum(len(c.pos) + len(c.neg) for c in components)} linear forms")
    return PLMap(g.arity, tuple(components))


def is_affine(component: PLComponent) -> Optional[Form]:
    """The single affine form equal to the component, if pos and neg are singletons"""
    if len(component.pos) == 1 and len(component.neg) == 1:
        return tuple(a - b for a, b in zip(component.pos[0], component.neg[0]))
    return None


def as_affine_map(pl: PLMap) -> Optional[AffineMap]:
    """AffineMap when every component is affine and the map is square"""
    forms = [is_affine(c) for c in pl.components]
    if any(f is None for f in forms) or len(forms) != pl.arity:
        return None
    return AffineMap(
        constant=tuple(f[-1] for f in forms),
        linear=tuple(tuple(f[:-1]) for f in forms),
    )


def pl_map_from_json(data: Sequence[Dict[str, Any]]) -> PLMap:
    components = []
    for item in data:
        pos = tuple(tuple(int(c) for c in f) for f in item["pos"])
        neg = tuple(tuple(int(c) for c in f) for f in item["neg"])
        components.append(PLComponent(len(pos[0]) - 1, pos, neg))
    n = components[0].arity if components else 0
    return PLMap(n, tuple(components))
