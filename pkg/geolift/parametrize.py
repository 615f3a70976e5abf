"""
Piecewise-linear parametrization maps: transitions between reduced words,
tropical zeta, anchor constants, the map Phi_lambda and the affine
Schuetzenberger formula.

Lusztig and string data are integer vectors indexed by a reduced word of w0.
Transitions are composed from tropicalized rank-2 moves along a braid path;
no global factorization is ever computed.
"""

import logging
import random
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .cartan import (
    WeightLike,
    WordLike,
    braid_path,
    coords_of,
    dominant_coords,
    langlands_dual,
    letters_of,
    require_longest,
    star_word,
)
from .exceptions import (
    LengthMismatch,
    ParametrizeError,
    UnsupportedType,
)
from .lifting import solve_rank2_move, zeta_formula_expressions
from .models import AffineMap, CartanDatum, LusztigParam, VerificationReport
from .tropical import (
    PLComponent,
    PLMap,
    affine_pl_map,
    as_affine_map,
    identity_map,
    pl_compose,
    tropicalize_map,
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

SIDES = ("lusztig", "string")


@lru_cache(maxsize=None)
def tropical_move(kind: str, side: str) -> PLMap:
    """[R~]_Trop of one elementary move (A2-kind and commuting moves are self-dual)"""
    return solve_rank2_move(kind, side).tropicalize()


def _vector(t: Sequence[int], n: int) -> Vector:
    t = tuple(int(x) for x in t)
    if len(t) != n:
        raise LengthMismatch(f"|t| = {len(t)} but the word has length {n}")
    return t


def _transition(datum: CartanDatum, word: WordLike, other: WordLike, t: Sequence[int], side: str) -> Vector:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, not {side!r}")
    source = letters_of(word)
    t = _vector(t, len(source))
    for move in braid_path(datum, source, letters_of(other)):
        start = move.position - 1
        window = t[start:start + move.length]
        t = t[:start] + tropical_move(move.kind, side)(window) + t[start + move.length:]
    return t


def transition_lusztig(datum: CartanDatum, word: WordLike, other: WordLike, t: Sequence[int]) -> Vector:
    """R_i^{i'}: Lusztig data w.r.t. ``word`` to Lusztig data w.r.t. ``other``"""
    return _transition(datum, word, other, t, "lusztig")


def transition_string(datum: CartanDatum, word: WordLike, other: WordLike, t: Sequence[int]) -> Vector:
    """R_{-i}^{-i'}: string data w.r.t. ``word`` to string data w.r.t. ``other``"""
    return _transition(datum, word, other, t, "string")


def _embed(component: PLComponent, n: int, offset: int) -> PLComponent:
    m = component.arity

    def pad(form):
        return (0,) * offset + form[:m] + (0,) * (n - offset - m) + (form[m],)

    return PLComponent(n, tuple(pad(f) for f in component.pos), tuple(pad(f) for f in component.neg))


def transition_pl_map(datum: CartanDatum, word: WordLike, other: WordLike, side: str) -> PLMap:
    """The transition as a symbolic PL map, composed move by move"""
    source = letters_of(word)
    n = len(source)
    total = identity_map(n)
    for move in braid_path(datum, source, letters_of(other)):
        start = move.position - 1
        local = tropical_move(move.kind, side)
        components = list(identity_map(n).components)
        for k, comp in enumerate(local.components):
            components[start + k] = _embed(comp, n, start)
        total = pl_compose(PLMap(n, tuple(components)), total)
    return total


@lru_cache(maxsize=None)
def _zeta_trop(datum: CartanDatum, letters: Tuple[int, ...]) -> AffineMap:
    exprs = zeta_formula_expressions(langlands_dual(datum), letters)
    affine = as_affine_map(tropicalize_map(exprs, len(letters)))
    if affine is None:
        raise ParametrizeError(f"tropical zeta for {list(letters)} is not affine")
    return affine


def zeta_trop(datum: CartanDatum, word: WordLike) -> AffineMap:
    """t'_k = -t_k - sum_{j>k} a_{i_k i_j} t_j, from the closed form of zeta over the dual"""
    return _zeta_trop(datum, require_longest(datum, word))


def corollary_linear_part(datum: CartanDatum, word: WordLike) -> Tuple[Vector, ...]:
    """-(I + U) with U[k][j] = a_{i_k i_j} for j > k, written out directly"""
    letters = letters_of(word)
    n = len(letters)
    return tuple(
        tuple(-1 if j == k else (-datum.a(letters[k], letters[j]) if j > k else 0) for j in range(n))
        for k in range(n)
    )


def _dominant(weight: WeightLike, datum: CartanDatum) -> Vector:
    coords = coords_of(weight)
    if len(coords) != datum.rank:
        raise LengthMismatch(f"weight has {len(coords)} coordinates, expected {datum.rank}")
    return dominant_coords(coords)


@lru_cache(maxsize=1024)
def _anchor(datum: CartanDatum, weight: Vector, letters: Tuple[int, ...], bound: int) -> Vector:
    if not any(weight):
        return (0,) * len(letters)
    if datum.series != "A":
        raise UnsupportedType(f"anchor constants for nonzero weights need the type A oracle, not {datum.name}")
    from .oracle import generate_crystal, lowest_element, string_extract

    graph = generate_crystal(datum.rank, weight, bound=bound)
    m = string_extract(lowest_element(graph), letters).t
    n = len(letters)
    return tuple(
        m[k] + sum(datum.a(letters[k], letters[j]) * m[j] for j in range(k + 1, n))
        for k in range(n)
    )


def anchor_constants(datum: CartanDatum, weight: WeightLike, word: WordLike, bound: int = 100_000) -> Vector:
    """
    l = b_i^{-1} Phi_lambda(v_lambda).

    Computed from the string data m of the lowest element:
    l_k = m_k + sum_{j>k} a_{i_k i_j} m_j.
    """
    coords = _dominant(weight, datum)
    return _anchor(datum, coords, require_longest(datum, word), bound)


def string_cone_points(datum: CartanDatum, weight: WeightLike, word: WordLike, bound: int = 100_000) -> List[Vector]:
    """All of C_i(lambda), read off the tableau crystal (type A)"""
    coords = _dominant(weight, datum)
    letters = require_longest(datum, word)
    if not any(coords):
        return [(0,) * len(letters)]
    if datum.series != "A":
        raise UnsupportedType(f"string cones are only enumerated in type A, not {datum.name}")
    from .oracle import generate_crystal, string_extract

    graph = generate_crystal(datum.rank, coords, bound=bound)
    return sorted(string_extract(b, letters).t for b in graph.vertices)


def _add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def phi_map(datum: CartanDatum, word: WordLike, other: WordLike, weight: WeightLike, t: Sequence[int],
            route: str = "lusztig", certify: bool = False, bound: int = 100_000) -> Vector:
    """
    b_i^{-1} Phi_lambda c_{i'}^{-1}(t), with ``word`` = i and ``other`` = i'.

    The lusztig route computes R_{i'}^{i}(zeta_trop(i')(t)) + l, the string
    route zeta_trop(i)(R_{-i'}^{-i}(t)) + l. With ``certify`` the input is
    checked against the string cone C_{i'}(lambda) first.
    """
    i, i2 = require_longest(datum, word), require_longest(datum, other)
    t = _vector(t, len(i2))
    if certify and t not in string_cone_points(datum, weight, i2, bound=bound):
        raise ParametrizeError(f"{list(t)} is not in the string cone of {list(i2)}")
    anchor = anchor_constants(datum, weight, i, bound=bound)
    if route == "lusztig":
        image = transition_lusztig(datum, i2, i, zeta_trop(datum, i2).apply(t))
    elif route == "string":
        image = zeta_trop(datum, i).apply(transition_string(datum, i2, i, t))
    else:
        raise ValueError(f"route must be 'lusztig' or 'string', not {route!r}")
    return _add(image, anchor)


def phi_pl_map(datum: CartanDatum, word: WordLike, other: WordLike, weight: WeightLike,
               bound: int = 100_000) -> PLMap:
    """Phi_{i,i'} as a symbolic PL map: R_{i'}^{i} o zeta_trop(i') shifted by l"""
    i, i2 = require_longest(datum, word), require_longest(datum, other)
    anchor = anchor_constants(datum, weight, i, bound=bound)
    inner = affine_pl_map(zeta_trop(datum, i2))
    composite = pl_compose(transition_pl_map(datum, i2, i, "lusztig"), inner) if i != i2 else inner
    return PLMap(composite.arity, tuple(c.shift(l) for c, l in zip(composite.components, anchor)))


def schutz_affine(datum: CartanDatum, word: WordLike, weight: WeightLike, bound: int = 100_000) -> AffineMap:
    """
    t -> l - t_k - sum_{j>k} a_{i_k i_j} t_j, the Schuetzenberger involution from
    string data w.r.t. i to Lusztig data w.r.t. i*.
    """
    letters = require_longest(datum, word)
    return AffineMap(
        constant=anchor_constants(datum, weight, letters, bound=bound),
        linear=zeta_trop(datum, letters).linear,
    )


def schutz_apply(datum: CartanDatum, word: WordLike, weight: WeightLike, t: Sequence[int],
                 bound: int = 100_000) -> LusztigParam:
    letters = require_longest(datum, word)
    out = schutz_affine(datum, letters, weight, bound=bound).apply(_vector(t, len(letters)))
    if any(x < 0 for x in out):
        raise ParametrizeError(f"{list(t)} maps to {list(out)}; it is not in the string cone of {list(letters)}")
    return LusztigParam(word=star_word(datum, letters), t=out)


def star_relabel(datum: CartanDatum, param: LusztigParam) -> LusztigParam:
    """d_lambda(b_i(t)) = b_{i*}(t)"""
    return LusztigParam(word=star_word(datum, param.word), t=param.t)


def _sample(points: List[Vector], count: int, rng: random.Random) -> List[Vector]:
    if len(points) <= count:
        return points
    return sorted(rng.sample(points, count))


def verify_phi_conditions(datum: CartanDatum, weight: WeightLike, words: Sequence[WordLike],
                          samples: int = 100, seed: int = 42, bound: int = 100_000) -> VerificationReport:
    """
    Check the three characterizing conditions of the family Phi_{i,i'}:

    (1) Phi_{i,i'}(0) = l(i)
    (2) Phi_{i,i'} = R_{i''}^{i} o Phi_{i'',i'} = Phi_{i,i''} o R_{-i'}^{-i''} on C_{i'}(lambda)
    (3) for Phi_{i,i}: t'_1 + t_1 and t'_k (k != 1) do not depend on t_1
    """
    coords = _dominant(weight, datum)
    letters = [require_longest(datum, w) for w in words]
    rng = random.Random(seed)
    report = VerificationReport(name=f"phi-conditions {datum.name} lambda={list(coords)}")
    n = len(letters[0]) if letters else 0
    cones: Dict[Tuple[int, ...], List[Vector]] = {
        w: _sample(string_cone_points(datum, coords, w, bound=bound), samples, rng) for w in letters
    }

    def phi(i, i2, t):
        return phi_map(datum, i, i2, coords, t, bound=bound)

    for i, i2 in product(letters, repeat=2):
        report.record(
            phi(i, i2, (0,) * n) == anchor_constants(datum, coords, i, bound=bound),
            condition=1, word=list(i), other=list(i2),
        )

    for i, i2, i3 in product(letters, repeat=3):
        for t in cones[i2]:
            value = phi(i, i2, t)
            via_lusztig = transition_lusztig(datum, i3, i, phi(i3, i2, t))
            via_string = phi(i, i3, transition_string(datum, i2, i3, t))
            report.record(
                value == via_lusztig == via_string,
                condition=2, words=[list(i), list(i2), list(i3)], t=list(t),
                value=list(value), via_lusztig=list(via_lusztig), via_string=list(via_string),
            )

    for i in letters:
        for t in cones[i]:
            base = phi(i, i, t)
            for shift in (1, 2, 5):
                moved = (t[0] + shift,) + t[1:]
                out = phi(i, i, moved)
                ok = out[1:] == base[1:] and out[0] + moved[0] == base[0] + t[0]
                report.record(ok, condition=3, word=list(i), t=list(t), shift=shift)

    report.details = {"words": [list(w) for w in letters], "lambda": list(coords)}
    logger.info(f"{report.name}: {report.checks} checks, passed={report.passed}")
    return report
