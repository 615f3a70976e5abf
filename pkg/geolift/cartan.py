"""
Root-system and Weyl-group combinatorics.

Weights are integer vectors in the fundamental-weight basis, roots are integer
vectors in the simple-root basis, and every index is 1-based. With the
convention ``a_ij = <alpha_j, alpha_i^vee>`` the simple root ``alpha_j`` has
fundamental-weight coordinates given by column ``j`` of the Cartan matrix, and

    s_i(lambda) = lambda - lambda_i * alpha_i
    s_i(beta)   = beta - <beta, alpha_i^vee> * alpha_i,  <beta, alpha_i^vee> = (A beta)_i
"""

import logging
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from .exceptions import (
    IndexOutOfRange,
    InvalidType,
    NotDominant,
    NotReduced,
    NotSameElement,
    PathSearchExhausted,
)
from .models import BraidMove, CartanDatum, Weight, WeylElement, Word

logger = logging.getLogger(__name__)

WordLike = Union[Word, Sequence[int]]
WeightLike = Union[Weight, Sequence[int]]
Root = Tuple[int, ...]

# Desk-scale bound for braid searches: A4 has 768 reduced words of w0,
# D4 has 2316, B3 has 42.
DEFAULT_MAX_NODES = 50_000

# a_ij * a_ji -> (move kind, braid length m_ij)
RANK2_KINDS: Dict[int, Tuple[str, int]] = {
    0: ("commuting", 2),
    1: ("A2", 3),
    2: ("B2", 4),
    3: ("G2", 6),
}

_E_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]


def _chain(rank: int) -> List[List[int]]:
    a = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = 2
        if i + 1 < rank:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


def standard_matrix(series: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    """Standard Cartan matrix of (series, rank) with a_ij = <alpha_j, alpha_i^vee>"""
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if not valid.get(series, False):
        raise InvalidType(f"{series}{rank} is not a finite Cartan type")

    if series in ("A", "B", "C", "F"):
        a = _chain(rank)
        if series == "B":
            # alpha_n short
            a[rank - 1][rank - 2] = -2
        elif series == "C":
            # alpha_n long
            a[rank - 2][rank - 1] = -2
        elif series == "F":
            # alpha_1, alpha_2 long; alpha_3, alpha_4 short
            a[2][1] = -2
    elif series == "D":
        a = _chain(rank - 1) + [[0] * (rank - 1)]
        for row in a:
            row.append(0)
        a[rank - 1][rank - 1] = 2
        a[rank - 2][rank - 3] = a[rank - 3][rank - 2] = -1
        # last node hangs off n-2, not n-1
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        a[rank - 1][rank - 3] = a[rank - 3][rank - 1] = -1
    elif series == "E":
        a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for i, j in _E_EDGES:
            if i <= rank and j <= rank:
                a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    else:
        # G2 with alpha_1 long
        a = [[2, -1], [-3, 2]]
    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def build_cartan(series: str, rank: int) -> CartanDatum:
    """Standard Cartan datum for (series, rank); InvalidType if there is none"""
    series = series.upper()
    return CartanDatum(series=series, rank=rank, matrix=standard_matrix(series, rank))


def langlands_dual(datum: CartanDatum) -> CartanDatum:
    """Datum with the transposed Cartan matrix (B <-> C, others keep their letter)"""
    series = {"B": "C", "C": "B"}.get(datum.series, datum.series)
    matrix = tuple(tuple(row) for row in zip(*datum.matrix))
    return CartanDatum(series=series, rank=datum.rank, matrix=matrix)


def letters_of(word: WordLike) -> Tuple[int, ...]:
    if isinstance(word, Word):
        return word.letters
    return tuple(int(i) for i in word)


def coords_of(weight: WeightLike) -> Tuple[int, ...]:
    if isinstance(weight, Weight):
        return weight.coords
    return tuple(int(c) for c in weight)


def dominant_coords(weight: WeightLike) -> Tuple[int, ...]:
    """Coordinates of a dominant weight; NotDominant otherwise"""
    w = weight if isinstance(weight, Weight) else Weight(coords=coords_of(weight))
    if not w.dominant:
        raise NotDominant(f"{list(w.coords)} is not dominant")
    return w.coords


def _check_letters(datum: CartanDatum, letters: Sequence[int]) -> None:
    for i in letters:
        if not 1 <= i <= datum.rank:
            raise IndexOutOfRange(f"index {i} outside 1..{datum.rank} for {datum.name}")


def _array(datum: CartanDatum) -> np.ndarray:
    return np.array(datum.matrix, dtype=np.int64)


def simple_reflection(datum: CartanDatum, i: int) -> np.ndarray:
    """Matrix of s_i acting on fundamental-weight coordinates"""
    _check_letters(datum, [i])
    s = np.eye(datum.rank, dtype=np.int64)
    s[:, i - 1] -= _array(datum)[:, i - 1]
    return s


def weyl_element(datum: CartanDatum, word: WordLike) -> WeylElement:
    letters = letters_of(word)
    _check_letters(datum, letters)
    m = np.eye(datum.rank, dtype=np.int64)
    for i in letters:
        m = m @ simple_reflection(datum, i)
    return WeylElement(action=tuple(tuple(int(x) for x in row) for row in m))


def weyl_action(datum: CartanDatum, word: WordLike, weight: WeightLike) -> Weight:
    """s_{i_1} ... s_{i_m}(lambda); the empty word acts as the identity"""
    coords = coords_of(weight)
    if len(coords) != datum.rank:
        raise IndexOutOfRange(f"weight has {len(coords)} coordinates, expected {datum.rank}")
    action = np.array(weyl_element(datum, word).action, dtype=np.int64)
    return Weight(coords=tuple(int(x) for x in action @ np.array(coords, dtype=np.int64)))


def reflect_root(datum: CartanDatum, i: int, root: Sequence[int]) -> Root:
    beta = np.array(root, dtype=np.int64)
    beta[i - 1] -= int(_array(datum)[i - 1] @ beta)
    return tuple(int(x) for x in beta)


def apply_word_to_root(datum: CartanDatum, word: WordLike, root: Sequence[int]) -> Root:
    letters = letters_of(word)
    _check_letters(datum, letters)
    beta = tuple(root)
    for i in reversed(letters):
        beta = reflect_root(datum, i, beta)
    return beta


def simple_root(datum: CartanDatum, i: int) -> Root:
    return tuple(1 if k == i else 0 for k in range(1, datum.rank + 1))


def _is_positive(root: Sequence[int]) -> bool:
    return all(c >= 0 for c in root) and any(c > 0 for c in root)


@lru_cache(maxsize=None)
def positive_roots(datum: CartanDatum) -> Tuple[Root, ...]:
    """Positive roots in simple-root coordinates, as the Weyl orbit of the simple roots"""
    seen = set()
    queue = deque(simple_root(datum, i) for i in range(1, datum.rank + 1))
    while queue:
        beta = queue.popleft()
        if beta in seen:
            continue
        seen.add(beta)
        for i in range(1, datum.rank + 1):
            gamma = reflect_root(datum, i, beta)
            if gamma not in seen:
                queue.append(gamma)
    roots = [beta for beta in seen if _is_positive(beta)]
    return tuple(sorted(roots, key=lambda b: (sum(b), b)))


def weyl_length(datum: CartanDatum, word: WordLike) -> int:
    """Number of positive roots sent negative by the element of the word"""
    letters = letters_of(word)
    return sum(
        1 for beta in positive_roots(datum)
        if not _is_positive(apply_word_to_root(datum, letters, beta))
    )


def is_reduced(datum: CartanDatum, word: WordLike) -> bool:
    letters = letters_of(word)
    return weyl_length(datum, letters) == len(letters)


@lru_cache(maxsize=4096)
def _is_longest(datum: CartanDatum, letters: Tuple[int, ...]) -> bool:
    return len(letters) == len(positive_roots(datum)) and is_reduced(datum, letters)


def is_longest(datum: CartanDatum, word: WordLike) -> bool:
    return _is_longest(datum, letters_of(word))


def require_longest(datum: CartanDatum, word: WordLike) -> Tuple[int, ...]:
    letters = letters_of(word)
    _check_letters(datum, letters)
    if not is_longest(datum, letters):
        raise NotReduced(f"{list(letters)} is not a reduced word of w0 in {datum.name}")
    return letters


@lru_cache(maxsize=None)
def longest_word(datum: CartanDatum) -> Word:
    """Reduced word of w0 by greedy ascent: append the first i with w(alpha_i) > 0"""
    letters: Tuple[int, ...] = ()
    while True:
        for i in range(1, datum.rank + 1):
            if _is_positive(apply_word_to_root(datum, letters, simple_root(datum, i))):
                letters += (i,)
                break
        else:
            break
    return Word(letters=letters, reduced=True, longest=True)


def rank2_kind(datum: CartanDatum, i: int, j: int) -> Tuple[str, int]:
    """Move kind and braid length m_ij for the pair of distinct nodes (i, j)"""
    product = datum.a(i, j) * datum.a(j, i)
    if product not in RANK2_KINDS:
        raise InvalidType(f"a_ij * a_ji = {product} is not of finite type")
    return RANK2_KINDS[product]


def _alternating(i: int, j: int, m: int) -> Tuple[int, ...]:
    return tuple(i if k % 2 == 0 else j for k in range(m))


def braid_neighbors(datum: CartanDatum, word: WordLike) -> Iterator[Tuple[BraidMove, Tuple[int, ...]]]:
    """Every elementary braid move applicable to the word, left to right"""
    letters = letters_of(word)
    for p in range(len(letters) - 1):
        i, j = letters[p], letters[p + 1]
        if i == j:
            continue
        kind, m = rank2_kind(datum, i, j)
        before = _alternating(i, j, m)
        if letters[p:p + m] != before:
            continue
        after = _alternating(j, i, m)
        move = BraidMove(position=p + 1, kind=kind, length=m, before=before, after=after)
        yield move, letters[:p] + after + letters[p + m:]


def apply_move(word: WordLike, move: BraidMove) -> Tuple[int, ...]:
    letters = letters_of(word)
    p = move.position - 1
    if letters[p:p + move.length] != move.before:
        raise NotSameElement(f"move {move.before}->{move.after} does not apply at {move.position}")
    return letters[:p] + move.after + letters[p + move.length:]


def same_element(datum: CartanDatum, word: WordLike, other: WordLike) -> bool:
    return weyl_element(datum, word) == weyl_element(datum, other)


@lru_cache(maxsize=4096)
def _braid_path(datum: CartanDatum, source: Tuple[int, ...], target: Tuple[int, ...],
                max_nodes: int) -> Tuple[BraidMove, ...]:
    parents: Dict[Tuple[int, ...], Optional[Tuple[Tuple[int, ...], BraidMove]]] = {source: None}
    queue = deque([source])
    while queue:
        current = queue.popleft()
        if current == target:
            break
        neighbors = sorted(braid_neighbors(datum, current), key=lambda mv: mv[1])
        for move, nxt in neighbors:
            if nxt in parents:
                continue
            parents[nxt] = (current, move)
            if len(parents) > max_nodes:
                raise PathSearchExhausted(
                    f"braid search from {list(source)} exceeded {max_nodes} words",
                    visited=len(parents),
                )
            queue.append(nxt)
    if target not in parents:
        raise NotSameElement(f"{list(target)} is not braid-connected to {list(source)}")
    path: List[BraidMove] = []
    node = target
    while parents[node] is not None:
        node, move = parents[node]
        path.append(move)
    path.reverse()
    logger.debug(f"braid path {list(source)} -> {list(target)}: {len(path)} moves, {len(parents)} words seen")
    return tuple(path)


def braid_path(datum: CartanDatum, word: WordLike, other: WordLike,
               max_nodes: int = DEFAULT_MAX_NODES) -> List[BraidMove]:
    """
    Shortest sequence of elementary braid moves turning ``word`` into ``other``.

    Breadth-first over the reduced-word graph, neighbors visited in lexicographic
    order of the resulting word.
    """
    source, target = letters_of(word), letters_of(other)
    _check_letters(datum, source + target)
    for w in (source, target):
        if not is_reduced(datum, w):
            raise NotReduced(f"{list(w)} is not reduced in {datum.name}")
    if len(source) != len(target) or not same_element(datum, source, target):
        raise NotSameElement(f"{list(source)} and {list(target)} are different Weyl group elements")
    return list(_braid_path(datum, source, target, max_nodes))


@lru_cache(maxsize=256)
def _reduced_words(datum: CartanDatum, letters: Tuple[int, ...], max_nodes: int) -> Tuple[Tuple[int, ...], ...]:
    seen = {letters}
    queue = deque([letters])
    while queue:
        current = queue.popleft()
        for _, nxt in braid_neighbors(datum, current):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_nodes:
                    raise PathSearchExhausted(
                        f"more than {max_nodes} reduced words for {list(letters)}", visited=len(seen)
                    )
                queue.append(nxt)
    return tuple(sorted(seen))


def reduced_words(datum: CartanDatum, word: WordLike, max_nodes: int = DEFAULT_MAX_NODES) -> List[Tuple[int, ...]]:
    """All reduced words of the element of ``word`` (Tits: braid moves connect them)"""
    letters = letters_of(word)
    _check_letters(datum, letters)
    if not is_reduced(datum, letters):
        raise NotReduced(f"{list(letters)} is not reduced in {datum.name}")
    return list(_reduced_words(datum, letters, max_nodes))


@lru_cache(maxsize=None)
def _star_table(datum: CartanDatum) -> Tuple[int, ...]:
    w0 = longest_word(datum).letters
    table = []
    for i in range(1, datum.rank + 1):
        image = apply_word_to_root(datum, w0, simple_root(datum, i))
        table.append(image.index(-1) + 1)
    return tuple(table)


def star(datum: CartanDatum, i: int) -> int:
    """The index i* with w0(alpha_i) = -alpha_{i*}"""
    _check_letters(datum, [i])
    return _star_table(datum)[i - 1]


def star_word(datum: CartanDatum, word: WordLike) -> Tuple[int, ...]:
    letters = letters_of(word)
    _check_letters(datum, letters)
    table = _star_table(datum)
    return tuple(table[i - 1] for i in letters)


def w0_action(datum: CartanDatum, weight: WeightLike) -> Weight:
    return weyl_action(datum, longest_word(datum), weight)


def lambda_omega(datum: CartanDatum, weight: WeightLike) -> Weight:
    """-w0(lambda) for dominant lambda"""
    coords = dominant_coords(weight)
    image = w0_action(datum, coords)
    return Weight(coords=tuple(-c for c in image.coords))


def roots_along_word(datum: CartanDatum, word: WordLike) -> List[Root]:
    """beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) in simple-root coordinates"""
    letters = letters_of(word)
    _check_letters(datum, letters)
    if not is_reduced(datum, letters):
        raise NotReduced(f"{list(letters)} is not reduced in {datum.name}")
    return [
        apply_word_to_root(datum, letters[:k], simple_root(datum, letters[k]))
        for k in range(len(letters))
    ]


def root_to_weight(datum: CartanDatum, root: Sequence[int]) -> Tuple[int, ...]:
    """Fundamental-weight coordinates of a vector given in the simple-root basis"""
    return tuple(int(x) for x in _array(datum) @ np.array(root, dtype=np.int64))


def weyl_dimension(datum: CartanDatum, weight: WeightLike) -> int:
    """dim V(lambda) = prod over positive coroots of <lambda + rho, b> / <rho, b>"""
    coords = dominant_coords(weight)
    dim = Fraction(1)
    for coroot in positive_roots(langlands_dual(datum)):
        dim *= Fraction(sum(c * (x + 1) for c, x in zip(coroot, coords)), sum(coroot))
    return int(dim)
