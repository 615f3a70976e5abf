"""
Kashiwara operators on tableaux and the crystal B(lambda) in type A_n.

Operators use the bracketing rule on the reading word: each i+1 opens a
bracket, each i closes the nearest open one. What is left unpaired reads
i...i (i+1)...(i+1); f_i changes the rightmost unpaired i to i+1 and e_i the
leftmost unpaired i+1 to i.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..cartan import build_cartan, dominant_coords, letters_of, require_longest, WordLike
from ..exceptions import IndexOutOfRange, NotUnique, ResidueNotHighest, SizeBound
from ..models import StringParam
from .tableau import (
    Tableau,
    highest_weight_tableau,
    reading_cells,
    reading_word,
    replace_entry,
    weight_of_shape,
)

logger = logging.getLogger(__name__)

DEFAULT_BOUND = 100_000


def _unpaired(tableau: Tableau, i: int) -> Tuple[List[int], List[int]]:
    """Reading-word positions of the unpaired i and unpaired i+1"""
    if not 1 <= i <= tableau.rank:
        raise IndexOutOfRange(f"index {i} outside 1..{tableau.rank}")
    lows: List[int] = []
    opens: List[int] = []
    for k, x in enumerate(reading_word(tableau)):
        if x == i + 1:
            opens.append(k)
        elif x == i:
            if opens:
                opens.pop()
            else:
                lows.append(k)
    return lows, opens


def eps(tableau: Tableau, i: int) -> int:
    """epsilon_i: how many times e_i applies"""
    return len(_unpaired(tableau, i)[1])


def phi_value(tableau: Tableau, i: int) -> int:
    """phi_i: how many times f_i applies"""
    return len(_unpaired(tableau, i)[0])


def apply_f(tableau: Tableau, i: int) -> Optional[Tableau]:
    lows, _ = _unpaired(tableau, i)
    if not lows:
        return None
    return replace_entry(tableau, reading_cells(tableau)[lows[-1]], i + 1)


def apply_e(tableau: Tableau, i: int) -> Optional[Tableau]:
    _, opens = _unpaired(tableau, i)
    if not opens:
        return None
    return replace_entry(tableau, reading_cells(tableau)[opens[0]], i)


@dataclass(frozen=True)
class CrystalGraph:
    """B(lambda) with f_i edges (source, i, target); vertices in discovery order"""
    rank: int
    weight: Tuple[int, ...]
    vertices: Tuple[Tableau, ...]
    edges: Tuple[Tuple[Tableau, int, Tableau], ...]
    _index: Dict[Tableau, int] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        self._index.update({b: k for k, b in enumerate(self.vertices)})

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, b: Tableau) -> bool:
        return b in self._index

    def index(self, b: Tableau) -> int:
        return self._index[b]

    @property
    def highest(self) -> Tableau:
        return self.vertices[0]


@lru_cache(maxsize=64)
def _generate(rank: int, weight: Tuple[int, ...], bound: int) -> CrystalGraph:
    top = highest_weight_tableau(rank, weight)
    seen = {top}
    order = [top]
    edges = []
    queue = deque([top])
    while queue:
        b = queue.popleft()
        for i in range(1, rank + 1):
            target = apply_f(b, i)
            if target is None:
                continue
            edges.append((b, i, target))
            if target not in seen:
                seen.add(target)
                order.append(target)
                if len(order) > bound:
                    raise SizeBound(f"B({list(weight)}) in A{rank} has more than {bound} elements", bound=bound)
                queue.append(target)
    logger.debug(f"generated B({list(weight)}) in A{rank}: {len(order)} vertices, {len(edges)} edges")
    return CrystalGraph(rank=rank, weight=weight, vertices=tuple(order), edges=tuple(edges))


def generate_crystal(rank: int, weight: Sequence[int], bound: int = DEFAULT_BOUND) -> CrystalGraph:
    """Closure of the highest-weight tableau under every f_i"""
    weight = tuple(int(c) for c in weight)
    if len(weight) != rank:
        raise IndexOutOfRange(f"weight has {len(weight)} coordinates, expected {rank}")
    return _generate(rank, dominant_coords(weight), bound)


def lowest_element(graph: CrystalGraph) -> Tableau:
    """The unique vertex on which every f_i is undefined"""
    sinks = [b for b in graph.vertices if all(apply_f(b, i) is None for i in range(1, graph.rank + 1))]
    if len(sinks) != 1:
        raise NotUnique(f"expected one lowest element, found {len(sinks)}")
    return sinks[0]


def string_extract(tableau: Tableau, word: WordLike) -> StringParam:
    """
    String data: t_1 = eps_{i_1}(b), continue from e_{i_1}^{t_1} b with the rest
    of the word. The residue must be the highest-weight tableau.
    """
    letters = require_longest(build_cartan("A", tableau.rank), letters_of(word))
    b = tableau
    t = []
    for i in letters:
        k = eps(b, i)
        for _ in range(k):
            b = apply_e(b, i)
        t.append(k)
    lam = weight_of_shape(tableau.shape, tableau.rank)
    if b != highest_weight_tableau(tableau.rank, lam):
        raise ResidueNotHighest(f"string extraction of {tableau} along {list(letters)} ended at {b}")
    return StringParam(word=letters, t=tuple(t), weight=lam)


def crystal_to_dot(graph: CrystalGraph, name: str = "crystal") -> str:
    """Graphviz digraph with tableaux as node labels and i as edge labels"""
    lines = [f"digraph {name} {{"]
    for k, b in enumerate(graph.vertices):
        lines.append(f'  n{k} [label="{b}"];')
    for source, i, target in graph.edges:
        lines.append(f'  n{graph.index(source)} -> n{graph.index(target)} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
