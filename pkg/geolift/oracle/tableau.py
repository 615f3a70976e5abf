"""Semistandard tableaux for type A_n: entries 1..n+1, English notation"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..cartan import dominant_coords
from ..exceptions import OracleError

Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class Tableau:
    """Rows weakly increase left to right, columns strictly increase top to bottom"""
    rank: int
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows if row)
        object.__setattr__(self, "rows", rows)
        top = self.rank + 1
        for r, row in enumerate(rows):
            if r and len(row) > len(rows[r - 1]):
                raise OracleError(f"row {r + 1} is longer than the row above it")
            for c, x in enumerate(row):
                if not 1 <= x <= top:
                    raise OracleError(f"entry {x} outside 1..{top}")
                if c and row[c - 1] > x:
                    raise OracleError(f"row {r + 1} decreases at column {c + 1}")
                if r and rows[r - 1][c] >= x:
                    raise OracleError(f"column {c + 1} does not strictly increase at row {r + 1}")

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def __str__(self) -> str:
        return "/".join("".join(str(x) if x < 10 else f"[{x}]" for x in row) for row in self.rows)

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self.rows]


def shape_from_weight(weight: Sequence[int]) -> Tuple[int, ...]:
    """Row r has sum_{i >= r} c_i boxes for lambda = sum c_i varpi_i"""
    weight = dominant_coords(weight)
    shape = tuple(sum(weight[r:]) for r in range(len(weight)))
    return tuple(s for s in shape if s)


def weight_of_shape(shape: Sequence[int], rank: int) -> Tuple[int, ...]:
    padded = list(shape) + [0] * (rank + 1 - len(shape))
    return tuple(padded[r] - padded[r + 1] for r in range(rank))


def highest_weight_tableau(rank: int, weight: Sequence[int]) -> Tableau:
    """Row r filled with r"""
    shape = shape_from_weight(weight)
    return Tableau(rank, tuple((r + 1,) * length for r, length in enumerate(shape)))


def reading_word(tableau: Tableau) -> Tuple[int, ...]:
    """Rows bottom to top, each left to right"""
    return tuple(x for row in reversed(tableau.rows) for x in row)


def reading_cells(tableau: Tableau) -> List[Tuple[int, int]]:
    return [(r, c) for r in reversed(range(len(tableau.rows))) for c in range(len(tableau.rows[r]))]


def content(tableau: Tableau) -> Tuple[int, ...]:
    counts = [0] * (tableau.rank + 1)
    for row in tableau.rows:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


def weight(tableau: Tableau) -> Tuple[int, ...]:
    """Fundamental-weight coordinates: content_i - content_{i+1}"""
    c = content(tableau)
    return tuple(c[i] - c[i + 1] for i in range(tableau.rank))


def replace_entry(tableau: Tableau, cell: Tuple[int, int], value: int) -> Tableau:
    r, c = cell
    rows = [list(row) for row in tableau.rows]
    rows[r][c] = value
    return Tableau(tableau.rank, tuple(tuple(row) for row in rows))


# --- jeu de taquin and insertion ---------------------------------------------


def _inner_corner(grid: List[List[Optional[int]]]) -> Optional[Tuple[int, int]]:
    for r in reversed(range(len(grid))):
        holes = [c for c, x in enumerate(grid[r]) if x is None]
        if holes:
            return r, holes[-1]
    return None


def _slide(grid: List[List[Optional[int]]], r: int, c: int) -> None:
    while True:
        below = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
        if below is None and right is None:
            break
        # ties slide up from below to keep columns strict
        if right is None or (below is not None and below <= right):
            grid[r][c] = below
            r += 1
        else:
            grid[r][c] = right
            c += 1
        grid[r][c] = None
    grid[r].pop(c)


def rectify(skew: Sequence[Sequence[Optional[int]]], rank: int) -> Tableau:
    """
    Rectification by jeu de taquin. ``skew`` lists rows with None for the cells
    of the inner shape; inner holes must sit left of the filled cells.
    """
    grid = [list(row) for row in skew]
    while True:
        corner = _inner_corner(grid)
        if corner is None:
            break
        _slide(grid, *corner)
    return Tableau(rank, tuple(tuple(row) for row in grid if row))


def insertion_tableau(word: Sequence[int], rank: int) -> Tableau:
    """P-symbol of row insertion"""
    rows: List[List[int]] = []
    for x in word:
        for row in rows:
            bumped = next((k for k, y in enumerate(row) if y > x), None)
            if bumped is None:
                row.append(x)
                break
            row[bumped], x = x, row[bumped]
        else:
            rows.append([x])
    return Tableau(rank, tuple(tuple(row) for row in rows))


def _complement(tableau: Tableau, x: int) -> int:
    return tableau.rank + 2 - x


def evacuation(tableau: Tableau) -> Tableau:
    """Rotate by 180 degrees, complement x -> n+2-x, rectify"""
    if not tableau.rows:
        return tableau
    width = len(tableau.rows[0])
    skew = [
        [None] * (width - len(row)) + [_complement(tableau, x) for x in reversed(row)]
        for row in reversed(tableau.rows)
    ]
    return rectify(skew, tableau.rank)


def evacuation_by_insertion(tableau: Tableau) -> Tableau:
    """Insertion tableau of the reversed, complemented reading word"""
    word = [_complement(tableau, x) for x in reversed(reading_word(tableau))]
    return insertion_tableau(word, tableau.rank)
