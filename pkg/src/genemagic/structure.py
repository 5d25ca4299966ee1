"""Positional letter permutations, Latin-square checks, and XOR letter grids."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .encoding import LETTERS, xor_reduce
from .errors import ShapeError
from .tables import Grid

HALF_NAMES = {
    "half_row": ("left", "right"),
    "half_column": ("top", "bottom"),
    "half_diagonal": ("first", "second"),
}


@dataclass(frozen=True)
class Region:
    """A named group of cell positions inside an N x N grid.

    Kinds and their index parameters (all 0-based):

    * ``row`` / ``column``: (i,)
    * ``main_diagonal`` / ``anti_diagonal``: ()
    * ``block``: (k, bi, bj) for the k x k block at block row bi, column bj
    * ``half_row`` / ``half_column``: (i, half) with half 0 or 1
    * ``half_diagonal``: (d, half) with d 0 for main, 1 for anti
    """

    kind: str
    index: tuple[int, ...] = ()

    def cells(self, side: int) -> tuple[tuple[int, int], ...]:
        """The (row, col) positions this region covers in a grid of that side."""
        kind, idx = self.kind, self.index
        if kind == "row":
            return tuple((idx[0], j) for j in range(side))
        if kind == "column":
            return tuple((i, idx[0]) for i in range(side))
        if kind == "main_diagonal":
            return tuple((i, i) for i in range(side))
        if kind == "anti_diagonal":
            return tuple((i, side - 1 - i) for i in range(side))
        if kind == "block":
            k, bi, bj = idx
            if side % k:
                raise ShapeError(f"block size {k} does not divide side {side}")
            return tuple(
                (bi * k + di, bj * k + dj) for di in range(k) for dj in range(k)
            )
        if kind in ("half_row", "half_column", "half_diagonal"):
            if side % 2:
                raise ShapeError(f"half regions need an even side, got {side}")
            which, half = idx
            span = range(half * side // 2, (half + 1) * side // 2)
            if kind == "half_row":
                return tuple((which, j) for j in span)
            if kind == "half_column":
                return tuple((i, which) for i in span)
            if which == 0:
                return tuple((i, i) for i in span)
            return tuple((i, side - 1 - i) for i in span)
        raise ShapeError(f"unknown region kind {self.kind!r}")

    @property
    def label(self) -> str:
        kind, idx = self.kind, self.index
        if kind in ("row", "column"):
            return f"{kind} {idx[0] + 1}"
        if kind in ("main_diagonal", "anti_diagonal"):
            return kind.replace("_", " ")
        if kind == "block":
            k, bi, bj = idx
            return f"block {k}x{k} ({bi + 1},{bj + 1})"
        half = HALF_NAMES[kind][idx[1]]
        if kind == "half_diagonal":
            return f"half {'main' if idx[0] == 0 else 'anti'} diagonal ({half})"
        return f"half {kind.split('_')[1]} {idx[0] + 1} ({half})"


def rows(side: int) -> list[Region]:
    return [Region("row", (i,)) for i in range(side)]


def columns(side: int) -> list[Region]:
    return [Region("column", (j,)) for j in range(side)]


def diagonals() -> list[Region]:
    return [Region("main_diagonal"), Region("anti_diagonal")]


def blocks(side: int, k: int) -> list[Region]:
    if k <= 0 or side % k:
        raise ShapeError(f"block size {k} does not divide side {side}")
    per = side // k
    return [Region("block", (k, bi, bj)) for bi in range(per) for bj in range(per)]


def half_rows(side: int) -> list[Region]:
    return [Region("half_row", (i, h)) for i in range(side) for h in (0, 1)]


def half_columns(side: int) -> list[Region]:
    return [Region("half_column", (j, h)) for j in range(side) for h in (0, 1)]


def half_diagonals() -> list[Region]:
    return [Region("half_diagonal", (d, h)) for d in (0, 1) for h in (0, 1)]


def standard_regions(side: int) -> list[Region]:
    """Rows, columns, both diagonals, aligned 2x2 and 4x4 blocks, half lines.

    Half lines join the set only when they can hold whole letter groups,
    i.e. when half a side is a multiple of 4.
    """
    regions = rows(side) + columns(side) + diagonals()
    for k in (2, 4):
        if k < side and side % k == 0:
            regions += blocks(side, k)
    if side % 8 == 0:
        regions += half_rows(side) + half_columns(side) + half_diagonals()
    return regions


def place_letters(grid: Grid, place: int) -> tuple[tuple[str, ...], ...]:
    """Project every cell to the letter at 1-based position ``place``."""
    if not 1 <= place <= grid.word_len:
        raise ShapeError(f"place {place} out of range 1..{grid.word_len}")
    return tuple(tuple(word[place - 1] for word in row) for row in grid.cells)


def place_permutation_report(
    grid: Grid, place: int, regions: Sequence[Region]
) -> dict[Region, bool]:
    """Per-region verdicts for uniform letter distribution at one place.

    A region of size 4 passes when its projected letters are a permutation
    of C, A, T, G; larger regions pass when each letter occurs size/4 times.
    """
    letters = place_letters(grid, place)
    report = {}
    for region in regions:
        cells = region.cells(grid.side)
        if len(cells) % 4:
            raise ShapeError(
                f"region {region.label!r} has size {len(cells)}, not a multiple of 4"
            )
        per_letter = len(cells) // 4
        seen = [letters[i][j] for i, j in cells]
        report[region] = all(seen.count(c) == per_letter for c in LETTERS)
    return report


class LatinVerdict(NamedTuple):
    latin: bool
    diagonal_latin: bool


def latin_square_check(array: Sequence[Sequence[object]]) -> LatinVerdict:
    """Check rows/columns (and both diagonals) for one-of-each-symbol."""
    side = len(array)
    if any(len(row) != side for row in array):
        raise ShapeError("array is not square")
    alphabet = {sym for row in array for sym in row}
    if len(alphabet) > side:
        raise ShapeError(
            f"{len(alphabet)} distinct symbols cannot form a Latin square of side {side}"
        )
    lines = [tuple(row) for row in array]
    lines += [tuple(row[j] for row in array) for j in range(side)]
    latin = all(len(set(line)) == side for line in lines)
    main = {array[i][i] for i in range(side)}
    anti = {array[i][side - 1 - i] for i in range(side)}
    return LatinVerdict(latin, latin and len(main) == side and len(anti) == side)


def orthogonality_check(
    a: Sequence[Sequence[object]], b: Sequence[Sequence[object]]
) -> bool:
    """True when superimposing the arrays yields all distinct ordered pairs."""
    if len(a) != len(b) or any(len(ra) != len(rb) for ra, rb in zip(a, b)):
        raise ShapeError("arrays differ in shape")
    pairs = [(x, y) for ra, rb in zip(a, b) for x, y in zip(ra, rb)]
    return len(set(pairs)) == len(pairs)


#: XOR values 000..111 rendered as letters for 8x8 letter grids.
XOR_LETTERS = "abcdefgh"


def xor_letter_grid(grid: Grid):
    """Per-cell XOR reduction: letters a..h for n=3, values 0..3 for n=2."""
    n = grid.word_len
    if n not in (2, 3):
        raise ShapeError(f"xor letter grid is defined for word length 2 or 3, got {n}")
    values = tuple(
        tuple(int(xor_reduce(word), 2) for word in row) for row in grid.cells
    )
    if n == 2:
        return values
    return tuple(tuple(XOR_LETTERS[v] for v in row) for row in values)
