"""Exact S1/S2 verification of grids rendered under a notation.

All sums are exact Python integers; the largest value handled here
(897867554657688 for the 16x16 BIN square sum) is well inside native
int range and is asserted exactly by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .encoding import Notation, encode
from .errors import ShapeError
from .structure import Region, half_columns, half_diagonals, half_rows
from .tables import Grid

#: The prime whose divisibility the reports track.
DIVISOR = 37


@dataclass(frozen=True)
class NumericGrid:
    """A grid rendered to exact integers under one notation."""

    values: tuple[tuple[int, ...], ...]
    notation: Notation
    source: str | None = None

    @property
    def side(self) -> int:
        return len(self.values)


def numeric_grid(grid: Grid, notation: Notation) -> NumericGrid:
    values = tuple(
        tuple(encode(word, notation) for word in row) for row in grid.cells
    )
    return NumericGrid(values, notation, grid.name)


@dataclass(frozen=True)
class BlockSums:
    total: int
    square_total: int
    magic_subsquare: bool | None = None


@dataclass(frozen=True)
class MagicReport:
    grid_name: str | None
    notation: Notation
    side: int
    s1_rows: tuple[int, ...]
    s1_cols: tuple[int, ...]
    s1_diags: tuple[int, int]
    s2_rows: tuple[int, ...]
    s2_cols: tuple[int, ...]
    s2_diags: tuple[int, int]
    magic: bool
    column_bimagic: bool
    bimagic: bool
    s1: int | None
    s2: int | None
    block_sums: dict[int, dict[tuple[int, int], BlockSums]]
    half_line_sums: dict[Region, int]
    divisibility: tuple[tuple[int, int], ...]


def _line_sums(values, side):
    rows = tuple(sum(row) for row in values)
    cols = tuple(sum(values[i][j] for i in range(side)) for j in range(side))
    diags = (
        sum(values[i][i] for i in range(side)),
        sum(values[i][side - 1 - i] for i in range(side)),
    )
    return rows, cols, diags


def _constant(*sums: tuple[int, ...]) -> int | None:
    flat = {v for group in sums for v in group}
    return flat.pop() if len(flat) == 1 else None


def analyze(grid: Grid, notation: Notation) -> MagicReport:
    """Full exact magic/bimagic report of a grid under one notation."""
    side = grid.side
    values = numeric_grid(grid, notation).values
    squares = tuple(tuple(v * v for v in row) for row in values)
    s1_rows, s1_cols, s1_diags = _line_sums(values, side)
    s2_rows, s2_cols, s2_diags = _line_sums(squares, side)

    s1 = _constant(s1_rows, s1_cols, s1_diags)
    magic = s1 is not None
    bimagic = magic and _constant(s2_rows, s2_cols, s2_diags) is not None
    column_bimagic = magic and _constant(s2_cols) is not None
    if s1 is None:
        s1 = _constant(s1_rows)
    s2 = _constant(s2_rows, s2_cols, s2_diags)
    if s2 is None:
        s2 = _constant(s2_cols)

    block_sums = {
        k: block_report(grid, notation, k)
        for k in (2, 4)
        if k < side and side % k == 0
    }
    half_line_sums: dict[Region, int] = {}
    if side % 2 == 0 and side > 1:
        for region in half_rows(side) + half_columns(side) + half_diagonals():
            half_line_sums[region] = sum(values[i][j] for i, j in region.cells(side))

    report = MagicReport(
        grid_name=grid.name,
        notation=notation,
        side=side,
        s1_rows=s1_rows,
        s1_cols=s1_cols,
        s1_diags=s1_diags,
        s2_rows=s2_rows,
        s2_cols=s2_cols,
        s2_diags=s2_diags,
        magic=magic,
        column_bimagic=column_bimagic,
        bimagic=bimagic,
        s1=s1,
        s2=s2,
        block_sums=block_sums,
        half_line_sums=half_line_sums,
        divisibility=(),
    )
    return replace(report, divisibility=divisibility_facts(report))


def block_report(
    grid: Grid, notation: Notation, k: int
) -> dict[tuple[int, int], BlockSums]:
    """Sum and square-sum of every aligned k x k block, keyed by block position.

    For k >= 3 each block is additionally checked for being a magic square
    on its own rows, columns, and diagonals.
    """
    side = grid.side
    if k <= 0 or side % k:
        raise ShapeError(f"block size {k} does not divide side {side}")
    values = numeric_grid(grid, notation).values
    report = {}
    for bi in range(side // k):
        for bj in range(side // k):
            block = [
                [values[bi * k + di][bj * k + dj] for dj in range(k)]
                for di in range(k)
            ]
            total = sum(sum(row) for row in block)
            square_total = sum(v * v for row in block for v in row)
            verdict = None
            if k >= 3:
                rows, cols, diags = _line_sums(block, k)
                verdict = _constant(rows, cols, diags) is not None
            report[(bi, bj)] = BlockSums(total, square_total, verdict)
    return report


def rect_block_report(
    grid: Grid, notation: Notation, rows: int, cols: int
) -> dict[tuple[int, int], BlockSums]:
    """Sum and square-sum of every aligned rows x cols block."""
    side = grid.side
    if rows <= 0 or cols <= 0 or side % rows or side % cols:
        raise ShapeError(
            f"block shape {rows}x{cols} does not tile a grid of side {side}"
        )
    values = numeric_grid(grid, notation).values
    report = {}
    for bi in range(side // rows):
        for bj in range(side // cols):
            cells = [
                values[bi * rows + di][bj * cols + dj]
                for di in range(rows)
                for dj in range(cols)
            ]
            report[(bi, bj)] = BlockSums(sum(cells), sum(v * v for v in cells))
    return report


def divisibility_facts(report: MagicReport) -> tuple[tuple[int, int], ...]:
    """Every S1/S2/half-line value divisible by 37, with its exact quotient."""
    candidates = set(report.half_line_sums.values())
    for value in (report.s1, report.s2):
        if value is not None:
            candidates.add(value)
    return tuple(
        (value, value // DIVISOR)
        for value in sorted(candidates)
        if value and value % DIVISOR == 0
    )
