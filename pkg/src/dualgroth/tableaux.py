"""Reverse plane partitions on skew shapes and the tableau-sum oracle.

An RPP fills each cell with a positive integer so that rows weakly
increase left to right and columns weakly increase top to bottom.  Its
monomial weight records, per value i, the number of columns containing i
(x-exponents) and, per row j, the number of entries equal to the entry
directly below (t-exponents, refined weight only).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .polyring import Poly
from .shapes import Partition, SkewShape, parse_shape

EMPTY = None


@dataclass(frozen=True)
class RPP:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        lam, mu = self.shape.outer, self.shape.inner
        if len(self.rows) != lam.length:
            raise ValueError("row count does not match the shape")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != lam.part(r) - mu.part(r):
                raise ValueError(f"row {r} has wrong length")
            for v in row:
                if not isinstance(v, int) or v < 1:
                    raise ValueError(f"entries must be positive integers, got {v!r}")
        for r, c in self.shape.cells():
            v = self.entry(r, c)
            if c > mu.part(r) + 1 and self.shape.has_cell(r, c - 1) and self.entry(r, c - 1) > v:
                raise ValueError(f"row {r} not weakly increasing")
            if self.shape.has_cell(r - 1, c) and self.entry(r - 1, c) > v:
                raise ValueError(f"column {c} not weakly increasing")

    def entry(self, r: int, c: int) -> int:
        if not self.shape.has_cell(r, c):
            raise KeyError(f"({r}, {c}) outside the shape")
        return self.rows[r - 1][c - self.shape.inner.part(r) - 1]

    def max_entry(self) -> int:
        return max((v for row in self.rows for v in row), default=0)

    def column(self, c: int) -> list[int]:
        """Entries of column c, top to bottom."""
        return [self.entry(r, c) for r in range(1, self.shape.outer.length + 1)
                if self.shape.has_cell(r, c)]

    def to_json_obj(self) -> dict:
        """Rows padded on the left with nulls over the inner-shape cells."""
        mu = self.shape.inner
        return {
            "shape": str(self.shape),
            "rows": [[None] * mu.part(r) + list(row) for r, row in enumerate(self.rows, start=1)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @staticmethod
    def from_json_obj(obj: dict) -> "RPP":
        shape = parse_shape(obj["shape"])
        mu = shape.inner
        rows = tuple(
            tuple(row[mu.part(r):])
            for r, row in enumerate(obj["rows"], start=1)
        )
        return RPP(shape, rows)

    @staticmethod
    def from_json(text: str) -> "RPP":
        return RPP.from_json_obj(json.loads(text))


@dataclass(frozen=True)
class ReducedFilling:
    """A partial filling whose empty cells each have a filled cell somewhere below."""

    shape: SkewShape
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self) -> None:
        lam, mu = self.shape.outer, self.shape.inner
        if len(self.rows) != lam.length:
            raise ValueError("row count does not match the shape")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != lam.part(r) - mu.part(r):
                raise ValueError(f"row {r} has wrong length")
        for r, c in self.shape.cells():
            if self.entry(r, c) is EMPTY and not any(
                self.shape.has_cell(rr, c) and self.entry(rr, c) is not EMPTY
                for rr in range(r + 1, lam.length + 1)
            ):
                raise ValueError(f"empty cell ({r}, {c}) has no filled cell below")

    def entry(self, r: int, c: int) -> int | None:
        if not self.shape.has_cell(r, c):
            raise KeyError(f"({r}, {c}) outside the shape")
        return self.rows[r - 1][c - self.shape.inner.part(r) - 1]


def complete_filling(filling: ReducedFilling) -> RPP:
    """Fill each empty cell with the first filled entry below it in its column."""
    shape = filling.shape
    lam = shape.outer
    values: dict[tuple[int, int], int] = {}
    for c in range(1, shape.n_cols + 1):
        rows_in_col = [r for r in range(1, lam.length + 1) if shape.has_cell(r, c)]
        for r in reversed(rows_in_col):
            v = filling.entry(r, c)
            if v is EMPTY:
                below = values.get((r + 1, c))
                if below is None:
                    raise ValueError(f"empty cell ({r}, {c}) has no filled cell below")
                values[(r, c)] = below
            else:
                values[(r, c)] = v
    rows = tuple(
        tuple(values[(r, c)] for c in range(shape.inner.part(r) + 1, lam.part(r) + 1))
        for r in range(1, lam.length + 1)
    )
    return RPP(shape, rows)


def reduce_filling(t: RPP) -> ReducedFilling:
    """Empty out each cell equal to the entry directly below it."""
    shape = t.shape
    rows = []
    for r in range(1, shape.outer.length + 1):
        row: list[int | None] = []
        for c in range(shape.inner.part(r) + 1, shape.outer.part(r) + 1):
            v = t.entry(r, c)
            if shape.has_cell(r + 1, c) and t.entry(r + 1, c) == v:
                row.append(EMPTY)
            else:
                row.append(v)
        rows.append(tuple(row))
    return ReducedFilling(shape, tuple(rows))


def enumerate_rpp(shape: SkewShape, m: int) -> Iterator[RPP]:
    """All RPPs with entries in [1, m], cell-by-cell backtracking in row-major order."""
    if m < 0:
        raise ValueError("entry bound must be nonnegative")
    cells = list(shape.cells())
    if not cells:
        yield RPP(shape, tuple(() for _ in range(shape.outer.length)))
        return
    if m == 0:
        return
    values: dict[tuple[int, int], int] = {}

    def fill(pos: int) -> Iterator[RPP]:
        if pos == len(cells):
            rows = tuple(
                tuple(values[(r, c)] for c in range(shape.inner.part(r) + 1, shape.outer.part(r) + 1))
                for r in range(1, shape.outer.length + 1)
            )
            yield RPP(shape, rows)
            return
        r, c = cells[pos]
        lo = 1
        if shape.has_cell(r, c - 1):
            lo = max(lo, values[(r, c - 1)])
        if shape.has_cell(r - 1, c):
            lo = max(lo, values[(r - 1, c)])
        for v in range(lo, m + 1):
            values[(r, c)] = v
            yield from fill(pos + 1)
        values.pop((r, c), None)

    yield from fill(0)


def rpp_weight(t: RPP, refined: bool = False) -> Poly:
    """The monomial weight of a single RPP."""
    shape = t.shape
    x_exps: dict[int, int] = {}
    for c in range(1, shape.n_cols + 1):
        for v in set(t.column(c)):
            x_exps[v] = x_exps.get(v, 0) + 1
    t_exps: dict[int, int] = {}
    if refined:
        for r, c in shape.cells():
            if shape.has_cell(r + 1, c) and t.entry(r + 1, c) == t.entry(r, c):
                t_exps[r] = t_exps.get(r, 0) + 1

    def vec(d: dict[int, int]) -> tuple[int, ...]:
        if not d:
            return ()
        return tuple(d.get(i, 0) for i in range(1, max(d) + 1))

    return Poly.monomial(1, vec(x_exps), vec(t_exps))


def dual_grothendieck(shape: SkewShape, m: int, refined: bool = False) -> Poly:
    """The tableau-sum oracle: sum of RPP weights over entries bounded by m."""
    total = Poly.zero()
    for t in enumerate_rpp(shape, m):
        total = total + rpp_weight(t, refined)
    return total
