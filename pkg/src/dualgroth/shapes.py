"""Integer partitions, conjugation, containment and skew shapes.

Rows, columns and parts are indexed 1-based throughout the package.  The
empty partition is a first-class value and prints as ``"0"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class ShapeError(ValueError):
    """Malformed or inconsistent partition / skew-shape input."""


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Trailing zeros in the input are stripped; interior zeros (or any
    increase) are rejected.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ShapeError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] <= 0:
            raise ShapeError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based); zero beyond the length."""
        if i < 1:
            raise IndexError(f"part index must be >= 1, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        """Transpose the Young diagram: part j of the result counts parts >= j."""
        if not self.parts:
            return Partition()
        width = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, width + 1)))

    def contains(self, other: "Partition") -> bool:
        """Cellwise containment: other_i <= self_i for all i."""
        return all(other.part(i) <= self.part(i) for i in range(1, other.length + 1))

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def contains(outer: Partition, inner: Partition) -> bool:
    return outer.contains(inner)


@dataclass(frozen=True)
class SkewShape:
    """A pair of nested partitions; the cells are those of outer not in inner."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self) -> None:
        if not self.outer.contains(self.inner):
            raise ShapeError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    @property
    def n_rows(self) -> int:
        return self.outer.length

    @property
    def n_cols(self) -> int:
        return self.outer.part(1)

    def cells(self) -> Iterator[tuple[int, int]]:
        """All cells (row, col), 1-based, in row-major order."""
        for r in range(1, self.outer.length + 1):
            for c in range(self.inner.part(r) + 1, self.outer.part(r) + 1):
                yield (r, c)

    def has_cell(self, r: int, c: int) -> bool:
        return 1 <= r <= self.outer.length and self.inner.part(r) < c <= self.outer.part(r)

    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    def is_straight(self) -> bool:
        return self.inner.length == 0

    def __str__(self) -> str:
        if self.inner.length == 0:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


def parse_partition(text: str) -> Partition:
    """Parse ``"a,b,c"``; ``"0"`` and ``""`` denote the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return Partition()
    parts = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk or not (chunk.isdigit() or (chunk.startswith("-") and chunk[1:].isdigit())):
            raise ShapeError(f"malformed partition text: {text!r}")
        value = int(chunk)
        if value < 0:
            raise ShapeError(f"negative part in {text!r}")
        parts.append(value)
    return Partition(tuple(parts))


def parse_shape(text: str) -> SkewShape:
    """Parse ``"outer"`` or ``"outer/inner"`` into a validated skew shape."""
    text = text.strip()
    if text.count("/") > 1:
        raise ShapeError(f"malformed shape text: {text!r}")
    if "/" in text:
        outer_text, inner_text = text.split("/")
        if not inner_text.strip():
            raise ShapeError(f"malformed shape text: {text!r}")
        return SkewShape(parse_partition(outer_text), parse_partition(inner_text))
    return SkewShape(parse_partition(text), Partition())


def partitions_up_to(max_size: int, max_cols: int | None = None, max_rows: int | None = None) -> Iterator[Partition]:
    """All partitions with size <= max_size, largest part <= max_cols and
    length <= max_rows, in a deterministic order (by size, then lexicographic)."""

    def gen(remaining: int, cap: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if rows_left == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    cols = max_size if max_cols is None else max_cols
    rows = max_size if max_rows is None else max_rows
    seen = set()
    for size in range(max_size + 1):
        for parts in gen(size, cols, rows):
            if sum(parts) == size and parts not in seen:
                seen.add(parts)
                yield Partition(parts)


def subpartitions(p: Partition) -> Iterator[Partition]:
    """All partitions contained in p, deterministically ordered."""

    def gen(i: int, prev_cap: int) -> Iterator[tuple[int, ...]]:
        if i > p.length:
            yield ()
            return
        for v in range(min(prev_cap, p.part(i)), -1, -1):
            if v == 0:
                yield ()
                continue
            for rest in gen(i + 1, v):
                yield (v,) + rest

    for parts in gen(1, p.part(1) if p.length else 0):
        yield Partition(parts)
