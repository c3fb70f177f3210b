"""Partition arithmetic: conjugates, square complements, corners and the
canonical ``[6,4,3,1]`` text form used throughout the package."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple


class PartitionError(ValueError):
    """Raised for malformed partitions or violated preconditions."""


class Cell(NamedTuple):
    """A box of a Young diagram, 1-based (row, col)."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Compares and hashes like the underlying tuple, so plain tuples can be
    used as dictionary keys interchangeably.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for k, p in enumerate(parts):
            if p <= 0:
                raise PartitionError(f"part {k + 1} is not positive: {p}")
            if k and p > parts[k - 1]:
                raise PartitionError(
                    f"part {k + 1} ({p}) exceeds part {k} ({parts[k - 1]})"
                )
        return super().__new__(cls, parts)

    @classmethod
    def trusted(cls, parts: tuple[int, ...]) -> "Partition":
        """Wrap a tuple already known to be a trimmed partition (no checks)."""
        return tuple.__new__(cls, parts)

    def weight(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def part(self, k: int) -> int:
        """The k-th part (1-based), 0 beyond the length."""
        return self[k - 1] if 1 <= k <= len(self) else 0

    def conjugate(self) -> "Partition":
        return Partition(conjugate(self))

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"


def _trim(parts: Iterable[int]) -> tuple[int, ...]:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return tuple(parts)


@lru_cache(maxsize=None)
def _conjugate(p: tuple[int, ...]) -> tuple[int, ...]:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def conjugate(p: Iterable[int]) -> Partition:
    return Partition(_conjugate(tuple(p)))


def complement(p: Iterable[int], m: int) -> Partition:
    """Complement of ``p`` in the square ``(m^m)``, rotated by 180 degrees."""
    p = tuple(p)
    if m < 1:
        raise PartitionError(f"square size must be positive, got {m}")
    if len(p) > m:
        raise PartitionError(f"length {len(p)} exceeds square size {m}")
    if p and p[0] > m:
        raise PartitionError(f"first part {p[0]} exceeds square size {m}")
    padded = p + (0,) * (m - len(p))
    return Partition(_trim(m - padded[m - 1 - k] for k in range(m)))


def contains(p: Iterable[int], q: Iterable[int]) -> bool:
    """True iff the diagram of ``q`` sits inside the diagram of ``p``."""
    p, q = tuple(p), tuple(q)
    return len(q) <= len(p) and all(b <= a for a, b in zip(p, q))


def outer_corners(p: Iterable[int]) -> list[Cell]:
    p = tuple(p)
    corners = []
    for k in range(len(p) + 1):
        j = p[k] + 1 if k < len(p) else 1
        if k == 0 or p[k - 1] >= j:
            corners.append(Cell(k + 1, j))
    return corners


def add_box(p: Iterable[int], c: Cell | tuple[int, int]) -> Partition:
    p = tuple(p)
    row, col = c
    if Cell(row, col) not in outer_corners(p):
        raise PartitionError(f"cell ({row},{col}) is not an outer corner of {format_partition(p)}")
    parts = list(p) + [0]
    parts[row - 1] += 1
    return Partition(parts)


def strip_columns(p: Iterable[int], k: int) -> Partition:
    """Remove the first ``k`` columns."""
    p = tuple(p)
    if k < 0 or k > (p[0] if p else 0):
        raise PartitionError(f"cannot strip {k} columns from {format_partition(p)}")
    return Partition(_trim(max(x - k, 0) for x in p))


def strip_rows(p: Iterable[int], s: int) -> Partition:
    """Remove the first ``s`` rows."""
    p = tuple(p)
    if s < 0 or s > len(p):
        raise PartitionError(f"cannot strip {s} rows from {format_partition(p)}")
    return Partition(p[s:])


def lex_key(p: Iterable[int], width: int | None = None) -> tuple[int, ...]:
    """Sort key realising lexicographic order with absent parts read as 0."""
    p = tuple(p)
    if width is None:
        return p
    return p + (0,) * (width - len(p))


def lex_compare(p: Iterable[int], q: Iterable[int]) -> int:
    """-1, 0 or 1 as ``p`` is lexicographically below, equal to or above ``q``."""
    p, q = tuple(p), tuple(q)
    n = max(len(p), len(q))
    a, b = lex_key(p, n), lex_key(q, n)
    return (a > b) - (a < b)


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest: int, cap: int, slots: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(n, max_part, max_len):
        yield Partition(parts)


def subpartitions(p: Iterable[int], size: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions contained in ``p`` (optionally of one fixed weight)."""
    p = tuple(p)

    def rec(k: int, cap: int, rest: int | None) -> Iterator[tuple[int, ...]]:
        if k == len(p) or cap == 0:
            if rest is None or rest == 0:
                yield ()
            return
        top = min(cap, p[k])
        for x in range(top, -1, -1):
            if rest is not None and x > rest:
                continue
            if x == 0:
                if rest is None or rest == 0:
                    yield ()
                continue
            for tail in rec(k + 1, x, None if rest is None else rest - x):
                yield (x,) + tail

    yield from rec(0, p[0] if p else 0, size)


def staircase(i: int) -> Partition:
    return Partition(range(i, 0, -1))


def is_partition(seq: Iterable[int]) -> bool:
    seq = tuple(seq)
    return all(x >= 0 for x in seq) and all(a >= b for a, b in zip(seq, seq[1:]))


def format_partition(p: Iterable[int]) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def parse_partition(text: str) -> Partition:
    """Parse the canonical form ``[6,4,3,1]``; whitespace is tolerated."""
    s = "".join(text.split())
    if not (s.startswith("[") and s.endswith("]")):
        raise PartitionError(f"expected a bracketed list, got {text!r}")
    body = s[1:-1]
    if not body:
        return Partition()
    parts = []
    for k, tok in enumerate(body.split(","), start=1):
        try:
            value = int(tok)
        except ValueError:
            raise PartitionError(f"entry {k} is not an integer: {tok!r}") from None
        if value <= 0:
            raise PartitionError(f"entry {k} is not positive: {value}")
        if parts and value > parts[-1]:
            raise PartitionError(f"entry {k} ({value}) exceeds entry {k - 1} ({parts[-1]})")
        parts.append(value)
    return Partition(parts)
