"""Littlewood-Richardson tableaux on chained skew shapes.

A chain ``B_1 x B_2 x ... x B_r`` places each block strictly north-east of
the next one, so no two blocks share a row or a column.  Rows are read top
to bottom and right to left; the lattice condition is carried across
blocks as a running content vector, which is what makes block-by-block
counting possible.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Optional, Sequence, Union

from .partitions import Partition, PartitionError, contains, format_partition

Rows = tuple[tuple[int, int], ...]


class ShapeError(ValueError):
    pass


@dataclass(frozen=True)
class Block:
    """One piece of a chain, with rows given as half-open local column ranges."""

    kind: str
    outer: Partition
    inner: Partition
    rows: Rows
    width: int

    def size(self) -> int:
        return sum(b - a for a, b in self.rows)

    def __str__(self) -> str:
        if self.kind == "straight":
            return format_partition(self.outer)
        base = f"{format_partition(self.outer)}/{format_partition(self.inner)}"
        return f"({base})*" if self.kind == "rotated" else base


def straight(p: Iterable[int]) -> Block:
    p = Partition(p)
    return Block("straight", p, Partition(), tuple((0, x) for x in p), p[0] if p else 0)


def skew(outer: Iterable[int], inner: Iterable[int]) -> Block:
    outer, inner = Partition(outer), Partition(inner)
    if not contains(outer, inner):
        raise ShapeError(f"{format_partition(inner)} is not contained in {format_partition(outer)}")
    rows = tuple((inner.part(k + 1), outer[k]) for k in range(len(outer)))
    return Block("skew", outer, inner, rows, outer[0] if outer else 0)


def rotate180(outer: Iterable[int], inner: Iterable[int]) -> Block:
    """The skew shape ``outer/inner`` turned upside down, as a chain block."""
    outer, inner = Partition(outer), Partition(inner)
    if not contains(outer, inner):
        raise ShapeError(f"{format_partition(inner)} is not contained in {format_partition(outer)}")
    w = outer[0] if outer else 0
    n = len(outer)
    rows = tuple(
        (w - outer[n - 1 - r], w - inner.part(n - r)) for r in range(n)
    )
    return Block("rotated", outer, inner, rows, w)


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram in global coordinates: one ``(start, end)`` per row."""

    rows: Rows

    def size(self) -> int:
        return sum(b - a for a, b in self.rows)

    def cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r, (a, b) in enumerate(self.rows) for c in range(a, b)]

    def __contains__(self, cell: object) -> bool:
        r, c = cell  # type: ignore[misc]
        return 0 <= r < len(self.rows) and self.rows[r][0] <= c < self.rows[r][1]


@dataclass(frozen=True)
class SkewChain:
    """Blocks laid out north-east to south-west; empty blocks are dropped."""

    blocks: tuple[Block, ...]
    shape: SkewShape = field(init=False, repr=False, compare=False)
    row_offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)
    col_offsets: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, blocks: Iterable[Block]):
        blocks = tuple(b for b in blocks if b.size() > 0)
        object.__setattr__(self, "blocks", blocks)
        col_offsets = []
        offset = 0
        for b in reversed(blocks):
            col_offsets.append(offset)
            offset += b.width
        col_offsets.reverse()
        rows = []
        row_offsets = []
        for b, off in zip(blocks, col_offsets):
            row_offsets.append(len(rows))
            rows.extend((a + off, e + off) for a, e in b.rows)
        object.__setattr__(self, "shape", SkewShape(tuple(rows)))
        object.__setattr__(self, "row_offsets", tuple(row_offsets))
        object.__setattr__(self, "col_offsets", tuple(col_offsets))

    def size(self) -> int:
        return self.shape.size()

    def key(self) -> str:
        return " x ".join(str(b) for b in self.blocks) or "[]"


def chain(*blocks: Block) -> SkewChain:
    return SkewChain(blocks)


ShapeLike = Union[SkewChain, SkewShape, Block]


def _rows_of(shape: ShapeLike) -> Rows:
    if isinstance(shape, SkewChain):
        return shape.shape.rows
    if isinstance(shape, SkewShape):
        return shape.rows
    return shape.rows


def _shape_of(shape: ShapeLike) -> SkewShape:
    if isinstance(shape, SkewChain):
        return shape.shape
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(shape.rows)


# --------------------------------------------------------------------------
# filling search


@lru_cache(maxsize=1 << 16)
def _layout(rows: Rows) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...], tuple[int, ...]]:
    """Cells in reading order with indices of their right and upper neighbours."""
    cells = []
    index = {}
    for r, (a, b) in enumerate(rows):
        for c in range(b - 1, a - 1, -1):
            index[(r, c)] = len(cells)
            cells.append((r, c))
    right = tuple(index.get((r, c + 1), -1) for r, c in cells)
    above = tuple(index.get((r - 1, c), -1) for r, c in cells)
    return tuple(cells), right, above


def _search(
    rows: Rows,
    state: tuple[int, ...],
    target: Optional[tuple[int, ...]],
    emit: Callable[[list[int], list[int]], None],
) -> None:
    """Backtrack over semistandard fillings whose reading word keeps
    ``state + content(prefix)`` a partition (bounded by ``target``)."""
    cells, right, above = _layout(rows)
    n = len(cells)
    if target is not None:
        size = len(target)
    else:
        size = len(state) + n
    counts = list(state) + [0] * (size + 1 - len(state))
    labels = [0] * n
    cap = target

    def rec(k: int) -> None:
        if k == n:
            emit(counts, labels)
            return
        up = above[k]
        lo = labels[up] + 1 if up >= 0 else 1
        rt = right[k]
        hi = labels[rt] if rt >= 0 else size
        if hi > size:
            hi = size
        for v in range(lo, hi + 1):
            cv = counts[v - 1]
            if v > 1:
                prev = counts[v - 2]
                if cv >= prev:
                    if prev == 0:
                        break
                    continue
            if cap is not None and cv >= cap[v - 1]:
                continue
            counts[v - 1] = cv + 1
            labels[k] = v
            rec(k + 1)
            counts[v - 1] = cv

    rec(0)


def _transitions_uncached(
    rows: Rows, state: tuple[int, ...], target: Optional[tuple[int, ...]]
) -> dict[tuple[int, ...], int]:
    out: Counter = Counter()

    def emit(counts: list[int], labels: list[int]) -> None:
        out[tuple(x for x in counts if x)] += 1

    _search(rows, state, target, emit)
    return dict(out)


_transitions = lru_cache(maxsize=None)(_transitions_uncached)


def transitions(
    block: ShapeLike,
    state: Sequence[int] = (),
    target: Optional[Sequence[int]] = None,
    cache: bool = True,
) -> dict[tuple[int, ...], int]:
    """End states reached by lattice fillings of ``block`` started at ``state``.

    With ``state = a`` and a straight block ``b`` this is the expansion of
    ``s_a * s_b``; with ``state = ()`` and a skew block ``k/g`` it is the
    expansion of ``s_{k/g}``.
    """
    rows = _rows_of(block)
    state = tuple(state)
    tgt = None if target is None else tuple(target)
    if tgt is not None and not contains(tgt, state):
        return {}
    fn = _transitions if cache else _transitions_uncached
    return fn(rows, state, tgt)


def clear_caches() -> None:
    _transitions.cache_clear()
    _layout.cache_clear()


# --------------------------------------------------------------------------
# tableaux


@dataclass(frozen=True)
class Tableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.shape.rows) or any(
            len(lab) != b - a for lab, (a, b) in zip(self.rows, self.shape.rows)
        ):
            raise ShapeError("labels do not match the shape")

    @classmethod
    def from_cells(cls, shape: SkewShape, labels: dict[tuple[int, int], int]) -> "Tableau":
        if set(labels) != set(shape.cells()):
            raise ShapeError("cells of the filling differ from the shape")
        rows = tuple(
            tuple(labels[(r, c)] for c in range(a, b)) for r, (a, b) in enumerate(shape.rows)
        )
        return cls(shape, rows)

    def label(self, r: int, c: int) -> Optional[int]:
        if (r, c) in self.shape:
            return self.rows[r][c - self.shape.rows[r][0]]
        return None

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {
            (r, a + k): v
            for r, ((a, _), lab) in enumerate(zip(self.shape.rows, self.rows))
            for k, v in enumerate(lab)
        }

    def content(self) -> tuple[int, ...]:
        """Multiplicities of labels 1, 2, ... (the type)."""
        cnt = Counter(v for row in self.rows for v in row)
        top = max(cnt, default=0)
        return tuple(cnt.get(v, 0) for v in range(1, top + 1))

    def is_semistandard(self) -> bool:
        for r, (a, b) in enumerate(self.shape.rows):
            lab = self.rows[r]
            if any(lab[k] > lab[k + 1] for k in range(len(lab) - 1)):
                return False
            if any(v < 1 for v in lab):
                return False
            for c in range(a, b):
                up = self.label(r - 1, c)
                if up is not None and up >= lab[c - a]:
                    return False
        return True

    def render(self) -> str:
        lines = []
        for (a, _), lab in zip(self.shape.rows, self.rows):
            if lab:
                lines.append(" ".join(["."] * a + [str(v) for v in lab]))
        return "\n".join(lines)


def reverse_reading_word(t: Tableau) -> tuple[int, ...]:
    return tuple(v for row in t.rows for v in reversed(row))


def is_lattice(word: Iterable[int]) -> bool:
    counts: Counter = Counter()
    for v in word:
        if v < 1:
            return False
        counts[v] += 1
        if v > 1 and counts[v] > counts[v - 1]:
            return False
    return True


def superstandard(nu: Iterable[int]) -> Tableau:
    nu = Partition(nu)
    shape = SkewShape(tuple((0, x) for x in nu))
    return Tableau(shape, tuple((k + 1,) * x for k, x in enumerate(nu)))


def _check_size(shape: ShapeLike, type_: Sequence[int]) -> None:
    n = _shape_of(shape).size()
    if n != sum(type_):
        raise ShapeError(f"shape has {n} cells but the type has weight {sum(type_)}")


def enumerate_lr(shape: ShapeLike, type_: Iterable[int]) -> list[Tableau]:
    """All LR tableaux of the given shape and type, ordered by reading word."""
    type_ = Partition(type_)
    _check_size(shape, type_)
    sk = _shape_of(shape)
    cells, _, _ = _layout(sk.rows)
    found: list[Tableau] = []

    def emit(counts: list[int], labels: list[int]) -> None:
        found.append(Tableau.from_cells(sk, dict(zip(cells, labels))))

    _search(sk.rows, (), tuple(type_), emit)
    return found


def iter_lr(shape: ShapeLike, type_: Iterable[int]) -> Iterator[Tableau]:
    yield from enumerate_lr(shape, type_)


def count_lr(shape: ShapeLike, type_: Iterable[int], cache: bool = True) -> int:
    """Number of LR tableaux, counted block by block through intermediate contents."""
    type_ = tuple(Partition(type_))
    _check_size(shape, type_)
    if isinstance(shape, SkewChain):
        pieces = [b.rows for b in shape.blocks]
    else:
        pieces = [_rows_of(shape)]
    states: dict[tuple[int, ...], int] = {(): 1}
    for rows in pieces:
        nxt: Counter = Counter()
        for st, k in states.items():
            for end, c in transitions(SkewShape(rows), st, type_, cache=cache).items():
                nxt[end] += k * c
        states = nxt
    return states.get(type_, 0)


def validate_horizontal_strips(t: Tableau, type_: Iterable[int]) -> bool:
    """Peel rows from the bottom; each must remove a horizontal strip from
    the superstandard tableau of what is left of ``type_``."""
    try:
        remaining = list(Partition(type_))
    except PartitionError:
        return False
    for lab in reversed(t.rows):
        if not lab:
            continue
        if any(lab[k] > lab[k + 1] for k in range(len(lab) - 1)):
            return False
        cnt = Counter(lab)
        if max(cnt) > len(remaining):
            return False
        new = [remaining[k] - cnt.get(k + 1, 0) for k in range(len(remaining))]
        if any(x < 0 for x in new):
            return False
        # strip condition: new_k >= old_{k+1}
        for k in range(len(remaining) - 1):
            if new[k] < remaining[k + 1]:
                return False
        remaining = new
    return not any(remaining)
