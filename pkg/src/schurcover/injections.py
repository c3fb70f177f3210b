"""Explicit injections between LR tableau sets.

Each algorithm takes ``T`` in ``LR(gamma x sigma x (nu/eta)*, nu')`` and
returns ``T'`` in ``LR(gamma x sigma x (mu/eta)*, mu')`` where ``mu`` is
``nu`` plus one box ``x``.  Only the block ``(nu/eta)*`` is rewritten; it
is always the last block of the chain, so its rows are the bottom rows of
the tableau and its columns start at 0.

Positions inside that block are ``(row, col)`` with row 0 at the top of the
rotated shape.  Rows "from the bottom" are counted geometrically.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from .classify import is_type1, type2_decomposition
from .expand import LambdaIndex, conj_comp_coefficients, stable_bound
from .partitions import Cell, Partition, add_box, conjugate, contains, format_partition
from .tableaux import (
    SkewChain,
    Tableau,
    chain,
    count_lr,
    enumerate_lr,
    is_lattice,
    reverse_reading_word,
    rotate180,
    straight,
)


class InjectionError(RuntimeError):
    """An algorithm met a configuration its case analysis does not cover."""


class InjectionFailure(AssertionError):
    """verify_injection found an output outside the target set or a collision."""

    def __init__(self, message: str, report: "InjectionReport"):
        super().__init__(message)
        self.report = report


ROW1 = "row1"
TYPE2 = "type2"


@dataclass(frozen=True)
class InjectionContext:
    """Everything an algorithm needs about one triple ``(eta, gamma, sigma)``.

    ``x`` and ``r_x`` are 1-based positions in the target chain.
    ``x_local`` is the added box in source block coordinates and ``shift``
    is the column shift of old cells when moving to the target block.
    """

    nu: Partition
    mu: Partition
    eta: Partition
    gamma: Partition
    sigma: Partition
    m: int
    x: Cell
    r_x: int
    source: SkewChain = field(repr=False)
    target: SkewChain = field(repr=False)
    block_rows: tuple[tuple[int, int], ...] = field(repr=False)
    x_local: tuple[int, int] = field(repr=False)
    shift: int = field(repr=False)
    s: int = 0


def make_context(nu: Iterable[int], idx: LambdaIndex, kind: str = ROW1) -> InjectionContext:
    nu = Partition(nu)
    eta, gamma, sigma = (Partition(p) for p in idx)
    if not contains(nu, eta):
        raise ValueError(f"{format_partition(eta)} is not contained in {format_partition(nu)}")
    block = rotate180(nu, eta)
    rows = block.rows
    R = len(nu)
    s = 0
    if kind == ROW1:
        mu = add_box(nu, Cell(1, nu[0] + 1))
        x_local = (R - 1, -1)
        shift = 1
    elif kind == TYPE2:
        dec = type2_decomposition(nu)
        if dec is None:
            raise ValueError(f"{format_partition(nu)} is not of type 2")
        beta, s, _ = dec
        i = beta[0] if beta else 0
        mu = add_box(nu, Cell(s + 1, i + 1))
        if len(mu) != R:
            raise ValueError("the added box must not open a new row")
        x_local = (R - 1 - s, nu[0] - 1 - i)
        shift = 0
    else:
        raise ValueError(f"unknown injection kind {kind!r}")
    source = chain(straight(gamma), straight(sigma), block)
    target_block = rotate180(mu, eta)
    target = chain(straight(gamma), straight(sigma), target_block)
    prefix = len(target.shape.rows) - len(target_block.rows)
    r, c = x_local
    x = Cell(prefix + r + 1, c + shift + 1)
    return InjectionContext(
        nu, mu, eta, gamma, sigma, stable_bound(mu), x, x.row, source, target,
        rows, x_local, shift, s,
    )


class _Work:
    """Mutable copy of the rewritten block with a bump trace."""

    def __init__(self, t: Tableau, ctx: InjectionContext):
        if t.shape != ctx.source.shape:
            raise InjectionError("tableau shape does not match the context")
        self.ctx = ctx
        self.original = t
        n_block = len(ctx.block_rows) if sum(b - a for a, b in ctx.block_rows) else 0
        split = len(t.rows) - n_block
        self.prefix = t.rows[:split]
        self.grid: dict[tuple[int, int], int] = {}
        for r, ((a, b), lab) in enumerate(zip(ctx.block_rows, t.rows[split:])):
            for k, v in enumerate(lab):
                self.grid[(r, a + k)] = v
        self.R = len(ctx.block_rows)
        self.v: Optional[int] = None
        self.pos: Optional[tuple[int, int]] = None
        self.trace: list[tuple[int, int]] = []

    def row_from_bottom(self, t: int) -> int:
        return self.R - t

    def rightmost(self, r: int) -> tuple[int, int]:
        if not 0 <= r < self.R:
            raise InjectionError(f"row {r} lies outside the block")
        a, b = self.ctx.block_rows[r]
        if a == b:
            raise InjectionError(f"row {r} of the block is empty")
        return (r, b - 1)

    def bump(self, cell: tuple[int, int], label: Optional[int] = None) -> None:
        """Put the held label (or ``label``) at ``cell`` and hold what was there."""
        if cell not in self.grid:
            raise InjectionError(f"no box at {cell}")
        new = self.v if label is None else label
        self.v, self.grid[cell] = self.grid[cell], new
        self.pos = cell
        self.trace.append(cell)

    def count_in_tableau(self, label: int) -> int:
        return sum(row.count(label) for row in self.original.rows)

    def count_in_bottom_rows(self, label: int, t: int) -> int:
        """Occurrences of ``label`` in the last ``t`` rows of the original tableau."""
        return sum(row.count(label) for row in self.original.rows[-t:])

    def finish(self, x_label: int) -> Tableau:
        ctx = self.ctx
        cells = {(r, c + ctx.shift): v for (r, c), v in self.grid.items()}
        xr, xc = ctx.x_local
        cells[(xr, xc + ctx.shift)] = x_label
        target_block = ctx.target.blocks[-1]
        rows = []
        for r, (a, b) in enumerate(target_block.rows):
            try:
                rows.append(tuple(cells.pop((r, c)) for c in range(a, b)))
            except KeyError as exc:
                raise InjectionError(f"target box {exc.args[0]} left unfilled") from None
        if cells:
            raise InjectionError(f"labels left outside the target shape: {sorted(cells)}")
        return Tableau(ctx.target.shape, tuple(self.prefix) + tuple(rows))


def _shift_left(w: _Work) -> None:
    """Bump the held label leftwards along its row until no box remains."""
    while True:
        r, c = w.pos
        if (r, c - 1) not in w.grid:
            return
        w.bump((r, c - 1))


def _southwest_loop(w: _Work) -> None:
    """While a box exists to the left: bump it, or bump the box down-left
    of the held label when that box holds a label not above it."""
    while True:
        r, c = w.pos
        left, sw = (r, c - 1), (r + 1, c - 1)
        if left not in w.grid:
            return
        if sw not in w.grid or w.v < w.grid[sw]:
            w.bump(left)
        else:
            w.bump(sw)


def inject_type1_rect(t: Tableau, ctx: InjectionContext) -> Tableau:
    """Type 1 partitions containing the rectangle ``(i^{i-1})``, ``i = nu_1``."""
    nu = ctx.nu
    i = nu[0]
    if not is_type1(nu) or not contains(nu, (i,) * (i - 1)):
        raise ValueError(f"{format_partition(nu)} does not satisfy the rectangle hypothesis")
    w = _Work(t, ctx)
    j = nu.part(i)
    eta1 = ctx.eta.part(1)
    bottom = w.R - 1
    q = None
    if eta1 < i and j < i:
        q = w.grid.get((w.row_from_bottom(i - j), 0))
    if eta1 == i:
        return w.finish(i + 1)
    w.bump(w.rightmost(bottom), i + 1)
    walk_up = False
    if not (j == i or eta1 >= 2):
        row = [w.grid[(bottom, c)] for c in range(*ctx.block_rows[bottom])]
        walk_up = row[0] == i
    if walk_up:
        if q is None:
            raise InjectionError("initializing label q is undefined")
        while not ((q == j and w.v == j + 1) or (q == j + 1 and w.v == j)):
            r, c = w.pos
            w.bump((r - 1, c))
    _shift_left(w)
    return w.finish(w.v)


def inject_width4(t: Tableau, ctx: InjectionContext) -> Tableau:
    """Type 1 partitions with ``nu_1 = 4`` and exactly two rows of length 4."""
    nu = ctx.nu
    if not is_type1(nu) or nu[0] != 4 or conjugate(nu).part(4) != 2:
        raise ValueError(f"{format_partition(nu)} does not satisfy the width-4 hypothesis")
    w = _Work(t, ctx)
    if ctx.eta.part(1) == 4:
        return w.finish(5)
    w.bump(w.rightmost(w.R - 1), 5)
    if w.count_in_bottom_rows(4, 1) == w.count_in_tableau(4):
        w.bump(w.rightmost(w.row_from_bottom(2)))
        if w.count_in_bottom_rows(3, 2) == w.count_in_tableau(3):
            w.bump(w.rightmost(w.row_from_bottom(3)))
    _southwest_loop(w)
    return w.finish(w.v)


def inject_type2_col1(t: Tableau, ctx: InjectionContext) -> Tableau:
    """Type 2 partitions with ``beta_1 = 1``: move one label 1 into ``x``.

    The 1 that becomes a 2 is the first one met in reading order below
    ``r_x``: highest row, and the rightmost 1 of that row so the row stays
    weakly increasing.
    """
    dec = type2_decomposition(ctx.nu)
    if dec is None or not dec[0] or dec[0][0] != 1:
        raise ValueError(f"{format_partition(ctx.nu)} is not of type 2 with beta_1 = 1")
    w = _Work(t, ctx)
    rx = ctx.x_local[0]
    for r in range(rx + 1, w.R):
        a, b = ctx.block_rows[r]
        for c in range(b - 1, a - 1, -1):
            if w.grid[(r, c)] == 1:
                w.bump((r, c), 2)
                return w.finish(1)
    return w.finish(2)


# --------------------------------------------------------------------------
# verification


Algorithm = Callable[[Tableau, InjectionContext], Tableau]

ALGORITHMS: dict[str, tuple[Algorithm, str]] = {
    "type1-rect": (inject_type1_rect, ROW1),
    "width4": (inject_width4, ROW1),
    "type2-col1": (inject_type2_col1, TYPE2),
}


def qualifies(nu: Iterable[int], name: str) -> bool:
    nu = Partition(nu)
    if not nu:
        return False
    if name == "type1-rect":
        return is_type1(nu) and contains(nu, (nu[0],) * (nu[0] - 1))
    if name == "width4":
        return is_type1(nu) and nu[0] == 4 and conjugate(nu).part(4) == 2
    if name == "type2-col1":
        dec = type2_decomposition(nu)
        return dec is not None and bool(dec[0]) and dec[0][0] == 1
    raise ValueError(f"unknown algorithm {name!r}")


@dataclass
class InjectionReport:
    nu: Partition
    algorithm: str
    indices: int = 0
    tableaux: int = 0
    source_total: int = 0
    target_total: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self) -> str:
        head = (
            f"injection {self.algorithm} nu={format_partition(self.nu)} "
            f"indices={self.indices} tableaux={self.tableaux} "
            f"source={self.source_total} target={self.target_total} "
            f"{'pass' if self.ok else 'FAIL'}"
        )
        return "\n".join([head] + self.failures) + "\n"


def _check_output(out: Tableau, ctx: InjectionContext) -> Optional[str]:
    """Membership in the target LR set, tested from the definition."""
    if out.shape != ctx.target.shape:
        return "wrong shape"
    if not out.is_semistandard():
        return "not semistandard"
    if out.content() != tuple(conjugate(ctx.mu)):
        return "wrong type"
    if not is_lattice(reverse_reading_word(out)):
        return "reading word is not a lattice word"
    return None


def _verify_index(
    nu: Partition, idx: LambdaIndex, fn: Algorithm, kind: str, expected: Optional[int]
) -> tuple[int, int, list[str]]:
    """Check one triple; returns (source count, target count, failures)."""
    ctx = make_context(nu, idx, kind)
    sources = enumerate_lr(ctx.source, conjugate(nu))
    failures = []
    if expected is not None and len(sources) != expected:
        failures.append(f"{idx}: enumerated {len(sources)} sources, coefficient is {expected}")
    target_count = count_lr(ctx.target, conjugate(ctx.mu))
    seen: dict[Tableau, Tableau] = {}
    for t in sources:
        out = None
        try:
            out = fn(t, ctx)
            problem = _check_output(out, ctx)
        except InjectionError as exc:
            problem = f"algorithm error: {exc}"
        if problem is None and out in seen:
            problem = "collision with\n" + seen[out].render()
        if problem is not None:
            msg = f"{idx}: {problem}\ninput:\n{t.render()}"
            if out is not None:
                msg += f"\noutput:\n{out.render()}"
            failures.append(msg)
            break
        seen[out] = t
    if len(sources) > target_count:
        failures.append(f"{idx}: source count {len(sources)} exceeds target {target_count}")
    return len(sources), target_count, failures


def _verify_named(args: tuple) -> tuple[int, int, list[str]]:
    nu, idx, name, expected = args
    fn, kind = ALGORITHMS[name]
    return _verify_index(nu, idx, fn, kind, expected)


def verify_injection(
    nu: Iterable[int],
    algorithm: Union[str, Algorithm],
    indices: Optional[Iterable[LambdaIndex]] = None,
    kind: str = ROW1,
    raise_on_failure: bool = True,
    jobs: int = 1,
) -> InjectionReport:
    """Run an algorithm on every source tableau of every non-zero triple and
    check target membership, injectivity and the count inequality.

    Named algorithms can be spread over ``jobs`` processes; a callable runs
    in-process with the given ``kind`` of added box.
    """
    nu = Partition(nu)
    if isinstance(algorithm, str):
        if algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {algorithm!r}")
        if not qualifies(nu, algorithm):
            raise ValueError(f"{format_partition(nu)} does not satisfy the {algorithm} hypothesis")
        fn, kind = ALGORITHMS[algorithm]
        name = algorithm
    else:
        fn = algorithm
        name = getattr(algorithm, "__name__", "custom")
    report = InjectionReport(nu, name)
    coefs = conj_comp_coefficients(tuple(nu))
    if indices is None:
        indices = sorted(coefs)
    indices = list(indices)
    if isinstance(algorithm, str) and jobs > 1 and len(indices) > 64:
        args = [(nu, idx, name, coefs.get(idx, 0)) for idx in indices]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_named, args, chunksize=max(1, len(args) // (8 * jobs))))
    else:
        results = [_verify_index(nu, idx, fn, kind, coefs.get(idx, 0)) for idx in indices]
    for n_src, n_tgt, failures in results:
        if n_src:
            report.indices += 1
            report.tableaux += n_src
            report.source_total += n_src
            report.target_total += n_tgt
        report.failures.extend(failures)
    if report.failures and raise_on_failure:
        raise InjectionFailure(report.failures[0], report)
    return report


def type2_row_violations(t: Tableau, ctx: InjectionContext) -> list[str]:
    """Row constraints every LR tableau of a type 2 partition obeys around ``r_x``."""
    dec = type2_decomposition(ctx.nu)
    if dec is None:
        raise ValueError("not of type 2")
    beta, s, _ = dec
    i = beta[0] if beta else 0
    w = _Work(t, ctx)
    rx = ctx.x_local[0]
    rows_below: dict[int, int] = {}
    at_or_above: Counter = Counter()
    for row in w.prefix:
        at_or_above.update(row)
    for r, (a, b) in enumerate(ctx.block_rows):
        labels = [w.grid[(r, c)] for c in range(a, b)]
        if r <= rx:
            at_or_above.update(labels)
        for v in labels:
            rows_below[v] = max(rows_below.get(v, 0), r - rx)
    out = []
    for j in range(1, s + 1):
        if rows_below.get(i + j, 0) > j:
            out.append(f"label {i + j} sits more than {j} rows below r_x")
    if at_or_above[i + 1] < 1:
        out.append(f"no label {i + 1} at or above r_x")
    if i and at_or_above[i] < s:
        out.append(f"fewer than {s} labels {i} at or above r_x")
    return out
