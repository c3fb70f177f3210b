"""Structural predicates on partitions: the type 1 / type 2 decomposition
``nu = beta + (s^s) + alpha``, the cover it predicts, and corner symmetry."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .partitions import (
    Cell,
    Partition,
    PartitionError,
    add_box,
    conjugate,
    contains,
    format_partition,
    outer_corners,
)

DIRECT = "direct"
CONJUGATE = "conjugate"
BOTH = "both"


@dataclass(frozen=True)
class TypeClass:
    """Result of :func:`classify`.

    ``variant`` is ``"type1"``, ``"type2"`` or ``"none"``. For type 1 the
    decomposition has ``s == 0`` and ``alpha == ()``.
    """

    variant: str
    beta: Partition = Partition()
    s: int = 0
    alpha: Partition = Partition()
    side: Optional[str] = None

    def render(self) -> str:
        if self.variant == "none":
            return "none"
        if self.variant == "type1":
            head = f"type1 beta={format_partition(self.beta)}"
        else:
            head = (
                f"type2 beta={format_partition(self.beta)} s={self.s} "
                f"alpha={format_partition(self.alpha)}"
            )
        return f"{head} ({self.side})"


NOT_C1 = TypeClass("none")


def _staircase_block(i: int, s: int) -> tuple[int, ...]:
    """The shape ``(i^{s+1}, i, i-1, ..., 1)`` that beta must contain."""
    if i == 0:
        return ()
    return (i,) * (s + 2) + tuple(range(i - 1, 0, -1))


def is_type1(nu: tuple[int, ...]) -> bool:
    nu = tuple(nu)
    return bool(nu) and contains(nu, _staircase_block(nu[0], 0))


def type2_decomposition(nu: tuple[int, ...]) -> Optional[tuple[Partition, int, Partition]]:
    """Return ``(beta, s, alpha)`` with ``nu = beta + (s^s) + alpha`` or None.

    Given ``s``, beta's first ``s + 2`` parts all equal ``i = beta_1``, and
    row ``s + 1`` of ``nu`` is untouched by the square, so ``i = nu_{s+1}``.
    """
    nu = tuple(nu)
    for s in range(len(nu), 0, -1):
        i = nu[s] if s < len(nu) else 0
        alpha = tuple(nu[k] - s - i for k in range(s))
        if alpha[-1] < 0 or alpha[0] == 0:
            continue
        beta = (i,) * s + nu[s:] if i else ()
        if contains(beta, _staircase_block(i, s)):
            return Partition(beta), s, Partition(alpha)
    return None


def _reading(nu: tuple[int, ...], side: str) -> Optional[TypeClass]:
    if is_type1(nu):
        return TypeClass("type1", Partition(nu), 0, Partition(), side)
    dec = type2_decomposition(nu)
    if dec is not None:
        beta, s, alpha = dec
        return TypeClass("type2", beta, s, alpha, side)
    return None


def classify(nu: tuple[int, ...]) -> TypeClass:
    nu = Partition(nu)
    if not nu:
        raise PartitionError("classify needs a non-empty partition")
    direct = _reading(nu, DIRECT)
    other = _reading(conjugate(nu), CONJUGATE)
    if direct and other:
        return TypeClass(direct.variant, direct.beta, direct.s, direct.alpha, BOTH)
    return direct or other or NOT_C1


def _cover_from_reading(nu: tuple[int, ...], tc: TypeClass) -> Partition:
    if tc.variant == "type1":
        return add_box(nu, Cell(1, nu[0] + 1))
    i = tc.beta[0] if tc.beta else 0
    return add_box(nu, Cell(tc.s + 1, i + 1))


def predicted_cover(nu: tuple[int, ...]) -> Optional[Partition]:
    """The unique ``mu`` the criterion allows to cover ``nu`` (None if none)."""
    nu = Partition(nu)
    if not nu:
        return None
    tc = classify(nu)
    if tc.variant == "none":
        return None
    if tc.side in (DIRECT, BOTH):
        return _cover_from_reading(nu, tc)
    nu_c = conjugate(nu)
    return conjugate(_cover_from_reading(nu_c, tc))


def predicted_cover_conjugate_reading(nu: tuple[int, ...]) -> Optional[Partition]:
    """Cover obtained from the conjugate's reading alone (None if ``nu'`` fails (C1))."""
    nu_c = conjugate(nu)
    tc = _reading(nu_c, CONJUGATE)
    if tc is None:
        return None
    return conjugate(_cover_from_reading(nu_c, tc))


def is_self_conjugate(nu: tuple[int, ...]) -> bool:
    return tuple(conjugate(nu)) == tuple(nu)


@dataclass(frozen=True)
class CornerWitness:
    corner: Cell
    eta: Partition


def corner_witness(nu: tuple[int, ...], corner: Cell) -> Optional[CornerWitness]:
    """First witness for one outer corner ``(k, j)`` with ``k > 1``.

    The removed shape has to reach the right edge of every row it spans and
    must end in row ``k - 1`` (the last row of length ``>= j``), so only its
    top row ``t`` is free.
    """
    nu = tuple(nu)
    k, j = corner
    for t in range(k - 1, 0, -1):
        delta = tuple(nu[r] - (j - 1) for r in range(t - 1, k - 1))
        if tuple(conjugate(delta)) != delta:
            continue
        eta = nu[: t - 1] + (j - 1,) * (k - t) + nu[k - 1 :]
        eta = Partition(x for x in eta if x)
        if eta:
            return CornerWitness(Cell(k, j), eta)
    return None


def is_corner_symmetric(nu: tuple[int, ...]) -> tuple[bool, list[CornerWitness]]:
    nu = Partition(nu)
    if not nu:
        raise PartitionError("corner symmetry needs a non-empty partition")
    witnesses = []
    for c in outer_corners(nu):
        if c.row == 1:
            continue
        w = corner_witness(nu, c)
        if w is None:
            return False, []
        witnesses.append(w)
    return True, witnesses
