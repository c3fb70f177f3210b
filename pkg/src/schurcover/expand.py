"""Schur expansions of ``s_{mu'} * s_{mu^c}`` and related checks.

In the stable range ``m >= mu_1 + len(mu)`` every term of the product is
``lambda = (eta^c + gamma, sigma)`` for a unique triple ``(eta, gamma,
sigma)`` with ``eta`` inside ``mu``, and its coefficient is the number of LR
tableaux of ``gamma x sigma x (mu/eta)*`` with type ``mu'``.  The triple and
its coefficient do not depend on ``m``; only the assembly does.

Coefficients are computed by splitting the chain at the content reached
after ``gamma x sigma``::

    coef(eta, gamma, sigma) = sum_kappa c^kappa_{gamma sigma} * N_eta(kappa)

where ``N_eta(kappa)`` counts lattice fillings of ``(mu/eta)*`` that start
at content ``kappa`` and end at ``mu'``.  The pairs ``(gamma, sigma)`` with
``c^kappa_{gamma sigma} > 0`` come from expanding ``s_{kappa/gamma}``.
"""

from __future__ import annotations

import warnings
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional

from .partitions import (
    Partition,
    PartitionError,
    complement,
    conjugate,
    contains,
    format_partition,
    lex_key,
    parse_partition,
    partitions_of,
    subpartitions,
)
from .tableaux import chain, count_lr, rotate180, skew, straight, transitions


class AssemblyError(ValueError):
    """The sequence ``(eta^c + gamma, sigma)`` is not a partition."""


class StabilityError(ValueError):
    """Requested ``m`` is below the stable bound ``mu_1 + len(mu)``."""


def stable_bound(mu: Iterable[int]) -> int:
    """Smallest square size ``mu_1 + len(mu)`` of the stable range (at least 1)."""
    mu = tuple(mu)
    return max((mu[0] if mu else 0) + len(mu), 1)


# --------------------------------------------------------------------------
# expansions


@dataclass
class SchurExpansion:
    """Sparse map from partitions to non-zero integer coefficients."""

    terms: dict[Partition, int] = field(default_factory=dict)
    meta: Optional[tuple[Partition, int]] = None

    def __post_init__(self) -> None:
        self.terms = {Partition(k): int(v) for k, v in self.terms.items() if v}

    def __getitem__(self, lam: Iterable[int]) -> int:
        return self.terms.get(Partition(lam), 0)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __sub__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = Counter(self.terms)
        out.subtract(other.terms)
        return SchurExpansion(dict(out))

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = Counter(self.terms)
        out.update(other.terms)
        return SchurExpansion(dict(out))

    def scaled(self, c: int) -> "SchurExpansion":
        return SchurExpansion({k: c * v for k, v in self.terms.items()})

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        """Terms in lexicographically decreasing order of the partition."""
        width = max((len(k) for k in self.terms), default=0)
        return sorted(self.terms.items(), key=lambda kv: lex_key(kv[0], width), reverse=True)

    def serialize(self) -> str:
        return "".join(f"{c}\t{format_partition(k)}\n" for k, c in self.sorted_terms())

    @classmethod
    def parse(cls, text: str) -> "SchurExpansion":
        terms: dict[Partition, int] = {}
        for n, line in enumerate(text.splitlines(), start=1):
            if not line:
                continue
            coef, sep, part = line.partition("\t")
            if not sep:
                raise ValueError(f"line {n}: expected 'coefficient<TAB>[partition]'")
            key = parse_partition(part)
            if key in terms:
                raise ValueError(f"line {n}: duplicate term {part}")
            terms[key] = int(coef)
        return cls(terms)


def is_schur_positive(e: SchurExpansion) -> tuple[bool, Optional[Partition]]:
    """``(True, None)`` or ``(False, lex-least partition with negative coefficient)``."""
    neg = [k for k, v in e.terms.items() if v < 0]
    if not neg:
        return True, None
    width = max(len(k) for k in neg)
    return False, min(neg, key=lambda k: lex_key(k, width))


def omega(e: SchurExpansion) -> SchurExpansion:
    return SchurExpansion({conjugate(k): v for k, v in e.terms.items()})


# --------------------------------------------------------------------------
# generic products


def lr_multiply(a: Iterable[int], b: Iterable[int]) -> SchurExpansion:
    """``s_a * s_b`` by filling the smaller diagram on top of the larger one."""
    a, b = Partition(a), Partition(b)
    if sum(b) > sum(a):
        a, b = b, a
    return SchurExpansion(transitions(straight(b), a))


def exact_product(mu: Iterable[int], m: int) -> SchurExpansion:
    """``s_{mu'} * s_{mu^c}`` by generic multiplication, valid for any ``m``."""
    mu = Partition(mu)
    e = lr_multiply(complement(mu, m), conjugate(mu))
    e.meta = (mu, m)
    return e


# --------------------------------------------------------------------------
# triple indexing


class LambdaIndex(NamedTuple):
    eta: Partition
    gamma: Partition
    sigma: Partition

    def __str__(self) -> str:
        return (
            f"eta={format_partition(self.eta)} gamma={format_partition(self.gamma)} "
            f"sigma={format_partition(self.sigma)}"
        )


def assemble_lambda(idx: LambdaIndex, m: int) -> Partition:
    eta, gamma, sigma = (tuple(x) for x in idx)
    if len(gamma) > m:
        raise AssemblyError(f"gamma has {len(gamma)} parts, more than m={m}")
    top = list(complement(eta, m))
    top += [0] * (m - len(top))
    for k, g in enumerate(gamma):
        top[k] += g
    seq = top + list(sigma)
    for k in range(1, len(seq)):
        if seq[k] > seq[k - 1]:
            raise AssemblyError(
                f"assembly {format_partition(seq)} increases at position {k + 1}"
            )
    return Partition(seq)


def disassemble_lambda(lam: Iterable[int], m: int) -> LambdaIndex:
    """Inverse of :func:`assemble_lambda` on the stable range.

    ``gamma`` is read off the overhang past column ``m`` and ``sigma`` from
    the rows below row ``m``.
    """
    lam = tuple(lam)
    top = lam[:m] + (0,) * max(0, m - len(lam))
    sigma = Partition(lam[m:])
    gamma = Partition(max(x - m, 0) for x in top)
    inside = tuple(min(x, m) for x in top)
    eta = complement(inside, m)
    return LambdaIndex(eta, gamma, sigma)


@lru_cache(maxsize=None)
def _coproduct(kappa: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], tuple[int, ...], int], ...]:
    """All ``(gamma, sigma, c)`` with ``c = c^kappa_{gamma sigma} > 0``."""
    out = []
    for gamma in subpartitions(kappa):
        for sigma, c in transitions(skew(kappa, gamma)).items():
            out.append((gamma, sigma, c))
    return tuple(out)


def eta_reach(mu: Iterable[int], eta: Iterable[int]) -> dict[tuple[int, ...], int]:
    """``N_eta(kappa)``: lattice fillings of ``(mu/eta)*`` from content ``kappa`` to ``mu'``."""
    mu = Partition(mu)
    target = tuple(conjugate(mu))
    block = rotate180(mu, eta)
    reach: dict[tuple[int, ...], int] = {}
    for kappa in subpartitions(target, sum(eta)):
        n = transitions(block, kappa, target).get(target, 0)
        if n:
            reach[kappa] = n
    return reach


@lru_cache(maxsize=256)
def conj_comp_coefficients(mu: tuple[int, ...]) -> dict[LambdaIndex, int]:
    """Non-zero coefficients of ``s_{mu'} * s_{mu^c}`` keyed by triple."""
    mu = Partition(mu)
    out: dict[LambdaIndex, int] = {}
    for eta in subpartitions(mu):
        reach = eta_reach(mu, eta)
        if not reach:
            continue
        acc: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = defaultdict(int)
        for kappa, n in reach.items():
            for gamma, sigma, c in _coproduct(kappa):
                acc[gamma, sigma] += c * n
        eta_p = Partition(eta)
        for (gamma, sigma), total in acc.items():
            out[LambdaIndex(eta_p, Partition.trusted(gamma), Partition.trusted(sigma))] = total
    return out


def chain_coefficient(mu: Iterable[int], idx: LambdaIndex, cache: bool = True) -> int:
    """The same coefficient counted directly on the chain ``gamma x sigma x (mu/eta)*``."""
    mu = Partition(mu)
    ch = chain(straight(idx.gamma), straight(idx.sigma), rotate180(mu, idx.eta))
    return count_lr(ch, conjugate(mu), cache=cache)


def expansion_from_triples(coefs: dict[LambdaIndex, int], m: int) -> SchurExpansion:
    terms: dict[Partition, int] = {}
    for idx, c in coefs.items():
        lam = assemble_lambda(idx, m)
        if lam in terms:
            raise AssertionError(f"two triples assemble to {format_partition(lam)} at m={m}")
        terms[lam] = c
    return SchurExpansion(terms)


def product_conj_comp(mu: Iterable[int], m: int, unsafe: bool = False) -> SchurExpansion:
    """``s_{mu'} * s_{mu^c}`` for the square ``(m^m)``.

    Below the stable bound the triple indexing breaks down; with
    ``unsafe=True`` the product is then computed by generic multiplication.
    """
    mu = Partition(mu)
    bound = stable_bound(mu)
    if m < bound:
        if not unsafe:
            raise StabilityError(
                f"m={m} is below the stable bound {bound} for {format_partition(mu)}"
            )
        warnings.warn(
            f"m={m} is below the stable bound {bound}; computing the product directly",
            stacklevel=2,
        )
        return exact_product(mu, m)
    e = expansion_from_triples(conj_comp_coefficients(tuple(mu)), m)
    e.meta = (mu, m)
    return e


def _check_pair(mu: Partition, nu: Partition) -> None:
    if not contains(mu, nu):
        raise PartitionError(f"{format_partition(nu)} is not contained in {format_partition(mu)}")
    if sum(mu) != sum(nu) + 1:
        raise PartitionError(
            f"|mu|={sum(mu)} must exceed |nu|={sum(nu)} by exactly one"
        )


def difference(mu: Iterable[int], nu: Iterable[int], m: int, unsafe: bool = False) -> SchurExpansion:
    """``s_{mu'} s_{mu^c} - s_{nu'} s_{nu^c}``."""
    mu, nu = Partition(mu), Partition(nu)
    _check_pair(mu, nu)
    return product_conj_comp(mu, m, unsafe) - product_conj_comp(nu, m, unsafe)


def triple_difference(mu: Iterable[int], nu: Iterable[int]) -> dict[LambdaIndex, int]:
    """The difference in triple coordinates (valid for every stable ``m``)."""
    out = Counter(conj_comp_coefficients(tuple(mu)))
    out.subtract(conj_comp_coefficients(tuple(nu)))
    return {k: v for k, v in out.items() if v}


# --------------------------------------------------------------------------
# structural checks, computed from generic products


def check_symmetry(mu: Iterable[int], m: int) -> bool:
    """Swapping ``gamma`` and ``sigma`` keeps the coefficient (where the swap assembles)."""
    mu = Partition(mu)
    if m < stable_bound(mu):
        raise StabilityError(f"m={m} is below the stable bound {stable_bound(mu)}")
    e = exact_product(mu, m)
    for lam, c in e.terms.items():
        idx = disassemble_lambda(lam, m)
        try:
            other = assemble_lambda(LambdaIndex(idx.eta, idx.sigma, idx.gamma), m)
        except AssemblyError:
            continue
        if e[other] != c:
            return False
    return True


def _by_triple(e: SchurExpansion, m: int) -> dict[LambdaIndex, int]:
    out: dict[LambdaIndex, int] = {}
    for lam, c in e.terms.items():
        idx = disassemble_lambda(lam, m)
        if idx in out or assemble_lambda(idx, m) != lam:
            raise AssertionError(f"{format_partition(lam)} has no unique triple at m={m}")
        out[idx] = c
    return out


def check_stability(mu: Iterable[int], nu: Iterable[int]) -> bool:
    """The difference agrees triple by triple at ``m`` and ``m + 1``."""
    mu, nu = Partition(mu), Partition(nu)
    _check_pair(mu, nu)
    m = stable_bound(mu)
    views = []
    for k in (m, m + 1):
        diff = exact_product(mu, k) - exact_product(nu, k)
        views.append(_by_triple(diff, k))
    return views[0] == views[1]


# --------------------------------------------------------------------------
# Kronecker product of a hook with a square


def kronecker_hook_square(m: int, k: int) -> SchurExpansion:
    """``s_{(n-k, 1^k)} * s_{(m^m)}`` (Kronecker product, ``n = m^2``) as an
    alternating sum of the products ``s_{mu'} s_{mu^c}`` over ``|mu| <= k``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if not 0 <= k <= m * m - 1:
        raise ValueError(f"k must lie in [0, {m * m - 1}], got {k}")
    total: Counter = Counter()
    for i in range(k + 1):
        sign = -1 if (k - i) % 2 else 1
        for mu in partitions_of(i, max_part=m, max_len=m):
            if m >= stable_bound(mu):
                e = product_conj_comp(mu, m)
            else:
                e = exact_product(mu, m)
            for lam, c in e.terms.items():
                total[lam] += sign * c
    return SchurExpansion(dict(total))
