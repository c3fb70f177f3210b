"""Cover decisions, exhaustive sweeps and the lex-minimal eta check."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .classify import is_type1, predicted_cover
from .expand import (
    LambdaIndex,
    StabilityError,
    assemble_lambda,
    conj_comp_coefficients,
    eta_reach,
    stable_bound,
    triple_difference,
)
from .partitions import (
    Partition,
    PartitionError,
    add_box,
    complement,
    conjugate,
    contains,
    format_partition,
    lex_key,
    outer_corners,
    partitions_of,
    subpartitions,
)


@dataclass(frozen=True)
class CoverVerdict:
    mu: Partition
    nu: Partition
    m: int
    positive: bool
    witness: Optional[Partition] = None

    def render(self) -> str:
        if self.positive:
            return "positive"
        return f"negative witness={format_partition(self.witness or ())}"


def _witness(neg: Iterable[LambdaIndex], m: int) -> Optional[Partition]:
    lams = [assemble_lambda(idx, m) for idx in neg]
    if not lams:
        return None
    width = max(len(x) for x in lams)
    return min(lams, key=lambda x: lex_key(x, width))


def covers(mu: Iterable[int], nu: Iterable[int], m: Optional[int] = None) -> CoverVerdict:
    mu, nu = Partition(mu), Partition(nu)
    if not contains(mu, nu):
        raise PartitionError(f"{format_partition(nu)} is not contained in {format_partition(mu)}")
    if sum(mu) != sum(nu) + 1:
        raise PartitionError(f"|mu|={sum(mu)} must exceed |nu|={sum(nu)} by exactly one")
    bound = stable_bound(mu)
    if m is None:
        m = bound
    elif m < bound:
        raise StabilityError(f"m={m} is below the stable bound {bound}")
    diff = triple_difference(mu, nu)
    neg = [k for k, v in diff.items() if v < 0]
    return CoverVerdict(mu, nu, m, not neg, _witness(neg, m))


# --------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class Violation:
    nu: Partition
    mu: Partition
    predicted: bool
    actual: bool
    witness: Optional[Partition]

    def render(self) -> str:
        w = format_partition(self.witness) if self.witness is not None else "[]"
        return (
            f"nu={format_partition(self.nu)} mu={format_partition(self.mu)} "
            f"predicted={int(self.predicted)} actual={int(self.actual)} witness={w}"
        )


@dataclass
class ConjectureReport:
    n: int
    pairs_checked: int = 0
    agreements: int = 0
    violations: list[Violation] = field(default_factory=list)

    def merge(self, other: "ConjectureReport") -> "ConjectureReport":
        return ConjectureReport(
            self.n,
            self.pairs_checked + other.pairs_checked,
            self.agreements + other.agreements,
            sorted(self.violations + other.violations, key=_violation_key),
        )

    def render(self) -> str:
        lines = [
            f"conjecture-sweep n={self.n} pairs={self.pairs_checked} "
            f"violations={len(self.violations)}"
        ]
        lines += [v.render() for v in self.violations]
        return "\n".join(lines) + "\n"

    def tsv(self) -> str:
        return "".join(
            "\t".join(
                [
                    format_partition(v.nu),
                    format_partition(v.mu),
                    str(int(v.predicted)),
                    str(int(v.actual)),
                    format_partition(v.witness or ()),
                ]
            )
            + "\n"
            for v in self.violations
        )


def _violation_key(v: Violation) -> tuple:
    w = 64
    return (lex_key(v.nu, w), lex_key(v.mu, w))


def sweep_nu(nu: tuple[int, ...]) -> ConjectureReport:
    """Check every one-box extension of ``nu``; the ``nu`` side is computed once."""
    nu = Partition(nu)
    report = ConjectureReport(sum(nu))
    expected = predicted_cover(nu)
    base = conj_comp_coefficients(tuple(nu))
    for corner in outer_corners(nu):
        mu = add_box(nu, corner)
        top = conj_comp_coefficients(tuple(mu))
        neg = [k for k, c in base.items() if top.get(k, 0) < c]
        actual = not neg
        predicted = expected == mu
        report.pairs_checked += 1
        if actual == predicted:
            report.agreements += 1
        else:
            w = _witness(neg, stable_bound(mu))
            report.violations.append(Violation(nu, mu, predicted, actual, w))
    return report


def verify_conjecture(n: int, jobs: Optional[int] = None) -> ConjectureReport:
    """Compare actual covers with the predicted cover for every ``nu`` of weight ``n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    nus = [tuple(p) for p in partitions_of(n)]
    jobs = jobs or os.cpu_count() or 1
    report = ConjectureReport(n)
    if jobs == 1 or len(nus) < 8:
        parts = map(sweep_nu, nus)
        for r in parts:
            report = report.merge(r)
        return report
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for r in pool.map(sweep_nu, nus, chunksize=max(1, len(nus) // (4 * jobs))):
            report = report.merge(r)
    return report


# --------------------------------------------------------------------------
# lex-minimal eta


def _require_type1(nu: Partition) -> None:
    if not nu or not is_type1(nu):
        raise PartitionError(f"{format_partition(nu)} is not of type 1")


def lexmin_actual(nu: Iterable[int], m: Optional[int] = None) -> tuple[Partition, int]:
    """Lex-least ``eta`` carrying a non-zero term of ``s_{nu'} s_{nu^c}``, and the
    coefficient of ``eta^c + eta'`` (that is ``gamma = eta'``, ``sigma`` empty).

    Any ``kappa`` reachable from ``eta`` is realised by ``gamma = kappa`` and an
    empty ``sigma``, so ``eta`` carries a term iff ``N_eta`` is non-empty.
    """
    nu = Partition(nu)
    _require_type1(nu)
    if m is not None and m < stable_bound(nu):
        raise StabilityError(f"m={m} is below the stable bound {stable_bound(nu)}")
    width = len(nu)
    # eta = () only carries a term for self-conjugate nu, never for type 1
    candidates = sorted((e for e in subpartitions(nu) if e), key=lambda e: lex_key(e, width))
    for eta in candidates:
        reach = eta_reach(nu, eta)
        if reach:
            return Partition(eta), reach.get(tuple(conjugate(eta)), 0)
    raise AssertionError(f"no eta carries a term for {format_partition(nu)}")


def lexmin_from_coefficients(nu: Iterable[int]) -> tuple[Partition, int]:
    """Same as :func:`lexmin_actual`, read off the full triple expansion."""
    nu = Partition(nu)
    _require_type1(nu)
    coefs = conj_comp_coefficients(tuple(nu))
    width = len(nu)
    eta = min({idx.eta for idx in coefs}, key=lambda e: lex_key(e, width))
    return eta, coefs.get(LambdaIndex(eta, conjugate(eta), Partition()), 0)


def lexmin_conjectured(nu: Iterable[int]) -> Partition:
    nu = Partition(nu)
    _require_type1(nu)
    nc = conjugate(nu)
    rows = [x - min(x, nc.part(k + 1)) for k, x in enumerate(nu)]
    return Partition(sorted((r for r in rows if r), reverse=True))


@dataclass(frozen=True)
class LexminResult:
    nu: Partition
    eta: Partition
    coefficient: int
    conjectured: Partition

    @property
    def match(self) -> bool:
        return self.eta == self.conjectured and self.coefficient == 1

    def render(self) -> str:
        return (
            f"eta={format_partition(self.eta)} conjectured={format_partition(self.conjectured)} "
            f"match={int(self.match)}"
        )


def lexmin_report(nu: Iterable[int]) -> LexminResult:
    nu = Partition(nu)
    eta, c = lexmin_actual(nu)
    return LexminResult(nu, eta, c, lexmin_conjectured(nu))


def check_lexmin(nu: Iterable[int]) -> bool:
    return lexmin_report(nu).match


def square_plus_beta_term(beta: Iterable[int], s: int) -> tuple[Partition, Partition]:
    """For ``nu = beta + (s^s)``: the partition ``nu`` and the term ``beta^c + beta'``
    at the stable ``m`` of ``nu``."""
    beta = Partition(beta)
    parts = list(beta) + [0] * max(0, s - len(beta))
    for k in range(s):
        parts[k] += s
    nu = Partition(parts)
    m = stable_bound(nu) + 1
    lam = assemble_lambda(LambdaIndex(beta, conjugate(beta), Partition()), m)
    return nu, lam


__all__ = [
    "CoverVerdict",
    "ConjectureReport",
    "LexminResult",
    "Violation",
    "check_lexmin",
    "covers",
    "lexmin_actual",
    "lexmin_conjectured",
    "lexmin_from_coefficients",
    "lexmin_report",
    "square_plus_beta_term",
    "sweep_nu",
    "verify_conjecture",
]
