"""Command line front-end.

Exit status: 0 on success, 1 on bad input or a violated precondition, 2
when a sweep, lexmin check or injection check finds a violation (or a
cached result drifts).
"""

from __future__ import annotations

import argparse
import hashlib
import os
import sys
from pathlib import Path
from typing import Callable, Optional, Sequence

from . import __version__
from .classify import classify
from .covers import covers, lexmin_report, verify_conjecture
from .expand import (
    difference,
    kronecker_hook_square,
    product_conj_comp,
    stable_bound,
)
from .injections import ALGORITHMS, InjectionFailure, qualifies, verify_injection
from .partitions import PartitionError, format_partition, parse_partition

CACHE_ENV = "SCHURCOVER_CACHE"
CACHE_STAMP = "schurcover-cache 1"

OK, DOMAIN_ERROR, VIOLATION = 0, 1, 2


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        raise CliError(message)


def _partition(text: str):
    try:
        return parse_partition(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _pick_m(args, mu) -> int:
    return args.m if args.m is not None else stable_bound(mu)


# each handler returns (output text, exit status)


def cmd_classify(args) -> tuple[str, int]:
    tc = classify(args.nu)
    if args.format == "tsv":
        fields = [tc.variant, format_partition(tc.beta), str(tc.s), format_partition(tc.alpha), tc.side or ""]
        return "\t".join(fields) + "\n", OK
    return tc.render() + "\n", OK


def cmd_expand(args) -> tuple[str, int]:
    e = product_conj_comp(args.mu, _pick_m(args, args.mu), unsafe=args.unsafe_m)
    return e.serialize(), OK


def cmd_diff(args) -> tuple[str, int]:
    e = difference(args.mu, args.nu, _pick_m(args, args.mu), unsafe=args.unsafe_m)
    return e.serialize(), OK


def cmd_covers(args) -> tuple[str, int]:
    v = covers(args.mu, args.nu, args.m)
    if args.format == "tsv":
        w = format_partition(v.witness) if v.witness is not None else ""
        line = "\t".join([format_partition(v.mu), format_partition(v.nu), str(v.m), str(int(v.positive)), w])
        return line + "\n", OK
    return v.render() + "\n", OK


def cmd_verify(args) -> tuple[str, int]:
    report = verify_conjecture(args.n, jobs=args.jobs)
    text = report.tsv() if args.format == "tsv" else report.render()
    return text, VIOLATION if report.violations else OK


def cmd_lexmin(args) -> tuple[str, int]:
    r = lexmin_report(args.nu)
    if args.format == "tsv":
        line = "\t".join([format_partition(r.eta), format_partition(r.conjectured), str(int(r.match))])
        return line + "\n", OK if r.match else VIOLATION
    return r.render() + "\n", OK if r.match else VIOLATION


def cmd_inject(args) -> tuple[str, int]:
    name = args.algorithm
    if name is None:
        fits = [a for a in ALGORITHMS if qualifies(args.nu, a)]
        if not fits:
            raise ValueError(f"{format_partition(args.nu)} satisfies no injection hypothesis")
        name = fits[0]
    try:
        report = verify_injection(args.nu, name, raise_on_failure=False, jobs=args.jobs or 1)
    except InjectionFailure as exc:
        report = exc.report
    return report.render(), OK if report.ok else VIOLATION


def cmd_kron(args) -> tuple[str, int]:
    return kronecker_hook_square(args.m_square, args.k).serialize(), OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=_positive, default=None, help="square size (default: stable bound)")
    common.add_argument("--format", choices=["text", "tsv"], default="text")
    common.add_argument("--jobs", type=_positive, default=None, help="worker processes (default: all cores)")
    common.add_argument(
        "--cache-dir",
        default=os.environ.get(CACHE_ENV),
        help=f"result cache directory (default: ${CACHE_ENV}, unset disables caching)",
    )
    common.add_argument("--unsafe-m", action="store_true", help="allow m below the stable bound")
    common.add_argument("--recheck", action="store_true", help="recompute and compare with the cache")

    parser = _Parser(prog="schurcover", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="type 1 / type 2 reading of a partition")
    p.add_argument("nu", type=_partition)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("expand", parents=[common], help="Schur expansion of s_{mu'} s_{mu^c}")
    p.add_argument("mu", type=_partition)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("diff", parents=[common], help="expansion of the difference for mu over nu")
    p.add_argument("mu", type=_partition)
    p.add_argument("nu", type=_partition)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("covers", parents=[common], help="does mu cover nu")
    p.add_argument("mu", type=_partition)
    p.add_argument("nu", type=_partition)
    p.set_defaults(func=cmd_covers)

    p = sub.add_parser("verify", parents=[common], help="sweep every nu of weight n")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lexmin", parents=[common], help="lex-least eta for a type 1 partition")
    p.add_argument("nu", type=_partition)
    p.set_defaults(func=cmd_lexmin)

    p = sub.add_parser("inject", parents=[common], help="check an injection exhaustively")
    p.add_argument("nu", type=_partition)
    p.add_argument("--algorithm", choices=sorted(ALGORITHMS), default=None)
    p.set_defaults(func=cmd_inject)

    p = sub.add_parser("kron", parents=[common], help="Kronecker product of a hook with the square")
    p.add_argument("m_square", metavar="m", type=_positive)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_kron)
    return parser


# --------------------------------------------------------------------------
# cache


def _cache_key(args) -> str:
    """Verb plus canonical arguments; flags that never change output are dropped."""
    parts = [args.verb]
    for name in ("nu", "mu", "n", "m_square", "k", "m", "format", "unsafe_m", "algorithm"):
        if hasattr(args, name):
            value = getattr(args, name)
            if isinstance(value, tuple):
                value = format_partition(value)
            parts.append(f"{name}={value}")
    return "&".join(parts)


def _cache_path(cache_dir: str, key: str) -> Path:
    digest = hashlib.sha256(key.encode()).hexdigest()[:24]
    verb = key.split("&", 1)[0]
    return Path(cache_dir) / verb / f"{digest}.out"


def _read_cache(path: Path, key: str) -> Optional[tuple[str, int]]:
    try:
        raw = path.read_text()
    except OSError:
        return None
    header, _, body = raw.partition("\n")
    keyline, _, body = body.partition("\n")
    fields = header.split(" exit=")
    if len(fields) != 2 or fields[0] != CACHE_STAMP or keyline != key:
        return None
    return body, int(fields[1])


def _write_cache(path: Path, key: str, out: str, status: int) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".tmp{os.getpid()}")
    tmp.write_text(f"{CACHE_STAMP} exit={status}\n{key}\n{out}")
    os.replace(tmp, path)


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliError as exc:
        print(f"error: {exc}", file=stderr)
        return DOMAIN_ERROR
    handler: Callable = args.func
    path = key = None
    cached = None
    if args.cache_dir:
        key = _cache_key(args)
        path = _cache_path(args.cache_dir, key)
        cached = _read_cache(path, key)
        if cached is not None and not args.recheck:
            stdout.write(cached[0])
            return cached[1]
    try:
        out, status = handler(args)
    except (PartitionError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return DOMAIN_ERROR
    stdout.write(out)
    if path is not None:
        if cached is not None and cached != (out, status):
            print(f"error: result drifted from the cache entry {path}", file=stderr)
            return VIOLATION
        if cached is None:
            _write_cache(path, key, out, status)
    return status


def main() -> None:
    sys.exit(run())
