"""Command line front end: ``count``, ``table``, ``verify`` and ``bench``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error,
3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from math import factorial
from typing import Sequence

from . import characters, oracle, polyformula
from .errors import CapacityError, ConsistencyError, PartitionParseError
from .partitions import Partition, class_size, parse_partition, partitions_of
from .records import METHODS, CountRecord, write_csv, write_jsonl
from .tables import count_pair, iter_table

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


class UsageError(Exception):
    pass


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except PartitionParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _methods_arg(text: str) -> list[str]:
    methods = [m.strip() for m in text.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHODS]
    if bad or not methods:
        raise argparse.ArgumentTypeError(f"unknown method(s) {bad or text!r}; choose from {METHODS}")
    return methods


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclefactor",
        description="Count factorizations of a long cycle into two permutations of given cycle types.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count factorizations for one pair of classes")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, default=None, help="target class (default: n)")
    p.add_argument("--method", choices=METHODS, default="positive")
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--budget", type=_positive_int, default=None)

    p = sub.add_parser("table", help="counts for every pair of classes of S_n")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--method", choices=METHODS, default="positive")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--parallel", type=_positive_int, default=1)
    p.add_argument("--budget", type=_positive_int, default=None)

    p = sub.add_parser("verify", help="cross-check methods and identities for n = 1..n-max")
    p.add_argument("--n-max", type=_positive_int, default=7)
    p.add_argument("--methods", type=_methods_arg, default=["positive", "hook", "brute"])
    p.add_argument("--budget", type=_positive_int, default=None)

    p = sub.add_parser("bench", help="time a full table computation")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--method", choices=METHODS, required=True)
    p.add_argument("--parallel", type=_positive_int, default=1)
    p.add_argument("--repeat", type=_positive_int, default=3)
    p.add_argument("--budget", type=_positive_int, default=None)
    return parser


def cmd_count(args, out) -> int:
    n = args.n
    nu = args.nu if args.nu is not None else Partition((n,))
    for name, p in (("lambda", args.lam), ("mu", args.mu), ("nu", nu)):
        if p.n != n:
            raise UsageError(f"--{name} [{p}] is not a partition of n={n}")
    if nu != Partition((n,)) and args.method not in ("frobenius", "brute"):
        raise UsageError(f"--nu other than [{n}] needs --method frobenius or brute")
    if args.method == "frobenius":
        count = characters.count_frobenius(nu, args.lam, args.mu)
    elif args.method == "brute":
        count = oracle.count_bruteforce(nu, args.lam, args.mu, budget=args.budget)
    else:
        count = count_pair(args.method, args.lam, args.mu)
    record = CountRecord(n=n, lam=args.lam, mu=args.mu, nu=nu, method=args.method, count=count)
    if args.format == "json":
        print(record.to_json(include_nu=True), file=out)
    else:
        print(count, file=out)
    return EXIT_OK


def cmd_table(args, out) -> int:
    records = iter_table(args.n, args.method, args.parallel, args.budget)
    if args.format == "csv":
        write_csv(records, out)
    else:
        write_jsonl(records, out)
    return EXIT_OK


def check_identities(n: int, counts: dict[tuple[Partition, Partition], int]) -> list[str]:
    """Row sums, grand sum, symmetry and parity vanishing for one table."""
    problems = []
    parts = partitions_of(n)
    for lam in parts:
        row = sum(counts[lam, mu] for mu in parts)
        if row != class_size(lam):
            problems.append(f"row sum for lambda=[{lam}] is {row}, expected {class_size(lam)}")
    grand = sum(counts.values())
    if grand != factorial(n):
        problems.append(f"grand sum is {grand}, expected {factorial(n)}")
    for lam in parts:
        for mu in parts:
            c = counts[lam, mu]
            if c != counts[mu, lam]:
                problems.append(f"asymmetric: c([{lam}],[{mu}])={c} but c([{mu}],[{lam}])={counts[mu, lam]}")
            if (len(lam) + len(mu)) % 2 != (n + 1) % 2 and c:
                problems.append(f"parity: c([{lam}],[{mu}])={c}, expected 0")
    return problems


def cmd_verify(args, out) -> int:
    methods = list(dict.fromkeys(args.methods))
    total_bad = 0
    for n in range(1, args.n_max + 1):
        parts = partitions_of(n)
        tables: dict[str, dict] = {m: {} for m in methods}
        bad = 0
        for lam in parts:
            for mu in parts:
                values = {}
                for m in methods:
                    try:
                        values[m] = count_pair(m, lam, mu, args.budget)
                    except ConsistencyError as exc:
                        values[m] = None
                        print(f"  n={n} lambda=[{lam}] mu=[{mu}] {m}: {exc}", file=out)
                    tables[m][lam, mu] = values[m]
                if len(set(values.values())) != 1 or None in values.values():
                    bad += 1
                    shown = ", ".join(f"{m}={v}" for m, v in values.items())
                    print(f"  MISMATCH n={n} lambda=[{lam}] mu=[{mu}]: {shown}", file=out)
        for m in methods:
            if any(v is None for v in tables[m].values()):
                continue
            for problem in check_identities(n, tables[m]):
                bad += 1
                print(f"  IDENTITY n={n} {m}: {problem}", file=out)
        total_bad += bad
        status = "ok" if not bad else f"{bad} problem(s)"
        print(f"n={n}: {len(parts) ** 2} pairs, {len(methods)} method(s): {status}", file=out)
    label = f"n=1..{args.n_max}"
    if total_bad:
        print(f"{label}: {total_bad} problem(s) across {len(methods)} methods", file=out)
        return EXIT_MISMATCH
    print(f"{label}: all pairs agree across {len(methods)} methods", file=out)
    return EXIT_OK


def _clear_caches() -> None:
    polyformula.clear_caches()
    characters._mn.cache_clear()
    characters._hook_series.cache_clear()
    oracle._row.cache_clear()


def cmd_bench(args, out) -> int:
    n = args.n
    expected = factorial(n)
    pairs = len(partitions_of(n)) ** 2
    ok = True
    times = []
    for i in range(1, args.repeat + 1):
        _clear_caches()
        start = time.perf_counter()
        checksum = sum(r.count for r in iter_table(n, args.method, args.parallel, args.budget))
        elapsed = time.perf_counter() - start
        times.append(elapsed)
        ok = ok and checksum == expected
        print(f"repeat {i}: {elapsed:.3f} s, {pairs / elapsed:,.0f} pairs/s", file=out)
    print(f"n={n} method={args.method} parallel={args.parallel} pairs={pairs}", file=out)
    print(f"best: {min(times):.3f} s, {pairs / min(times):,.0f} pairs/s", file=out)
    verdict = "ok" if ok else f"MISMATCH (expected {expected})"
    print(f"checksum: {checksum} {verdict}", file=out)
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {"count": cmd_count, "table": cmd_table, "verify": cmd_verify, "bench": cmd_bench}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ConsistencyError as exc:
        print(f"inconsistent result: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
