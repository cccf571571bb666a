"""Full (lambda, mu) tables of counts, optionally spread over worker processes."""

from __future__ import annotations

import multiprocessing
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .characters import count_frobenius, count_hook
from .oracle import count_bruteforce
from .partitions import Partition, partitions_of
from .polyformula import _pairing_vector, count_positive_row
from .records import CountRecord


def count_pair(method: str, lam: Partition, mu: Partition, budget: int | None = None) -> int:
    n = sum(lam)
    if method == "positive":
        return count_positive_row(lam, [mu])[0]
    if method == "hook":
        return count_hook(lam, mu)
    if method == "frobenius":
        return count_frobenius(Partition((n,)), lam, mu)
    if method == "brute":
        return count_bruteforce(Partition((n,)), lam, mu, budget=budget)
    raise ValueError(f"unknown method {method!r}")


def table_row(method: str, lam: Partition, budget: int | None = None) -> list[int]:
    """Counts for ``lam`` against every mu, in partition order."""
    mus = partitions_of(sum(lam))
    if method == "positive":
        return count_positive_row(lam, mus)
    return [count_pair(method, lam, mu, budget) for mu in mus]


def _row_task(args: tuple[str, Partition, int | None]) -> list[int]:
    return table_row(*args)


def _pool_context():
    methods = multiprocessing.get_all_start_methods()
    return multiprocessing.get_context("fork" if "fork" in methods else None)


def iter_table(
    n: int, method: str = "positive", parallel: int = 1, budget: int | None = None
) -> Iterator[CountRecord]:
    """Yield one record per (lambda, mu) pair, outer lambda, inner mu.

    Order is the same whatever ``parallel`` is: rows are computed by the
    pool but consumed in submission order.
    """
    parts = partitions_of(n)
    if method == "positive":
        # warm the per-class cache so forked workers inherit it
        for lam in parts:
            _pairing_vector(lam)
    tasks = [(method, lam, budget) for lam in parts]
    if parallel <= 1:
        rows = map(_row_task, tasks)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=parallel, mp_context=_pool_context())
        rows = pool.map(_row_task, tasks, chunksize=max(1, len(tasks) // (4 * parallel)))
    try:
        for lam, row in zip(parts, rows):
            for mu, count in zip(parts, row):
                yield CountRecord(n=n, lam=lam, mu=mu, method=method, count=count)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)


def count_matrix(
    n: int, method: str = "positive", parallel: int = 1, budget: int | None = None
) -> dict[tuple[Partition, Partition], int]:
    return {(r.lam, r.mu): r.count for r in iter_table(n, method, parallel, budget)}
