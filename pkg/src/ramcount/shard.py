"""Deterministic fan-out of enumeration shards across worker processes.

Partial tallies are summed, so the merge is order-independent and the
result is byte-identical whatever the worker count.  Falls back to serial
execution when forking is unavailable.
"""

from __future__ import annotations

from typing import Callable, Iterable


def sum_over_shards(worker: Callable, argslist: Iterable, threads: int) -> int:
    args = list(argslist)
    if threads <= 1 or len(args) <= 1:
        return sum(worker(a) for a in args)
    import multiprocessing as mp
    try:
        ctx = mp.get_context("fork")
    except ValueError:
        return sum(worker(a) for a in args)
    with ctx.Pool(processes=min(threads, len(args))) as pool:
        return sum(pool.map(worker, args))
