"""Structured fork-join helpers shared by all parallel code paths.

The library expresses parallelism as flat lists of independent tasks
(disjoint subtrees, disjoint inner structures, chunks of a read-only
query batch).  ``run_tasks`` executes such a list either inline or on a
shared thread pool; results always come back in submission order, so
every caller is deterministic regardless of worker count or schedule.

Tasks submitted from inside a worker run inline.  This keeps the pool
deadlock-free (a parent never blocks on a child that cannot be
scheduled) and means only the outermost fork of a nested algorithm
fans out, which is where the work is anyway.

CPython's GIL serializes pure-Python tasks; real speedup is only seen
for tasks that release the GIL (the numba kernels used by the
tournament tree and range-tree backends are compiled with
``nogil=True``).  Correctness and determinism never depend on that.
"""

from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager

_lock = threading.Lock()
_num_threads = max(1, os.cpu_count() or 1)
_pool: ThreadPoolExecutor | None = None
_pool_size = 0
_tls = threading.local()


def get_num_threads() -> int:
    return _num_threads


def set_num_threads(n: int) -> None:
    """Set the worker count used by all subsequent parallel sections."""
    global _num_threads
    if n < 1:
        raise ValueError(f"thread count must be >= 1, got {n}")
    with _lock:
        _num_threads = n


@contextmanager
def num_threads(n: int):
    """Temporarily override the worker count."""
    old = get_num_threads()
    set_num_threads(n)
    try:
        yield
    finally:
        set_num_threads(old)


def _get_pool(size: int) -> ThreadPoolExecutor:
    global _pool, _pool_size
    with _lock:
        if _pool is None or _pool_size < size:
            if _pool is not None:
                _pool.shutdown(wait=False)
            _pool = ThreadPoolExecutor(max_workers=size, thread_name_prefix="parlis")
            _pool_size = size
        return _pool


def _in_worker() -> bool:
    return getattr(_tls, "in_worker", False)


def _run_marked(fn):
    _tls.in_worker = True
    try:
        return fn()
    finally:
        _tls.in_worker = False


def run_tasks(tasks):
    """Run a list of zero-argument callables, returning results in order.

    Inline when a single worker is configured, the list is trivial, or
    we are already inside a pool worker; otherwise fan out on the pool
    and join.  The join order (and therefore every observable result)
    is the submission order.
    """
    tasks = list(tasks)
    n = get_num_threads()
    if n <= 1 or len(tasks) <= 1 or _in_worker():
        return [fn() for fn in tasks]
    pool = _get_pool(n)
    futures = [pool.submit(_run_marked, fn) for fn in tasks]
    return [f.result() for f in futures]


def map_chunks(fn, items, min_grain=1):
    """Apply ``fn`` to contiguous chunks of ``items`` in parallel.

    ``fn`` receives a list slice and returns a list; the concatenation
    (in index order) is returned.  Used for read-only query batches.
    """
    items = list(items)
    n = get_num_threads()
    if n <= 1 or len(items) <= min_grain or _in_worker():
        return fn(items)
    grain = max(min_grain, (len(items) + n - 1) // n)
    chunks = [items[i : i + grain] for i in range(0, len(items), grain)]
    parts = run_tasks([(lambda c=c: fn(c)) for c in chunks])
    out = []
    for p in parts:
        out.extend(p)
    return out
