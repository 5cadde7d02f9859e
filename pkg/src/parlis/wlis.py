"""Weighted-LIS driver over a pluggable dominance backend.

Ranks come from the unweighted phase-parallel pass; round r then
queries, for every rank-r object j concurrently, the maximum final
score strictly lower-left of (A_j, j), sets
``dp[j] = w_j + max(0, best)`` (the clamp lives here in the driver so
signed weights stay correct with either backend), and pushes the
round's scores back in one batch.  Rank order guarantees that every
point a query can see is already final, which is why the Range-vEB
backend may start its staircases empty.

The witness walk is driver-side bookkeeping: each object remembers the
origin of the score it extended (only when that score was positive;
extending a zero-or-negative chain never beats starting fresh).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import parallel
from .lis import lis_ranks
from .range_tree import RangeTree
from .range_veb import RangeVebTree
from .staircase import Point

BACKENDS = ("range_tree", "range_veb")


@dataclass
class WlisResult:
    dp: np.ndarray  # int64, dp[i] per the weighted recurrence
    best: int  # max dp value
    best_index: int  # smallest index attaining it
    choice: np.ndarray  # int64 predecessor index, -1 when starting fresh
    k: int  # max rank (round count)
    ranks: np.ndarray
    visits: int = 0  # tournament node visits + backend structure visits


def wlis(values, weights, backend: str = "range_tree") -> WlisResult:
    """All weighted dp values; identical output for either backend."""
    values = np.asarray(values, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.int64)
    if len(values) != len(weights):
        raise ValueError("values and weights must have the same length")
    if len(values) == 0:
        raise ValueError("wlis needs a nonempty input")
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; pick one of {BACKENDS}")
    n = len(values)
    res = lis_ranks(values)
    points = [Point(int(values[i]), i, 0) for i in range(n)]
    struct = RangeTree(points) if backend == "range_tree" else RangeVebTree(points)
    dp = np.zeros(n, dtype=np.int64)
    choice = np.full(n, -1, dtype=np.int64)

    def query_chunk(chunk):
        return [struct.dominant_max(int(values[j]), int(j)) for j in chunk]

    for frontier in res.frontiers:
        idx = [int(j) for j in frontier]
        answers = parallel.map_chunks(query_chunk, idx, min_grain=256)
        for j, ans in zip(idx, answers):
            w = int(weights[j])
            if ans is not None and ans[0] > 0:
                dp[j] = w + ans[0]
                choice[j] = ans[1]
            else:
                dp[j] = w
        struct.update_batch([(j, int(dp[j])) for j in idx])
    best_index = int(np.argmax(dp))
    visits = res.visits + getattr(struct, "visits", 0)
    return WlisResult(dp, int(dp[best_index]), best_index, choice, res.k, res.ranks, visits)


def reconstruct_wlis(result: WlisResult) -> list[int]:
    """One optimal witness: ascending indices whose weights sum to best."""
    chain = [result.best_index]
    while result.choice[chain[-1]] >= 0:
        chain.append(int(result.choice[chain[-1]]))
    chain.reverse()
    return chain
