"""Phase-parallel LIS: all ranks in k rounds, plus witness reconstruction.

``lis_ranks`` runs one tournament-tree round per rank; the objects
removed in round r are exactly the objects whose LIS-ending-here length
is r.  Frontiers are recovered afterwards by a stable bucket of the
rank array.  ``reconstruct_lis`` merges consecutive frontiers by index
to find, for each object, the last lower-rank object before it (a valid
best decision because values within a frontier are non-increasing), and
walks one chain back from a maximum-rank object.

All indices in this module are 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .tournament import TournamentTree


@dataclass
class LisResult:
    ranks: np.ndarray  # int32, ranks[i] >= 1
    k: int  # max rank == LIS length
    frontiers: list  # frontiers[r-1] = ascending indices with rank r
    rounds: int = 0  # driver rounds executed (== k)
    visits: int = 0  # tournament node visits


def frontiers(ranks) -> list:
    """Stable bucket of the rank array: frontier r holds all indices i
    with ranks[i] == r, in ascending index order."""
    ranks = np.asarray(ranks)
    if len(ranks) == 0:
        return []
    order = np.argsort(ranks, kind="stable")
    counts = np.bincount(ranks)[1:]  # ranks start at 1
    out = []
    pos = 0
    for c in counts:
        out.append(order[pos : pos + int(c)])
        pos += int(c)
    return out


def lis_ranks(values) -> LisResult:
    """Compute every object's rank (Eq.-style dp) in exactly k rounds."""
    values = np.asarray(values, dtype=np.int64)
    if values.ndim != 1 or len(values) == 0:
        raise ValueError("lis_ranks needs a nonempty 1-D value array")
    n = len(values)
    tree = TournamentTree(values)
    ranks = np.zeros(n, dtype=np.int32)
    r = 0
    while not tree.is_exhausted():
        r += 1
        tree.process_frontier(r, ranks)
    return LisResult(ranks, r, frontiers(ranks), rounds=r, visits=tree.visits)


def reconstruct_lis(values, result: LisResult) -> list[int]:
    """One concrete LIS as an ascending index list of length ``result.k``.

    Rule: each rank-r object links to the last rank-(r-1) object before
    it; the walk starts from the first maximum-rank object.  The linked
    predecessor always has a strictly smaller value because each
    frontier is non-increasing in value.
    """
    values = np.asarray(values)
    k = result.k
    fronts = result.frontiers
    n = len(values)
    prev = np.full(n, -1, dtype=np.int64)
    for r in range(1, k):
        lower = fronts[r - 1]
        upper = fronts[r]
        li = 0
        last = -1
        for j in upper:
            while li < len(lower) and lower[li] < j:
                last = int(lower[li])
                li += 1
            prev[j] = last
    chain = [int(fronts[k - 1][0])]
    while prev[chain[-1]] >= 0:
        chain.append(int(prev[chain[-1]]))
    chain.reverse()
    return chain
