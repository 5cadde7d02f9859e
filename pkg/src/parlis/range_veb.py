"""Range-vEB dominance backend: static outer tree over x, staircases inside.

The outer structure is the implicit complete binary tree over the
points sorted by (x, y), padded to a power of two; a node's point set
is its contiguous x-rank span.  Each node keys its staircase on the
*relabeled* index: the node's point indices sorted ascending map to
local keys 0..n*-1, so every inner universe is only as large as the
subtree and total inner space is O(n log n).  Staircases start empty:
in rank order every point inside a query's region already carries its
final score, so seeding n zero-scored points per node would buy
nothing.

A dominant-max query (strict lower-left of (q_x, q_y)) decomposes the
x-prefix into the canonical subtrees of the x-rank interval; internal
nodes answer through their staircase's predecessor lookup at the
relabeled image of q_y, leaf nodes through their single scored point
record.  Ties take the smallest origin index.

A batch update routes each scored point to the O(log n) nodes on its
leaf-to-root path by merging index-sorted lists bottom-up, then every
touched staircase refines and applies its list independently.
"""

from __future__ import annotations

import numpy as np

from . import parallel
from .staircase import Staircase


def _merge_by_y(a, b):
    out = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i][0] < b[j][0]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return out


class RangeVebTree:
    """Static dominance structure over points ⟨x=value, y=index, dp⟩."""

    def __init__(self, points):
        pts = [(int(p[0]), int(p[1])) for p in points]
        n = len(pts)
        if n == 0:
            raise ValueError("need at least one point")
        ys = [y for _, y in pts]
        if sorted(ys) != list(range(n)):
            raise ValueError("y coordinates must be the distinct indices 0..n-1")
        self.n = n
        n_pad = 1 << max(0, (n - 1).bit_length())
        self.n_pad = n_pad
        order = sorted(range(n), key=lambda i: (pts[i][0], pts[i][1]))
        self.xs = np.array([pts[i][0] for i in order], dtype=np.int64)
        self.ys_in_order = np.array([pts[i][1] for i in order], dtype=np.int64)
        self.pos_of_y = np.empty(n, dtype=np.int64)
        self.pos_of_y[self.ys_in_order] = np.arange(n, dtype=np.int64)
        # node v spans x-rank interval [lo_v, hi_v) clipped to n
        self.node_ys = [None] * (2 * n_pad)
        self.stairs = [None] * (2 * n_pad)
        for v in range(1, 2 * n_pad):
            lo, hi = self._span(v)
            if lo >= n:
                continue
            hi = min(hi, n)
            ys_v = np.sort(self.ys_in_order[lo:hi])
            self.node_ys[v] = ys_v
            self.stairs[v] = Staircase(len(ys_v))
        # connecting-node records: the single point owned by each leaf
        self.leaf_scored = np.zeros(n, dtype=bool)
        self.leaf_dp = np.zeros(n, dtype=np.int64)

    def _span(self, v):
        level = v.bit_length() - 1
        width = self.n_pad >> level
        lo = (v - (1 << level)) * width
        return lo, lo + width

    def subtree_sizes(self):
        """Point count per outer node (space-ledger audit helper)."""
        return {v: len(ys) for v, ys in enumerate(self.node_ys) if ys is not None}

    def _canonical(self, b):
        """Canonical node cover of the x-rank prefix [0, b)."""
        out = []
        l = self.n_pad
        r = self.n_pad + b
        while l < r:
            if l & 1:
                out.append(l)
                l += 1
            if r & 1:
                r -= 1
                out.append(r)
            l >>= 1
            r >>= 1
        return out

    def dominant_max(self, q_x, q_y):
        """Max (score, origin) over scored points with x < q_x and y < q_y."""
        b = int(np.searchsorted(self.xs, q_x, side="left"))
        if b == 0:
            return None
        best = None
        for v in self._canonical(b):
            if v >= self.n_pad:  # connecting node: check its point record
                pos = v - self.n_pad
                if not self.leaf_scored[pos]:
                    continue
                y = int(self.ys_in_order[pos])
                if y >= q_y:
                    continue
                cand = (int(self.leaf_dp[pos]), y)
            else:
                q_local = int(np.searchsorted(self.node_ys[v], q_y, side="left"))
                cand = self.stairs[v].prefix_best(q_local)
                if cand is None:
                    continue
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
                best = cand
        return best

    def update_batch(self, updates) -> None:
        """Set final scores for a batch of (y, dp) pairs (distinct y).

        Routes each point to its host nodes bottom-up with index-sorted
        merges, then refines and applies every touched staircase
        concurrently; leaf records are updated as well.
        """
        if not updates:
            return
        seen = set()
        for y, _ in updates:
            if not 0 <= y < self.n:
                raise ValueError(f"unknown y index {y}")
            if y in seen:
                raise ValueError(f"duplicate y index {y} in update batch")
            seen.add(y)
        by_node = {}
        for y, dp in updates:
            y = int(y)
            dp = int(dp)
            pos = int(self.pos_of_y[y])
            by_node[self.n_pad + pos] = [(y, dp)]
            self.leaf_scored[pos] = True
            self.leaf_dp[pos] = dp
        level = sorted(by_node)
        while level[0] > 1:
            parents = {}
            for v in level:
                parents.setdefault(v >> 1, []).append(v)
            for p, kids in parents.items():
                if len(kids) == 2:
                    by_node[p] = _merge_by_y(by_node[kids[0]], by_node[kids[1]])
                else:
                    by_node[p] = by_node[kids[0]]
            level = sorted(parents)

        def apply_one(v):
            ys_v = self.node_ys[v]
            batch = [
                (int(np.searchsorted(ys_v, y)), dp, y) for y, dp in by_node[v]
            ]
            self.stairs[v].apply_update(batch)
            return None

        parallel.run_tasks([(lambda v=v: apply_one(v)) for v in sorted(by_node)])

    @property
    def visits(self) -> int:
        return sum(s.visits for s in self.stairs if s is not None)
