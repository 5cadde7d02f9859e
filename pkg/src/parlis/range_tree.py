"""Static range-tree dominance backend (the practical WLIS structure).

Points sorted by (x, y) live in an implicit complete binary outer tree
over x-rank; every outer node stores its points' y-coordinates in
sorted order plus a prefix-max tree over their scores (with the
smallest attaining origin index).  The point set never changes after
build, only scores do, so the inner structures are flat arrays instead
of balanced trees: same O(log^2 n) query/update, far simpler
invariants.

A dominant-max query decomposes the strict x-prefix into canonical
outer nodes (binary search on the (x, y) order handles duplicate x
values) and takes each node's prefix-max over y < q_y.  A batch score
update writes all touched inner leaves first, then rebuilds the
affected aggregates bottom-up; the rebuild recomputes from children, so
the result is independent of update order.  Kernels are numba-compiled
over the flat arrays and release the GIL.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NEG = np.iinfo(np.int64).min
BIG = np.iinfo(np.int64).max


@njit(cache=True, nogil=True)
def _lower_bound(arr, lo, hi, target):
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < target:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True, nogil=True)
def _query(xs, node_ys, node_off, iscore, iorig, inner_off, inner_pow, n_pad, n, qx, qy):
    b = _lower_bound(xs, 0, n, qx)
    best_s = NEG
    best_o = BIG
    l = n_pad
    r = n_pad + b
    while l < r:
        if l & 1:
            s, o = _node_prefix_max(node_ys, node_off, iscore, iorig, inner_off, inner_pow, l, qy)
            if o != BIG and (s > best_s or (s == best_s and o < best_o)):
                best_s, best_o = s, o
            l += 1
        if r & 1:
            r -= 1
            s, o = _node_prefix_max(node_ys, node_off, iscore, iorig, inner_off, inner_pow, r, qy)
            if o != BIG and (s > best_s or (s == best_s and o < best_o)):
                best_s, best_o = s, o
        l >>= 1
        r >>= 1
    return best_s, best_o


@njit(cache=True, nogil=True)
def _node_prefix_max(node_ys, node_off, iscore, iorig, inner_off, inner_pow, v, qy):
    off = node_off[v]
    size = node_off[v + 1] - off
    c = _lower_bound(node_ys, off, off + size, qy) - off
    if c == 0:
        return NEG, BIG
    base = inner_off[v]
    p = inner_pow[v]
    best_s = NEG
    best_o = BIG
    l = p
    r = p + c
    while l < r:
        if l & 1:
            s = iscore[base + l]
            o = iorig[base + l]
            if s > best_s or (s == best_s and o < best_o):
                best_s, best_o = s, o
            l += 1
        if r & 1:
            r -= 1
            s = iscore[base + r]
            o = iorig[base + r]
            if s > best_s or (s == best_s and o < best_o):
                best_s, best_o = s, o
        l >>= 1
        r >>= 1
    return best_s, best_o


@njit(cache=True, nogil=True)
def _build_inner(iscore, iorig, inner_off, inner_pow, v):
    base = inner_off[v]
    p = inner_pow[v]
    for i in range(p - 1, 0, -1):
        ls = iscore[base + 2 * i]
        lo = iorig[base + 2 * i]
        rs = iscore[base + 2 * i + 1]
        ro = iorig[base + 2 * i + 1]
        if ls > rs or (ls == rs and lo < ro):
            iscore[base + i] = ls
            iorig[base + i] = lo
        else:
            iscore[base + i] = rs
            iorig[base + i] = ro


@njit(cache=True, nogil=True)
def _update(iscore, iorig, inner_off, inner_pow, upd_slot, pos_arr, dp_arr, n_pad, levels):
    # phase 1: write all touched leaves
    for t in range(len(pos_arr)):
        pos = pos_arr[t]
        d = dp_arr[t]
        for lvl in range(levels):
            v = (n_pad + pos) >> lvl
            base = inner_off[v]
            p = inner_pow[v]
            iscore[base + p + upd_slot[pos, lvl]] = d
    # phase 2: rebuild affected aggregates bottom-up (recompute from
    # children, so the final state is independent of traversal order)
    for t in range(len(pos_arr)):
        pos = pos_arr[t]
        for lvl in range(levels):
            v = (n_pad + pos) >> lvl
            base = inner_off[v]
            p = inner_pow[v]
            idx = (p + upd_slot[pos, lvl]) >> 1
            while idx >= 1:
                ls = iscore[base + 2 * idx]
                lo = iorig[base + 2 * idx]
                rs = iscore[base + 2 * idx + 1]
                ro = iorig[base + 2 * idx + 1]
                if ls > rs or (ls == rs and lo < ro):
                    iscore[base + idx] = ls
                    iorig[base + idx] = lo
                else:
                    iscore[base + idx] = rs
                    iorig[base + idx] = ro
                idx >>= 1


class RangeTree:
    """Dominance-max structure over points ⟨x=value, y=index, dp⟩."""

    def __init__(self, points):
        pts = [(int(p[0]), int(p[1]), int(p[2])) for p in points]
        n = len(pts)
        if n == 0:
            raise ValueError("need at least one point")
        ys = [y for _, y, _ in pts]
        if sorted(ys) != list(range(n)):
            raise ValueError("y coordinates must be the distinct indices 0..n-1")
        self.n = n
        n_pad = 1 << max(0, (n - 1).bit_length())
        self.n_pad = n_pad
        self.levels = n_pad.bit_length()
        order = sorted(range(n), key=lambda i: (pts[i][0], pts[i][1]))
        self.xs = np.array([pts[i][0] for i in order], dtype=np.int64)
        self.ys_in_order = np.array([pts[i][1] for i in order], dtype=np.int64)
        self.pos_of_y = np.empty(n, dtype=np.int64)
        self.pos_of_y[self.ys_in_order] = np.arange(n, dtype=np.int64)
        dp_by_y = np.zeros(n, dtype=np.int64)
        for _, y, d in pts:
            dp_by_y[y] = d
        self.cur_dp = dp_by_y.copy()  # per-y scores, mirrors the leaves

        nodes = 2 * n_pad
        sizes = np.zeros(nodes, dtype=np.int64)
        spans = []
        for v in range(nodes):
            if v == 0:
                spans.append((0, 0))
                continue
            level = v.bit_length() - 1
            width = n_pad >> level
            lo = (v - (1 << level)) * width
            hi = min(lo + width, n)
            spans.append((lo, hi))
            sizes[v] = max(0, hi - lo)
        self.node_off = np.zeros(nodes + 1, dtype=np.int64)
        np.cumsum(sizes, out=self.node_off[1:])
        self.node_ys = np.empty(int(self.node_off[-1]), dtype=np.int64)
        self.inner_off = np.zeros(nodes, dtype=np.int64)
        self.inner_pow = np.zeros(nodes, dtype=np.int64)
        total = 0
        for v in range(1, nodes):
            s = int(sizes[v])
            if s == 0:
                continue
            p = 1 << max(0, (s - 1).bit_length())
            self.inner_off[v] = total
            self.inner_pow[v] = p
            total += 2 * p
        self.iscore = np.full(total, NEG, dtype=np.int64)
        self.iorig = np.full(total, BIG, dtype=np.int64)
        self.upd_slot = np.zeros((n, self.levels), dtype=np.int64)
        for v in range(1, nodes):
            lo, hi = spans[v]
            if hi <= lo:
                continue
            ys_v = np.sort(self.ys_in_order[lo:hi])
            off = int(self.node_off[v])
            self.node_ys[off : off + (hi - lo)] = ys_v
            base = int(self.inner_off[v])
            p = int(self.inner_pow[v])
            for j, y in enumerate(ys_v):
                self.iscore[base + p + j] = dp_by_y[y]
                self.iorig[base + p + j] = y
            _build_inner(self.iscore, self.iorig, self.inner_off, self.inner_pow, v)
        lvl_of = {}
        for pos in range(n):
            for lvl in range(self.levels):
                v = (n_pad + pos) >> lvl
                off = int(self.node_off[v])
                size = int(self.node_off[v + 1] - self.node_off[v])
                y = int(self.ys_in_order[pos])
                self.upd_slot[pos, lvl] = int(
                    np.searchsorted(self.node_ys[off : off + size], y)
                )
        del lvl_of

    def dominant_max(self, q_x, q_y):
        """Max (score, origin) over points with x < q_x and y < q_y."""
        s, o = _query(
            self.xs,
            self.node_ys,
            self.node_off,
            self.iscore,
            self.iorig,
            self.inner_off,
            self.inner_pow,
            self.n_pad,
            self.n,
            int(q_x),
            int(q_y),
        )
        if o == BIG:
            return None
        return int(s), int(o)

    def update_batch(self, updates) -> None:
        """Replace the scores of the given (y, new dp) points."""
        if not updates:
            return
        seen = set()
        for y, _ in updates:
            if not 0 <= y < self.n:
                raise ValueError(f"unknown y index {y}")
            if y in seen:
                raise ValueError(f"duplicate y index {y} in update batch")
            seen.add(y)
        upd = sorted((int(self.pos_of_y[int(y)]), int(d)) for y, d in updates)
        pos_arr = np.array([p for p, _ in upd], dtype=np.int64)
        dp_arr = np.array([d for _, d in upd], dtype=np.int64)
        self.cur_dp[self.ys_in_order[pos_arr]] = dp_arr
        _update(
            self.iscore,
            self.iorig,
            self.inner_off,
            self.inner_pow,
            self.upd_slot,
            pos_arr,
            dp_arr,
            self.n_pad,
            self.levels,
        )

    def audit(self) -> None:
        """Check every stored aggregate against a recompute from scores."""
        for v in range(1, 2 * self.n_pad):
            off = int(self.node_off[v])
            size = int(self.node_off[v + 1] - self.node_off[v])
            if size == 0:
                continue
            base = int(self.inner_off[v])
            p = int(self.inner_pow[v])
            for j in range(size):
                y = int(self.node_ys[off + j])
                assert self.iscore[base + p + j] == self.cur_dp[y], "stale inner leaf"
                assert self.iorig[base + p + j] == y, "corrupted leaf origin"
            for i in range(1, p):
                ls, lo = self.iscore[base + 2 * i], self.iorig[base + 2 * i]
                rs, ro = self.iscore[base + 2 * i + 1], self.iorig[base + 2 * i + 1]
                want = (ls, lo) if (ls > rs or (ls == rs and lo < ro)) else (rs, ro)
                got = (self.iscore[base + i], self.iorig[base + i])
                assert got == want, f"stale aggregate at node {v} slot {i}"
