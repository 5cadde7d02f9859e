"""Sequential baselines and the brute-force oracles used by the tests.

``seq_bs`` is the classic monotone-tails binary-search LIS (O(n log k));
``seq_avl`` computes weighted-LIS dp values left to right with an
augmented AVL tree ordered by value (subtree-max scores, strict-less
queries).  ``brute_lis`` / ``brute_wlis`` evaluate the DP recurrences
directly in O(n^2) and are the ground truth everything else is checked
against.  ``SortedSetOracle`` replays ordered-set scripts for the vEB
differential suite.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort

import numpy as np
from numba import njit

BRUTE_CAP = 4096


@njit(cache=True, nogil=True)
def _seq_bs(values):
    n = len(values)
    tails = np.empty(n, np.int64)  # tails[r] = smallest value of rank r+1
    ranks = np.empty(n, np.int32)
    k = 0
    for i in range(n):
        v = values[i]
        lo, hi = 0, k
        while lo < hi:
            mid = (lo + hi) >> 1
            if tails[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        ranks[i] = lo + 1
        tails[lo] = v
        if lo == k:
            k += 1
    return ranks, k


def seq_bs(values):
    """Ranks and LIS length via the monotone-array binary-search method."""
    values = np.ascontiguousarray(values, dtype=np.int64)
    if len(values) == 0:
        raise ValueError("seq_bs needs a nonempty input")
    ranks, k = _seq_bs(values)
    return ranks, int(k)


@njit(cache=True)
def _avl_h(ht, x):
    return 0 if x == -1 else ht[x]


@njit(cache=True)
def _avl_update(dpv, mx, ht, lc, rc, node):
    h = 1
    m = dpv[node]
    l = lc[node]
    r = rc[node]
    if l != -1:
        if ht[l] + 1 > h:
            h = ht[l] + 1
        if mx[l] > m:
            m = mx[l]
    if r != -1:
        if ht[r] + 1 > h:
            h = ht[r] + 1
        if mx[r] > m:
            m = mx[r]
    ht[node] = h
    mx[node] = m


@njit(cache=True)
def _avl_rot_left(dpv, mx, ht, lc, rc, node):
    r = rc[node]
    rc[node] = lc[r]
    lc[r] = node
    _avl_update(dpv, mx, ht, lc, rc, node)
    _avl_update(dpv, mx, ht, lc, rc, r)
    return r


@njit(cache=True)
def _avl_rot_right(dpv, mx, ht, lc, rc, node):
    l = lc[node]
    lc[node] = rc[l]
    rc[l] = node
    _avl_update(dpv, mx, ht, lc, rc, node)
    _avl_update(dpv, mx, ht, lc, rc, l)
    return l


@njit(cache=True)
def _avl_rebalance(dpv, mx, ht, lc, rc, node):
    _avl_update(dpv, mx, ht, lc, rc, node)
    bal = _avl_h(ht, lc[node]) - _avl_h(ht, rc[node])
    if bal > 1:
        l = lc[node]
        if _avl_h(ht, lc[l]) < _avl_h(ht, rc[l]):
            lc[node] = _avl_rot_left(dpv, mx, ht, lc, rc, l)
        return _avl_rot_right(dpv, mx, ht, lc, rc, node)
    if bal < -1:
        r = rc[node]
        if _avl_h(ht, rc[r]) < _avl_h(ht, lc[r]):
            rc[node] = _avl_rot_right(dpv, mx, ht, lc, rc, r)
        return _avl_rot_left(dpv, mx, ht, lc, rc, node)
    return node


@njit(cache=True, nogil=True)
def _seq_avl(values, weights):
    n = len(values)
    kv = np.empty(n, np.int64)  # node key: (value, insertion order)
    ks = np.empty(n, np.int64)
    dpv = np.empty(n, np.int64)
    mx = np.empty(n, np.int64)
    lc = np.empty(n, np.int64)
    rc = np.empty(n, np.int64)
    ht = np.empty(n, np.int64)
    dp_out = np.empty(n, np.int64)
    path = np.empty(96, np.int64)
    pdir = np.empty(96, np.int64)
    root = -1
    for i in range(n):
        v = values[i]
        # strict-less range-max: equal values never chain
        best = np.int64(0)
        has = False
        node = root
        while node != -1:
            if kv[node] < v:
                cand = dpv[node]
                l = lc[node]
                if l != -1 and mx[l] > cand:
                    cand = mx[l]
                if not has or cand > best:
                    best = cand
                    has = True
                node = rc[node]
            else:
                node = lc[node]
        d = weights[i]
        if has and best > 0:
            d += best
        dp_out[i] = d
        kv[i] = v
        ks[i] = i
        dpv[i] = d
        mx[i] = d
        lc[i] = -1
        rc[i] = -1
        ht[i] = 1
        if root == -1:
            root = i
            continue
        node = root
        sp = 0
        while True:
            path[sp] = node
            less = v < kv[node] or (v == kv[node] and i < ks[node])
            if less:
                pdir[sp] = 0
                nxt = lc[node]
            else:
                pdir[sp] = 1
                nxt = rc[node]
            sp += 1
            if nxt == -1:
                if less:
                    lc[node] = i
                else:
                    rc[node] = i
                break
            node = nxt
        for s in range(sp - 1, -1, -1):
            p = path[s]
            q = _avl_rebalance(dpv, mx, ht, lc, rc, p)
            if s == 0:
                root = q
            elif pdir[s - 1] == 0:
                lc[path[s - 1]] = q
            else:
                rc[path[s - 1]] = q
    return dp_out


def seq_avl(values, weights):
    """Weighted-LIS dp array via an augmented order-by-value AVL tree."""
    values = np.ascontiguousarray(values, dtype=np.int64)
    weights = np.ascontiguousarray(weights, dtype=np.int64)
    if len(values) != len(weights):
        raise ValueError("values and weights must have the same length")
    if len(values) == 0:
        raise ValueError("seq_avl needs a nonempty input")
    return _seq_avl(values, weights)


def brute_lis(values, cap: int = BRUTE_CAP):
    """Direct O(n^2) evaluation of the unweighted DP recurrence."""
    values = np.asarray(values, dtype=np.int64)
    n = len(values)
    if n > cap:
        raise ValueError(f"brute_lis capped at n={cap}, got {n}")
    dp = np.ones(n, dtype=np.int32)
    for i in range(1, n):
        m = values[:i] < values[i]
        if m.any():
            dp[i] = dp[:i][m].max() + 1
    return dp


def brute_wlis(values, weights, cap: int = BRUTE_CAP):
    """Direct O(n^2) evaluation of the weighted DP recurrence."""
    values = np.asarray(values, dtype=np.int64)
    weights = np.asarray(weights, dtype=np.int64)
    if len(values) != len(weights):
        raise ValueError("values and weights must have the same length")
    n = len(values)
    if n > cap:
        raise ValueError(f"brute_wlis capped at n={cap}, got {n}")
    dp = np.empty(n, dtype=np.int64)
    for i in range(n):
        m = values[:i] < values[i]
        best = dp[:i][m].max() if m.any() else 0
        dp[i] = weights[i] + (best if best > 0 else 0)
    return dp


class SortedSetOracle:
    """Reference ordered integer set (sorted list + bisect)."""

    def __init__(self, keys=()):
        self.keys = sorted(keys)

    def __len__(self):
        return len(self.keys)

    def insert(self, k):
        i = bisect_left(self.keys, k)
        if i == len(self.keys) or self.keys[i] != k:
            self.keys.insert(i, k)

    def delete(self, k):
        i = bisect_left(self.keys, k)
        if i < len(self.keys) and self.keys[i] == k:
            del self.keys[i]

    def batch_insert(self, batch):
        for k in batch:
            self.insert(k)

    def batch_delete(self, batch):
        for k in batch:
            self.delete(k)

    def member(self, k):
        i = bisect_left(self.keys, k)
        return i < len(self.keys) and self.keys[i] == k

    def min(self):
        return self.keys[0] if self.keys else None

    def max(self):
        return self.keys[-1] if self.keys else None

    def predecessor(self, k):
        i = bisect_left(self.keys, k)
        return self.keys[i - 1] if i > 0 else None

    def successor(self, k):
        i = bisect_right(self.keys, k)
        return self.keys[i] if i < len(self.keys) else None

    def range_query(self, lo, hi):
        return self.keys[bisect_left(self.keys, lo) : bisect_right(self.keys, hi)]


def oracle_sorted_set(script):
    """Replay a mutation/query script, returning the query answers.

    Ops: ("insert", k), ("delete", k), ("batch_insert", keys),
    ("batch_delete", keys), ("member", k), ("min",), ("max",),
    ("pred", k), ("succ", k), ("range", lo, hi).
    """
    o = SortedSetOracle()
    answers = []
    for op, *args in script:
        if op == "insert":
            o.insert(*args)
        elif op == "delete":
            o.delete(*args)
        elif op == "batch_insert":
            o.batch_insert(*args)
        elif op == "batch_delete":
            o.batch_delete(*args)
        elif op == "member":
            answers.append(o.member(*args))
        elif op == "min":
            answers.append(o.min())
        elif op == "max":
            answers.append(o.max())
        elif op == "pred":
            answers.append(o.predecessor(*args))
        elif op == "succ":
            answers.append(o.successor(*args))
        elif op == "range":
            answers.append(o.range_query(*args))
        else:
            raise ValueError(f"unknown op {op!r}")
    return answers
