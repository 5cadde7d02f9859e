"""Parallel tournament tree: frontier extraction for the phase-parallel LIS.

The tree is the implicit complete binary tree ``t[1 .. 2*n2-1]`` over the
input values, padded with ``INF`` tombstones to a power-of-two leaf count
``n2``; every internal node holds the minimum of its children.  A round
descends from the root carrying ``lmin`` (the smallest live value before
the current subtree), skips any subtree whose stored minimum exceeds it,
marks the qualifying leaves (the prefix-min objects) with the round
number, tombstones them, and refreshes the internal minima on the way
back up.  Sibling descents touch disjoint ranges, so the recursion is a
fork-join; the bound passed right is the left sibling's *pre-round*
minimum, captured before either side mutates.

The hot passes are numba kernels over the flat array (``nogil=True`` so
subtree tasks can run on real threads); the top few levels are expanded
in Python to form the task list.  ``visits`` counts every node
inspection for the work-bound checks.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from . import parallel

INF = np.iinfo(np.int64).max

_STACK = 4 * 64 + 8


@njit(cache=True, nogil=True)
def _process_subtree(t, rank, root, lmin0, r, n2):
    """Fused mark+remove+refresh pass. Returns (removed, visits)."""
    nodes = np.empty(_STACK, np.int64)
    bounds = np.empty(_STACK, np.int64)
    phases = np.empty(_STACK, np.int64)
    sp = 0
    nodes[0] = root
    bounds[0] = lmin0
    phases[0] = 0
    sp = 1
    removed = np.int64(0)
    visits = np.int64(0)
    while sp > 0:
        sp -= 1
        node = nodes[sp]
        lmin = bounds[sp]
        phase = phases[sp]
        if phase == 1:
            left = t[2 * node]
            right = t[2 * node + 1]
            t[node] = left if left < right else right
            continue
        visits += 1
        v = t[node]
        if v > lmin or v == INF:
            continue
        if node >= n2:
            rank[node - n2] = r
            t[node] = INF
            removed += 1
            continue
        nodes[sp] = node
        bounds[sp] = 0
        phases[sp] = 1
        sp += 1
        tl = t[2 * node]
        rb = lmin if lmin < tl else tl
        nodes[sp] = 2 * node + 1
        bounds[sp] = rb
        phases[sp] = 0
        sp += 1
        nodes[sp] = 2 * node
        bounds[sp] = lmin
        phases[sp] = 0
        sp += 1
    return removed, visits


@njit(cache=True, nogil=True)
def _mark_subtree(t, eff, rank, root, lmin0, r, n2):
    """Marking pass: set ranks and per-subtree frontier counts, no removal."""
    nodes = np.empty(_STACK, np.int64)
    bounds = np.empty(_STACK, np.int64)
    phases = np.empty(_STACK, np.int64)
    nodes[0] = root
    bounds[0] = lmin0
    phases[0] = 0
    sp = 1
    marked = np.int64(0)
    visits = np.int64(0)
    while sp > 0:
        sp -= 1
        node = nodes[sp]
        lmin = bounds[sp]
        phase = phases[sp]
        if phase == 1:
            eff[node] = eff[2 * node] + eff[2 * node + 1]
            continue
        visits += 1
        v = t[node]
        if v > lmin or v == INF:
            continue
        if node >= n2:
            rank[node - n2] = r
            eff[node] = 1
            marked += 1
            continue
        nodes[sp] = node
        phases[sp] = 1
        sp += 1
        tl = t[2 * node]
        rb = lmin if lmin < tl else tl
        nodes[sp] = 2 * node + 1
        bounds[sp] = rb
        phases[sp] = 0
        sp += 1
        nodes[sp] = 2 * node
        bounds[sp] = lmin
        phases[sp] = 0
        sp += 1
    return marked, visits


@njit(cache=True, nogil=True)
def _collect_subtree(t, eff, out, root, offset0, n2):
    """Write marked leaf indices into disjoint slots of ``out``."""
    nodes = np.empty(_STACK, np.int64)
    offs = np.empty(_STACK, np.int64)
    nodes[0] = root
    offs[0] = offset0
    sp = 1
    while sp > 0:
        sp -= 1
        node = nodes[sp]
        off = offs[sp]
        if node >= n2:
            out[off] = node - n2
            continue
        el = eff[2 * node]
        er = eff[2 * node + 1]
        if er > 0:
            nodes[sp] = 2 * node + 1
            offs[sp] = off + el
            sp += 1
        if el > 0:
            nodes[sp] = 2 * node
            offs[sp] = off
            sp += 1
    return 0


@njit(cache=True, nogil=True)
def _remove_marked_subtree(t, eff, root, n2):
    """Tombstone marked leaves, refresh minima, and zero the count array."""
    nodes = np.empty(_STACK, np.int64)
    phases = np.empty(_STACK, np.int64)
    nodes[0] = root
    phases[0] = 0
    sp = 1
    while sp > 0:
        sp -= 1
        node = nodes[sp]
        phase = phases[sp]
        if phase == 1:
            left = t[2 * node]
            right = t[2 * node + 1]
            t[node] = left if left < right else right
            continue
        if eff[node] == 0:
            continue
        eff[node] = 0
        if node >= n2:
            t[node] = INF
            continue
        nodes[sp] = node
        phases[sp] = 1
        sp += 1
        nodes[sp] = 2 * node + 1
        phases[sp] = 0
        sp += 1
        nodes[sp] = 2 * node
        phases[sp] = 0
        sp += 1
    return 0


class TournamentTree:
    """Min tournament tree over the input values with frontier rounds."""

    __slots__ = ("t", "n", "n2", "visits", "_eff", "_mark_open", "_mark_count")

    def __init__(self, values):
        values = np.asarray(values, dtype=np.int64)
        if values.ndim != 1 or len(values) == 0:
            raise ValueError("tournament tree needs a nonempty 1-D value array")
        if values.max() >= INF:
            raise ValueError("values must be strictly below the INF sentinel")
        n = len(values)
        n2 = 1 << max(0, (n - 1).bit_length())
        t = np.full(2 * n2, INF, dtype=np.int64)
        t[n2 : n2 + n] = values
        # bottom-up vectorized min per level
        lo = n2
        while lo > 1:
            half = lo >> 1
            t[half:lo] = np.minimum(t[lo : 2 * lo : 2], t[lo + 1 : 2 * lo : 2])
            lo = half
        self.t = t
        self.n = n
        self.n2 = n2
        self.visits = 0
        self._eff = np.zeros(2 * n2, dtype=np.int64)
        self._mark_open = False
        self._mark_count = 0

    def is_exhausted(self) -> bool:
        return self.t[1] == INF

    def _expand_tasks(self, r, rank_out, target):
        """Expand the top levels in Python, returning kernel tasks.

        Bounds for right siblings are captured before any mutation (the
        kernels run only after expansion finishes), matching the
        fork-join semantics of the recursive formulation.
        """
        t = self.t
        n2 = self.n2
        visits = 0
        removed = 0
        tasks = [(1, INF)]
        internals = []
        while len(tasks) < target:
            nxt = []
            grew = False
            for node, lmin in tasks:
                visits += 1
                v = t[node]
                if v > lmin or v == INF:
                    continue
                if node >= n2:
                    rank_out[node - n2] = r
                    t[node] = INF
                    removed += 1
                    continue
                internals.append(node)
                tl = t[2 * node]
                nxt.append((2 * node, lmin))
                nxt.append((2 * node + 1, min(lmin, tl)))
                grew = True
            tasks = nxt
            if not grew:
                break
        return tasks, internals, visits, removed

    def process_frontier(self, r: int, rank_out) -> int:
        """Mark all current prefix-min leaves with ``r``, remove them,
        refresh internal minima, and return the frontier size."""
        if self.is_exhausted():
            raise RuntimeError("process_frontier called on an exhausted tree")
        if self._mark_open:
            raise RuntimeError("a marked round is still open")
        t = self.t
        workers = parallel.get_num_threads()
        if workers <= 1 or self.n2 < 4096:
            removed, visits = _process_subtree(t, rank_out, 1, INF, r, self.n2)
            self.visits += int(visits)
            return int(removed)
        tasks, internals, visits, removed = self._expand_tasks(r, rank_out, 4 * workers)
        n2 = self.n2
        results = parallel.run_tasks(
            [
                (lambda node=node, lmin=lmin: _process_subtree(t, rank_out, node, lmin, r, n2))
                for node, lmin in tasks
            ]
        )
        for rem, vis in results:
            removed += int(rem)
            visits += int(vis)
        for node in reversed(internals):
            t[node] = min(t[2 * node], t[2 * node + 1])
        self.visits += visits
        return removed

    def mark_frontier(self, r: int, rank_out) -> int:
        """First pass of the two-pass round: mark prefix-min leaves and
        record per-subtree frontier counts (effective sizes)."""
        if self.is_exhausted():
            raise RuntimeError("mark_frontier called on an exhausted tree")
        if self._mark_open:
            raise RuntimeError("a marked round is still open")
        marked, visits = _mark_subtree(self.t, self._eff, rank_out, 1, INF, r, self.n2)
        self.visits += int(visits)
        self._mark_open = True
        self._mark_count = int(marked)
        return int(marked)

    def collect_frontier(self):
        """Materialize the marked frontier as ascending leaf indices.

        Valid only between ``mark_frontier`` and ``remove_marked``; the
        effective sizes route each subtree into disjoint output slots."""
        if not self._mark_open:
            raise RuntimeError("collect_frontier outside a marked round")
        out = np.empty(self._mark_count, dtype=np.int64)
        if self._mark_count:
            _collect_subtree(self.t, self._eff, out, 1, 0, self.n2)
        return out

    def remove_marked(self) -> None:
        """Second pass: tombstone the marked leaves and refresh minima."""
        if not self._mark_open:
            raise RuntimeError("remove_marked outside a marked round")
        if self._mark_count:
            _remove_marked_subtree(self.t, self._eff, 1, self.n2)
        self._mark_open = False
        self._mark_count = 0
