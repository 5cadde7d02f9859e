"""Batch-parallel van Emde Boas tree over integer keys in [0, U).

A node is the quadruple (min, max, summary, cluster[.]).  min and max
live only at the node: neither is stored again in the summary or the
clusters (deleting the sole key of a tree restores the empty encoding
min=+inf/max=-inf, represented here as None/None).  Keys split as
high(x) = x >> ceil(w/2), low(x) = x mod 2^ceil(w/2); odd widths give
the summary floor(w/2) bits and every cluster ceil(w/2) bits.  The base
case at w <= 1 holds min/max only.

Point operations are the standard sequential algorithms.  The batch
operations insert/delete a sorted batch with O(m log log U) node
visits: batch insertion swaps the batch endpoints with the node's
min/max, seeds brand-new clusters with their smallest low-bit, and then
recurses into the summary and all touched clusters as independent
tasks; batch deletion first builds survivor mappings (nearest batch
survivors on either side of every batch key), uses them to replace a
deleted min/max by extracting its surviving neighbour from the
clusters, projects the mappings into each cluster and the summary, and
recurses (clusters concurrently, then the summary on the high bits
whose clusters emptied).  Range reporting divides at the predecessor of
the range midpoint and recurses on both halves, collecting a result
tree that is flattened at the end.

Every structure owns a visit counter (`visits`); batch operations
aggregate their counts through return values and add once on exit, so
totals are deterministic under any worker count.  A tree must not be
mutated concurrently from outside the batch algorithms.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import groupby

from . import parallel

MAX_UNIVERSE_BITS = 32


class _Visits:
    __slots__ = ("n",)

    def __init__(self):
        self.n = 0


class VebTree:
    __slots__ = ("bits", "u", "lo_bits", "lo_mask", "vmin", "vmax", "summary", "clusters", "_ctr")

    def __init__(self, bits: int, *, max_bits: int = MAX_UNIVERSE_BITS, _ctr=None):
        if bits < 0:
            raise ValueError("universe bits must be >= 0")
        if bits > max_bits:
            raise ValueError(
                f"universe 2^{bits} exceeds the default cap 2^{max_bits}; pass max_bits to override"
            )
        self.bits = bits
        self.u = 1 << bits
        self.lo_bits = (bits + 1) // 2
        self.lo_mask = (1 << self.lo_bits) - 1
        self.vmin = None
        self.vmax = None
        self.summary = None
        self.clusters = [None] * (1 << (bits - self.lo_bits)) if bits > 1 else None
        self._ctr = _ctr if _ctr is not None else _Visits()

    # -- key arithmetic ------------------------------------------------

    def _high(self, x):
        return x >> self.lo_bits

    def _low(self, x):
        return x & self.lo_mask

    def _index(self, h, l):
        return (h << self.lo_bits) | l

    def _child(self, bits):
        return VebTree(bits, max_bits=bits, _ctr=self._ctr)

    def _check_key(self, x):
        if not 0 <= x < self.u:
            raise ValueError(f"key {x} outside universe [0, {self.u})")

    # -- public point operations ---------------------------------------

    @property
    def visits(self) -> int:
        return self._ctr.n

    def is_empty(self) -> bool:
        return self.vmin is None

    def min(self):
        return self.vmin

    def max(self):
        return self.vmax

    def member(self, x) -> bool:
        self._check_key(x)
        r, hops = self._member(x)
        self._ctr.n += hops
        return r

    def insert(self, x) -> None:
        self._check_key(x)
        if self._member(x)[0]:
            raise ValueError(f"key {x} already present")
        self._ctr.n += self._insert(x)

    def delete(self, x) -> None:
        self._check_key(x)
        if not self._member(x)[0]:
            raise ValueError(f"key {x} not present")
        self._ctr.n += self._delete(x)

    def predecessor(self, x):
        """Largest key strictly below x, or None."""
        self._check_key(x)
        r, hops = self._pred(x)
        self._ctr.n += hops
        return r

    def successor(self, x):
        """Smallest key strictly above x, or None."""
        self._check_key(x)
        r, hops = self._succ(x)
        self._ctr.n += hops
        return r

    # -- point-op internals (return (result, node hops)) ---------------

    def _member(self, x):
        if self.vmin is None:
            return False, 1
        if x == self.vmin or x == self.vmax:
            return True, 1
        if self.bits <= 1:
            return False, 1
        c = self.clusters[self._high(x)]
        if c is None or c.vmin is None:
            return False, 1
        r, hops = c._member(self._low(x))
        return r, hops + 1

    def _succ(self, x):
        if self.vmin is None or x >= self.vmax:
            return None, 1
        if x < self.vmin:
            return self.vmin, 1
        if self.bits <= 1:
            return self.vmax, 1
        h, l = self._high(x), self._low(x)
        c = self.clusters[h]
        if c is not None and c.vmax is not None and l < c.vmax:
            r, hops = c._succ(l)
            return self._index(h, r), hops + 1
        if self.summary is not None:
            hs, hops = self.summary._succ(h)
            if hs is not None:
                return self._index(hs, self.clusters[hs].vmin), hops + 1
            return self.vmax, hops + 1
        return self.vmax, 1

    def _pred(self, x):
        if self.vmin is None or x <= self.vmin:
            return None, 1
        if x > self.vmax:
            return self.vmax, 1
        if self.bits <= 1:
            return self.vmin, 1
        h, l = self._high(x), self._low(x)
        c = self.clusters[h]
        if c is not None and c.vmin is not None and l > c.vmin:
            r, hops = c._pred(l)
            return self._index(h, r), hops + 1
        if self.summary is not None:
            hp, hops = self.summary._pred(h)
            if hp is not None:
                return self._index(hp, self.clusters[hp].vmax), hops + 1
            return self.vmin, hops + 1
        return self.vmin, 1

    def _insert(self, x):
        if self.vmin is None:
            self.vmin = x
            self.vmax = x
            return 1
        if self.vmin == self.vmax:
            if x < self.vmin:
                self.vmin = x
            else:
                self.vmax = x
            return 1
        if x < self.vmin:
            x, self.vmin = self.vmin, x
        elif x > self.vmax:
            x, self.vmax = self.vmax, x
        h, l = self._high(x), self._low(x)
        c = self.clusters[h]
        if c is None:
            c = self.clusters[h] = self._child(self.lo_bits)
        if c.vmin is None:
            if self.summary is None:
                self.summary = self._child(self.bits - self.lo_bits)
            hops = self.summary._insert(h)
            c.vmin = l
            c.vmax = l
            return hops + 2
        return c._insert(l) + 1

    def _delete(self, x):
        if self.vmin == self.vmax:
            self.vmin = None
            self.vmax = None
            return 1
        if self.bits <= 1:
            if x == self.vmin:
                self.vmin = self.vmax
            else:
                self.vmax = self.vmin
            return 1
        if x == self.vmin:
            if self.summary is None or self.summary.vmin is None:
                self.vmin = self.vmax  # two keys left at this node
                return 1
            h0 = self.summary.vmin
            x = self._index(h0, self.clusters[h0].vmin)
            self.vmin = x
        elif x == self.vmax:
            if self.summary is None or self.summary.vmin is None:
                self.vmax = self.vmin
                return 1
            h1 = self.summary.vmax
            x = self._index(h1, self.clusters[h1].vmax)
            self.vmax = x
        h, l = self._high(x), self._low(x)
        c = self.clusters[h]
        hops = c._delete(l) + 1
        if c.vmin is None:
            self.clusters[h] = None
            hops += self.summary._delete(h)
            if self.summary.vmin is None:
                self.summary = None
        return hops

    # -- batch insertion ------------------------------------------------

    @staticmethod
    def _validate_batch(batch):
        for i in range(1, len(batch)):
            if batch[i] <= batch[i - 1]:
                raise ValueError("batch must be sorted strictly ascending")

    def batch_insert(self, batch) -> None:
        """Insert a sorted duplicate-free batch disjoint from the tree."""
        batch = [int(x) for x in batch]
        if not batch:
            return
        self._check_key(batch[0])
        self._check_key(batch[-1])
        self._validate_batch(batch)
        self._ctr.n += self._batch_insert(batch)

    def _batch_insert(self, b):
        visits = 1
        old_min, old_max = self.vmin, self.vmax
        if old_min is None:
            self.vmin = b[0]
            self.vmax = b[-1]
            displaced = []
        else:
            self.vmin = min(old_min, b[0])
            self.vmax = max(old_max, b[-1])
            displaced = [old_min] if old_min == old_max else [old_min, old_max]
        rest = self._merge_drop(b, displaced, self.vmin, self.vmax)
        if not rest:
            return visits
        # group remaining keys by high bits (ascending, lows sorted)
        groups = [(h, [self._low(x) for x in grp]) for h, grp in groupby(rest, key=self._high)]
        new_hs = []
        for h, lows in groups:
            c = self.clusters[h]
            if c is None or c.vmin is None:
                new_hs.append(h)
                if c is None:
                    c = self.clusters[h] = self._child(self.lo_bits)
                c.vmin = lows[0]  # seed the fresh cluster with its smallest low-bit
                c.vmax = lows[0]
                del lows[0]
                visits += 1
        tasks = []
        if new_hs:
            if self.summary is None:
                self.summary = self._child(self.bits - self.lo_bits)
            summary = self.summary
            tasks.append(lambda: summary._batch_insert(new_hs))
        for h, lows in groups:
            if lows:
                c = self.clusters[h]
                tasks.append(lambda c=c, lows=lows: c._batch_insert(lows))
        for sub in parallel.run_tasks(tasks):
            visits += sub
        return visits

    @staticmethod
    def _merge_drop(b, displaced, nmin, nmax):
        """Merge the displaced old endpoints into the sorted batch, then
        drop the new global min and max (they stay at this node)."""
        if displaced:
            m = []
            i = 0
            for d in sorted(displaced):
                while i < len(b) and b[i] < d:
                    m.append(b[i])
                    i += 1
                m.append(d)
            m.extend(b[i:])
        else:
            m = list(b)
        # new min/max are the first/last of the union by construction
        return m[1:-1]

    # -- survivor mappings and batch deletion ----------------------------

    def survivor_maps(self, batch):
        """Survival predecessor/successor arrays for a sorted batch.

        P[j] is the largest tree key outside the batch below batch[j]
        (None for -inf), S[j] the smallest above (None for +inf).
        Initialized from plain predecessors/successors with batch
        members masked out, then completed by a prefix-max / suffix-min
        sweep.
        """
        batch = [int(x) for x in batch]
        self._validate_batch(batch)
        P, S, hops = self._survivor_init(batch)
        self._ctr.n += hops
        return P, S

    def _survivor_init(self, b):
        hops = 0
        bset = set(b)
        P = []
        S = []
        for x in b:
            ok, h = self._member(x)
            hops += h
            if not ok:
                raise ValueError(f"batch key {x} not in tree")
            p, h = self._pred(x)
            hops += h
            P.append(p if p not in bset else None)
            s, h = self._succ(x)
            hops += h
            S.append(s if s not in bset else None)
        run = None
        for j in range(len(b)):
            if P[j] is None or (run is not None and run > P[j]):
                P[j] = run
            else:
                run = P[j]
        run = None
        for j in range(len(b) - 1, -1, -1):
            if S[j] is None or (run is not None and run < S[j]):
                S[j] = run
            else:
                run = S[j]
        return P, S, hops

    def batch_delete(self, batch) -> None:
        """Delete a sorted duplicate-free batch; every key must be present."""
        batch = [int(x) for x in batch]
        if not batch:
            return
        self._check_key(batch[0])
        self._check_key(batch[-1])
        self._validate_batch(batch)
        P, S, hops = self._survivor_init(batch)  # also validates membership
        self._ctr.n += hops + self._batch_delete_rec(batch, P, S)

    def _survivor_redirect(self, b, P, S, y):
        """After extracting y for a min/max replacement, repoint any
        survivor-map entries at y to y's own surviving neighbours."""
        p, h1 = self._pred(y)
        s, h2 = self._succ(y)
        if p is not None:
            i = bisect_left(b, p)
            if i < len(b) and b[i] == p:
                p = P[i]
        if s is not None:
            i = bisect_left(b, s)
            if i < len(b) and b[i] == s:
                s = S[i]
        for j in range(len(b)):
            if P[j] == y:
                P[j] = p
            if S[j] == y:
                S[j] = s
        return h1 + h2

    def _batch_delete_rec(self, b, P, S):
        visits = 1
        v_min, v_max = self.vmin, self.vmax
        if v_min == b[0]:
            y = S[0]  # survival successor replaces the deleted min
            if y is not None and y != self.vmax:
                visits += self._delete(y)  # extract the replacement from the clusters
                visits += self._survivor_redirect(b, P, S, y)
            self.vmin = y
        if v_max == b[-1]:
            y = P[-1]
            if y is not None and y != self.vmin:
                visits += self._delete(y)
                visits += self._survivor_redirect(b, P, S, y)
            self.vmax = y
        if b and b[0] == v_min:
            b, P, S = b[1:], P[1:], S[1:]
        if b and b[-1] == v_max:
            b, P, S = b[:-1], P[:-1], S[:-1]
        if self.vmax is None and self.vmin is not None:
            self.vmax = self.vmin  # single key remains: stored twice
        if not b:
            return visits
        groups = []
        i = 0
        while i < len(b):
            h = self._high(b[i])
            j = i
            while j < len(b) and self._high(b[j]) == h:
                j += 1
            lows = [self._low(x) for x in b[i:j]]
            Ph = []
            Sh = []
            for idx in range(i, j):
                p = P[idx]
                s = S[idx]
                Ph.append(self._low(p) if p is not None and self._high(p) == h and p != self.vmin else None)
                Sh.append(self._low(s) if s is not None and self._high(s) == h and s != self.vmax else None)
            groups.append((h, lows, Ph, Sh, P[i], S[j - 1]))
            i = j
        tasks = [
            (lambda c=self.clusters[h], lows=lows, Ph=Ph, Sh=Sh: c._batch_delete_rec(lows, Ph, Sh))
            for h, lows, Ph, Sh, _, _ in groups
        ]
        for sub in parallel.run_tasks(tasks):
            visits += sub
        emptied = []
        Pp = []
        Sp = []
        for h, _, _, _, pfirst, slast in groups:
            c = self.clusters[h]
            if c.vmin is None:
                self.clusters[h] = None
                emptied.append(h)
                Pp.append(self._high(pfirst) if pfirst is not None and pfirst != self.vmin else None)
                Sp.append(self._high(slast) if slast is not None and slast != self.vmax else None)
        if emptied:
            visits += self.summary._batch_delete_rec(emptied, Pp, Sp)
            if self.summary.vmin is None:
                self.summary = None
        return visits

    # -- range reporting --------------------------------------------------

    def range_query(self, klo, khi):
        """All keys in [klo, khi], ascending (empty if klo > khi)."""
        self._check_key(klo)
        self._check_key(khi)
        visits = 1
        if self.vmin is None or klo > khi:
            self._ctr.n += visits
            return []
        s = klo
        ok, hops = self._member(klo)
        visits += hops
        if not ok:
            s, hops = self._succ(klo)
            visits += hops
        e = khi
        ok, hops = self._member(khi)
        visits += hops
        if not ok:
            e, hops = self._pred(khi)
            visits += hops
        if s is None or e is None or s > e:
            self._ctr.n += visits
            return []
        tree, hops = self._build_range_tree(s, e)
        visits += hops
        out = []
        self._flatten(tree, out)
        self._ctr.n += visits
        return out

    def _build_range_tree(self, lo, hi):
        """Result tree over keys in [lo, hi]; lo and hi are present keys."""
        visits = 1
        if lo == hi:
            return (lo, None, None), visits
        mid, hops = self._pred((lo + hi + 1) >> 1)
        visits += hops
        pm, hops = self._pred(mid)
        visits += hops
        sm, hops = self._succ(mid)
        visits += hops

        def left_task():
            if pm is None or lo > pm:
                return None, 0
            return self._build_range_tree(lo, pm)

        def right_task():
            if sm is None or sm > hi:
                return None, 0
            return self._build_range_tree(sm, hi)

        (lt, lv), (rt, rv) = parallel.run_tasks([left_task, right_task])
        return (mid, lt, rt), visits + lv + rv

    @staticmethod
    def _flatten(node, out):
        # in-order walk of the result tree (depth <= universe bits)
        if node is None:
            return
        val, left, right = node
        VebTree._flatten(left, out)
        out.append(val)
        VebTree._flatten(right, out)

    # -- audits and dumps --------------------------------------------------

    def keys(self):
        """In-order dump of the key set."""
        if self.vmin is None:
            return []
        if self.vmin == self.vmax:
            return [self.vmin]
        out = [self.vmin]
        if self.clusters is not None and self.summary is not None:
            for h in self.summary.keys():
                for l in self.clusters[h].keys():
                    out.append(self._index(h, l))
        out.append(self.vmax)
        return out

    def check_invariants(self):
        """Full structural audit; returns the sorted key dump."""
        return self._audit()

    def _audit(self):
        if self.vmin is None:
            assert self.vmax is None, "empty tree must have no max"
            assert self.summary is None or self.summary.vmin is None, "empty tree with summary keys"
            if self.clusters is not None:
                assert all(c is None or c.vmin is None for c in self.clusters), "empty tree with cluster keys"
            return []
        assert self.vmax is not None and 0 <= self.vmin <= self.vmax < self.u, "min/max out of order"
        if self.bits <= 1:
            return [self.vmin] if self.vmin == self.vmax else [self.vmin, self.vmax]
        nonempty = [h for h, c in enumerate(self.clusters) if c is not None and c.vmin is not None]
        summary_keys = self.summary._audit() if self.summary is not None else []
        assert summary_keys == nonempty, "summary does not mirror nonempty clusters"
        interior = []
        for h in nonempty:
            for l in self.clusters[h]._audit():
                interior.append(self._index(h, l))
        keys = [self.vmin] + interior + ([self.vmax] if self.vmax != self.vmin else [])
        for a, c in zip(keys, keys[1:]):
            assert a < c, "keys not strictly increasing (min/max must not reappear below)"
        return keys
