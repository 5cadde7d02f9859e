"""Staircase maintenance inside one vEB tree (the Mono-vEB layer).

A staircase is the maximal subset of scored points in which no point
covers another; point p1 covers p2 when p1.y < p2.y and p1.dp >= p2.dp.
Keys ascend together with scores, so the best score among keys below a
query is simply the predecessor's score.

Updates arrive as key-sorted batches of (key, dp, origin) triples:
``refine`` drops batch points covered by a surviving in-batch
predecessor or by their staircase predecessor; ``covered_by`` finds the
staircase keys covered by a refined batch (one consecutive key interval
per batch point, located by a successor chase capped at ceil(log2 U)
steps followed by a predecessor-midpoint binary search);
``apply_update`` deletes the covered keys and inserts the survivors.
Score ties go to the smaller key (covers uses >=), which can only
extend more subsequences.
"""

from __future__ import annotations

from typing import NamedTuple

from . import parallel
from .veb import VebTree


class Point(NamedTuple):
    """A scored 2-D point: x = input value, y = input index, dp = score."""

    x: int
    y: int
    dp: int


def covers(p1, p2) -> bool:
    """True iff p1 makes p2 useless: earlier index, score at least as high."""
    return p1.y < p2.y and p1.dp >= p2.dp


def _validate_keys_ascending(batch):
    for i in range(1, len(batch)):
        if batch[i][0] <= batch[i - 1][0]:
            raise ValueError("batch keys must be sorted strictly ascending")


class Staircase:
    """vEB-keyed staircase with score and origin side tables.

    Keys live in [0, 2^bits) where 2^bits is ``n_star`` rounded up to a
    power of two; ``score``/``origin`` are defined exactly on present
    keys.  Strict monotonicity (key up => score up) is the standing
    invariant.
    """

    __slots__ = ("n_star", "keys", "score", "origin")

    def __init__(self, n_star: int):
        if n_star < 0:
            raise ValueError("n_star must be >= 0")
        self.n_star = n_star
        bits = (n_star - 1).bit_length() if n_star > 1 else 0
        self.keys = VebTree(bits, max_bits=max(bits, 32))
        self.score = {}
        self.origin = {}

    def __len__(self):
        return len(self.score)

    @property
    def visits(self) -> int:
        return self.keys.visits

    def refine(self, batch):
        """Drop batch points that would not land on the staircase.

        ``batch``: (key, dp, origin) triples sorted strictly by key.
        Survivors have strictly increasing scores and insert cleanly.
        """
        _validate_keys_ascending(batch)
        keys = self.keys
        score = self.score
        out = []
        for entry in batch:
            k, d = entry[0], entry[1]
            if out and out[-1][1] >= d:
                continue  # covered by the surviving in-batch predecessor
            p = keys.predecessor(k)
            if p is not None and score[p] >= d:
                continue  # covered by the staircase predecessor
            out.append(entry)
        return out

    def covered_by(self, batch):
        """Staircase keys covered by any point of a refined batch, ascending.

        Batch point i owns the key interval (succ(k_i), pred(k_{i+1})]
        with a sentinel of U past the last point; the tight upper end is
        the last key in the interval with score <= dp_i.
        """
        _validate_keys_ascending(batch)
        if not batch or self.keys.is_empty():
            return []
        keys = self.keys
        u = keys.u

        def one(i):
            k, d = batch[i][0], batch[i][1]
            nxt = batch[i + 1][0] if i + 1 < len(batch) else u
            s = keys.successor(k)
            if s is None:
                return []
            e = keys.predecessor(nxt) if nxt < u else keys.max()
            if e is None or s > e:
                return []
            e2 = self._find_index(d, s, e)
            if e2 is None:
                return []
            return keys.range_query(s, e2)

        parts = parallel.run_tasks([(lambda i=i: one(i)) for i in range(len(batch))])
        out = []
        for p in parts:
            out.extend(p)
        return out

    def _find_index(self, dp_star, s, e):
        """Last key in [s, e] with score <= dp_star, or None.

        Chases successors for at most ceil(log2 U) steps (covers small
        outputs at O(1) amortized per reported key), then switches to a
        predecessor-of-midpoint binary search.
        """
        keys = self.keys
        score = self.score
        if score[s] > dp_star:
            return None
        if s == e:
            return s
        for _ in range(max(1, keys.bits)):
            nxt = keys.successor(s)
            if score[nxt] > dp_star:
                return s  # == predecessor(nxt)
            s = nxt
            if s == e:
                return s
        return self._binary_search(dp_star, s, e)

    def _binary_search(self, dp_star, s, e):
        # invariant: score[s] <= dp_star and the answer lies in [s, e]
        keys = self.keys
        score = self.score
        while s != e:
            mid = keys.predecessor((s + e + 1) >> 1)
            if score[mid] <= dp_star:
                if mid == s:
                    # no keys strictly between s and the midpoint
                    nxt = keys.successor(s)
                    if score[nxt] <= dp_star:
                        s = nxt
                    else:
                        return s
                else:
                    s = mid
            else:
                e = keys.predecessor(mid)
        return s

    def apply_update(self, batch) -> None:
        """Merge a key-sorted scored batch into the staircase.

        Present keys must not lose score (scores only grow in rank
        order); they are re-inserted with the new score.  Covered
        staircase points are batch-deleted, survivors batch-inserted,
        and the side tables updated.
        """
        survivors = self.refine(batch)
        if not survivors:
            return
        covered = self.covered_by(survivors)
        keys = self.keys
        score = self.score
        origin = self.origin
        doomed = list(covered)
        for entry in survivors:
            k = entry[0]
            if k in score:
                if score[k] > entry[1]:
                    raise ValueError(f"score of present key {k} would decrease")
                doomed.append(k)
        doomed = sorted(set(doomed))
        if doomed:
            keys.batch_delete(doomed)
            for k in doomed:
                del score[k]
                del origin[k]
        keys.batch_insert([entry[0] for entry in survivors])
        for k, d, o in survivors:
            score[k] = d
            origin[k] = o

    def prefix_best(self, q):
        """(score, origin) at the largest key strictly below q, or None.

        By monotonicity this is the maximum score over all keys < q;
        q may be anywhere in [0, U] (exclusive upper query).
        """
        keys = self.keys
        if keys.is_empty() or q <= 0:
            return None
        mx = keys.max()
        p = mx if q > mx else keys.predecessor(q)
        if p is None:
            return None
        return self.score[p], self.origin[p]

    def items(self):
        """In-order (key, score, origin) dump."""
        return [(k, self.score[k], self.origin[k]) for k in self.keys.keys()]

    def check_invariants(self):
        """Audit the vEB plus strict key/score monotonicity."""
        dump = self.keys.check_invariants()
        assert set(dump) == set(self.score) == set(self.origin), "side tables out of sync"
        for a, b in zip(dump, dump[1:]):
            assert self.score[a] < self.score[b], "scores not strictly increasing"
        assert len(dump) <= max(1, self.n_star), "staircase exceeds its point budget"
        return dump
