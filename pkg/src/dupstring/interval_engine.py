"""Interval machinery: weighted-interval cover arrays, an adjacent-merge
union-find over [1, n+1), and a lazy segment tree."""
from __future__ import annotations

from dataclasses import dataclass

import numba as nb
import numpy as np


@dataclass(frozen=True)
class WeightedInterval:
    a: int  # inclusive
    b: int  # exclusive
    g: int


@nb.njit(cache=True)
def _find_next(nxt, x):
    root = x
    while nxt[root] != root:
        root = nxt[root]
    while nxt[x] != root:
        y = nxt[x]
        nxt[x] = root
        x = y
    return root


@nb.njit(cache=True)
def _counting_order(g, lo, hi):
    cnt = np.zeros(hi - lo + 2, np.int64)
    for t in range(len(g)):
        cnt[g[t] - lo + 1] += 1
    for v in range(1, len(cnt)):
        cnt[v] += cnt[v - 1]
    order = np.empty(len(g), np.int64)
    for t in range(len(g)):
        order[cnt[g[t] - lo]] = t
        cnt[g[t] - lo] += 1
    return order


@nb.njit(cache=True)
def _cover(a, b, g, order, n, maximize):
    """Process intervals in weight order; each position takes the weight of
    the first interval that reaches it.  Positions already assigned are
    skipped through a next-free pointer that only ever merges a position
    with its right neighbour."""
    k = len(a)
    sentinel = 0 if maximize else n + 1
    out = np.full(n + 2, sentinel, np.int64)
    nxt = np.arange(n + 2)
    for s in range(k):
        t = order[k - 1 - s] if maximize else order[s]
        x = _find_next(nxt, a[t])
        while x < b[t]:
            out[x] = g[t]
            nxt[x] = x + 1
            x = _find_next(nxt, x + 1)
    return out[1 : n + 1]


def cover_arrays(a, b, g, n: int, mode: str = "max") -> np.ndarray:
    """Array form of :func:`cover_extremum` taking parallel int arrays."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    g = np.asarray(g, dtype=np.int64)
    if len(a):
        if a.min() < 1 or b.max() > n + 1 or np.any(a >= b):
            raise ValueError("interval outside [1, n+1)")
        lo, hi = int(g.min()), int(g.max())
        if hi - lo <= 4 * (n + len(g)):
            order = _counting_order(g, lo, hi)
        else:
            order = np.argsort(g, kind="stable")
    else:
        order = np.zeros(0, np.int64)
    return _cover(a, b, g, order, n, mode == "max")


def cover_extremum(intervals, n: int, mode: str = "max") -> np.ndarray:
    """H[i] = max (or min) weight of an interval containing i.

    Uncovered positions get 0 in max mode and n+1 in min mode.  Returned
    array is 0-based storage of positions 1..n."""
    if mode not in ("max", "min"):
        raise ValueError("mode must be 'max' or 'min'")
    iv = list(intervals)
    return cover_arrays([x.a for x in iv], [x.b for x in iv], [x.g for x in iv], n, mode)


# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    lo: int  # inclusive
    hi: int  # exclusive

    @property
    def min(self) -> int:
        return self.lo

    @property
    def max(self) -> int:
        return self.hi - 1


class IntervalUnionFind:
    """Partition of [1, n+1) into contiguous blocks; only neighbours merge.

    Path compression plus union by size; each root keeps its block bounds.
    """

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)
        self.lo = list(range(n + 1))
        self.hi = [i + 1 for i in range(n + 1)]

    def _root(self, e: int) -> int:
        if not 1 <= e <= self.n:
            raise IndexError(f"element {e} outside [1, {self.n}]")
        p = self.parent
        r = e
        while p[r] != r:
            r = p[r]
        while p[e] != r:
            p[e], e = r, p[e]
        return r

    def find(self, e: int) -> Block:
        r = self._root(e)
        return Block(self.lo[r], self.hi[r])

    def _link(self, r1: int, r2: int) -> Block:
        if self.size[r1] < self.size[r2]:
            r1, r2 = r2, r1
        self.parent[r2] = r1
        self.size[r1] += self.size[r2]
        self.lo[r1] = min(self.lo[r1], self.lo[r2])
        self.hi[r1] = max(self.hi[r1], self.hi[r2])
        return Block(self.lo[r1], self.hi[r1])

    def union_with_right(self, e: int) -> Block:
        r = self._root(e)
        nb_ = self.hi[r]
        if nb_ > self.n:
            raise ValueError("no block to the right")
        return self._link(r, self._root(nb_))

    def union_with_left(self, e: int) -> Block:
        r = self._root(e)
        nb_ = self.lo[r] - 1
        if nb_ < 1:
            raise ValueError("no block to the left")
        return self._link(r, self._root(nb_))

    def union(self, e: int, f: int) -> Block:
        """Merge the blocks of e and f, which must be adjacent."""
        b1, b2 = self.find(e), self.find(f)
        if b1 == b2:
            return b1
        if b1.hi == b2.lo:
            return self.union_with_right(e)
        if b2.hi == b1.lo:
            return self.union_with_left(e)
        raise ValueError("blocks are not adjacent")


# --------------------------------------------------------------------------


class SegTree:
    """Range add / range sum over positions 1..n with lazy propagation.

    Each node also tracks min and max so that ``rightmost_zero`` can skip
    subtrees that cannot hold a zero.  The search is O(log n) whenever
    values stay non-negative (the usage in this package)."""

    NONE = 0

    def __init__(self, n: int, values=None):
        self.n = n
        size = 1
        while size < max(n, 1):
            size *= 2
        self.size = size
        self.sum = [0] * (2 * size)
        self.mn = [0] * (2 * size)
        self.mx = [0] * (2 * size)
        self.cnt = [0] * (2 * size)
        self.lazy = [0] * (2 * size)
        for i in range(size):
            self.cnt[size + i] = 1 if i < n else 0
        big = float("inf")
        for i in range(n, size):
            self.mn[size + i] = big
            self.mx[size + i] = -big
        if values is not None:
            for i, v in enumerate(values):
                leaf = size + i
                self.sum[leaf] = self.mn[leaf] = self.mx[leaf] = v
        for v in range(size - 1, 0, -1):
            self._pull(v)

    def _pull(self, v):
        l, r = 2 * v, 2 * v + 1
        self.cnt[v] = self.cnt[l] + self.cnt[r]
        self.sum[v] = self.sum[l] + self.sum[r]
        self.mn[v] = min(self.mn[l], self.mn[r])
        self.mx[v] = max(self.mx[l], self.mx[r])

    def _apply(self, v, val):
        self.sum[v] += val * self.cnt[v]
        self.mn[v] += val
        self.mx[v] += val
        self.lazy[v] += val

    def _push(self, v):
        if self.lazy[v]:
            self._apply(2 * v, self.lazy[v])
            self._apply(2 * v + 1, self.lazy[v])
            self.lazy[v] = 0

    def _check(self, i, j):
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"range [{i}, {j}] outside [1, {self.n}]")

    def add(self, i: int, j: int, val: int) -> None:
        self._check(i, j)
        self._add(1, 1, self.size, i, j, val)

    def _add(self, v, lo, hi, i, j, val):
        if j < lo or hi < i:
            return
        if i <= lo and hi <= j:
            self._apply(v, val)
            return
        self._push(v)
        mid = (lo + hi) // 2
        self._add(2 * v, lo, mid, i, j, val)
        self._add(2 * v + 1, mid + 1, hi, i, j, val)
        self._pull(v)

    def sum_range(self, i: int, j: int) -> int:
        self._check(i, j)
        return self._sum(1, 1, self.size, i, j)

    # short alias
    def sum_(self, i: int, j: int) -> int:
        return self.sum_range(i, j)

    def _sum(self, v, lo, hi, i, j):
        if j < lo or hi < i:
            return 0
        if i <= lo and hi <= j:
            return self.sum[v]
        self._push(v)
        mid = (lo + hi) // 2
        return self._sum(2 * v, lo, mid, i, j) + self._sum(2 * v + 1, mid + 1, hi, i, j)

    def rightmost_zero(self, i: int, j: int) -> int:
        """Largest position in [i..j] holding 0, or 0 if none."""
        self._check(i, j)
        return self._rz(1, 1, self.size, i, j)

    def _rz(self, v, lo, hi, i, j):
        if j < lo or hi < i or self.mn[v] > 0 or self.mx[v] < 0:
            return 0
        if lo == hi:
            return lo if self.sum[v] == 0 else 0
        self._push(v)
        mid = (lo + hi) // 2
        r = self._rz(2 * v + 1, mid + 1, hi, i, j)
        return r if r else self._rz(2 * v, lo, mid, i, j)

    def values(self) -> list:
        return [self.sum_range(i, i) for i in range(1, self.n + 1)]
