"""Prefix/suffix-square-free factors and square-related factorizations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numba as nb
import numpy as np

from .core_index import RangeMin
from .membership_ancestors import _MinTree, pssc_ancestor_profile
from .square_tables import compute_boundary_tables, prim_csr, runs_arrays
from .words import WordLike, as_array, check_range

KINDS = ("p", "s", "ps")


@dataclass(frozen=True)
class PsfIndex:
    n: int
    left: np.ndarray  # 0-based storage of positions 1..n
    right: np.ndarray
    rmq: RangeMin  # over left, leftmost minimum


def build_psf_index(w: WordLike) -> PsfIndex:
    a = as_array(w)
    left, right, _ = compute_boundary_tables(a)
    return PsfIndex(len(a), left, right, RangeMin(left))


def psf_query(idx: PsfIndex, i: int, j: int, kind: str = "ps") -> bool:
    """Is w[i..j] free of square prefixes (p), square suffixes (s) or both?"""
    check_range(idx.n, i, j)
    if kind not in KINDS:
        raise ValueError("kind must be p, s or ps")
    ok = True
    if "p" in kind:
        ok = ok and bool(idx.right[i - 1] > j)
    if "s" in kind:
        ok = ok and bool(idx.left[j - 1] < i)
    return ok


def _end_limit(idx: PsfIndex, i: int, kind: str) -> int:
    return int(idx.right[i - 1]) - 1 if "p" in kind else idx.n


def enumerate_pssf(w: WordLike, kind: str = "ps", emit: Optional[Callable] = None):
    """All (i, j) with the requested freeness, ordered by i then j.

    Per start i, the ends j <= limit with left[j] < i are found by splitting
    at range minima of left; every split yields one output.  With ``emit``
    the pairs are streamed and None is returned."""
    if kind not in KINDS:
        raise ValueError("kind must be p, s or ps")
    idx = build_psf_index(w)
    out = [] if emit is None else None
    push = out.append if emit is None else (lambda ij: emit(*ij))
    for i in range(1, idx.n + 1):
        hi = _end_limit(idx, i, kind)
        if "s" not in kind:
            for j in range(i, hi + 1):
                push((i, j))
            continue
        found = []
        stack = [(i, hi)]
        while stack:
            lo, h = stack.pop()
            if lo > h:
                continue
            pos = idx.rmq.pos(lo, h)
            if idx.left[pos - 1] >= i:
                continue
            found.append(pos)
            stack.append((lo, pos - 1))
            stack.append((pos + 1, h))
        for j in sorted(found):
            push((i, j))
    return out


@nb.njit(cache=True)
def _count_ps(left, right, n, use_p, use_s):
    """Sum over i of #{j in [i, lim_i] : left[j] < i}, by sweeping i down and
    inserting j into a Fenwick tree once i <= left[j] (those j are bad)."""
    bucket_cnt = np.zeros(n + 2, np.int64)
    for j in range(1, n + 1):
        bucket_cnt[left[j - 1]] += 1
    start = np.zeros(n + 2, np.int64)
    for v in range(1, n + 2):
        start[v] = start[v - 1] + bucket_cnt[v - 1]
    order = np.empty(n, np.int64)
    fill = start.copy()
    for j in range(1, n + 1):
        v = left[j - 1]
        order[fill[v]] = j
        fill[v] += 1
    fen = np.zeros(n + 1, np.int64)
    total = 0
    for i in range(n, 0, -1):
        if use_s:
            for q in range(start[i], start[i] + bucket_cnt[i]):
                x = order[q]
                while x <= n:
                    fen[x] += 1
                    x += x & (-x)
        lim = right[i - 1] - 1 if use_p else n
        good = lim - i + 1
        if use_s:
            bad = 0
            x = lim
            while x > 0:
                bad += fen[x]
                x -= x & (-x)
            x = i - 1
            while x > 0:
                bad -= fen[x]
                x -= x & (-x)
            good -= bad
        total += good
    return total


def count_pssf(w: WordLike, kind: str = "ps") -> int:
    if kind not in KINDS:
        raise ValueError("kind must be p, s or ps")
    a = as_array(w)
    n = len(a)
    if n == 0:
        return 0
    left, right, _ = compute_boundary_tables(a)
    return int(_count_ps(left, right, n, "p" in kind, "s" in kind))


def _longest_with_floor(left, right, n, floor) -> Optional[tuple]:
    """Longest (i, j) with floor[i] <= j < right[i] and left[j] < i,
    leftmost among ties; floor[i] > n disables start i."""
    tree = _MinTree(np.asarray(left, dtype=np.int64))
    best = None
    for i in range(1, n + 1):
        lo, hi = max(i, int(floor[i])), int(right[i - 1]) - 1
        if lo > hi or (best is not None and hi - i < best[1] - best[0]):
            continue
        j = tree.rightmost_below(lo, hi, i)
        if j and (best is None or j - i > best[1] - best[0]):
            best = (i, j)
    return best


def longest_pssf(w: WordLike) -> tuple:
    a = as_array(w)
    n = len(a)
    if n == 0:
        raise ValueError("empty input")
    left, right, _ = compute_boundary_tables(a)
    return _longest_with_floor(left, right, n, np.zeros(n + 1, np.int64))


def longest_primitive_pssc_ancestor(w: WordLike) -> tuple:
    """Longest factor that is a PSSC ancestor of w and has neither a square
    prefix nor a square suffix."""
    a = as_array(w)
    n = len(a)
    if n == 0:
        raise ValueError("empty input")
    left, right, _ = compute_boundary_tables(a)
    prof = pssc_ancestor_profile(a)
    return _longest_with_floor(left, right, n, prof.j)


# --------------------------------------------------------------------------
# factorizations


@dataclass(frozen=True)
class Factorization:
    factors: list  # (start, end), 1-based closed, contiguous
    tags: list  # "square" | "run" | "plain"

    @property
    def squares(self) -> int:
        return sum(t == "square" for t in self.tags)

    def texts(self, w) -> list:
        a = as_array(w)
        return [a[s - 1 : e] for s, e in self.factors]


@nb.njit(cache=True)
def _square_cover(off, roots, n):
    nxt = np.zeros(n + 2, np.int64)
    ok = np.zeros(n + 2, np.bool_)
    ok[n + 1] = True
    for i in range(n, 0, -1):
        for t in range(off[i - 1], off[i]):
            p = roots[t]
            if ok[i + 2 * p]:
                ok[i] = True
                nxt[i] = i + 2 * p
                break
    return ok, nxt


def factor_into_squares(w: WordLike) -> Optional[Factorization]:
    """A factorization into squares, or None.  Primitively rooted squares
    suffice, and the shortest usable one is taken at each position."""
    a = as_array(w)
    n = len(a)
    if n == 0 or n % 2:
        return None
    rs, re, rp = runs_arrays(a)
    off, roots = prim_csr(rs, re, rp, n, n, 0)
    ok, nxt = _square_cover(off, roots, n)
    if not ok[1]:
        return None
    out, i = [], 1
    while i <= n:
        out.append((i, int(nxt[i]) - 1))
        i = int(nxt[i])
    return Factorization(out, ["square"] * len(out))


def max_square_factorization(w: WordLike) -> Factorization:
    """Factorization into squares and single letters maximizing the number
    of squares.  Only the shortest square starting at each position needs
    to be considered."""
    a = as_array(w)
    n = len(a)
    if n == 0:
        return Factorization([], [])
    _, right, _ = compute_boundary_tables(a)
    best = np.zeros(n + 2, np.int64)
    take = np.zeros(n + 2, np.bool_)
    for i in range(n, 0, -1):
        best[i] = best[i + 1]
        r = int(right[i - 1])
        if r <= n and best[r + 1] + 1 > best[i]:
            best[i] = best[r + 1] + 1
            take[i] = True
    out, tags, i = [], [], 1
    while i <= n:
        if take[i]:
            r = int(right[i - 1])
            out.append((i, r))
            tags.append("square")
            i = r + 1
        else:
            out.append((i, i))
            tags.append("plain")
            i += 1
    return Factorization(out, tags)


@nb.njit(cache=True)
def _run_cover(rs, re, rp, n):
    """ok[i]: w[i..n] splits into factors of period at most half their
    length.  A factor starting at i qualifies iff it lies in a run (s, e, p)
    with s <= i and length >= 2p, so its end ranges over [i+2p-1, e]."""
    # runs active at i: i in [s, e-2p+1]
    cnt = np.zeros(n + 2, np.int64)
    for t in range(len(rs)):
        for i in range(rs[t], re[t] - 2 * rp[t] + 2):
            cnt[i] += 1
    off = np.zeros(n + 2, np.int64)
    for i in range(1, n + 1):
        off[i + 1] = off[i] + cnt[i]
    act = np.empty(off[n + 1], np.int64)
    fill = off.copy()
    for t in range(len(rs)):
        for i in range(rs[t], re[t] - 2 * rp[t] + 2):
            act[fill[i]] = t
            fill[i] += 1
    ok = np.zeros(n + 2, np.bool_)
    ok[n + 1] = True
    first_ok = np.full(n + 3, n + 2, np.int64)  # least x >= i with ok[x]
    first_ok[n + 1] = n + 1
    nxt = np.zeros(n + 2, np.int64)
    for i in range(n, 0, -1):
        bestj = n + 2
        for q in range(off[i], off[i + 1]):
            t = act[q]
            x = first_ok[i + 2 * rp[t]]
            if x <= re[t] + 1 and x < bestj:
                bestj = x
        if bestj <= n + 1:
            ok[i] = True
            nxt[i] = bestj
            first_ok[i] = i
        else:
            first_ok[i] = first_ok[i + 1]
    return ok, nxt


def factor_into_runs(w: WordLike) -> Optional[Factorization]:
    """A factorization whose factors all have period at most half their
    length (the shortest first factor at each step), or None."""
    a = as_array(w)
    n = len(a)
    if n == 0:
        return None
    rs, re, rp = runs_arrays(a)
    ok, nxt = _run_cover(rs, re, rp, n)
    if not ok[1]:
        return None
    out, i = [], 1
    while i <= n:
        out.append((i, int(nxt[i]) - 1))
        i = int(nxt[i])
    return Factorization(out, ["run"] * len(out))
