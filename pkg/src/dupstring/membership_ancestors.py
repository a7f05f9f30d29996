"""Membership deciders and ancestor computations for PSD_k, PSD and PSSC."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numba as nb
import numpy as np

from .core_index import occurrences
from .ops_kernel import OpKind
from .square_tables import (
    SquareTables,
    _cover_kind,
    _min_right_end,
    _run_intervals,
    bounded_left_right,
    compute_boundary_tables,
    prim_csr,
    runs_arrays,
    square_tables,
)
from .words import WordLike, as_array, as_tuple


# --------------------------------------------------------------------------
# kernels


@nb.njit(cache=True)
def _sd_flags(end_off, end_roots, n):
    S = np.zeros(n + 1, np.bool_)
    S[n] = True
    for i in range(n, 0, -1):
        if S[i]:
            for t in range(end_off[i - 1], end_off[i]):
                S[i - end_roots[t]] = True
    return S


@nb.njit(cache=True)
def _pd_flags(start_off, start_roots, n):
    P = np.zeros(n + 2, np.bool_)
    P[1] = True
    for i in range(1, n + 1):
        if P[i]:
            for t in range(start_off[i - 1], start_off[i]):
                P[i + start_roots[t]] = True
    return P


@nb.njit(cache=True)
def _forward_reach(cen_off, cen_roots, n, k, mark, W):
    """mark[i, L]: factor of length L at i reachable from a seed using
    duplications of primitive roots <= k.  Lengths above W are dropped."""
    for L in range(1, W + 1):
        lim = min(k, L)
        for i in range(1, n - L + 2):
            if not mark[i, L]:
                continue
            j = i + L - 1
            for t in range(cen_off[i - 1], cen_off[i]):
                p = cen_roots[t]
                if p > lim:
                    break
                if L + p <= W:
                    mark[i - p, L + p] = True
            if j < n:
                for t in range(cen_off[j], cen_off[j + 1]):
                    p = cen_roots[t]
                    if p > lim:
                        break
                    if j + p <= n and L + p <= W:
                        mark[i, L + p] = True
    return mark


@nb.njit(cache=True)
def _backward_good(cen_off, cen_roots, n, k, Lmax, P, S, top_only):
    """good[i, L] for L <= Lmax: some step sequence from w[i..i+L-1] reaches
    w.  Longer factors count as good iff P[i] and S[j] (bounded case) or,
    with ``top_only``, only w itself is good."""
    good = np.zeros((n + 2, Lmax + 2), np.bool_)
    if top_only:
        good[1, n] = True
    for L in range(Lmax, 0, -1):
        lim = min(k, L)
        for i in range(1, n - L + 2):
            if good[i, L]:
                continue
            j = i + L - 1
            ok = False
            for t in range(cen_off[i - 1], cen_off[i]):
                p = cen_roots[t]
                if p > lim:
                    break
                L2 = L + p
                if L2 > Lmax:
                    ok = (not top_only) and P[i - p] and S[j]
                else:
                    ok = good[i - p, L2]
                if ok:
                    break
            if not ok and j < n:
                for t in range(cen_off[j], cen_off[j + 1]):
                    p = cen_roots[t]
                    if p > lim:
                        break
                    if j + p > n:
                        continue
                    L2 = L + p
                    if L2 > Lmax:
                        ok = (not top_only) and P[i] and S[j + p]
                    else:
                        ok = good[i, L2]
                    if ok:
                        break
            good[i, L] = ok
    return good


@nb.njit(cache=True)
def _pred_find(par, x):
    r = x
    while par[r] != r:
        r = par[r]
    while par[x] != r:
        y = par[x]
        par[x] = r
        x = y
    return r


@nb.njit(cache=True)
def _pssc_j(mre, mle, n):
    """j[i] (1-based) = least end of an ancestor starting at i, n+1 if none.

    With S_i = {t : MaxLeftEnd[t] < i}, j_1 = max S_1 and
    j_i = max(pred_{S_i}(MinRightEnd[i-1]), j_{i-1}).  The predecessor
    queries are answered offline, deleting from S_n downwards."""
    j = np.full(n + 2, n + 1, np.int64)
    cnt = np.zeros(n + 2, np.int64)
    for t in range(1, n + 1):
        cnt[mle[t - 1] + 1] += 1
    for v in range(1, n + 2):
        cnt[v] += cnt[v - 1]
    order = np.empty(n, np.int64)
    fill = cnt.copy()
    for t in range(1, n + 1):
        v = mle[t - 1]
        order[fill[v]] = t
        fill[v] += 1
    par = np.arange(n + 1)
    q = np.zeros(n + 2, np.int64)
    for i in range(n, 1, -1):
        x = mre[i - 2]
        if x <= n:
            q[i] = _pred_find(par, x)
        # leave S_i for S_{i-1}: drop t with MaxLeftEnd == i-1
        for r in range(cnt[i - 1], cnt[i]):
            t = order[r]
            par[t] = t - 1
    cur = 0
    for t in range(1, n + 1):
        if mle[t - 1] == 0:
            cur = t
    j[1] = cur
    for i in range(2, n + 1):
        if mre[i - 2] > n:
            break
        j[i] = max(q[i], j[i - 1])
    return j


# --------------------------------------------------------------------------
# flags and PSD_k membership


@dataclass(frozen=True)
class FlagArrays:
    """S[i] (1-based): w in SD_k^*(w[1..i]); P[j]: w in PD_k^*(w[j..n])."""

    S: np.ndarray
    P: np.ndarray
    k: int

    def s(self, i: int) -> bool:
        return bool(self.S[i])

    def p(self, j: int) -> bool:
        return bool(self.P[j])


class _Ctx:
    """Cached per-word structures shared by several deciders."""

    def __init__(self, w: WordLike):
        self.a = as_array(w)
        self.n = len(self.a)
        self.runs = runs_arrays(self.a)
        self._csr = {}

    def csr(self, k: int, key: int):
        if (k, key) not in self._csr:
            rs, re, rp = self.runs
            self._csr[(k, key)] = prim_csr(rs, re, rp, k, self.n, key)
        return self._csr[(k, key)]

    def flags(self, k: int) -> FlagArrays:
        eo, er = self.csr(k, 1)
        so, sr = self.csr(k, 0)
        return FlagArrays(_sd_flags(eo, er, self.n), _pd_flags(so, sr, self.n), k)


def sd_pd_flags(w: WordLike, k: int) -> FlagArrays:
    a = as_array(w)
    if not 1 <= k <= len(a):
        raise ValueError("need 1 <= k <= n")
    return _Ctx(a).flags(k)


def _reach_from(ctx: _Ctx, seeds, k: int, W: int) -> np.ndarray:
    mark = np.zeros((ctx.n + 2, W + 2), np.bool_)
    for i, L in seeds:
        if L <= W:
            mark[i, L] = True
    co, cr = ctx.csr(min(k, ctx.n), 2)
    return _forward_reach(co, cr, ctx.n, k, mark, W)


def _psdk_decide(ctx: _Ctx, k: int, long_starts, long_len, short_seeds) -> bool:
    n = ctx.n
    fl = ctx.flags(min(k, n))
    for i, L in long_starts:
        if fl.P[i] and fl.S[i + L - 1]:
            return True
    if not short_seeds:
        return False
    W = min(2 * k - 1, n)
    mark = _reach_from(ctx, short_seeds, k, W)
    if n <= W and mark[1, n]:
        return True
    for L in range(min(k, n + 1), W + 1):
        idx = np.flatnonzero(mark[1 : n - L + 2, L]) + 1
        if len(idx) and np.any(fl.P[idx] & fl.S[idx + L - 1]):
            return True
    return False


def psdk_membership(w: WordLike, x: WordLike, k: int) -> bool:
    """w in PSD_k^*(x)."""
    a, xa = as_array(w), as_array(x)
    n, m = len(a), len(xa)
    if m == 0 or m > n or k < 1:
        return False
    occ = occurrences(xa, a).tolist()
    if not occ:
        return False
    ctx = _Ctx(a)
    if m >= k:
        return _psdk_decide(ctx, k, [(i, m) for i in occ], m, [])
    return _psdk_decide(ctx, k, [], m, [(i, m) for i in occ])


def psdk_language_membership(w: WordLike, k: int, member: Callable) -> bool:
    """w in PSD_k^*(L) where ``member(t)`` decides L on tuples."""
    a = as_array(w)
    n = len(a)
    t = as_tuple(a)
    longs, shorts = [], []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            if member(t[i - 1 : j]):
                (longs if j - i + 1 >= k else shorts).append((i, j - i + 1))
    if not longs and not shorts:
        return False
    return _psdk_decide(_Ctx(a), k, longs, 0, shorts)


def psd_membership(w: WordLike, x: WordLike) -> bool:
    """w in PSD^*(x) by forward reachability over factor coordinates."""
    a, xa = as_array(w), as_array(x)
    n, m = len(a), len(xa)
    if m == 0 or m > n:
        return False
    occ = occurrences(xa, a).tolist()
    if not occ:
        return False
    ctx = _Ctx(a)
    mark = _reach_from(ctx, [(i, m) for i in occ], n, n)
    return bool(mark[1, n])


# --------------------------------------------------------------------------
# PSSC


@dataclass(frozen=True)
class AncestorProfile:
    """j[i] for i in 1..n (1-based storage with index 0 unused): least end of
    an ancestor starting at i, n+1 when no ancestor starts at i."""

    n: int
    j: np.ndarray

    def end(self, i: int) -> int:
        return int(self.j[i])

    @property
    def count(self) -> int:
        jj = self.j[1 : self.n + 1]
        ok = jj <= self.n
        return int(np.sum(self.n - jj[ok] + 1))

    @property
    def shortest(self) -> tuple:
        """(i, j) of a shortest ancestor, leftmost among ties."""
        idx = np.arange(1, self.n + 1)
        jj = self.j[1 : self.n + 1]
        lens = np.where(jj <= self.n, jj - idx + 1, self.n + 1)
        i = int(np.argmin(lens)) + 1
        return (i, int(self.j[i]))

    def is_ancestor(self, i: int, j: int) -> bool:
        return self.j[i] <= j

    def ancestors(self):
        for i in range(1, self.n + 1):
            for j in range(int(self.j[i]), self.n + 1):
                yield (i, j)


def min_right_max_left(a: np.ndarray, runs=None):
    """(MinRightEnd, MaxLeftEnd) only, skipping the other tables."""
    n = len(a)
    rs, re, rp = runs if runs is not None else runs_arrays(a)
    A, B, G, K = _run_intervals(rs, re, rp, n)
    mre = _min_right_end(A, B, G, K, n)
    ra, rb, rq = n + 1 - re[::-1], n + 1 - rs[::-1], rp[::-1]
    A2, B2, G2, K2 = _run_intervals(ra.copy(), rb.copy(), rq.copy(), n)
    mle = (n + 1 - _min_right_end(A2, B2, G2, K2, n))[::-1].copy()
    return mre, mle


def pssc_ancestor_profile(w: WordLike) -> AncestorProfile:
    a = as_array(w)
    n = len(a)
    if n == 0:
        raise ValueError("empty input")
    mre, mle = min_right_max_left(a)
    return AncestorProfile(n, _pssc_j(mre, mle, n))


def ssc_min_prefix(w: WordLike) -> int:
    """Least i with w in SSC^*(w[1..i])."""
    a = as_array(w)
    _, mle = min_right_max_left(a)
    zeros = np.flatnonzero(mle == 0)
    return int(zeros[-1]) + 1


def pssc_membership(w: WordLike, x: WordLike, profile: Optional[AncestorProfile] = None) -> bool:
    a, xa = as_array(w), as_array(x)
    n, m = len(a), len(xa)
    if m == 0 or m > n:
        return False
    occ = occurrences(xa, a)
    if len(occ) == 0:
        return False
    prof = profile or pssc_ancestor_profile(a)
    return bool(np.any(prof.j[occ] <= occ + m - 1))


# --------------------------------------------------------------------------
# primitivity, PSD_k ancestors, primitive roots


def _bounds_for(op: OpKind, a: np.ndarray, tables: Optional[SquareTables] = None):
    n = len(a)
    if op.k is not None and op.k < n:
        return bounded_left_right(a, op.k)
    if tables is not None:
        return tables.left, tables.right
    left, right, _ = compute_boundary_tables(a)
    return left, right


def is_primitive_factor(tables, i: int, j: int, op: OpKind, word=None) -> bool:
    """No square prefix (for prefix-side ops) and no square suffix (for
    suffix-side ops) inside w[i..j].  ``tables`` is a SquareTables or a
    (left, right) pair; bounded ops need ``word`` to rebuild bounded tables."""
    if isinstance(tables, SquareTables):
        left, right, n = tables.left, tables.right, tables.n
    else:
        left, right = tables
        n = len(left)
    if not 1 <= i <= j <= n:
        raise IndexError("factor outside the word")
    if op.k is not None:
        if word is None:
            raise ValueError("bounded primitivity needs the word")
        left, right = bounded_left_right(as_array(word), op.k)
    ok = True
    if op.prefix_side:
        ok &= bool(right[i - 1] > j)
    if op.suffix_side:
        ok &= bool(left[j - 1] < i)
    return ok


def primitive_root(w: WordLike, op: OpKind) -> tuple:
    """Coordinates of one op-primitive ancestor obtained by peeling the
    shortest square suffix roots, then the shortest square prefix roots."""
    a = as_array(w)
    n = len(a)
    if op.family not in ("PD", "SD", "PSD"):
        raise ValueError("primitive_root handles PD, SD and PSD families")
    left, right = _bounds_for(op, a)
    i, j = 1, n
    if op.suffix_side:
        while left[j - 1] >= 1:
            j -= (j - left[j - 1] + 1) // 2
    if op.prefix_side:
        while right[i - 1] <= j:
            i += (right[i - 1] - i + 1) // 2
    return (i, j)


@dataclass
class BpsdAncestors:
    n: int
    k: int
    flags: FlagArrays
    short_good: np.ndarray  # short_good[i, L] for L < k
    left_k: np.ndarray
    right_k: np.ndarray

    def is_ancestor(self, i: int, j: int) -> bool:
        L = j - i + 1
        if L >= self.k:
            return bool(self.flags.P[i] and self.flags.S[j])
        return bool(self.short_good[i, L])

    def all(self):
        n, k = self.n, self.k
        P, S = self.flags.P, self.flags.S
        for i in range(1, n + 1):
            for L in range(1, min(k - 1, n - i + 1) + 1):
                if self.short_good[i, L]:
                    yield (i, i + L - 1)
            if P[i]:
                for j in range(i + k - 1, n + 1):
                    if S[j]:
                        yield (i, j)

    def count(self) -> int:
        n, k = self.n, self.k
        P, S = self.flags.P[: n + 1], self.flags.S[: n + 1]
        suf = np.zeros(n + 2, np.int64)
        suf[:n + 1] = np.cumsum(S[::-1])[::-1]
        total = int(self.short_good.sum())
        for i in np.flatnonzero(P[1 : n + 1]) + 1:
            if i + k - 1 <= n:
                total += int(suf[i + k - 1])
        return total

    def shortest(self) -> tuple:
        best = None
        for i, j in self.all():
            if best is None or j - i < best[1] - best[0] or (j - i == best[1] - best[0] and i < best[0]):
                best = (i, j)
        return best

    def longest_primitive(self) -> Optional[tuple]:
        """Longest ancestor with no square prefix or suffix of root <= k.
        Long candidates use a min-tree over left_k restricted to S-true ends."""
        n, k = self.n, self.k
        P, S = self.flags.P, self.flags.S
        best = None

        def better(c):
            return best is None or c[1] - c[0] > best[1] - best[0] or (
                c[1] - c[0] == best[1] - best[0] and c[0] < best[0])

        for i in range(1, n + 1):
            for L in range(1, min(k - 1, n - i + 1) + 1):
                if self.short_good[i, L]:
                    j = i + L - 1
                    if self.right_k[i - 1] > j and self.left_k[j - 1] < i and better((i, j)):
                        best = (i, j)
        vals = np.where(S[1 : n + 1], self.left_k, n + 5).astype(np.int64)
        tree = _MinTree(vals)
        for i in range(1, n + 1):
            if not P[i]:
                continue
            lo, hi = i + k - 1, min(n, int(self.right_k[i - 1]) - 1)
            if lo > hi:
                continue
            j = tree.rightmost_below(lo, hi, i)
            if j and better((i, j)):
                best = (i, j)
        return best


class _MinTree:
    """Static min segment tree; rightmost position in a range with value < x."""

    def __init__(self, values):
        n = len(values)
        size = 1
        while size < n:
            size *= 2
        self.size = size
        t = np.full(2 * size, np.iinfo(np.int64).max, np.int64)
        t[size : size + n] = values
        for v in range(size - 1, 0, -1):
            t[v] = min(t[2 * v], t[2 * v + 1])
        self.t = t

    def rightmost_below(self, lo: int, hi: int, x: int) -> int:
        return _rightmost_below(self.t, self.size, lo, hi, x)


@nb.njit(cache=True)
def _rightmost_below(t, size, lo, hi, x):
    # iterative descent over the canonical cover, right to left
    stack = np.empty(128, np.int64)
    slo = np.empty(128, np.int64)
    shi = np.empty(128, np.int64)
    top = 0
    stack[0] = 1
    slo[0] = 1
    shi[0] = size
    top = 1
    while top > 0:
        top -= 1
        v = stack[top]
        a = slo[top]
        b = shi[top]
        if b < lo or a > hi or t[v] >= x:
            continue
        if a == b:
            return a
        mid = (a + b) // 2
        # push left first so right is explored first
        stack[top] = 2 * v
        slo[top] = a
        shi[top] = mid
        stack[top + 1] = 2 * v + 1
        slo[top + 1] = mid + 1
        shi[top + 1] = b
        top += 2
    return 0


def bpsd_ancestors(w: WordLike, k: int) -> BpsdAncestors:
    """Ancestor structure of w under PSD_k."""
    a = as_array(w)
    n = len(a)
    if not 1 <= k:
        raise ValueError("need k >= 1")
    kk = min(k, n)
    ctx = _Ctx(a)
    fl = ctx.flags(kk)
    co, cr = ctx.csr(kk, 2)
    Lmax = min(k - 1, n)
    if k > n:
        # every ancestor is short: fall back to reaching w itself
        good = _backward_good(co, cr, n, k, n, fl.P, fl.S, True)
        flags = FlagArrays(np.zeros(n + 1, bool), np.zeros(n + 2, bool), k)
        left, right = _bounds_for(OpKind("PSD"), a)
        return BpsdAncestors(n, n + 1, flags, good, left, right)
    good = _backward_good(co, cr, n, k, Lmax, fl.P, fl.S, False)
    left, right = _bounds_for(OpKind("PSD", k), a)
    return BpsdAncestors(n, k, fl, good, left, right)


def psd_ancestor_table(w: WordLike) -> np.ndarray:
    """good[i, L]: w in PSD^*(w[i..i+L-1]) for the unbounded operation."""
    a = as_array(w)
    n = len(a)
    ctx = _Ctx(a)
    co, cr = ctx.csr(n, 2)
    dummy = np.zeros(n + 2, np.bool_)
    return _backward_good(co, cr, n, n, n, dummy, dummy, True)


# --------------------------------------------------------------------------
# common ancestors


def _ancestor_contents(w: WordLike, op: OpKind) -> dict:
    """content -> leftmost start of an ancestor with that content."""
    a = as_array(w)
    t = as_tuple(a)
    n = len(a)
    out = {}
    if op.family == "PSSC":
        prof = pssc_ancestor_profile(a)
        coords = prof.ancestors()
    elif op.family == "PSD" and op.k is not None:
        coords = bpsd_ancestors(a, op.k).all()
    elif op.family == "PSD":
        good = psd_ancestor_table(a)
        coords = ((i, i + L - 1) for i in range(1, n + 1) for L in range(1, n - i + 2) if good[i, L])
    else:
        raise ValueError("common ancestors support PSD, PSD_k and PSSC")
    for i, j in coords:
        c = t[i - 1 : j]
        if c not in out or i < out[c]:
            out[c] = i
    return out


def _pssc_common(x: np.ndarray, y: np.ndarray, what: str):
    """Pairs (i1 in x, i2 in y) with LCP >= max(need_x[i1], need_y[i2]);
    every length in [max(...), LCP] then gives a common ancestor."""
    px, py = pssc_ancestor_profile(x), pssc_ancestor_profile(y)
    n, m = len(x), len(y)
    need_x = px.j[1 : n + 1] - np.arange(1, n + 1) + 1
    need_y = py.j[1 : m + 1] - np.arange(1, m + 1) + 1
    lcp = np.zeros((n + 1, m + 1), np.int64)
    for i in range(n - 1, -1, -1):
        eq = x[i] == y
        lcp[i, :m] = np.where(eq, lcp[i + 1, 1:] + 1, 0)
    best = None
    for i in range(n):
        if need_x[i] > n:
            continue
        need = np.maximum(need_x[i], need_y)
        ok = (need_y <= m) & (lcp[i, :m] >= need)
        if not ok.any():
            continue
        if what == "longest":
            L = int(lcp[i, :m][ok].max())
        else:
            L = int(need[ok].min())
        if best is None or (what == "longest" and L > best[1]) or (what != "longest" and L < best[1]):
            best = (i, L)
        if what == "any":
            break
    if best is None:
        return None
    i, L = best
    return tuple(int(c) for c in x[i : i + L])


def common_ancestor(x: WordLike, y: WordLike, op: OpKind, what: str = "any"):
    """A common ancestor of x and y (tuple) or None; what in
    {any, shortest, longest}.  Ties resolve to the leftmost start in x."""
    if what not in ("any", "shortest", "longest"):
        raise ValueError("what must be any, shortest or longest")
    xa, ya = as_array(x), as_array(y)
    if len(xa) == 0 or len(ya) == 0:
        return None
    if op.family == "PSSC":
        return _pssc_common(xa, ya, what)
    ax, ay = _ancestor_contents(xa, op), _ancestor_contents(ya, op)
    common = [c for c in ax if c in ay]
    if not common:
        return None
    if what == "any":
        return min(common, key=lambda c: (ax[c], len(c)))
    if what == "shortest":
        return min(common, key=lambda c: (len(c), ax[c]))
    return min(common, key=lambda c: (-len(c), ax[c]))
