"""Runs, primitively rooted squares and the per-position square arrays.

Every array is derived from the list of maximal runs: each run contributes
weighted intervals and :func:`interval_engine.cover_arrays` resolves the
per-position extremum.
"""
from __future__ import annotations

from dataclasses import dataclass

import numba as nb
import numpy as np

from .interval_engine import _counting_order, _cover
from .words import WordLike, as_array


@dataclass(frozen=True)
class Run:
    i: int
    j: int
    p: int

    @property
    def length(self) -> int:
        return self.j - self.i + 1


# --------------------------------------------------------------------------
# runs by divide and conquer


@nb.njit(cache=True)
def _zd(a, base, d, n, z):
    """Z-function of s[i] = a[base + d*i], 0 <= i < n, written to z."""
    if n == 0:
        return
    z[0] = n
    l = 0
    r = 0
    for i in range(1, n):
        k = 0
        if i < r:
            k = min(r - i, z[i - l])
        while i + k < n and a[base + d * k] == a[base + d * (i + k)]:
            k += 1
        z[i] = k
        if i + k > r:
            l = i
            r = i + k


@nb.njit(cache=True)
def _match(a, pb, pd, plen, zp, tb, td, tlen, nstart, out):
    """out[i] = lcp(P, T[i:]) for i < nstart, P and T strided views of a,
    zp the Z-function of P."""
    l = 0
    r = 0
    for i in range(nstart):
        k = 0
        if i < r:
            k = min(r - i, zp[i - l])
        while k < plen and i + k < tlen and a[pb + pd * k] == a[tb + td * (i + k)]:
            k += 1
        out[i] = k
        if i + k > r:
            l = i
            r = i + k


@nb.njit(cache=True)
def _emit(w, n, l, r, s, e, p, out_s, out_e, out_p, cnt):
    # keep only runs whose maximal extent fits in [l, r); the others are
    # found at the node whose split point they straddle higher up
    if s == l and l > 0 and w[l - 1] == w[l - 1 + p]:
        return cnt
    if e == r - 1 and r < n and w[r] == w[r - p]:
        return cnt
    if cnt >= len(out_s):
        return -1
    out_s[cnt] = s
    out_e[cnt] = e
    out_p[cnt] = p
    return cnt + 1


@nb.njit(cache=True)
def _runs_raw(w, cap):
    """0-based (start, end, period) candidates; each maximal run appears at
    least once with its minimal period (possibly also with multiples).

    Divide and conquer: at split m, a run crossing m (holding m-1 and m)
    either holds the pair (m-1, m-1+p) or ends before m+p-1 and then holds
    (m-p, m).  Extensions come from Z-functions on strided views."""
    n = len(w)
    out_s = np.empty(cap, np.int64)
    out_e = np.empty(cap, np.int64)
    out_p = np.empty(cap, np.int64)
    cnt = 0
    stack_l = np.empty(128, np.int64)
    stack_r = np.empty(128, np.int64)
    stack_l[0] = 0
    stack_r[0] = n
    top = 1
    za = np.empty(n + 1, np.int64)
    zb = np.empty(n + 1, np.int64)
    mo = np.empty(n + 1, np.int64)
    while top > 0:
        top -= 1
        l = stack_l[top]
        r = stack_r[top]
        if r - l < 2:
            continue
        m = (l + r) // 2
        stack_l[top] = l
        stack_r[top] = m
        stack_l[top + 1] = m
        stack_r[top + 1] = r
        top += 2

        # pair (m-1, m-1+p)
        _zd(w, m - 1, 1, r - m + 1, za)
        lp = m - 1 - l
        if lp > 0:
            _zd(w, m - 2, -1, lp, zb)
            _match(w, m - 2, -1, lp, zb, r - 2, -1, r - 1 - l, r - m, mo)
        for p in range(1, r - m + 1):
            er = za[p]
            if er == 0:
                continue
            el = mo[r - m - p] if lp > 0 else 0
            if el + er >= p:
                cnt = _emit(w, n, l, r, m - 1 - el, m - 2 + er + p, p, out_s, out_e, out_p, cnt)
                if cnt < 0:
                    return out_s, out_e, out_p, -1

        # pair (m-p, m), run ending before m+p-1
        lenr = r - m
        lenl = m - l
        _zd(w, m, 1, lenr, zb)
        _match(w, m, 1, lenr, zb, l, 1, r - l, lenl, mo)
        _zd(w, m - 1, -1, lenl, za)
        for p in range(1, lenl + 1):
            er = mo[m - p - l]
            if er == 0:
                continue
            el = za[p] if p < lenl else 0
            if el + er >= p:
                e = m - 1 + er
                if e >= m + p - 1:
                    continue
                cnt = _emit(w, n, l, r, m - p - el, e, p, out_s, out_e, out_p, cnt)
                if cnt < 0:
                    return out_s, out_e, out_p, -1
    return out_s, out_e, out_p, cnt


def runs_arrays(a: np.ndarray):
    """Maximal runs as three 1-based int arrays (start, end, period) sorted
    by start then end."""
    n = len(a)
    if n < 2:
        z = np.zeros(0, np.int64)
        return z, z, z
    cap = 4 * n + 64
    while True:
        s, e, p, cnt = _runs_raw(a, cap)
        if cnt >= 0:
            break
        cap *= 4
    s, e, p = s[:cnt], e[:cnt], p[:cnt]
    order = np.lexsort((p, e, s))
    s, e, p = s[order], e[order], p[order]
    keep = np.ones(len(s), dtype=bool)
    if len(s):
        keep[1:] = (s[1:] != s[:-1]) | (e[1:] != e[:-1])
    return s[keep] + 1, e[keep] + 1, p[keep]


def compute_runs(w: WordLike) -> list:
    a = as_array(w)
    s, e, p = runs_arrays(a)
    runs = [Run(int(x), int(y), int(z)) for x, y, z in zip(s, e, p)]
    assert len(runs) <= max(len(a), 1), "more runs than positions"
    return runs


# --------------------------------------------------------------------------
# interval construction for the tables


@nb.njit(cache=True)
def _run_intervals(rs, re, rp, n):
    """Weighted intervals per table, all in 1-based [a, b) form.

    kinds: 0 SC (max), 1 MinRightEnd type 1 (min root length, end i+p),
    2 MinRightEnd type 2 (min end), 3 right (min root), 4 left (min root),
    5 MaxSqEnd (max)."""
    total = 0
    for t in range(len(rs)):
        total += (re[t] - rs[t] + 1) // (2 * rp[t]) * 2 + 4
    A = np.empty(total, np.int64)
    B = np.empty(total, np.int64)
    G = np.empty(total, np.int64)
    K = np.empty(total, np.int64)
    c = 0
    for t in range(len(rs)):
        a = rs[t]
        b = re[t]
        p = rp[t]
        ln = b - a + 1
        for l in range(1, ln // (2 * p) + 1):
            arm = l * p
            # centres: second half starts at c in [a+arm, b-arm+1]
            A[c] = a + arm
            B[c] = b - arm + 2
            G[c] = arm
            K[c] = 0
            c += 1
            # squares of length 2*arm end in [a+2arm-1, b]
            A[c] = a + 2 * arm - 1
            B[c] = b + 1
            G[c] = 2 * arm
            K[c] = 5
            c += 1
        if b - p >= a + p - 1:
            A[c] = a + p - 1
            B[c] = b - p + 1
            G[c] = p
            K[c] = 1
            c += 1
        A[c] = a
        B[c] = a + p
        G[c] = a + 2 * p - 1
        K[c] = 2
        c += 1
        A[c] = a
        B[c] = b - 2 * p + 2
        G[c] = p
        K[c] = 3
        c += 1
        A[c] = a + 2 * p - 1
        B[c] = b + 1
        G[c] = p
        K[c] = 4
        c += 1
    return A[:c], B[:c], G[:c], K[:c]


def _cover_kind(A, B, G, K, kind, n, maximize):
    sel = K == kind
    a, b, g = A[sel], B[sel], G[sel]
    if len(g):
        order = _counting_order(g, 0, int(g.max()))
    else:
        order = np.zeros(0, np.int64)
    return _cover(a, b, g, order, n, maximize)


@dataclass(frozen=True)
class SquareTables:
    """Per-position arrays stored 0-based (index i-1 holds position i)."""

    n: int
    SC: np.ndarray
    MinRightEnd: np.ndarray
    MaxLeftEnd: np.ndarray
    left: np.ndarray
    right: np.ndarray
    MaxSqEnd: np.ndarray


def _min_right_end(A, B, G, K, n):
    pos = np.arange(1, n + 1, dtype=np.int64)
    t1 = _cover_kind(A, B, G, K, 1, n, False)
    t2 = _cover_kind(A, B, G, K, 2, n, False)
    e1 = np.where(t1 <= n, pos + t1, n + 1)
    return np.minimum(e1, t2)


def compute_center_tables(w: WordLike, runs=None):
    """(SC, MinRightEnd, MaxLeftEnd) as 0-based arrays of positions 1..n."""
    a = as_array(w)
    n = len(a)
    rs, re, rp = runs if runs is not None else runs_arrays(a)
    A, B, G, K = _run_intervals(rs, re, rp, n)
    sc = _cover_kind(A, B, G, K, 0, n, True)
    mre = _min_right_end(A, B, G, K, n)
    # mirror image for MaxLeftEnd
    ra, rb, rq = n + 1 - re[::-1], n + 1 - rs[::-1], rp[::-1]
    A2, B2, G2, K2 = _run_intervals(ra.copy(), rb.copy(), rq.copy(), n)
    mre_rev = _min_right_end(A2, B2, G2, K2, n)
    mle = (n + 1 - mre_rev)[::-1].copy()
    return sc, mre, mle


def compute_boundary_tables(w: WordLike, runs=None):
    """(left, right, MaxSqEnd) as 0-based arrays of positions 1..n."""
    a = as_array(w)
    n = len(a)
    rs, re, rp = runs if runs is not None else runs_arrays(a)
    A, B, G, K = _run_intervals(rs, re, rp, n)
    pos = np.arange(1, n + 1, dtype=np.int64)
    pr = _cover_kind(A, B, G, K, 3, n, False)
    right = np.where(pr <= n, pos + 2 * pr - 1, n + 1)
    pl = _cover_kind(A, B, G, K, 4, n, False)
    left = np.where(pl <= n, pos - 2 * pl + 1, 0)
    mse = _cover_kind(A, B, G, K, 5, n, True)
    return left, right, mse


def square_tables(w: WordLike) -> SquareTables:
    a = as_array(w)
    runs = runs_arrays(a)
    sc, mre, mle = compute_center_tables(a, runs)
    left, right, mse = compute_boundary_tables(a, runs)
    return SquareTables(len(a), sc, mre, mle, left, right, mse)


# --------------------------------------------------------------------------
# primitively rooted squares


@dataclass(frozen=True)
class PrimSquareLists:
    """CSR lists: roots of primitively rooted squares by start and by end.

    ``by_start_roots[by_start_off[i-1]:by_start_off[i]]`` are the root
    lengths p (ascending) with w[i..i+2p-1] a primitively rooted square,
    p ≤ k.  ``by_end`` is the same keyed by the square's last position."""

    n: int
    k: int
    by_start_off: np.ndarray
    by_start_roots: np.ndarray
    by_end_off: np.ndarray
    by_end_roots: np.ndarray

    def starting_at(self, i: int) -> list:
        return self.by_start_roots[self.by_start_off[i - 1] : self.by_start_off[i]].tolist()

    def ending_at(self, j: int) -> list:
        return self.by_end_roots[self.by_end_off[j - 1] : self.by_end_off[j]].tolist()


@nb.njit(cache=True)
def prim_csr(rs, re, rp, k, n, key):
    """CSR over positions 1..n of primitively rooted squares with root <= k.

    key 0: square start, 1: square end, 2: centre (start of second root).
    Roots inside each bucket are ascending."""
    off = np.zeros(n + 2, np.int64)
    for t in range(len(rs)):
        p = rp[t]
        if p > k:
            continue
        for s in range(rs[t], re[t] - 2 * p + 2):
            pos = s if key == 0 else (s + 2 * p - 1 if key == 1 else s + p)
            off[pos] += 1
    # exclusive prefix sums: bucket for position i is [off[i-1], off[i])
    acc = 0
    start = np.zeros(n + 1, np.int64)
    for i in range(1, n + 1):
        start[i - 1] = acc
        acc += off[i]
    start[n] = acc
    fill = start[:n].copy()
    roots = np.empty(acc, np.int64)
    for t in range(len(rs)):
        p = rp[t]
        if p > k:
            continue
        for s in range(rs[t], re[t] - 2 * p + 2):
            pos = s if key == 0 else (s + 2 * p - 1 if key == 1 else s + p)
            roots[fill[pos - 1]] = p
            fill[pos - 1] += 1
    for i in range(n):
        lo = start[i]
        hi = start[i + 1]
        for x in range(lo + 1, hi):
            v = roots[x]
            y = x - 1
            while y >= lo and roots[y] > v:
                roots[y + 1] = roots[y]
                y -= 1
            roots[y + 1] = v
    return start, roots


def prim_squares(w: WordLike, k: int, runs=None) -> PrimSquareLists:
    a = as_array(w)
    n = len(a)
    if not 1 <= k <= max(n, 1):
        raise ValueError("need 1 <= k <= n")
    rs, re, rp = runs if runs is not None else runs_arrays(a)
    off_s, roots_s = prim_csr(rs, re, rp, k, n, 0)
    off_e, roots_e = prim_csr(rs, re, rp, k, n, 1)
    return PrimSquareLists(n, k, off_s, roots_s, off_e, roots_e)


def bounded_left_right(w: WordLike, k: int, runs=None):
    """left_k / right_k: shortest square ending / starting at each position
    counting only roots of length ≤ k (sentinels 0 and n+1)."""
    a = as_array(w)
    n = len(a)
    rs, re, rp = runs if runs is not None else runs_arrays(a)
    sel = rp <= k
    left, right, _ = compute_boundary_tables(a, (rs[sel], re[sel], rp[sel]))
    return left, right
