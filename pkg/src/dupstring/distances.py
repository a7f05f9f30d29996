"""Duplication and square-completion distances.

Infinity is reported as ``math.inf`` by the public functions; arrays use
``INF_DIST`` internally.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numba as nb
import numpy as np

from .core_index import occurrences
from .square_tables import compute_boundary_tables, runs_arrays
from .words import BudgetError, WordLike, as_array

INF_DIST = np.iinfo(np.int64).max // 4
PSSC_CAP = int(os.environ.get("DUPSTRING_PSSC_CAP", 4000))


def _public(v) -> float:
    return math.inf if v >= INF_DIST else int(v)


def as_public_list(arr) -> list:
    return [_public(v) for v in arr]


@dataclass(frozen=True)
class MaxRep:
    """Maximal integer power t^s (s >= 2) of a primitive t, 1-based closed."""

    start: int
    end: int
    root: int


def max_repetitions(w: WordLike, k: int) -> list:
    a = as_array(w)
    rs, re, rp = runs_arrays(a)
    out = []
    for s, e, p in zip(rs.tolist(), re.tolist(), rp.tolist()):
        if p > k:
            continue
        for r in range(p):
            if s + r + 2 * p - 1 > e:
                break
            cnt = (e - s - r + 1) // p
            out.append(MaxRep(s + r, s + r + cnt * p - 1, p))
    return out


# --------------------------------------------------------------------------
# suffix / prefix duplication distance tables


@nb.njit(cache=True)
def _sdd_fast(rs, re, rp, k, n):
    """SDD[i] for i in 1..n (index i).  From w[1..i] one step reaches
    w[1..i+l] when w[i-l+1..i+l] is a square with l <= k.  Every such
    square lies in the run of its period p, with l a multiple of p; per run
    and residue class of i mod p the admissible targets i+p, ..., i+M*p form
    a window sliding left, so a monotone deque gives the minimum."""
    # active runs per i: i in [s+p-1, e-p]
    cnt = np.zeros(n + 2, np.int64)
    nr = len(rs)
    base = np.zeros(nr + 1, np.int64)
    for t in range(nr):
        p = rp[t]
        b = 0
        if p <= k and re[t] - rs[t] + 1 >= 2 * p:
            for i in range(rs[t] + p - 1, re[t] - p + 1):
                cnt[i] += 1
            b = p * ((re[t] - rs[t] + 1) // p + 2)
        base[t + 1] = base[t] + b
    off = np.zeros(n + 2, np.int64)
    for i in range(1, n + 1):
        off[i + 1] = off[i] + cnt[i]
    act = np.empty(off[n + 1], np.int64)
    fill = off.copy()
    for t in range(nr):
        p = rp[t]
        if p <= k and re[t] - rs[t] + 1 >= 2 * p:
            for i in range(rs[t] + p - 1, re[t] - p + 1):
                act[fill[i]] = t
                fill[i] += 1
    buf = np.empty(base[nr], np.int64)
    # front / back pointers per (run, residue) slot
    nslot = 0
    sbase = np.zeros(nr + 1, np.int64)
    for t in range(nr):
        sbase[t] = nslot
        if base[t + 1] > base[t]:
            nslot += rp[t]
    front = np.empty(nslot, np.int64)
    back = np.empty(nslot, np.int64)
    for t in range(nr):
        if base[t + 1] > base[t]:
            p = rp[t]
            cap = (re[t] - rs[t] + 1) // p + 2
            for r in range(p):
                end = base[t] + (r + 1) * cap
                front[sbase[t] + r] = end
                back[sbase[t] + r] = end
    sdd = np.full(n + 1, INF_DIST, np.int64)
    sdd[n] = 0
    for i in range(n - 1, 0, -1):
        best = INF_DIST
        for q in range(off[i], off[i + 1]):
            t = act[q]
            p = rp[t]
            s = rs[t]
            e = re[t]
            slot = sbase[t] + i % p
            j = i + p
            v = sdd[j]
            f = front[slot]
            b = back[slot]
            while f < b and sdd[buf[f]] >= v:
                f += 1
            f -= 1
            buf[f] = j
            m = min(k // p, (i - s + 1) // p, (e - i) // p)
            upper = i + m * p
            while b > f and buf[b - 1] > upper:
                b -= 1
            front[slot] = f
            back[slot] = b
            if b > f:
                c = sdd[buf[b - 1]]
                if c < best:
                    best = c
        if best < INF_DIST:
            sdd[i] = best + 1
    return sdd


@nb.njit(cache=True)
def _sdd_slow(a, k):
    """O(n k^2) reference: try every arm directly."""
    n = len(a)
    sdd = np.full(n + 1, INF_DIST, np.int64)
    sdd[n] = 0
    for i in range(n - 1, 0, -1):
        best = INF_DIST
        for l in range(1, min(k, i, n - i) + 1):
            ok = True
            for t in range(l):
                if a[i - l + t] != a[i + t]:
                    ok = False
                    break
            if ok and sdd[i + l] < best:
                best = sdd[i + l]
        if best < INF_DIST:
            sdd[i] = best + 1
    return sdd


def dup_distance_tables(w: WordLike, k: int, side: str = "suffix", slow: bool = False) -> np.ndarray:
    """SDD_k (side='suffix') or PDD_k (side='prefix') as a 1-based array of
    length n+1 (index 0 unused) holding INF_DIST for unreachable entries."""
    a = as_array(w)
    n = len(a)
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    if side not in ("suffix", "prefix"):
        raise ValueError("side must be 'suffix' or 'prefix'")
    src = a if side == "suffix" else a[::-1].copy()
    if slow:
        d = _sdd_slow(src, k)
    else:
        rs, re, rp = runs_arrays(src)
        d = _sdd_fast(rs, re, rp, k, n)
    if side == "prefix":
        out = np.full(n + 1, INF_DIST, np.int64)
        out[1:] = d[1:][::-1]
        return out
    return d


@dataclass(frozen=True)
class DistanceTables:
    SDD: np.ndarray
    PDD: np.ndarray
    SSCD: np.ndarray


def distance_tables(w: WordLike, k: int) -> DistanceTables:
    return DistanceTables(
        dup_distance_tables(w, k, "suffix"),
        dup_distance_tables(w, k, "prefix"),
        sscd_table(w),
    )


# --------------------------------------------------------------------------
# PSD_k distance


@nb.njit(cache=True)
def _square_csr(rs, re, rp, k, n):
    """All squares (any root) with arm <= k keyed by centre c (start of the
    second half); arms ascending per centre.  Bucket c is [off[c-1], off[c])."""
    cnt = np.zeros(n + 2, np.int64)
    for t in range(len(rs)):
        p = rp[t]
        if p > k:
            continue
        s = rs[t]
        e = re[t]
        l = p
        while l <= k and 2 * l <= e - s + 1:
            for c in range(s + l, e - l + 2):
                cnt[c] += 1
            l += p
    off = np.zeros(n + 1, np.int64)
    for c in range(1, n + 1):
        off[c] = off[c - 1] + cnt[c]
    fill = np.zeros(n + 1, np.int64)
    for c in range(1, n + 1):
        fill[c] = off[c - 1]
    arms = np.empty(off[n], np.int64)
    for t in range(len(rs)):
        p = rp[t]
        if p > k:
            continue
        s = rs[t]
        e = re[t]
        l = p
        while l <= k and 2 * l <= e - s + 1:
            for c in range(s + l, e - l + 2):
                arms[fill[c]] = l
                fill[c] += 1
            l += p
    for c in range(1, n + 1):
        lo = off[c - 1]
        hi = off[c]
        arms[lo:hi] = np.sort(arms[lo:hi])
    return off, arms


@nb.njit(cache=True)
def _short_bfs(off, arms, n, k, seeds_i, m):
    """BFS from factors (i, m) over factors shorter than k.  Returns
    dist[i, L] for L <= 2k (INF_DIST when unreached); nodes of length >= k
    are reached but not expanded."""
    W = 2 * k
    dist = np.full((n + 2, W + 1), INF_DIST, np.int64)
    qi = np.empty((n + 2) * (W + 1), np.int64)
    qL = np.empty((n + 2) * (W + 1), np.int64)
    head = 0
    tail = 0
    for s in seeds_i:
        if dist[s, m] == INF_DIST:
            dist[s, m] = 0
            qi[tail] = s
            qL[tail] = m
            tail += 1
    while head < tail:
        i = qi[head]
        L = qL[head]
        head += 1
        if L >= k:
            continue
        d = dist[i, L] + 1
        j = i + L - 1
        for t in range(off[i - 1], off[i]):
            l = arms[t]
            if l > L:
                break
            if dist[i - l, L + l] == INF_DIST:
                dist[i - l, L + l] = d
                qi[tail] = i - l
                qL[tail] = L + l
                tail += 1
        if j < n:
            for t in range(off[j], off[j + 1]):
                l = arms[t]
                if l > L:
                    break
                if j + l > n:
                    continue
                if dist[i, L + l] == INF_DIST:
                    dist[i, L + l] = d
                    qi[tail] = i
                    qL[tail] = L + l
                    tail += 1
    return dist


def bpsd_distance(x: WordLike, w: WordLike, k: int) -> float:
    """Least number of PSD_k steps turning x into w (math.inf if none)."""
    xa, a = as_array(x), as_array(w)
    n, m = len(a), len(xa)
    if m > n:
        raise ValueError("need |x| <= |w|")
    if m == 0 or k < 1:
        return math.inf
    occ = occurrences(xa, a)
    if len(occ) == 0:
        return math.inf
    if m == n:
        return 0
    kk = min(k, n)
    sdd = dup_distance_tables(a, kk, "suffix")
    pdd = dup_distance_tables(a, kk, "prefix")
    if m >= k:
        tot = sdd[occ + m - 1] + pdd[occ]
        best = int(tot.min())
        return _public(best)
    rs, re, rp = runs_arrays(a)
    off, arms = _square_csr(rs, re, rp, kk, n)
    dist = _short_bfs(off, arms, n, k, occ.astype(np.int64), m)
    best = INF_DIST
    if n < 2 * k + 1 and dist[1, n] < INF_DIST:
        best = int(dist[1, n])
    for L in range(k, min(2 * k, n) + 1):
        d = dist[1 : n - L + 2, L]
        ok = d < INF_DIST
        if not ok.any():
            continue
        idx = np.flatnonzero(ok) + 1
        tot = d[ok] + sdd[idx + L - 1] + pdd[idx]
        best = min(best, int(tot.min()))
    return _public(best)


# --------------------------------------------------------------------------
# square completion distances


def sscd_table(w: WordLike) -> np.ndarray:
    """SSCD[i] (1-based, index 0 unused): least suffix-square-completion
    steps from w[1..i] to w, INF_DIST if none.

    One step from w[1..i] reaches w[1..i'] iff i < i' and i' - A[i'] <= i,
    A[i'] being the longest square arm ending at i'.  The positions at
    distance <= d form a suffix [Limit[d], n], and Limit[d] is the minimum
    of i' - A[i'] over the positions gained at distance d-1."""
    a = as_array(w)
    n = len(a)
    if n == 0:
        raise ValueError("empty input")
    _, _, mse = compute_boundary_tables(a)
    arm = mse // 2
    reach = np.arange(1, n + 1) - arm  # 0-based index i'-1
    out = np.full(n + 1, INF_DIST, np.int64)
    out[n] = 0
    lo, hi = n, n  # positions [lo, hi] sit at the current distance
    d = 0
    while True:
        nxt = int(reach[lo - 1 : hi].min())
        if nxt >= lo:
            break
        d += 1
        out[nxt:lo] = d
        lo, hi = nxt, lo - 1
    return out


def pscd_table(w: WordLike) -> np.ndarray:
    """PSCD[j]: least prefix-square-completion steps from w[j..n] to w."""
    a = as_array(w)
    n = len(a)
    r = sscd_table(a[::-1].copy())
    out = np.full(n + 1, INF_DIST, np.int64)
    out[1:] = r[1:][::-1]
    return out


@nb.njit(cache=True)
def _farthest_right(a):
    """R[i, j] = largest j' with w[i..j'] one SSC step from w[i..j]
    (j itself when no step exists); 1-based, int32."""
    n = len(a)
    R = np.zeros((n + 2, n + 2), np.int32)
    A = np.zeros(n + 2, np.int64)  # A[c]: longest arm centred at c starting >= i
    lcp_next = np.zeros(n + 2, np.int64)
    lcp_cur = np.zeros(n + 2, np.int64)
    for i in range(n, 0, -1):
        # lcp_cur[c] = lcp of suffixes i and c
        for c in range(n, i, -1):
            if a[i - 1] == a[c - 1]:
                lcp_cur[c] = lcp_next[c + 1] + 1
            else:
                lcp_cur[c] = 0
        for c in range(i + 1, n + 1):
            if lcp_cur[c] >= c - i:
                A[c] = c - i
        best = 0
        for j in range(i, n + 1):
            c = j + 1
            if c <= n and A[c] > 0 and c - A[c] >= i:
                e = c + A[c] - 1
                if e > best:
                    best = e
            R[i, j] = best if best > j else j
        for c in range(n + 1):
            lcp_next[c] = lcp_cur[c]
        lcp_next[n + 1] = 0
        A[i] = 0
    return R


@nb.njit(cache=True)
def _pssc_dp(R, Lm, n):
    """dist over factors by decreasing length; INF_DIST when unreachable."""
    dist = np.full((n + 2, n + 2), INF_DIST, np.int64)
    dist[1, n] = 0
    for L in range(n - 1, 0, -1):
        for i in range(1, n - L + 2):
            j = i + L - 1
            best = INF_DIST
            r = R[i, j]
            if r > j and dist[i, r] < best:
                best = dist[i, r]
            l = Lm[i, j]
            if l < i and dist[l, j] < best:
                best = dist[l, j]
            if best < INF_DIST:
                dist[i, j] = best + 1
    return dist


def pssc_distance_table(w: WordLike, cap: int = None) -> np.ndarray:
    """dist[i, j] = PSSC distance from w[i..j] to w, O(n^2) time and space.

    Each factor keeps two out-edges, to the farthest right and farthest left
    one-step extensions; a larger factor never needs more steps, so the
    other edges are dominated."""
    a = as_array(w)
    n = len(a)
    cap = PSSC_CAP if cap is None else cap
    if n > cap:
        raise BudgetError(f"quadratic PSSC distance capped at n <= {cap}")
    if n == 0:
        raise ValueError("empty input")
    R = _farthest_right(a)
    Rr = _farthest_right(a[::-1].copy())
    # mirror: left extension of (i, j) is n+1 - R_rev(n+1-j, n+1-i)
    idx = np.arange(n + 2)
    Lm = np.zeros((n + 2, n + 2), np.int64)
    ii, jj = np.meshgrid(idx[1 : n + 1], idx[1 : n + 1], indexing="ij")
    Lm[1 : n + 1, 1 : n + 1] = n + 1 - Rr[n + 1 - jj, n + 1 - ii]
    return _pssc_dp(R, Lm, n)


def pssc_distance(x: WordLike, w: WordLike, cap: int = None) -> float:
    xa, a = as_array(x), as_array(w)
    n, m = len(a), len(xa)
    if m > n:
        raise ValueError("need |x| <= |w|")
    occ = occurrences(xa, a)
    if m == 0 or len(occ) == 0:
        return math.inf
    dist = pssc_distance_table(a, cap)
    return _public(int(dist[occ, occ + m - 1].min()))
