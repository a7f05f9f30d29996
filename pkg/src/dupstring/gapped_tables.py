"""Longest previous gapped factor / reversed factor tables under three gap
regimes, the L array, and maximal long-armed repeats and palindromes.

All tables are 1-based arrays of length n+1 (index 0 unused).  LCP values
come from one suffix array over w·sep·w^R; forward suffix w[i..] sits at
concatenation position i, reversed prefix w[1..j]^R at 2n+2-j.
"""
from __future__ import annotations

import os
from dataclasses import dataclass

import numba as nb
import numpy as np

from .core_index import build_bidi_index
from .interval_engine import cover_arrays
from .words import BudgetError, WordLike, as_array

LONG_ARMED_BUDGET = int(os.environ.get("DUPSTRING_LONG_ARMED_BUDGET", 2 * 10**8))


# --------------------------------------------------------------------------
# LCP oracle in numba form


@nb.njit(cache=True)
def _sparse(values):
    m = len(values)
    K = 1
    while (1 << K) <= m:
        K += 1
    t = np.empty((K, m), np.int64)
    t[0, :] = values
    span = 1
    for k in range(1, K):
        for x in range(m - 2 * span + 1):
            t[k, x] = min(t[k - 1, x], t[k - 1, x + span])
        span *= 2
    return t


@nb.njit(cache=True)
def _smin(t, lo, hi):
    """min over 0-based inclusive [lo, hi]."""
    k = 0
    while (1 << (k + 1)) <= hi - lo + 1:
        k += 1
    return min(t[k, lo], t[k, hi - (1 << k) + 1])


@nb.njit(cache=True)
def _lcp(rank, sp, m, p, q):
    """LCP of concatenation suffixes at 1-based positions p and q."""
    if p == q:
        return m - p + 1
    a = rank[p - 1]
    b = rank[q - 1]
    if a > b:
        a, b = b, a
    return _smin(sp, a, b - 1)  # lcp[r] pairs ranks r-1 and r (1-based a..b)


class _Lcp:
    def __init__(self, a: np.ndarray):
        bi = build_bidi_index(a)
        self.n = len(a)
        self.m = 2 * self.n + 1
        self.rank = bi.inner.rank.astype(np.int64)  # 1-based ranks
        self.sa = bi.inner.sa.astype(np.int64)
        self.sp = _sparse(bi.inner.lcp.astype(np.int64))

    def rev(self, j):
        return 2 * self.n + 2 - j


# --------------------------------------------------------------------------
# fixed-width sliding windows: nearest keys below and above a query key


@nb.njit(cache=True)
def _uf_find(par, x):
    r = x
    while par[r] != r:
        r = par[r]
    while par[x] != r:
        y = par[x]
        par[x] = r
        x = y
    return r


@nb.njit(cache=True)
def _window_neighbors(key, N, width, lo, qkey):
    """For each query t, among elements x in [lo[t], lo[t]+width-1] ∩ [1, N]
    return the element with the largest key < qkey[t] and the one with the
    smallest key > qkey[t] (0 when absent).  lo must be nondecreasing.

    Elements are cut into blocks of ``width``; a window is a suffix of one
    block plus a prefix of the next.  Suffix parts lose elements as lo grows
    and prefix parts gain them, so each is a deletion sequence (the latter
    in reverse time), answered by union-find over the block's key order."""
    Q = len(lo)
    pred = np.zeros(Q, np.int64)
    succ = np.zeros(Q, np.int64)
    nb_ = (N + width - 1) // width
    for b in range(nb_):
        s = b * width + 1
        e = min(N, (b + 1) * width)
        sz = e - s + 1
        ks = np.empty(sz, np.int64)
        for x in range(sz):
            ks[x] = key[s + x]
        order = np.argsort(ks)
        skeys = ks[order]
        spos = order + s
        # slot of each element in key order
        slot = np.empty(sz, np.int64)
        for r in range(sz):
            slot[spos[r] - s] = r
        for part in range(2):
            # part 0: windows starting in block b (suffix part)
            # part 1: windows starting in block b-1 (prefix part)
            pl = np.arange(sz + 2)  # slot r at index r+1; 0 and sz+1 sentinels
            pr = np.arange(sz + 2)
            if part == 0:
                t0 = np.searchsorted(lo, s)
                t1 = np.searchsorted(lo, e + 1)
                cur = s
                for t in range(t0, t1):
                    while cur < lo[t]:
                        r = slot[cur - s] + 1
                        pl[r] = r - 1
                        pr[r] = r + 1
                        cur += 1
                    c = np.searchsorted(skeys, qkey[t])
                    a = _uf_find(pl, c)
                    bb = _uf_find(pr, c + 1)
                    _merge(pred, succ, t, a, bb, sz, spos, skeys, key)
            else:
                t0 = np.searchsorted(lo, s - width)
                t1 = np.searchsorted(lo, s)
                cur = e
                for t in range(t1 - 1, t0 - 1, -1):
                    hi = lo[t] + width - 1
                    while cur > hi:
                        r = slot[cur - s] + 1
                        pl[r] = r - 1
                        pr[r] = r + 1
                        cur -= 1
                    if hi < s:
                        continue
                    c = np.searchsorted(skeys, qkey[t])
                    a = _uf_find(pl, c)
                    bb = _uf_find(pr, c + 1)
                    _merge(pred, succ, t, a, bb, sz, spos, skeys, key)
    return pred, succ


@nb.njit(cache=True)
def _merge(pred, succ, t, a, bb, sz, spos, skeys, key):
    if a >= 1:
        x = spos[a - 1]
        if pred[t] == 0 or key[pred[t]] < key[x]:
            pred[t] = x
    if bb <= sz:
        x = spos[bb - 1]
        if succ[t] == 0 or key[succ[t]] > key[x]:
            succ[t] = x


# --------------------------------------------------------------------------
# bounded gaps g <= |v| < G


@nb.njit(cache=True)
def _lprf_bounded(rank, sp, m, n, g, G):
    width = G - g
    key = np.zeros(n + 1, np.int64)
    for j in range(1, n + 1):
        key[j] = rank[2 * n + 2 - j - 1]
    lo = np.empty(n, np.int64)
    q = np.empty(n, np.int64)
    for i in range(1, n + 1):
        lo[i - 1] = i - G
        q[i - 1] = rank[i - 1]
    pred, succ = _window_neighbors(key, n, width, lo, q)
    out = np.zeros(n + 1, np.int64)
    for i in range(1, n + 1):
        best = 0
        for x in (pred[i - 1], succ[i - 1]):
            if x > 0:
                v = _lcp(rank, sp, m, i, 2 * n + 2 - x)
                if v > best:
                    best = v
        out[i] = best
    return out


def lprf_bounded(w: WordLike, g: int, G: int) -> np.ndarray:
    """Longest u, prefix of w[i..], with u^R v a suffix of w[1..i-1] and
    g <= |v| < G."""
    a = as_array(w)
    n = len(a)
    if not 0 <= g < G <= n:
        raise ValueError("need 0 <= g < G <= n")
    L = _Lcp(a)
    return _lprf_bounded(L.rank, L.sp, L.m, n, g, G)


@nb.njit(cache=True)
def _eval_start(rank, sp, m, i, s, g, G):
    """Best arm for a previous occurrence starting at s: min(lcp, i-s-g),
    valid when it reaches i-s-G+1 and 1."""
    if s < 1 or s >= i:
        return 0
    u = min(_lcp(rank, sp, m, s, i), i - s - g)
    if u >= 1 and u >= i - s - G + 1:
        return u
    return 0


@nb.njit(cache=True)
def _strip(rank, sp, m, n, i, k, g, G, occ, lo, hi, best):
    """Occurrences s in [lo, hi] of the length-2^k factor at i, taken from the
    sorted list ``occ``.  Consecutive occurrences at a common distance
    q <= 2^k lie in one q-periodic stretch; for such a progression only the
    first valid index in each regime of lcp (bounded by the stretch at i,
    equal to it, bounded by the stretch at s) needs evaluating."""
    if lo < 1:
        lo = 1
    if hi >= i:
        hi = i - 1
    if lo > hi:
        return best
    L = 1 << k
    x = np.searchsorted(occ, lo)
    while x < len(occ) and occ[x] <= hi:
        s0 = occ[x]
        v = _eval_start(rank, sp, m, i, s0, g, G)
        if v > best:
            best = v
        if x + 1 < len(occ) and occ[x + 1] <= hi and occ[x + 1] - s0 <= L:
            q = occ[x + 1] - s0
            e = s0 + q + _lcp(rank, sp, m, s0, s0 + q) - 1  # end of stretch
            last = min(hi, e - L + 1)
            cnt = (last - s0) // q + 1
            Pi = q + (_lcp(rank, sp, m, i, i + q) if i + q <= n else 0)
            if Pi > n - i + 1:
                Pi = n - i + 1
            E0 = e - s0 + 1
            C = i - s0 - G + 1
            cands = np.empty(4, np.int64)
            cands[0] = cnt - 1
            # regime E_t > Pi: lcp = Pi, first t with Pi >= C - t q
            ta = 0
            if C - Pi > 0:
                ta = (C - Pi + q - 1) // q
            cands[1] = ta
            # E_t == Pi
            cands[2] = (E0 - Pi) // q if (E0 - Pi) >= 0 and (E0 - Pi) % q == 0 else 0
            # first t with E_t < Pi
            tb = 0
            if E0 - Pi >= 0:
                tb = (E0 - Pi) // q + 1
            cands[3] = tb
            for c in cands:
                if 0 <= c < cnt:
                    v = _eval_start(rank, sp, m, i, s0 + c * q, g, G)
                    if v > best:
                        best = v
            # skip the rest of the progression
            x = np.searchsorted(occ, s0 + (cnt - 1) * q + 1)
        else:
            x += 1
    return best


@nb.njit(cache=True)
def _lpf_bounded(rank, sp, m, n, g, G, lab_order, lab_start, labels, K):
    out = np.zeros(n + 1, np.int64)
    fkey = np.zeros(n + 1, np.int64)
    for s in range(1, n + 1):
        fkey[s] = rank[s - 1]
    for k in range(K):
        L = 1 << k
        # inner window [i-L-G+1, i-2L-g+1], every arm in [L, 2L) is valid
        width = G - g - L + 1
        if width >= 1:
            lo = np.empty(n, np.int64)
            q = np.empty(n, np.int64)
            for i in range(1, n + 1):
                lo[i - 1] = i - L - G + 1
                q[i - 1] = rank[i - 1]
            pred, succ = _window_neighbors(fkey, n, width, lo, q)
            for i in range(1, n - L + 2):
                for x in (pred[i - 1], succ[i - 1]):
                    if x > 0:
                        v = _eval_start(rank, sp, m, i, x, g, G)
                        if v > out[i]:
                            out[i] = v
        # strips next to the inner window, through basic-factor occurrences
        for i in range(1, n - L + 2):
            lab = labels[k, i - 1]
            occ = lab_order[k, lab_start[k, lab] : lab_start[k, lab + 1]]
            best = out[i]
            lo_all = i - 2 * L - G + 2
            hi_all = i - L - g
            if width >= 1:
                best = _strip(rank, sp, m, n, i, k, g, G, occ, lo_all, i - L - G, best)
                best = _strip(rank, sp, m, n, i, k, g, G, occ, i - 2 * L - g + 2, hi_all, best)
            else:
                best = _strip(rank, sp, m, n, i, k, g, G, occ, lo_all, hi_all, best)
            out[i] = best
    return out


def _basic_factor_lists(a: np.ndarray):
    """labels[k, i-1] for the length-2^k factor at i and, per label, the
    sorted start positions (flattened by label)."""
    n = len(a)
    K = max(1, n.bit_length())
    while (1 << (K - 1)) > n:
        K -= 1
    labels = np.full((K, n), -1, np.int64)
    order_all = np.zeros((K, n), np.int64)
    start_all = np.zeros((K, n + 2), np.int64)
    _, lab = np.unique(a, return_inverse=True)
    cur = lab.astype(np.int64)
    for k in range(K):
        L = 1 << k
        cnt = n - L + 1
        if k > 0:
            half = L // 2
            prev = labels[k - 1]
            pairs = prev[:cnt] * (n + 1) + prev[half : half + cnt]
            _, cur = np.unique(pairs, return_inverse=True)
            cur = cur.astype(np.int64)
        labels[k, :cnt] = cur
        order = np.argsort(cur, kind="stable")
        order_all[k, :cnt] = order + 1
        bounds = np.searchsorted(cur[order], np.arange(n + 2))
        start_all[k, :] = bounds
    return labels, order_all, start_all, K


def lpf_bounded(w: WordLike, g: int, G: int) -> np.ndarray:
    """Longest u, prefix of w[i..], with uv a suffix of w[1..i-1] and
    g <= |v| < G.  Arms in [2^k, 2^{k+1}) are searched per level k: the
    middle of the admissible start range is handled by nearest-rank window
    queries, the two border strips by basic-factor occurrence lists."""
    a = as_array(w)
    n = len(a)
    if not 0 <= g < G <= n:
        raise ValueError("need 0 <= g < G <= n")
    Lc = _Lcp(a)
    labels, order, start, K = _basic_factor_lists(a)
    return _lpf_bounded(Lc.rank, Lc.sp, Lc.m, n, g, G, order, start, labels, K)


# --------------------------------------------------------------------------
# position-dependent lower bound g(i) <= |v|


@nb.njit(cache=True)
def _lprf_func(rank, sp, m, n, gg):
    """Prefix windows j <= i-1-g(i): process queries by decreasing bound and
    delete elements above it; neighbours in key order via union-find."""
    M = 2 * n + 1
    # elements: reversed prefixes j, keyed by concatenation rank
    is_el = np.zeros(M + 2, np.bool_)
    el_at = np.zeros(M + 2, np.int64)
    for j in range(1, n + 1):
        r = rank[2 * n + 2 - j - 1]
        is_el[r] = True
        el_at[r] = j
    # slot index among elements in rank order
    slot_of_rank = np.zeros(M + 2, np.int64)  # elements with rank < r
    c = 0
    slots = np.zeros(n + 2, np.int64)
    for r in range(1, M + 1):
        slot_of_rank[r] = c
        if is_el[r]:
            c += 1
            slots[c] = el_at[r]
    slot_of_rank[M + 1] = c
    slot_of_j = np.zeros(n + 1, np.int64)
    for s in range(1, n + 1):
        slot_of_j[slots[s]] = s
    pl = np.arange(n + 2)
    pr = np.arange(n + 2)
    hs = np.empty(n, np.int64)
    for i in range(1, n + 1):
        hs[i - 1] = i - 1 - gg[i]
    order = np.argsort(-hs, kind="mergesort")
    cur = n
    out = np.zeros(n + 1, np.int64)
    for t in order:
        i = t + 1
        h = hs[t]
        while cur > max(h, 0):
            s = slot_of_j[cur]
            pl[s] = s - 1
            pr[s] = s + 1
            cur -= 1
        if h < 1:
            continue
        below = slot_of_rank[rank[i - 1]]
        best = 0
        a = _uf_find(pl, below)
        if a >= 1:
            best = max(best, _lcp(rank, sp, m, i, 2 * n + 2 - slots[a]))
        b = _uf_find(pr, below + 1)
        if b <= n:
            best = max(best, _lcp(rank, sp, m, i, 2 * n + 2 - slots[b]))
        out[i] = best
    return out


def _check_g(gg, n):
    g = np.asarray(gg, dtype=np.int64)
    if len(g) != n or (n and (g.min() < 1 or g.max() > n)):
        raise ValueError("g must hold n values in [1, n]")
    out = np.zeros(n + 1, np.int64)
    out[1:] = g
    return out


def lprf_func(w: WordLike, g) -> np.ndarray:
    """Longest u, prefix of w[i..], with u^R v a suffix of w[1..i-1] and
    g(i) <= |v|.  ``g`` lists g(1..n)."""
    a = as_array(w)
    n = len(a)
    gg = _check_g(g, n)
    L = _Lcp(a)
    return _lprf_func(L.rank, L.sp, L.m, n, gg)


@dataclass(frozen=True)
class LArray:
    """L[i] (1-based, L[1] = 0): leftmost j < i maximizing LCP(j, i);
    lcp[i] = that maximum."""

    L: np.ndarray
    lcp: np.ndarray

    def chain(self, i: int) -> list:
        out = []
        x = int(self.L[i])
        while x > 0:
            out.append(x)
            x = int(self.L[x])
        return out


@nb.njit(cache=True)
def _l_array(rank, sa, sp, m, n):
    M = 2 * n + 1
    # positions in rank order, non-forward suffixes as n+1 (never chosen)
    posr = np.empty(M, np.int64)
    for r in range(M):
        p = sa[r]
        posr[r] = p if p <= n else n + 1
    psv = np.full(M, -1, np.int64)
    nsv = np.full(M, -1, np.int64)
    stack = np.empty(M, np.int64)
    top = 0
    for r in range(M):
        while top > 0 and posr[stack[top - 1]] >= posr[r]:
            top -= 1
        psv[r] = stack[top - 1] if top > 0 else -1
        stack[top] = r
        top += 1
    top = 0
    for r in range(M - 1, -1, -1):
        while top > 0 and posr[stack[top - 1]] >= posr[r]:
            top -= 1
        nsv[r] = stack[top - 1] if top > 0 else -1
        stack[top] = r
        top += 1
    ptab = _sparse(posr)
    L = np.zeros(n + 1, np.int64)
    lc = np.zeros(n + 1, np.int64)
    for i in range(2, n + 1):
        r = rank[i - 1] - 1  # 0-based
        best = 0
        if psv[r] >= 0:
            best = max(best, _lcp(rank, sp, m, i, sa[psv[r]]))
        if nsv[r] >= 0:
            best = max(best, _lcp(rank, sp, m, i, sa[nsv[r]]))
        if best == 0:
            L[i] = 1
            lc[i] = _lcp(rank, sp, m, i, 1)
            continue
        # widen [lo, hi] (0-based ranks) while adjacent lcp >= best
        lo = r
        step = 1
        while lo > 0:
            nlo = max(0, lo - step)
            if _smin(sp, nlo + 1, lo) >= best:
                lo = nlo
                step *= 2
            elif step == 1:
                break
            else:
                step = 1
        hi = r
        step = 1
        while hi < M - 1:
            nhi = min(M - 1, hi + step)
            if _smin(sp, hi + 1, nhi) >= best:
                hi = nhi
                step *= 2
            elif step == 1:
                break
            else:
                step = 1
        L[i] = _smin(ptab, lo, hi)
        lc[i] = best
    return L, lc


def l_array(w: WordLike) -> LArray:
    a = as_array(w)
    n = len(a)
    if n == 0:
        raise ValueError("empty input")
    Lc = _Lcp(a)
    L, lc = _l_array(Lc.rank, Lc.sa, Lc.sp, Lc.m, n)
    return LArray(L, lc)


@nb.njit(cache=True)
def _lpf_func(L, lc, n, gg):
    """Walk the L chain of i to the first node c with c + LCP(c, i) <= T,
    T = i - g(i).  Beyond the first hop the chain LCPs are edge values
    e(x) = L[x] + LCP(L[x], x), so the search is a union-find over the
    L forest, merging nodes with e(x) > T as T decreases."""
    e = np.full(n + 1, -1, np.int64)
    for x in range(2, n + 1):
        e[x] = L[x] + lc[x]
    par = np.arange(n + 1)
    nodes = np.argsort(-e[1:], kind="mergesort") + 1
    T = np.empty(n, np.int64)
    for i in range(1, n + 1):
        T[i - 1] = i - gg[i]
    order = np.argsort(-T, kind="mergesort")
    out = np.zeros(n + 1, np.int64)
    ptr = 0
    for t in order:
        i = t + 1
        Ti = T[t]
        while ptr < n and e[nodes[ptr]] > Ti:
            x = nodes[ptr]
            if x >= 2:
                par[x] = L[x]
            ptr += 1
        if i == 1:
            continue
        c1 = L[i]
        l1 = lc[i]
        if c1 + l1 <= Ti:
            ans = l1
        else:
            y = _uf_find(par, c1)
            if y == 1:
                # every chain node overshoots: best is the leftmost start
                ans = Ti - 1
            else:
                ans = max(e[y] - L[y], Ti - y)
        out[i] = max(ans, 0)
    return out


def lpf_func(w: WordLike, g) -> np.ndarray:
    """Longest u, prefix of w[i..], with uv a suffix of w[1..i-1] and
    g(i) <= |v|."""
    a = as_array(w)
    n = len(a)
    gg = _check_g(g, n)
    la = l_array(a)
    return _lpf_func(la.L, la.lcp, n, gg)


# --------------------------------------------------------------------------
# long-armed structures |v| <= |u|


@dataclass(frozen=True)
class MaxLongArmed:
    """Triples (left arm start, arm length, right arm start), 1-based.

    Palindromes u^R v u: arms cannot grow outwards, nor inwards (which would
    shrink the gap by two).  Repeats u v u: arms cannot grow on either side;
    overlapping and adjacent arms are kept (gap length = j - i - arm may be
    zero or negative) because they feed the empty-gap entries."""

    kind: str
    left: np.ndarray
    arm: np.ndarray
    right: np.ndarray

    def __len__(self):
        return len(self.arm)

    def triples(self) -> list:
        return list(zip(self.left.tolist(), self.arm.tolist(), self.right.tolist()))


@nb.njit(cache=True)
def _pal_scan(a):
    n = len(a)
    L = []
    A = []
    R = []
    # right arm starts at j, left arm ends at e = j - d - 1 (gap d >= 0)
    for s in range(2, 2 * n + 1):
        # diagonal: j + e = s, j > e
        j = s // 2 + 1
        e = s - j
        # walk inward-to-outward pairs along the diagonal
        while e >= 1 and j <= n:
            d = j - e - 1
            if a[j - 1] == a[e - 1]:
                # start of a matching stretch?  inward neighbour mismatches
                # or the gap is too small to move inward
                inner_ok = d <= 1 or a[j - 2] != a[e]
                if inner_ok:
                    l = 0
                    while e - l >= 1 and j + l <= n and a[e - 1 - l] == a[j - 1 + l]:
                        l += 1
                    if d <= l:
                        L.append(e - l + 1)
                        A.append(l)
                        R.append(j)
            j += 1
            e -= 1
    return np.array(L, dtype=np.int64), np.array(A, dtype=np.int64), np.array(R, dtype=np.int64)


@nb.njit(cache=True)
def _rep_scan(a):
    n = len(a)
    L = []
    A = []
    R = []
    for d in range(1, n):
        x = 1
        while x + d <= n:
            if a[x - 1] == a[x + d - 1]:
                l = 0
                while x + d + l <= n and a[x - 1 + l] == a[x + d - 1 + l]:
                    l += 1
                if d - l <= l:
                    L.append(x)
                    A.append(l)
                    R.append(x + d)
                x += l
            else:
                x += 1
    return np.array(L, dtype=np.int64), np.array(A, dtype=np.int64), np.array(R, dtype=np.int64)


def maximal_long_armed(w: WordLike, kind: str = "palindrome") -> MaxLongArmed:
    a = as_array(w)
    n = len(a)
    if kind not in ("palindrome", "repeat"):
        raise ValueError("kind must be palindrome or repeat")
    if n * n > LONG_ARMED_BUDGET:
        raise BudgetError("long-armed scan exceeds the quadratic budget")
    if n == 0:
        z = np.zeros(0, np.int64)
        return MaxLongArmed(kind, z, z, z)
    l, u, r = (_pal_scan if kind == "palindrome" else _rep_scan)(a)
    return MaxLongArmed(kind, l, u, r)


def lpal_lrep(w: WordLike, kind: str = "palindrome") -> np.ndarray:
    """LPal (u^R v u) or LRep (u v u) with |v| <= |u|.

    A structure with right arm [j, j+l-1] and gap d still serves positions
    i = j + t after trimming t symbols: palindromes need d + 2t <= l - t,
    repeats d + t <= l - t.  Each such range is an interval weighted by the
    fixed right end H = j + l - 1, and the entry is H - i + 1.  For repeats
    with overlapping arms (d < 0) the trimmed arm cannot exceed the period,
    so their range starts at t = -d; the skipped positions are squares
    centred at i, which the longest-centred-square array supplies."""
    a = as_array(w)
    n = len(a)
    out = np.zeros(n + 1, np.int64)
    if n == 0:
        return out
    st = maximal_long_armed(a, kind)
    j, l = st.right, st.arm
    d = j - st.left - l
    div = 3 if kind == "palindrome" else 2
    r = (l - d) // div
    t0 = np.maximum(0, -d)
    keep = r >= t0
    A = (j + t0)[keep]
    B = np.minimum(j + r + 1, n + 1)[keep]
    H = (j + l - 1)[keep]
    ok = A < B
    cov = cover_arrays(A[ok], B[ok], H[ok], n, "max")
    pos = np.arange(1, n + 1)
    vals = np.where(cov > 0, cov - pos + 1, 0)
    if kind == "repeat":
        from .square_tables import compute_center_tables

        sc, _, _ = compute_center_tables(a)
        vals = np.maximum(vals, sc)
    out[1:] = vals
    return out
