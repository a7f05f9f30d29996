"""Brute-force definitions used as independent oracles in tests and by the
CLI ``oracle`` subcommand.  Everything here is deliberately direct."""
from __future__ import annotations

import numba as nb
import numpy as np

from .words import as_tuple, is_primitive, smallest_period


def is_square(t) -> bool:
    m = len(t)
    return m > 0 and m % 2 == 0 and t[: m // 2] == t[m // 2 :]


def runs(w) -> list:
    """All maximal runs (i, j, p), 1-based, by scanning every factor."""
    t = as_tuple(w)
    n = len(t)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            f = t[i : j + 1]
            p = smallest_period(f)
            if 2 * p > len(f):
                continue
            if i > 0 and t[i - 1] == t[i - 1 + p]:
                continue
            if j < n - 1 and t[j + 1] == t[j + 1 - p]:
                continue
            out.append((i + 1, j + 1, p))
    return out


def square_tables(w) -> dict:
    t = as_tuple(w)
    n = len(t)
    sc = [0] * n
    mre = [n + 1] * n
    mle = [0] * n
    left = [0] * n
    right = [n + 1] * n
    mse = [0] * n
    for s in range(n):
        for e in range(s + 1, n, 2):
            if not is_square(t[s : e + 1]):
                continue
            h = (e - s + 1) // 2
            i, j = s + 1, e + 1  # 1-based
            c = i + h
            sc[c - 1] = max(sc[c - 1], h)
            for q in range(i, i + h):
                mre[q - 1] = min(mre[q - 1], j)
            for q in range(i + h, j + 1):
                mle[q - 1] = max(mle[q - 1], i)
            left[j - 1] = max(left[j - 1], i)
            right[i - 1] = min(right[i - 1], j)
            mse[j - 1] = max(mse[j - 1], 2 * h)
    return dict(SC=sc, MinRightEnd=mre, MaxLeftEnd=mle, left=left, right=right, MaxSqEnd=mse)


def prim_squares_by_start(w, k) -> dict:
    t = as_tuple(w)
    n = len(t)
    out = {}
    for i in range(n):
        for p in range(1, k + 1):
            if i + 2 * p <= n and is_square(t[i : i + 2 * p]) and is_primitive(t[i : i + p]):
                out.setdefault(i + 1, []).append(p)
    return out


# --------------------------------------------------------------------------
# gapped tables, straight from the definitions (numba for speed only)


@nb.njit(cache=True)
def _gapped(a, kind, g, G, garr):
    """kind 0: reversed (u^R v u), 1: direct (u v u).  regime per call:
    garr[0] < 0 -> bounded g <= |v| < G; garr given -> g(i) <= |v|;
    G == -1 -> long armed |v| <= |u|."""
    n = len(a)
    out = np.zeros(n + 1, np.int64)
    for i in range(1, n + 1):
        best = 0
        for v in range(0, i):
            for u in range(1, i - v):
                if u <= best:
                    continue
                if i - 1 + u > n:
                    break
                if G == -1:
                    if v > u:
                        continue
                elif garr[0] < 0:
                    if not (g <= v < G):
                        continue
                else:
                    if v < garr[i]:
                        continue
                # previous arm occupies w[i-v-u .. i-v-1]
                ok = True
                for t in range(u):
                    if kind == 0:
                        c = a[i - v - 2 - t]
                    else:
                        c = a[i - v - u - 1 + t]
                    if c != a[i - 1 + t]:
                        ok = False
                        break
                if ok:
                    best = u
        out[i] = best
    return out


def gapped_table(w, kind: str, g=None, G=None, garr=None):
    """kind in {lprf, lpf, lpal, lrep}; bounded (g, G), function garr (list
    of g(1..n)) or long armed."""
    a = np.asarray(as_tuple(w), dtype=np.int64)
    rev = 0 if kind in ("lprf", "lpal") else 1
    if kind in ("lpal", "lrep"):
        return _gapped(a, rev, 0, -1, np.array([-1], np.int64))
    if garr is not None:
        ga = np.zeros(len(a) + 1, np.int64)
        ga[1:] = garr
        return _gapped(a, rev, 0, 0, ga)
    return _gapped(a, rev, g, G, np.array([-1], np.int64))


def l_array(w):
    t = as_tuple(w)
    n = len(t)

    def lcp(p, q):
        l = 0
        while p + l <= n and q + l <= n and t[p + l - 1] == t[q + l - 1]:
            l += 1
        return l

    L = [0] * (n + 1)
    for i in range(2, n + 1):
        vals = [lcp(j, i) for j in range(1, i)]
        L[i] = vals.index(max(vals)) + 1
    return L


def has_square_prefix(t) -> bool:
    return any(is_square(t[: 2 * h]) for h in range(1, len(t) // 2 + 1))


def has_square_suffix(t) -> bool:
    return any(is_square(t[len(t) - 2 * h :]) for h in range(1, len(t) // 2 + 1))


def pssf_pairs(w, kind: str = "ps") -> list:
    """All (i, j) whose factor avoids square prefixes (p), suffixes (s) or both."""
    t = as_tuple(w)
    n = len(t)
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            f = t[i - 1 : j]
            if "p" in kind and has_square_prefix(f):
                continue
            if "s" in kind and has_square_suffix(f):
                continue
            out.append((i, j))
    return out


def _split_shortest_first(t, piece_ok):
    """Factor list taking, at each cut, the shortest first piece after which
    the rest still splits; None when no split exists."""
    n = len(t)
    ok = [False] * (n + 1)
    ok[n] = True
    for i in range(n - 1, -1, -1):
        ok[i] = any(ok[j] and piece_ok(t[i:j]) for j in range(i + 1, n + 1))
    if not ok[0]:
        return None
    out, i = [], 0
    while i < n:
        j = next(j for j in range(i + 1, n + 1) if ok[j] and piece_ok(t[i:j]))
        out.append((i + 1, j))
        i = j
    return out


def _is_run_piece(f) -> bool:
    return len(f) >= 2 * smallest_period(f)


def square_factorization(w):
    return _split_shortest_first(as_tuple(w), is_square)


def run_factorization(w):
    return _split_shortest_first(as_tuple(w), _is_run_piece)


def splits_into_squares(w) -> bool:
    return square_factorization(w) is not None


def splits_into_runs(w) -> bool:
    return run_factorization(w) is not None


def max_square_factorization(w):
    """(factors, tags) maximizing the number of square factors among
    factorizations into squares and single letters; every square at every
    position is tried, and a square is preferred (the shortest one) only
    when it strictly beats skipping a letter."""
    t = as_tuple(w)
    n = len(t)
    best = [0] * (n + 2)
    for i in range(n - 1, -1, -1):
        best[i] = best[i + 1]
        for j in range(i + 2, n + 1, 2):
            if is_square(t[i:j]):
                best[i] = max(best[i], best[j] + 1)
    factors, tags, i = [], [], 0
    while i < n:
        if best[i] > best[i + 1]:
            j = next(j for j in range(i + 2, n + 1, 2) if is_square(t[i:j]) and best[j] + 1 == best[i])
            factors.append((i + 1, j))
            tags.append("square")
            i = j
        else:
            factors.append((i + 1, i + 1))
            tags.append("plain")
            i += 1
    return factors, tags


def max_squares(w) -> int:
    """Most squares in a factorization into squares and single letters,
    trying every square at every position."""
    t = as_tuple(w)
    n = len(t)
    best = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        best[i] = best[i + 1]
        for j in range(i + 2, n + 1, 2):
            if is_square(t[i:j]):
                best[i] = max(best[i], best[j] + 1)
    return best[0]
