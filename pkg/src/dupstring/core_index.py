"""Text indexes: suffix array, LCP with O(1) range queries, bidirectional
index over w·sep·w^R, Lempel-Ziv factorization and basic-factor labels."""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field

import numba as nb
import numpy as np

from .words import WordLike, alphabet_size, as_array, check_range, smallest_period, MAX_ALPHABET


# --------------------------------------------------------------------------
# range minimum


class RangeMin:
    """Sparse-table range minimum over a 1-based array.

    ``query`` returns the minimum value, ``pos`` the position of the leftmost
    (or rightmost, when ``rightmost=True``) minimum.
    """

    def __init__(self, values, rightmost: bool = False):
        a = np.asarray(values, dtype=np.int64)
        self.n = len(a)
        self.rightmost = rightmost
        self.values = a
        levels = [np.arange(self.n, dtype=np.int64)]
        span = 1
        while 2 * span <= self.n:
            prev = levels[-1]
            lo, hi = prev[:-span], prev[span:]
            if rightmost:
                pick = np.where(a[hi] <= a[lo], hi, lo)
            else:
                pick = np.where(a[lo] <= a[hi], lo, hi)
            levels.append(pick)
            span *= 2
        self.table = levels

    def _argmin0(self, lo: int, hi: int) -> int:
        k = (hi - lo + 1).bit_length() - 1
        x = self.table[k][lo]
        y = self.table[k][hi - (1 << k) + 1]
        a = self.values
        if self.rightmost:
            return int(y if a[y] <= a[x] else x)
        return int(x if a[x] <= a[y] else y)

    def pos(self, i: int, j: int) -> int:
        check_range(self.n, i, j)
        return self._argmin0(i - 1, j - 1) + 1

    def query(self, i: int, j: int) -> int:
        return int(self.values[self.pos(i, j) - 1])


# --------------------------------------------------------------------------
# suffix array


def suffix_array0(a: np.ndarray) -> np.ndarray:
    """0-based suffix array by prefix doubling with numpy sorts."""
    n = len(a)
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    _, rank = np.unique(a, return_inverse=True)
    rank = rank.astype(np.int64)
    k = 1
    while True:
        second = np.full(n, -1, dtype=np.int64)
        if k < n:
            second[: n - k] = rank[k:]
        order = np.lexsort((second, rank))
        r1, r2 = rank[order], second[order]
        new = np.empty(n, dtype=np.int64)
        diff = np.ones(n, dtype=np.int64)
        diff[0] = 0
        diff[1:] = (r1[1:] != r1[:-1]) | (r2[1:] != r2[:-1])
        new[order] = np.cumsum(diff)
        rank = new
        if rank.max() == n - 1:
            return order.astype(np.int64)
        k *= 2


@nb.njit(cache=True)
def _kasai(a, sa):
    n = len(a)
    rank = np.empty(n, np.int64)
    for r in range(n):
        rank[sa[r]] = r
    lcp = np.zeros(n, np.int64)
    h = 0
    for i in range(n):
        r = rank[i]
        if r > 0:
            j = sa[r - 1]
            while i + h < n and j + h < n and a[i + h] == a[j + h]:
                h += 1
            lcp[r] = h
            if h > 0:
                h -= 1
        else:
            h = 0
    return rank, lcp


@dataclass(frozen=True)
class TextIndex:
    """Suffix array with 1-based entries, inverse ranks and an LCP RMQ."""

    word: np.ndarray
    sa: np.ndarray  # sa[r-1] = start (1-based) of the r-th smallest suffix
    rank: np.ndarray  # rank[i-1] = r
    lcp: np.ndarray  # lcp[r-1] = lcp of suffixes ranked r-1 and r (lcp[0]=0)
    rmq: RangeMin = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.word)

    def lcp_query(self, i: int, j: int) -> int:
        return lcp_query(self, i, j)


def build_index(w: WordLike) -> TextIndex:
    a = as_array(w)
    if len(a) == 0:
        raise ValueError("empty input")
    sa0 = suffix_array0(a)
    rank0, lcp = _kasai(a, sa0)
    return TextIndex(a, sa0 + 1, rank0 + 1, lcp, RangeMin(lcp))


def lcp_query(idx: TextIndex, i: int, j: int) -> int:
    """Length of the longest common prefix of w[i..n] and w[j..n]."""
    n = idx.n
    check_range(n, i)
    check_range(n, j)
    if i == j:
        return n - i + 1
    r1, r2 = int(idx.rank[i - 1]), int(idx.rank[j - 1])
    if r1 > r2:
        r1, r2 = r2, r1
    return idx.rmq.query(r1 + 1, r2)


# --------------------------------------------------------------------------
# bidirectional index over w · sep · w^R


@dataclass(frozen=True)
class BidiIndex:
    """Index over w·sep·w^R.  The separator sorts below every symbol.

    ``Rank[i-1]`` is the list position of w[i..n]; ``Rank_R[i-1]`` the list
    position of w[1..i]^R.  Positions refer to the suffix array of the
    concatenation (1-based)."""

    n: int
    inner: TextIndex

    @property
    def Rank(self) -> np.ndarray:
        return self.inner.rank[: self.n]

    @property
    def Rank_R(self) -> np.ndarray:
        # w[1..i]^R starts at concatenation position 2n + 2 - i
        m = 2 * self.n + 1
        return self.inner.rank[m - np.arange(1, self.n + 1)]

    def concat_pos_rev(self, i: int) -> int:
        return 2 * self.n + 2 - i

    def lcp_fwd_rev(self, i: int, j: int) -> int:
        """Common prefix length of w[i..n] and w[1..j]^R."""
        check_range(self.n, i)
        check_range(self.n, j)
        return lcp_query(self.inner, i, self.concat_pos_rev(j))

    def lcp_rev_rev(self, i: int, j: int) -> int:
        """Common suffix length of w[1..i] and w[1..j]."""
        return lcp_query(self.inner, self.concat_pos_rev(i), self.concat_pos_rev(j))


def build_bidi_index(w: WordLike) -> BidiIndex:
    a = as_array(w)
    if len(a) == 0:
        raise ValueError("empty input")
    sigma = alphabet_size(a)
    if sigma >= MAX_ALPHABET:
        raise ValueError("no separator symbol available")
    # separator value is the alphabet size; shift so it orders smallest
    cat = np.concatenate([a + 1, [0], a[::-1] + 1])
    return BidiIndex(len(a), build_index(cat))


# --------------------------------------------------------------------------
# Lempel-Ziv factorization


@dataclass(frozen=True)
class LzFactorization:
    factors: list  # (start, length), 1-based starts

    def texts(self, w) -> list:
        a = as_array(w)
        return [a[s - 1 : s - 1 + l] for s, l in self.factors]


@nb.njit(cache=True)
def _lz(a, overlap):
    n = len(a)
    starts = []
    lens = []
    p = 0
    while p < n:
        best = 0
        for q in range(p):
            l = 0
            limit = n - p
            if not overlap:
                limit = min(limit, p - q)
            while l < limit and a[q + l] == a[p + l]:
                l += 1
            if l > best:
                best = l
        if best == 0:
            best = 1
        starts.append(p + 1)
        lens.append(best)
        p += best
    return starts, lens


def lz_factorize(w: WordLike, overlap: bool = False) -> LzFactorization:
    """Greedy factorization: each factor is the longest prefix of the rest
    that occurs earlier (entirely inside the processed prefix unless
    ``overlap``), or a single new letter."""
    a = as_array(w)
    if len(a) == 0:
        raise ValueError("empty input")
    s, l = _lz(a, overlap)
    return LzFactorization([(int(x), int(y)) for x, y in zip(s, l)])


# --------------------------------------------------------------------------
# dictionary of basic factors


@dataclass
class Dbf:
    word: np.ndarray
    labels: list  # labels[k][i-1] for i in 1..n-2^k+1
    occ: list  # occ[k][label] -> sorted 1-based positions
    c: int = 10

    def label(self, i: int, k: int) -> int:
        return int(self.labels[k][i - 1])


def build_dbf(w: WordLike, c: int = 10) -> Dbf:
    a = as_array(w)
    n = len(a)
    if n == 0:
        raise ValueError("empty input")
    _, lab = np.unique(a, return_inverse=True)
    labels = [lab.astype(np.int64)]
    span = 1
    while 2 * span <= n:
        prev = labels[-1]
        pairs = prev[: len(prev) - span] * (prev.max() + 1) + prev[span:]
        _, nl = np.unique(pairs, return_inverse=True)
        labels.append(nl.astype(np.int64))
        span *= 2
    occ = []
    for lab in labels:
        order = np.argsort(lab, kind="stable")
        bounds = np.searchsorted(lab[order], np.arange(lab.max() + 2))
        occ.append([(order[bounds[t] : bounds[t + 1]] + 1).tolist() for t in range(len(bounds) - 1)])
    return Dbf(a, labels, occ, c)


@dataclass(frozen=True)
class CompactOccurrences:
    isolated: list
    progressions: list  # (start, ratio, count)

    def expand(self) -> list:
        out = list(self.isolated)
        for s, r, c in self.progressions:
            out.extend(s + r * t for t in range(c))
        return sorted(out)


def dbf_window_occurrences(dbf: Dbf, i: int, k: int, window: tuple) -> CompactOccurrences:
    """Occurrences of w[i..i+2^k-1] lying entirely inside ``window``
    (closed, 1-based).  Occurrences spaced by the factor's period are
    grouped into progressions; any others are reported as isolated."""
    lo, hi = window
    m = 1 << k
    if hi - lo + 1 > dbf.c * m:
        raise ValueError("window exceeds c·2^k")
    n = len(dbf.word)
    check_range(n, i, i + m - 1)
    lst = dbf.occ[k][dbf.label(i, k)]
    a, b = bisect_left(lst, lo), bisect_right(lst, hi - m + 1)
    pos = lst[a:b]
    per = smallest_period(dbf.word[i - 1 : i - 1 + m])
    iso, prog = [], []
    t = 0
    while t < len(pos):
        u = t
        while u + 1 < len(pos) and pos[u + 1] - pos[u] == per:
            u += 1
        if u > t:
            prog.append((pos[t], per, u - t + 1))
        else:
            iso.append(pos[t])
        t = u + 1
    return CompactOccurrences(iso, prog)


# --------------------------------------------------------------------------
# pattern matching


@nb.njit(cache=True)
def z_array(a):
    n = len(a)
    z = np.zeros(n, np.int64)
    if n == 0:
        return z
    z[0] = n
    l = 0
    r = 0
    for i in range(1, n):
        if i < r:
            z[i] = min(r - i, z[i - l])
        while i + z[i] < n and a[z[i]] == a[i + z[i]]:
            z[i] += 1
        if i + z[i] > r:
            l = i
            r = i + z[i]
    return z


@nb.njit(cache=True)
def _occ(x, w):
    m = len(x)
    n = len(w)
    fail = np.zeros(m, np.int64)
    k = 0
    for q in range(1, m):
        while k > 0 and x[q] != x[k]:
            k = fail[k - 1]
        if x[q] == x[k]:
            k += 1
        fail[q] = k
    out = np.zeros(n, np.bool_)
    k = 0
    for t in range(n):
        while k > 0 and (k == m or w[t] != x[k]):
            k = fail[k - 1]
        if w[t] == x[k]:
            k += 1
        if k == m:
            out[t - m + 1] = True
    return out


def occurrences(x: WordLike, w: WordLike) -> np.ndarray:
    """1-based start positions of x in w (Knuth-Morris-Pratt)."""
    xa, wa = as_array(x), as_array(w)
    if len(xa) == 0 or len(xa) > len(wa):
        return np.zeros(0, dtype=np.int64)
    return np.flatnonzero(_occ(xa, wa)) + 1
