import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dupstring.core_index import (RangeMin, build_bidi_index, build_dbf, build_index,
                                  dbf_window_occurrences, lcp_query, lz_factorize, occurrences,
                                  z_array)

words = st.lists(st.integers(0, 2), min_size=1, max_size=40)


def naive_lcp(a, b):
    m = 0
    while m < min(len(a), len(b)) and a[m] == b[m]:
        m += 1
    return m


def test_banana_suffix_array():
    assert build_index("banana").sa.tolist() == [6, 4, 2, 1, 5, 3]


def test_range_min_example():
    r = RangeMin([1, 4, 9, -2, 7, 6])
    assert r.pos(1, 6) == 4 and r.query(1, 6) == -2
    assert r.pos(1, 3) == 1


def test_range_min_out_of_range():
    with pytest.raises(IndexError):
        RangeMin([1, 2]).pos(0, 2)


def test_lcp_square_check():
    assert build_index("abacabac").lcp_query(1, 5) == 4


@settings(max_examples=200, deadline=None)
@given(words)
def test_suffix_array_and_lcp(w):
    t = tuple(w)
    idx = build_index(w)
    assert idx.sa.tolist() == sorted(range(1, len(t) + 1), key=lambda i: t[i - 1 :])
    n = len(t)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert lcp_query(idx, i, j) == naive_lcp(t[i - 1 :], t[j - 1 :])


@settings(max_examples=100, deadline=None)
@given(words)
def test_bidi_lcp(w):
    t = tuple(w)
    n = len(t)
    b = build_bidi_index(w)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert b.lcp_fwd_rev(i, j) == naive_lcp(t[i - 1 :], t[:j][::-1])
            assert b.lcp_rev_rev(i, j) == naive_lcp(t[:i][::-1], t[:j][::-1])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=30), st.data())
def test_range_min_leftmost(vals, data):
    r = RangeMin(vals)
    i = data.draw(st.integers(1, len(vals)))
    j = data.draw(st.integers(i, len(vals)))
    seg = vals[i - 1 : j]
    assert r.pos(i, j) == i + seg.index(min(seg))


@settings(max_examples=200, deadline=None)
@given(words, st.booleans())
def test_lz_factors_occur_earlier(w, overlap):
    t = tuple(w)
    f = lz_factorize(w, overlap)
    pos = 0
    for s, l in f.factors:
        assert s == pos + 1
        if l > 1 or any(t[q] == t[pos] for q in range(pos)):
            # the factor occurs starting before pos
            ok = False
            for q in range(pos):
                limit = len(t) if overlap else pos
                if q + l <= limit and t[q : q + l] == t[pos : pos + l]:
                    ok = True
            assert ok
        pos += l
    assert pos == len(t)


@settings(max_examples=100, deadline=None)
@given(words, st.data())
def test_dbf_window(w, data):
    dbf = build_dbf(w)
    n = len(w)
    k = data.draw(st.integers(0, max(0, n.bit_length() - 1)))
    m = 1 << k
    if m > n:
        return
    i = data.draw(st.integers(1, n - m + 1))
    lo = data.draw(st.integers(1, n))
    hi = data.draw(st.integers(lo, min(n, lo + 10 * m - 1)))
    got = dbf_window_occurrences(dbf, i, k, (lo, hi)).expand()
    pat = w[i - 1 : i - 1 + m]
    want = [s for s in range(lo, hi - m + 2) if w[s - 1 : s - 1 + m] == pat]
    assert got == want


@settings(max_examples=200, deadline=None)
@given(words, st.lists(st.integers(0, 2), min_size=1, max_size=4))
def test_occurrences(w, x):
    want = [i + 1 for i in range(len(w) - len(x) + 1) if w[i : i + len(x)] == x]
    assert occurrences(x, w).tolist() == want


def test_z_array_basic():
    z = z_array(np.array([0, 0, 1, 0, 0], np.int64))
    assert list(z[1:5]) == [1, 0, 2, 1]
