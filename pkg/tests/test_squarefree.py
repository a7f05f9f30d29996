import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import binary_words
from dupstring import naive
from dupstring.ops_kernel import OpKind, oracle_ancestors
from dupstring.squarefree import (build_psf_index, count_pssf, enumerate_pssf, factor_into_runs,
                                  factor_into_squares, longest_primitive_pssc_ancestor, longest_pssf,
                                  max_square_factorization, psf_query)


def _longest(pairs):
    top = max(j - i for i, j in pairs)
    return min(p for p in pairs if p[1] - p[0] == top)


@pytest.mark.parametrize("kind", ["p", "s", "ps"])
def test_enumerate_and_count_exhaustive(kind):
    for w in binary_words(11):
        want = naive.pssf_pairs(w, kind)
        assert enumerate_pssf(w, kind) == want
        assert count_pssf(w, kind) == len(want)


def test_streaming_matches_list():
    w = "abaabbabaab"
    got = []
    assert enumerate_pssf(w, "ps", emit=lambda i, j: got.append((i, j))) is None
    assert got == enumerate_pssf(w, "ps")


def test_query_agrees_with_enumeration():
    for w in binary_words(9):
        idx = build_psf_index(w)
        n = len(w)
        for kind in ("p", "s", "ps"):
            want = set(naive.pssf_pairs(w, kind))
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    assert psf_query(idx, i, j, kind) == ((i, j) in want)


def test_square_free_word_counts_every_factor():
    w = "abcacbabcbac"  # square-free over three letters
    n = len(w)
    assert count_pssf(w) == n * (n + 1) // 2


def test_longest_exhaustive():
    for w in binary_words(11):
        assert longest_pssf(w) == _longest(naive.pssf_pairs(w))


def test_longest_primitive_ancestor():
    for w in binary_words(9):
        anc = oracle_ancestors(OpKind("PSSC"), w)
        ok = [a for a in anc if not naive.has_square_prefix(w[a[0] - 1 : a[1]])
              and not naive.has_square_suffix(w[a[0] - 1 : a[1]])]
        assert longest_primitive_pssc_ancestor(w) == _longest(ok)


def test_factorizations_exhaustive():
    for w in binary_words(14):
        f = factor_into_squares(w)
        want = naive.square_factorization(w)
        assert (f.factors if f else None) == want
        f = factor_into_runs(w)
        want = naive.run_factorization(w)
        assert (f.factors if f else None) == want


def test_max_square_factorization_exhaustive():
    for w in binary_words(12):
        f = max_square_factorization(w)
        assert (f.factors, f.tags) == naive.max_square_factorization(w)
        assert f.squares == naive.max_squares(w)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=40))
def test_counts_random_ternary(w):
    for kind in ("p", "s", "ps"):
        assert count_pssf(w, kind) == len(naive.pssf_pairs(w, kind))
    f = max_square_factorization(w)
    assert f.squares == naive.max_squares(w)
    assert sum(e - s + 1 for s, e in f.factors) == len(w)


def test_bad_kind():
    with pytest.raises(ValueError):
        count_pssf("ab", "x")


def test_cross_checks_between_routines():
    for w in binary_words(10):
        idx = build_psf_index(w)
        assert all(psf_query(idx, i, j) for i, j in enumerate_pssf(w))
        sq = factor_into_squares(w)
        if sq is not None:
            assert max_square_factorization(w).squares >= sq.squares
            assert all(naive.is_square(tuple(t)) for t in sq.texts(w))
