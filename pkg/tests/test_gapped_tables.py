import random

import numpy as np
import pytest

from conftest import binary_words
from dupstring import naive
from dupstring.gapped_tables import (l_array, lpal_lrep, lpf_bounded, lpf_func, lprf_bounded,
                                     lprf_func, maximal_long_armed)


def _random_cases(seed, count):
    rng = random.Random(seed)
    for it in range(count):
        if it % 2:
            base = [rng.randrange(2) for _ in range(rng.randint(1, 5))]
            w = (base * 40)[: rng.randint(1, 90)]
            for _ in range(rng.randint(0, 2)):
                w[rng.randrange(len(w))] = rng.randrange(3)
        else:
            w = [rng.randrange(rng.randint(1, 4)) for _ in range(rng.randint(1, 120))]
        n = len(w)
        G = rng.randint(1, n)
        yield w, rng.randint(0, G - 1), G, [rng.randint(1, n) for _ in range(n)]


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_random_suite(seed):
    for w, g, G, ga in _random_cases(seed, 100):
        assert list(lprf_bounded(w, g, G)) == list(naive.gapped_table(w, "lprf", g, G))
        assert list(lpf_bounded(w, g, G)) == list(naive.gapped_table(w, "lpf", g, G))
        assert list(lprf_func(w, ga)) == list(naive.gapped_table(w, "lprf", garr=ga))
        assert list(lpf_func(w, ga)) == list(naive.gapped_table(w, "lpf", garr=ga))
        assert list(lpal_lrep(w, "palindrome")) == list(naive.gapped_table(w, "lpal"))
        assert list(lpal_lrep(w, "repeat")) == list(naive.gapped_table(w, "lrep"))


def test_small_words_all_bounds():
    for w in binary_words(7):
        n = len(w)
        for G in range(1, n + 1):
            for g in range(G):
                assert list(lpf_bounded(w, g, G)) == list(naive.gapped_table(w, "lpf", g, G))
                assert list(lprf_bounded(w, g, G)) == list(naive.gapped_table(w, "lprf", g, G))


def test_l_array_matches_naive():
    for w in binary_words(10):
        assert list(l_array(w).L[1:]) == naive.l_array(w)[1:]


def test_chain_gives_lpf_with_gap_function():
    """Only the candidates on the L-chain of i are needed for LPF_g[i]."""
    rng = random.Random(11)
    for _ in range(300):
        w = [rng.randrange(rng.randint(1, 3)) for _ in range(rng.randint(1, 60))]
        n = len(w)
        ga = [rng.randint(1, n) for _ in range(n)]
        la = l_array(w)
        want = naive.gapped_table(w, "lpf", garr=ga)

        def lcp(p, q):
            l = 0
            while q + l <= n and w[p + l - 1] == w[q + l - 1]:
                l += 1
            return l

        for i in range(1, n + 1):
            lim = i - ga[i - 1]
            cands = [min(lcp(j, i), lim - j) for j in la.chain(i) if j <= lim]
            assert max(cands + [0]) == want[i]


def test_long_armed_triples_are_maximal():
    rng = random.Random(5)
    for _ in range(100):
        w = [rng.randrange(2) for _ in range(rng.randint(1, 40))]
        n = len(w)
        for l, a, r in maximal_long_armed(w, "repeat").triples():
            assert w[l - 1 : l - 1 + a] == w[r - 1 : r - 1 + a]
            assert r - l - a <= a
            assert l == 1 or w[l - 2] != w[r - 2]
            assert r + a > n or w[l + a - 1] != w[r + a - 1]
        for l, a, r in maximal_long_armed(w, "palindrome").triples():
            assert w[l - 1 : l - 1 + a][::-1] == w[r - 1 : r - 1 + a]
            assert r - (l + a) <= a


def test_gap_function_validation():
    with pytest.raises(ValueError):
        lpf_func("abab", [1, 2])
