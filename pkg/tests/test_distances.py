import math
import random

import numpy as np
import pytest

from conftest import binary_words
from dupstring.distances import (as_public_list, bpsd_distance, distance_tables,
                                 dup_distance_tables, max_repetitions, pscd_table, pssc_distance,
                                 pssc_distance_table, sscd_table)
from dupstring.membership_ancestors import sd_pd_flags
from dupstring.ops_kernel import OpKind, oracle_distance, oracle_distance_table
from dupstring.words import BudgetError, is_primitive


def test_worked_example():
    w = "abacabac"
    assert as_public_list(sscd_table(w)[1:]) == [math.inf] * 3 + [1, 1, 1, 1, 0]
    assert as_public_list(pscd_table(w)[1:])[4] == 1
    assert pssc_distance(w[4:7], w) == math.inf


def test_dup_tables_exhaustive():
    for w in binary_words(8):
        n = len(w)
        for k in (1, 2, 3):
            if k > n:
                continue
            D = oracle_distance_table(OpKind("SD", k), w)
            want = [D.get((1, i), math.inf) for i in range(1, n + 1)]
            assert as_public_list(dup_distance_tables(w, k)[1:]) == want
            assert as_public_list(dup_distance_tables(w, k, slow=True)[1:]) == want
            D = oracle_distance_table(OpKind("PD", k), w)
            want = [D.get((i, n), math.inf) for i in range(1, n + 1)]
            assert as_public_list(dup_distance_tables(w, k, "prefix")[1:]) == want


def test_finite_iff_flag():
    rng = np.random.default_rng(2)
    for _ in range(50):
        w = rng.integers(0, 2, 200)
        for k in (1, 3, 8):
            t = distance_tables(w, k)
            fl = sd_pd_flags(w, k)
            assert t.SDD[200] == 0 and t.PDD[1] == 0 and t.SSCD[200] == 0
            assert [v != math.inf for v in as_public_list(t.SDD[1:])] == list(fl.S[1:201])
            assert [v != math.inf for v in as_public_list(t.PDD[1:])] == list(fl.P[1:201])


def test_fast_and_slow_agree_on_longer_words():
    rng = random.Random(8)
    for _ in range(100):
        base = [rng.randrange(2) for _ in range(rng.randint(1, 5))]
        w = (base * 40)[: rng.randint(5, 120)]
        if rng.random() < 0.5:
            w[rng.randrange(len(w))] = 2
        for k in (1, 2, 4, 7):
            if k <= len(w):
                assert list(dup_distance_tables(w, k)) == list(dup_distance_tables(w, k, slow=True))


def test_bpsd_distance_exhaustive():
    for w in binary_words(7):
        n = len(w)
        for k in (1, 2, 3):
            for i in range(1, n + 1):
                for j in range(i, n + 1):
                    x = w[i - 1 : j]
                    assert bpsd_distance(x, w, k) == oracle_distance(OpKind("PSD", k), x, w)


def test_square_completion_tables():
    for w in binary_words(9):
        n = len(w)
        D = oracle_distance_table(OpKind("SSC"), w)
        assert as_public_list(sscd_table(w)[1:]) == [D.get((1, i), math.inf) for i in range(1, n + 1)]
        D = oracle_distance_table(OpKind("PSC"), w)
        assert as_public_list(pscd_table(w)[1:]) == [D.get((i, n), math.inf) for i in range(1, n + 1)]
        D = oracle_distance_table(OpKind("PSSC"), w)
        T = pssc_distance_table(w)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                got = math.inf if T[i, j] >= 1 << 40 else int(T[i, j])
                assert as_public_list([T[i, j]])[0] == D.get((i, j), math.inf), (w, i, j, got)


def test_pssc_cap():
    with pytest.raises(BudgetError):
        pssc_distance_table("ab" * 10, cap=5)


def test_max_repetitions():
    rng = random.Random(4)
    for _ in range(200):
        w = [rng.randrange(2) for _ in range(rng.randint(1, 30))]
        n = len(w)
        k = rng.randint(1, 5)
        got = {(m.start, m.end, m.root) for m in max_repetitions(w, k)}
        want = set()
        for p in range(1, k + 1):
            for s in range(1, n + 1):
                t = w[s - 1 : s - 1 + p]
                if len(t) < p or not is_primitive(t):
                    continue
                if s - p >= 1 and w[s - p - 1 : s - 1] == t:
                    continue
                e = s + p - 1
                while w[e : e + p] == t:
                    e += p
                if e - s + 1 >= 2 * p:
                    want.add((s, e, p))
        assert got == want
