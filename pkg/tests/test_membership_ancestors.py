import random

import numpy as np

from conftest import binary_words, factors
from dupstring.membership_ancestors import (bpsd_ancestors, common_ancestor, is_primitive_factor,
                                            primitive_root, psd_ancestor_table, psd_membership,
                                            psdk_language_membership, psdk_membership,
                                            pssc_ancestor_profile, pssc_membership, sd_pd_flags,
                                            ssc_min_prefix)
from dupstring.ops_kernel import OpKind, closure_upto, oracle_ancestors, oracle_member, step
from dupstring.square_tables import square_tables


def has_predecessor(op, x):
    m = len(x)
    return any(x in step(op, x[i : i + L]) for L in range(1, m) for i in range(m - L + 1))


def test_paper_style_examples():
    assert psd_membership("abaabaa", "aba")
    assert not psd_membership("abaabaa", "abaab")
    assert pssc_ancestor_profile("aaaa").count == 10


def test_membership_small_exhaustive():
    for w in binary_words(7):
        for x in factors(w):
            assert psd_membership(w, x) == oracle_member(OpKind("PSD"), x, w)
            assert pssc_membership(w, x) == oracle_member(OpKind("PSSC"), x, w)
            for k in (1, 2, 3):
                assert psdk_membership(w, x, k) == oracle_member(OpKind("PSD", k), x, w)


def test_flags_against_closure():
    for w in binary_words(8):
        n = len(w)
        for k in range(1, n + 1):
            fl = sd_pd_flags(w, k)
            for i in range(1, n + 1):
                assert fl.s(i) == (w in closure_upto(OpKind("SD", k), w[:i], n))
                assert fl.p(i) == (w in closure_upto(OpKind("PD", k), w[i - 1 :], n))


def test_ancestor_sets():
    for w in binary_words(8):
        n = len(w)
        prof = pssc_ancestor_profile(w)
        assert set(prof.ancestors()) == oracle_ancestors(OpKind("PSSC"), w)
        good = psd_ancestor_table(w)
        mine = {(i, i + L - 1) for i in range(1, n + 1) for L in range(1, n - i + 2) if good[i, L]}
        assert mine == oracle_ancestors(OpKind("PSD"), w)
        for k in range(1, n + 1):
            anc = oracle_ancestors(OpKind("PSD", k), w)
            b = bpsd_ancestors(w, k)
            assert set(b.all()) == anc and b.count() == len(anc)
            assert b.shortest() == min(anc, key=lambda c: (c[1] - c[0], c[0]))


def test_ssc_min_prefix():
    for w in binary_words(9):
        good = [i for i in range(1, len(w) + 1) if oracle_member(OpKind("SSC"), w[:i], w)]
        assert ssc_min_prefix(w) == min(good)


def test_primitive_factors_and_roots():
    for w in binary_words(7):
        n = len(w)
        T = square_tables(w)
        for fam in ("PD", "SD", "PSD", "PSSC"):
            for k in ((None, 1, 2) if fam != "PSSC" else (None,)):
                op = OpKind(fam, k)
                for i in range(1, n + 1):
                    for j in range(i, n + 1):
                        assert is_primitive_factor(T, i, j, op, word=w) == (not has_predecessor(op, w[i - 1 : j]))
                if fam != "PSSC":
                    i, j = primitive_root(w, op)
                    assert (i, j) in oracle_ancestors(op, w)
                    assert not has_predecessor(op, w[i - 1 : j])


def test_longest_primitive_bounded():
    for w in binary_words(8):
        for k in (1, 2, 3):
            op = OpKind("PSD", k)
            anc = [c for c in oracle_ancestors(op, w) if not has_predecessor(op, w[c[0] - 1 : c[1]])]
            want = min(anc, key=lambda c: (-(c[1] - c[0]), c[0])) if anc else None
            assert bpsd_ancestors(w, k).longest_primitive() == want


def test_language_membership():
    # w in PSD_k^*(L) for L = words starting and ending with 0
    member = lambda x: x[0] == 0 and x[-1] == 0  # noqa: E731
    for w in binary_words(8):
        for k in (1, 2):
            want = any(member(x) and oracle_member(OpKind("PSD", k), x, w) for x in factors(w))
            assert psdk_language_membership(w, k, member) == want


def test_common_ancestors():
    rng = random.Random(3)
    for _ in range(200):
        x = tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 8)))
        y = tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 8)))
        for op in (OpKind("PSD"), OpKind("PSD", 2), OpKind("PSSC")):
            ax = {x[i - 1 : j] for i, j in oracle_ancestors(op, x)}
            ay = {y[i - 1 : j] for i, j in oracle_ancestors(op, y)}
            both = ax & ay
            for what in ("any", "shortest", "longest"):
                r = common_ancestor(x, y, op, what)
                assert (r is None) == (not both)
                if r is None:
                    continue
                assert r in both
                if what == "shortest":
                    assert len(r) == min(map(len, both))
                if what == "longest":
                    assert len(r) == max(map(len, both))


def test_profile_on_long_word_is_consistent():
    rng = np.random.default_rng(5)
    w = rng.integers(0, 2, 3000)
    prof = pssc_ancestor_profile(w)
    i, j = prof.shortest
    assert prof.is_ancestor(i, j)
    assert prof.is_ancestor(1, len(w))
