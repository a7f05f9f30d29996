import math

import pytest

from conftest import binary_words
from dupstring.ops_kernel import (DerivStep, Derivation, OpKind, closure_upto, oracle_ancestors,
                                  oracle_distance, oracle_distance_table, step, verify_derivation)
from dupstring.words import BudgetError, as_tuple


def T(s):
    return as_tuple(s)


def texts(ws):
    return {"".join(map(chr, w)) for w in ws}


def test_single_steps():
    assert texts(step(OpKind("PSD"), "ab")) == {"aab", "abb", "abab"}
    assert texts(step(OpKind("SD", 1), "ab")) == {"abb"}
    assert texts(step(OpKind("SSC"), "aba")) == {"abaa", "abab", "ababa", "abaaba"}


def test_closure_small():
    assert texts(closure_upto(OpKind("SD"), "ab", 4)) == {"ab", "abb", "abab", "abbb"}
    for fam in ("PD", "SD", "PSD", "PSC", "SSC", "PSSC"):
        assert closure_upto(OpKind(fam), "aab", 3) == {T("aab")}


def test_closure_budget():
    with pytest.raises(BudgetError):
        closure_upto(OpKind("PSD"), "ab", 30, budget=100)


def test_op_parse():
    assert OpKind.parse("psd_3") == OpKind("PSD", 3)
    assert OpKind.parse("PSD_k", 2) == OpKind("PSD", 2)
    with pytest.raises(ValueError):
        OpKind("SSC", 2)
    with pytest.raises(ValueError):
        OpKind.parse("xyz")


def test_derivations():
    op = OpKind("SD")
    d = Derivation(T("ab"), [DerivStep("suffix", 2), DerivStep("suffix", 1)])
    v = verify_derivation(op, d)
    assert v.ok and v.word == T("ababb")
    assert verify_derivation(op, Derivation(T("ab"), [])).word == T("ab")
    bad = verify_derivation(OpKind("SD", 1), Derivation(T("ab"), [DerivStep("suffix", 1), DerivStep("suffix", 2)]))
    assert not bad.ok and bad.failed_at == 1


def test_oracle_examples():
    w = T("abacabac")
    assert oracle_distance(OpKind("PSSC"), w[4:7], w) == math.inf
    assert oracle_distance(OpKind("SD"), "ab", "abab") == 1
    for fam in ("PSD", "PSSC", "SSC"):
        assert oracle_distance(OpKind(fam), w, w) == 0
    anc = oracle_ancestors(OpKind("PSD"), "abaabaa")
    assert (1, 3) in anc and (1, 5) not in anc and (1, 7) in anc
    assert len(oracle_ancestors(OpKind("PSD"), "aaaa")) == 10


def test_steps_lengthen_and_keep_ends():
    for w in binary_words(6):
        for fam in ("PD", "SD", "PSC", "SSC"):
            op = OpKind(fam)
            for y in step(op, w):
                assert len(y) > len(w)
                if fam in ("PD", "PSC"):
                    assert y[-len(w):] == w
                else:
                    assert y[: len(w)] == w


def test_containment_chain():
    for w in binary_words(10):
        top = len(w) + 3 if len(w) > 5 else 10
        pssc = closure_upto(OpKind("PSSC"), w, top)
        psd = closure_upto(OpKind("PSD"), w, top)
        assert psd <= pssc
        for k in range(1, len(w) + 1):
            assert closure_upto(OpKind("PSD", k), w, top) <= psd


def test_ssc_hereditary():
    # the prefixes of z from which z is SSC-reachable form an upward-closed set
    for z in binary_words(12):
        dist = oracle_distance_table(OpKind("SSC"), z)
        good = [i for i in range(1, len(z) + 1) if (1, i) in dist]
        assert good == list(range(good[0], len(z) + 1))


def test_distance_bounded_by_length_gap():
    for w in binary_words(7):
        dist = oracle_distance_table(OpKind("PSD"), w)
        for (i, j), d in dist.items():
            assert d <= len(w) - (j - i + 1)


def test_duplication_is_completion_with_empty_border():
    for w in binary_words(8):
        assert step(OpKind("SD"), w) <= step(OpKind("SSC"), w)
        assert step(OpKind("PD"), w) <= step(OpKind("PSC"), w)
