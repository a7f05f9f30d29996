import pytest

from dupstring.ops_kernel import OpKind, verify_derivation
from dupstring.sequences import (MAX_TARGET, chain_words, fibonacci_psd_experiment,
                                 fibonacci_words, generate, psd_thue_morse_bounds, verify_omega)
from dupstring.words import BudgetError


def _s(a):
    return "".join(map(str, a))


def _has_overlap(t):
    # axaxa with |ax| = p
    n = len(t)
    for p in range(1, n // 2 + 1):
        for i in range(n - 2 * p):
            if t[i : i + p + 1] == t[i + p : i + 2 * p + 1]:
                return True
    return False


def _has_cube(t):
    n = len(t)
    for p in range(1, n // 3 + 1):
        for i in range(n - 3 * p + 1):
            if t[i : i + p] == t[i + p : i + 2 * p] == t[i + 2 * p : i + 3 * p]:
                return True
    return False


def test_prefixes():
    assert _s(generate("thue_morse", 16)) == "0110100110010110"
    assert _s(generate("fibonacci", 13)) == "0100101001001"
    assert _s(generate("period_doubling", 16)) == "0100010101000100"
    assert _s(generate("stewart", 9)) == "001001011"
    with pytest.raises(ValueError):
        generate("nope", 3)


def test_fibonacci_words_are_prefixes():
    fs = fibonacci_words(10)
    assert [len(f) for f in fs[:6]] == [1, 2, 3, 5, 8, 13]
    t = generate("fibonacci", len(fs[-1]))
    for f in fs[1:]:
        assert list(f) == list(t[: len(f)])


def test_words_avoid_their_patterns():
    tm = tuple(generate("thue_morse", 200).tolist())
    assert not _has_overlap(tm)
    assert not _has_cube(tuple(generate("stewart", 243).tolist()))


@pytest.mark.parametrize("op,name", [("SSC", "fibonacci"), ("SSC", "thue_morse"),
                                     ("SSC", "period_doubling"), ("SD", "stewart")])
def test_chains_exist(op, name):
    res = verify_omega(OpKind(op), name, 1024)
    assert res.ok
    assert res.lengths[-1] >= 1024
    assert verify_derivation(OpKind(op), res.derivation).ok
    words = chain_words(res, name)
    assert [len(w) for w in words] == res.lengths
    assert all(len(a) < len(b) for a, b in zip(words, words[1:]))


def test_no_duplication_chain_on_thue_morse():
    res = verify_omega(OpKind("PSD"), "thue_morse", 512)
    assert not res.ok
    assert res.reached < 512


def test_thue_morse_reach_bounds():
    rows = psd_thue_morse_bounds(5)
    assert len(rows) == 12
    assert all(r.holds for r in rows)


def test_fibonacci_experiment_rows():
    rows = fibonacci_psd_experiment(3, 9)
    assert all((n - p) % 2 == 0 for p, n, _ in rows)
    assert all(member for p, n, member in rows if p >= 2)


def test_budget():
    with pytest.raises(BudgetError):
        verify_omega(OpKind("SSC"), "fibonacci", MAX_TARGET + 1)
