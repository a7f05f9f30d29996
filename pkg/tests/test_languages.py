import itertools
import math
import random

import numpy as np
import pytest

from dupstring.distances import bpsd_distance
from dupstring.languages import (Dfa, closure_automaton, difference, equivalent, finite_language,
                                 intersection, is_empty, is_finite, language_distance,
                                 minimal_generator, minimize, one_step_image, union, universal)
from dupstring.ops_kernel import OpKind, closure_upto, oracle_distance, step
from dupstring.words import BudgetError


def _random_dfa(rng, nq):
    delta = np.array([[rng.randrange(nq) for _ in range(2)] for _ in range(nq)])
    return Dfa((0, 1), delta, 0, frozenset(q for q in range(nq) if rng.random() < 0.5))


@pytest.mark.parametrize("family", ["SD", "PD", "PSD"])
def test_closure_slices(family):
    for m in range(1, 5):
        for x in itertools.product((0, 1), repeat=m):
            for k in (1, 2, 3):
                d = closure_automaton(x, k, family, alphabet=(0, 1))
                assert d.words_upto(10) == closure_upto(OpKind(family, k), x, 10), (x, k)


def test_closure_of_ab_is_infinite_and_minimal():
    d = closure_automaton("ab", 2, "PSD")
    assert not is_finite(d)
    assert minimize(d).n_states == d.n_states
    assert d.accepts("abab") and d.accepts("aabb") and not d.accepts("ba")


def test_one_step_image_random():
    rng = random.Random(1)
    for _ in range(120):
        L = _random_dfa(rng, rng.randint(1, 4))
        k = rng.randint(1, 3)
        want = set()
        for w in L.words_upto(9):
            if w:
                want |= {y for y in step(OpKind("PSD", k), w) if len(y) <= 9}
        assert one_step_image(L, k).words_upto(9) == want


def test_minimal_generator_of_closure():
    L = closure_automaton((0, 1), 2, "PSD", alphabet=(0, 1))
    M = minimal_generator(L, 2)
    assert M.words_upto(12) == {(0, 1)}


def test_minimal_generator_regenerates_language():
    op = OpKind("PSD", 2)
    for x, y in [((0, 1), (1, 0)), ((0, 1, 0), (1, 1)), ((0,), (1,))]:
        L = union(closure_automaton(x, 2, alphabet=(0, 1)), closure_automaton(y, 2, alphabet=(0, 1)))
        M = minimal_generator(L, 2)
        got = set()
        for m in M.words_upto(9):
            got |= closure_upto(op, m, 9)
        assert got == L.words_upto(9)


def test_minimal_generator_rejects_open_language():
    with pytest.raises(ValueError):
        minimal_generator(finite_language([(0, 1)], (0, 1)), 1)


def test_distance_random_finite():
    rng = random.Random(3)
    for _ in range(150):
        k = rng.randint(1, 3)
        A = [tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 4))) for _ in range(rng.randint(1, 2))]
        B = [tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 8))) for _ in range(rng.randint(1, 3))]
        want = math.inf
        for x in A:
            for y in B:
                a, b = (x, y) if len(x) <= len(y) else (y, x)
                want = min(want, oracle_distance(OpKind("PSD", k), a, b))
        got = language_distance(finite_language(A, (0, 1)), finite_language(B, (0, 1)), k)
        assert got == want, (A, B, k)


def test_distance_singletons_match_bpsd():
    rng = random.Random(8)
    for _ in range(100):
        k = rng.randint(1, 3)
        x = tuple(rng.randint(0, 1) for _ in range(rng.randint(1, 3)))
        w = x
        for _ in range(rng.randint(0, 4)):
            w = rng.choice(sorted(step(OpKind("PSD", k), w)))
        got = language_distance(finite_language([x], (0, 1)), finite_language([w], (0, 1)), k)
        assert got == bpsd_distance(x, w, k)


def test_distance_to_infinite_language():
    L = closure_automaton((0, 1), 2, "PSD", alphabet=(0, 1))
    assert language_distance(finite_language([(0, 1)], (0, 1)), L, 2) == 0
    assert language_distance(finite_language([(0,)], (0, 1)), L, 2) == math.inf


def test_text_and_dot_round_trip():
    d = closure_automaton("ab", 1, "SD")
    back = Dfa.from_text(d.to_text())
    assert equivalent(d, back)
    assert "digraph" in d.to_dot()
    d2 = closure_automaton((0, 1), 2, "PSD", alphabet=(0, 1))
    assert equivalent(d2, Dfa.from_text(d2.to_text()))


def test_boolean_operations():
    A = finite_language([(0, 1), (0, 0, 1, 1)], (0, 1))
    B = finite_language([(0, 1), (1,)], (0, 1))
    assert intersection(A, B).words_upto(5) == {(0, 1)}
    assert difference(A, B).words_upto(5) == {(0, 0, 1, 1)}
    assert is_finite(union(A, B))
    assert not is_finite(universal((0, 1)))
    assert is_empty(difference(A, A))


def test_budget():
    with pytest.raises(BudgetError):
        closure_automaton((0, 1, 1, 0), 3, "PSD", alphabet=(0, 1), budget=4)
