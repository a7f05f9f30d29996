import random

from hypothesis import given, settings
from hypothesis import strategies as st

from dupstring import naive
from dupstring.square_tables import (bounded_left_right, compute_runs, prim_squares,
                                     square_tables)

words = st.lists(st.integers(0, 2), min_size=1, max_size=50)
NAMES = ("SC", "MinRightEnd", "MaxLeftEnd", "left", "right", "MaxSqEnd")


def tables_dict(w):
    t = square_tables(w)
    return {name: getattr(t, name).tolist() for name in NAMES}


@settings(max_examples=300, deadline=None)
@given(words)
def test_tables_match_definitions(w):
    assert tables_dict(w) == naive.square_tables(w)


@settings(max_examples=300, deadline=None)
@given(words)
def test_runs_match_scan(w):
    got = sorted((r.i, r.j, r.p) for r in compute_runs(w))
    assert got == sorted(naive.runs(w))


@settings(max_examples=200, deadline=None)
@given(words, st.data())
def test_primitive_squares_by_start_and_end(w, data):
    n = len(w)
    k = data.draw(st.integers(1, n))
    ps = prim_squares(w, k)
    want = naive.prim_squares_by_start(w, k)
    for i in range(1, n + 1):
        assert ps.starting_at(i) == sorted(want.get(i, []))
    by_end = {}
    for s, roots in want.items():
        for p in roots:
            by_end.setdefault(s + 2 * p - 1, []).append(p)
    for j in range(1, n + 1):
        assert ps.ending_at(j) == sorted(by_end.get(j, []))


@settings(max_examples=200, deadline=None)
@given(words, st.data())
def test_bounded_left_right(w, data):
    n = len(w)
    k = data.draw(st.integers(1, n))
    left, right = bounded_left_right(w, k)
    t = tuple(w)
    for i in range(1, n + 1):
        ends = [i - 2 * p + 1 for p in range(1, k + 1) if i - 2 * p >= 0 and naive.is_square(t[i - 2 * p : i])]
        starts = [i + 2 * p - 1 for p in range(1, k + 1) if i - 1 + 2 * p <= n and naive.is_square(t[i - 1 : i - 1 + 2 * p])]
        assert left[i - 1] == max(ends, default=0)
        assert right[i - 1] == min(starts, default=n + 1)


def test_periodic_stress():
    rng = random.Random(9)
    for _ in range(100):
        base = [rng.randrange(2) for _ in range(rng.randint(1, 4))]
        w = (base * 30)[: rng.randint(1, 80)]
        if w and rng.random() < 0.5:
            w[rng.randrange(len(w))] = 2
        assert tables_dict(w) == naive.square_tables(w)


def test_known_example():
    t = square_tables("abaab")
    # the only square is aa at 3..4
    assert t.MaxSqEnd.tolist() == [0, 0, 0, 2, 0]
    assert t.right.tolist()[2] == 4
