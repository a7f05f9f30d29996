import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dupstring.interval_engine import IntervalUnionFind, SegTree, WeightedInterval, cover_extremum


def test_segtree_example():
    t = SegTree(6, [1, 4, 9, -2, 7, 6])
    t.add(1, 4, 3)
    assert t.sum_range(2, 5) == 27


def test_segtree_fresh_and_rightmost_zero():
    assert SegTree(5).sum_range(3, 3) == 0
    z = SegTree(4, [0, 0, 1, 0])
    assert z.rightmost_zero(1, 4) == 4
    assert z.rightmost_zero(3, 3) == 0


def test_segtree_bounds():
    with pytest.raises(IndexError):
        SegTree(3).add(0, 2, 1)


def test_segtree_random_ops():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(1, 30)
        arr = [rng.randint(0, 5) for _ in range(n)]
        t = SegTree(n, arr)
        for _ in range(30):
            i = rng.randint(1, n)
            j = rng.randint(i, n)
            op = rng.random()
            if op < 0.4:
                v = rng.randint(0, 3)
                t.add(i, j, v)
                for q in range(i - 1, j):
                    arr[q] += v
            elif op < 0.8:
                assert t.sum_range(i, j) == sum(arr[i - 1 : j])
            else:
                zs = [q for q in range(i, j + 1) if arr[q - 1] == 0]
                assert t.rightmost_zero(i, j) == (zs[-1] if zs else 0)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 40), st.lists(st.tuples(st.integers(1, 41), st.integers(1, 41), st.integers(-9, 9)), max_size=60),
       st.sampled_from(["max", "min"]))
def test_cover_extremum_matches_scan(n, raw, mode):
    iv = [WeightedInterval(min(a, b), max(a, b) + 1, g) for a, b, g in raw if min(a, b) <= n and max(a, b) + 1 <= n + 1]
    got = cover_extremum(iv, n, mode).tolist()
    for i in range(1, n + 1):
        ws = [x.g for x in iv if x.a <= i < x.b]
        if mode == "max":
            assert got[i - 1] == (max(ws) if ws else 0)
        else:
            assert got[i - 1] == (min(ws) if ws else n + 1)


def test_union_find_blocks():
    rng = random.Random(4)
    for _ in range(100):
        n = rng.randint(1, 25)
        uf = IntervalUnionFind(n)
        blocks = [[i] for i in range(1, n + 1)]
        for _ in range(n):
            e = rng.randint(1, n)
            b = next(b for b in blocks if e in b)
            got = uf.find(e)
            assert (got.min, got.max) == (b[0], b[-1])
            k = blocks.index(b)
            if k + 1 < len(blocks) and rng.random() < 0.5:
                merged = uf.union_with_right(e)
                blocks[k : k + 2] = [b + blocks[k + 1]]
                assert (merged.min, merged.max) == (b[0], blocks[k][-1])
            elif k > 0:
                merged = uf.union_with_left(e)
                blocks[k - 1 : k + 1] = [blocks[k - 1] + b]
                assert (merged.min, merged.max) == (blocks[k - 1][0], b[-1])


def test_union_of_non_adjacent_fails():
    uf = IntervalUnionFind(5)
    with pytest.raises(ValueError):
        uf.union(1, 3)
