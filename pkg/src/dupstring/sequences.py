"""Finite prefixes of classic infinite binary words, and a search for chains
of prefixes w_0, w_1, ... with each w_{i+1} one operation step from w_i."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numba as nb
import numpy as np

from .ops_kernel import DerivStep, Derivation, OpKind, verify_derivation
from .square_tables import compute_boundary_tables
from .words import BudgetError

NAMES = ("thue_morse", "fibonacci", "period_doubling", "stewart")
MAX_TARGET = 1 << 16


def _thue_morse(n):
    idx = np.arange(n, dtype=np.int64)
    bits = np.zeros(n, np.int64)
    while idx.any():
        bits ^= idx & 1
        idx >>= 1
    return bits


def _morphism(images, n):
    w = [0]
    while len(w) < n:
        w = [b for a in w for b in images[a]]
    return np.array(w[:n], np.int64)


def _stewart(n):
    # s_{k+1} = s_k s_k s_k^*, s_k^* being s_k with its middle letter flipped
    s = [0]
    while len(s) < n:
        star = list(s)
        star[len(s) // 2] ^= 1
        s = s + s + star
    return np.array(s[:n], np.int64)


def generate(name: str, n: int) -> np.ndarray:
    """Length-n prefix of the named word over {0, 1}."""
    if n < 1:
        raise ValueError("need n >= 1")
    if name == "thue_morse":
        return _thue_morse(n)
    if name == "fibonacci":
        return _morphism({0: (0, 1), 1: (0,)}, n)
    if name == "period_doubling":
        return _morphism({0: (0, 1), 1: (0, 0)}, n)
    if name == "stewart":
        return _stewart(n)
    raise ValueError(f"unknown sequence {name!r}; choose from {', '.join(NAMES)}")


# --------------------------------------------------------------------------
# prefix graph: node m is the prefix of length m; every edge goes forward


@nb.njit(cache=True)
def _z_function(t):
    n = len(t)
    z = np.zeros(n + 1, np.int64)
    z[0] = n
    l = r = 0
    for i in range(1, n):
        if i < r:
            z[i] = min(r - i, z[i - l])
        while i + z[i] < n and t[z[i]] == t[i + z[i]]:
            z[i] += 1
        if i + z[i] > r:
            l, r = i, i + z[i]
    return z


@nb.njit(cache=True)
def _reach(t, seed, kb, pre, suf_dup, suf_comp, arm):
    """Forward sweep over prefix lengths.  src, side, blk, brd record the step that
    first reached m: (source length, side 1=prefix 2=suffix, block, border).
    kb bounds duplicated blocks (0 = unbounded)."""
    N = len(t)
    z = _z_function(t)
    reached = np.zeros(N + 1, np.bool_)
    src = np.full(N + 1, -1, np.int64)
    side = np.zeros(N + 1, np.int64)
    blk = np.zeros(N + 1, np.int64)
    brd = np.zeros(N + 1, np.int64)
    reached[seed] = True
    # nearest reached length below each m, for completion edges
    last = np.full(N + 2, -1, np.int64)
    for m in range(1, N + 1):
        last[m] = last[m - 1]
        if m > seed:
            if suf_comp:
                # some reached m0 in [m - arm[m], m - 1]
                m0 = last[m - 1]
                if arm[m] > 0 and m0 >= m - arm[m] and m0 >= seed:
                    reached[m], src[m], side[m] = True, m0, 2
                    blk[m], brd[m] = m - m0, arm[m] - (m - m0)
            if not reached[m] and suf_dup:
                top = m // 2 if kb == 0 else min(kb, m // 2)
                for l in range(1, top + 1):
                    m0 = m - l
                    if m0 >= seed and reached[m0]:
                        # t[m0-l+1..m0] == t[m0+1..m]
                        ok = True
                        for q in range(l):
                            if t[m0 - l + q] != t[m0 + q]:
                                ok = False
                                break
                        if ok:
                            reached[m], src[m], side[m], blk[m] = True, m0, 2, l
                            break
            if not reached[m] and pre:
                top = m // 2 if kb == 0 else min(kb, m // 2)
                for l in range(1, top + 1):
                    m0 = m - l
                    # t[1..l] t[1..m0] is the prefix of length m
                    if m0 >= seed and reached[m0] and z[l] >= m0:
                        reached[m], src[m], side[m], blk[m] = True, m0, 1, l
                        break
        if reached[m]:
            last[m] = m
    return reached, src, side, blk, brd


@dataclass(frozen=True)
class ChainResult:
    ok: bool
    name: str
    op: str
    derivation: Optional[Derivation]
    lengths: list  # prefix lengths along the chain
    reached: int  # longest prefix length reached from the chosen seed


def _edges_for(op: OpKind):
    return (op.prefix_side, op.suffix_side and not op.completion, op.suffix_side and op.completion)


def prefix_reach(op: OpKind, t: np.ndarray, seed: int):
    """Reachability over the prefix graph of t from the prefix of length seed."""
    t = np.asarray(t, np.int64)
    pre, sdup, scomp = _edges_for(op)
    arm = np.zeros(len(t) + 1, np.int64)
    if scomp:
        _, _, mse = compute_boundary_tables(t)
        arm[1:] = mse // 2
    kb = op.k or 0
    return _reach(t, seed, kb, pre, sdup, scomp, arm)


def verify_omega(op: OpKind, name: str, target_len: int, max_seed: int = 32) -> ChainResult:
    """Find a chain of prefixes of the named word, each one step from the
    previous, from the shortest workable seed to length >= target_len."""
    if target_len < 1:
        raise ValueError("need target_len >= 1")
    if target_len > MAX_TARGET:
        raise BudgetError("target length over budget")
    N = 2 * target_len
    t = generate(name, N)
    best = 0
    for seed in range(1, min(max_seed, target_len) + 1):
        reached, src, side, blk, brd = prefix_reach(op, t, seed)
        hits = np.flatnonzero(reached[target_len:])
        best = max(best, int(np.flatnonzero(reached).max()))
        if len(hits) == 0:
            continue
        m = target_len + int(hits[0])
        path = [m]
        while src[path[-1]] >= 0:
            path.append(int(src[path[-1]]))
        path.reverse()
        steps = []
        for m1 in path[1:]:
            steps.append(DerivStep("prefix" if side[m1] == 1 else "suffix", int(blk[m1]), int(brd[m1])))
        d = Derivation(tuple(int(c) for c in t[:seed]), steps)
        verdict = verify_derivation(op, d)
        if not verdict.ok or verdict.word != tuple(int(c) for c in t[:m]):
            raise AssertionError("prefix chain failed to replay")
        return ChainResult(True, name, str(op), d, path, int(reached.nonzero()[0].max()))
    return ChainResult(False, name, str(op), None, [], best)


def chain_words(res: ChainResult, name: str) -> list:
    if not res.ok:
        return []
    t = generate(name, max(res.lengths))
    return [t[:m] for m in res.lengths]


# --------------------------------------------------------------------------
# bounded reach of duplication on Thue-Morse prefixes


@dataclass(frozen=True)
class BoundRow:
    n: int
    complemented: bool
    longest: int  # longest prefix reachable from any prefix of t_n
    bound: int  # 2^{n+1} + 2^{n-1}

    @property
    def holds(self) -> bool:
        return self.longest <= self.bound


def psd_thue_morse_bounds(max_n: int = 6, k: Optional[int] = None) -> list:
    """For n <= max_n and t or its complement, the longest prefix a chain of
    PSD steps can reach from a prefix of t_n (length 2^n)."""
    rows = []
    op = OpKind("PSD", k)
    for n in range(0, max_n + 1):
        N = 1 << (n + 3)
        bound = (1 << (n + 1)) + ((1 << n) >> 1)
        for comp in (False, True):
            t = generate("thue_morse", N) ^ int(comp)
            longest = 0
            for seed in range(1, (1 << n) + 1):
                reached = prefix_reach(op, t, seed)[0]
                longest = max(longest, int(np.flatnonzero(reached).max()))
            rows.append(BoundRow(n, comp, longest, bound))
    return rows


def fibonacci_words(count: int) -> list:
    """f_0 = 0, f_1 = 01, f_k = f_{k-1} f_{k-2}."""
    out = [(0,), (0, 1)]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return [np.array(f, np.int64) for f in out[:count]]


def fibonacci_psd_experiment(k: int, max_index: int) -> list:
    """Rows (p, n, member) for p <= n <= max_index with n - p even: does
    f_n lie in PSD_k^*(f_p)?  Reported only; nothing is asserted."""
    from .membership_ancestors import psdk_membership

    fs = fibonacci_words(max_index + 1)
    rows = []
    for p in range(1, max_index + 1):
        for n in range(p, max_index + 1, 2):
            rows.append((p, n, bool(psdk_membership(fs[n], fs[p], k))))
    return rows
