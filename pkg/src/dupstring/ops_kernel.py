"""Exact single-step semantics of the duplication and square-completion
operations, bounded closures, derivation replay and brute-force distance
and ancestor oracles.  Words are tuples of ints here."""
from __future__ import annotations

import math
import os
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .words import BudgetError, as_tuple

FAMILIES = ("PD", "SD", "PSD", "PSC", "SSC", "PSSC")
DEFAULT_BUDGET = int(os.environ.get("DUPSTRING_BUDGET", 1 << 22))


@dataclass(frozen=True)
class OpKind:
    family: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown operation family {self.family!r}")
        if self.k is not None:
            if self.family not in ("PD", "SD", "PSD"):
                raise ValueError("a bound only applies to PD, SD and PSD")
            if self.k < 1:
                raise ValueError("bound must be >= 1")

    @classmethod
    def parse(cls, text: str, k: Optional[int] = None) -> "OpKind":
        """Accepts 'psd', 'sd_3', 'PSD_k' (with k given), 'pssc', ..."""
        m = re.fullmatch(r"([a-zA-Z]+)(?:_(\d+|k))?", text.strip())
        if not m:
            raise ValueError(f"cannot parse operation {text!r}")
        fam = m.group(1).upper()
        if m.group(2) and m.group(2) != "k":
            k = int(m.group(2))
        elif m.group(2) == "k" and k is None:
            raise ValueError("bounded operation needs k")
        return cls(fam, k)

    @property
    def prefix_side(self) -> bool:
        return self.family in ("PD", "PSD", "PSC", "PSSC")

    @property
    def suffix_side(self) -> bool:
        return self.family in ("SD", "PSD", "SSC", "PSSC")

    @property
    def completion(self) -> bool:
        return self.family in ("PSC", "SSC", "PSSC")

    def __str__(self):
        return self.family + (f"_{self.k}" if self.k is not None else "")


def _dup_blocks(x: tuple, k) -> range:
    return range(1, (len(x) if k is None else min(k, len(x))) + 1)


def extensions(op: OpKind, x: tuple):
    """Yield (side, block, y_len) for every single legal step: the result is
    block + x for side 'L' and x + block for side 'R'.  y_len is the length
    of the repeated border y in square completion (0 for duplications)."""
    n = len(x)
    if op.completion:
        for L in range(1, n + 1):
            for t in range(0, (L - 1) // 2 + 1):
                if op.prefix_side:
                    # prefix y x' y of length L
                    if x[:t] == x[L - t : L]:
                        yield ("L", x[t : L - t], t)
                if op.suffix_side:
                    # suffix y x' y of length L
                    if x[n - L : n - L + t] == x[n - t :]:
                        yield ("R", x[n - L + t : n - t], t)
    else:
        for l in _dup_blocks(x, op.k):
            if op.prefix_side:
                yield ("L", x[:l], 0)
            if op.suffix_side:
                yield ("R", x[n - l :], 0)


def step(op: OpKind, x) -> set:
    """Image of x under one application of op."""
    x = as_tuple(x)
    if not x:
        raise ValueError("step needs a nonempty word")
    out = set()
    for side, block, _ in extensions(op, x):
        out.add(block + x if side == "L" else x + block)
    return out


def closure_upto(op: OpKind, x, maxlen: int, budget: int = DEFAULT_BUDGET) -> set:
    """All words of op^*(x) with length <= maxlen (BFS; every step lengthens)."""
    x = as_tuple(x)
    if maxlen < len(x):
        raise ValueError("maxlen must be at least |x|")
    seen = {x}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        if len(y) == maxlen:
            continue
        for side, block, _ in extensions(op, y):
            if len(y) + len(block) > maxlen:
                continue
            z = block + y if side == "L" else y + block
            if z not in seen:
                seen.add(z)
                if len(seen) > budget:
                    raise BudgetError("closure budget exceeded")
                queue.append(z)
    return seen


# --------------------------------------------------------------------------
# derivations


@dataclass(frozen=True)
class DerivStep:
    side: str  # "prefix" or "suffix"
    length: int  # length of the added block
    y: int = 0  # border length for square completion


@dataclass
class Derivation:
    start: tuple
    steps: list = field(default_factory=list)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    word: Optional[tuple]
    failed_at: Optional[int] = None


def apply_step(op: OpKind, x: tuple, st: DerivStep) -> Optional[tuple]:
    """Result of one recorded step, or None when the step is illegal."""
    n, l, t = len(x), st.length, st.y
    if l < 1:
        return None
    if st.side == "prefix" and not op.prefix_side or st.side == "suffix" and not op.suffix_side:
        return None
    if st.side not in ("prefix", "suffix"):
        return None
    if not op.completion:
        if t != 0 or l > n or (op.k is not None and l > op.k):
            return None
        return x[:l] + x if st.side == "prefix" else x + x[n - l :]
    L = l + 2 * t
    if L > n:
        return None
    if st.side == "prefix":
        if x[:t] != x[L - t : L]:
            return None
        return x[t : L - t] + x
    if x[n - L : n - L + t] != x[n - t :]:
        return None
    return x + x[n - L + t : n - t]


def verify_derivation(op: OpKind, d: Derivation) -> Verdict:
    cur = as_tuple(d.start)
    for idx, st in enumerate(d.steps):
        nxt = apply_step(op, cur, st)
        if nxt is None:
            return Verdict(False, None, idx)
        cur = nxt
    return Verdict(True, cur)


# --------------------------------------------------------------------------
# factor-graph oracles


def factor_edges(op: OpKind, w: tuple):
    """Map each factor (i, j) of w (1-based) to the set of factors reachable
    in one step while staying inside w at the induced coordinates."""
    n = len(w)
    edges = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            y = w[i - 1 : j]
            out = set()
            for side, block, _ in extensions(op, y):
                l = len(block)
                if side == "L":
                    if i - l >= 1 and w[i - 1 - l : i - 1] == block:
                        out.add((i - l, j))
                else:
                    if j + l <= n and w[j : j + l] == block:
                        out.add((i, j + l))
            edges[(i, j)] = out
    return edges


def oracle_distance_table(op: OpKind, w, budget: int = DEFAULT_BUDGET) -> dict:
    """dist[(i, j)] = least number of steps from w[i..j] to w (absent when
    unreachable), by reverse BFS from (1, n) over the factor graph."""
    w = as_tuple(w)
    n = len(w)
    if n * (n + 1) // 2 > budget:
        raise BudgetError("BFS node budget exceeded")
    edges = factor_edges(op, w)
    rev = {}
    for u, outs in edges.items():
        for v in outs:
            rev.setdefault(v, []).append(u)
    dist = {(1, n): 0}
    queue = deque([(1, n)])
    while queue:
        v = queue.popleft()
        for u in rev.get(v, ()):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def oracle_distance(op: OpKind, x, w) -> float:
    """min steps turning x into w, or math.inf."""
    x, w = as_tuple(x), as_tuple(w)
    if len(x) > len(w):
        raise ValueError("need |x| <= |w|")
    if not x:
        return math.inf
    dist = oracle_distance_table(op, w)
    m = len(x)
    best = math.inf
    for i in range(1, len(w) - m + 2):
        if w[i - 1 : i - 1 + m] == x and (i, i + m - 1) in dist:
            best = min(best, dist[(i, i + m - 1)])
    return best


def oracle_ancestors(op: OpKind, w, budget: int = DEFAULT_BUDGET) -> set:
    """All factor coordinates (i, j) with w in op^*(w[i..j])."""
    return set(oracle_distance_table(op, w, budget))


def oracle_member(op: OpKind, x, w) -> bool:
    """w in op^*(x) by forward closure (independent of the factor graph)."""
    x, w = as_tuple(x), as_tuple(w)
    if len(x) > len(w) or not x:
        return False
    return w in closure_upto(op, x, len(w))
