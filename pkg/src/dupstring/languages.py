"""Regular-language side of bounded duplication: closure automata, one-step
images, minimal generators, finiteness and the bounded distance between two
regular languages.  Symbols are ints; strings convert through ``as_tuple``."""
from __future__ import annotations

import math
import os
import re
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional

import numpy as np

from .ops_kernel import OpKind, closure_upto
from .words import BudgetError, WordLike, as_tuple

STATE_BUDGET = int(os.environ.get("DUPSTRING_STATE_BUDGET", 1 << 18))
TUPLE_BUDGET = int(os.environ.get("DUPSTRING_TUPLE_BUDGET", 1 << 26))


# --------------------------------------------------------------------------
# DFA


@dataclass(frozen=True)
class Dfa:
    """Total DFA over ``alphabet``; states are 0..n_states-1."""

    alphabet: tuple
    delta: np.ndarray  # (n_states, len(alphabet)) int64
    start: int
    finals: frozenset

    @property
    def n_states(self) -> int:
        return self.delta.shape[0]

    def _sym(self, a) -> int:
        try:
            return self.alphabet.index(a)
        except ValueError:
            return -1

    def run(self, word, q: Optional[int] = None) -> int:
        """State after reading word (-1 once a foreign symbol is seen)."""
        q = self.start if q is None else q
        for a in as_tuple(word):
            c = self._sym(a)
            if c < 0:
                return -1
            q = int(self.delta[q, c])
        return q

    def accepts(self, word) -> bool:
        return self.run(word) in self.finals

    def words_upto(self, maxlen: int) -> set:
        """All accepted words of length <= maxlen (breadth-first)."""
        out = set()
        layer = {(): self.start}
        for length in range(maxlen + 1):
            nxt = {}
            for w, q in layer.items():
                if q in self.finals:
                    out.add(w)
                if length < maxlen:
                    for c, a in enumerate(self.alphabet):
                        nxt[w + (a,)] = int(self.delta[q, c])
            # prune words whose state cannot reach a final state
            live = _coreachable(self)
            layer = {w: q for w, q in nxt.items() if q in live}
        return out

    def to_text(self) -> str:
        lines = [f"{self.n_states} {','.join(str(a) for a in self.alphabet)} {self.start}"]
        lines.append(" ".join(str(q) for q in sorted(self.finals)))
        for q in range(self.n_states):
            for c, a in enumerate(self.alphabet):
                lines.append(f"{q} {a} -> {int(self.delta[q, c])}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Dfa":
        rows = [r for r in text.splitlines() if r.strip() and not r.lstrip().startswith("#")]
        if len(rows) < 1:
            raise ValueError("empty DFA description")
        head = rows[0].split()
        if len(head) != 3:
            raise ValueError("first line must be: states alphabet start")
        nq, start = int(head[0]), int(head[2])
        alphabet = tuple(_parse_symbol(s) for s in head[1].split(",") if s)
        finals = frozenset(int(x) for x in rows[1].split()) if len(rows) > 1 and "->" not in rows[1] and "→" not in rows[1] else frozenset()
        body = rows[2:] if len(rows) > 1 and "->" not in rows[1] and "→" not in rows[1] else rows[1:]
        delta = np.full((nq, len(alphabet)), -1, np.int64)
        for r in body:
            m = re.fullmatch(r"\s*(\d+)\s+(\S+)\s*(?:->|→)\s*(\d+)\s*", r)
            if not m:
                raise ValueError(f"bad transition line {r!r}")
            q, a, t = int(m.group(1)), _parse_symbol(m.group(2)), int(m.group(3))
            if a not in alphabet:
                raise ValueError(f"symbol {a} not in alphabet")
            delta[q, alphabet.index(a)] = t
        if (delta < 0).any():
            raise ValueError("transition function is not total")
        return cls(alphabet, delta, start, finals)

    def to_dot(self) -> str:
        out = ["digraph dfa {", "  rankdir=LR;", '  init [shape=point];', f"  init -> {self.start};"]
        for q in range(self.n_states):
            shape = "doublecircle" if q in self.finals else "circle"
            out.append(f"  {q} [shape={shape}];")
        for q in range(self.n_states):
            for c, a in enumerate(self.alphabet):
                out.append(f'  {q} -> {int(self.delta[q, c])} [label="{_show_symbol(a)}"];')
        out.append("}")
        return "\n".join(out) + "\n"


def minimize(d: Dfa) -> Dfa:
    """Minimal complete DFA (Moore refinement; every state is reachable)."""
    n = d.n_states
    cls = np.array([1 if q in d.finals else 0 for q in range(n)], np.int64)
    while True:
        sig = np.concatenate([cls[:, None], cls[d.delta]], axis=1)
        _, new = np.unique(sig, axis=0, return_inverse=True)
        new = new.reshape(-1)
        if len(np.unique(new)) == len(np.unique(cls)):
            break
        cls = new
    # renumber classes in breadth-first order from the start state
    order = {int(cls[d.start]): 0}
    queue = [d.start]
    rep = [d.start]
    while queue:
        q = queue.pop(0)
        for t in d.delta[q]:
            c = int(cls[t])
            if c not in order:
                order[c] = len(order)
                queue.append(int(t))
                rep.append(int(t))
    delta = np.array([[order[int(cls[t])] for t in d.delta[q]] for q in rep], np.int64)
    delta = delta.reshape(len(rep), len(d.alphabet))
    finals = frozenset(order[int(cls[q])] for q in d.finals if int(cls[q]) in order)
    return Dfa(d.alphabet, delta, 0, finals)


def _parse_symbol(tok: str) -> int:
    if re.fullmatch(r"-?\d+", tok):
        return int(tok)
    if len(tok) == 1:
        return ord(tok)
    raise ValueError(f"bad symbol {tok!r}")


def _show_symbol(a: int) -> str:
    return chr(a) if 33 <= a < 127 and chr(a) not in '"\\' else str(a)


def _coreachable(d: Dfa) -> set:
    rev = [[] for _ in range(d.n_states)]
    for q in range(d.n_states):
        for t in d.delta[q]:
            rev[int(t)].append(q)
    seen = set(d.finals)
    stack = list(d.finals)
    while stack:
        q = stack.pop()
        for p in rev[q]:
            if p not in seen:
                seen.add(p)
                stack.append(p)
    return seen


def _build(alphabet, start_key, step, is_final, budget) -> Dfa:
    """Explore a deterministic transition system from start_key and number
    the reachable states."""
    ids = {start_key: 0}
    order = [start_key]
    rows = []
    i = 0
    while i < len(order):
        key = order[i]
        row = []
        for a in alphabet:
            t = step(key, a)
            if t not in ids:
                if len(ids) >= budget:
                    raise BudgetError("automaton state budget exceeded")
                ids[t] = len(order)
                order.append(t)
            row.append(ids[t])
        rows.append(row)
        i += 1
    delta = np.array(rows, dtype=np.int64).reshape(len(order), len(alphabet))
    finals = frozenset(ids[k] for k in order if is_final(k))
    return Dfa(tuple(alphabet), delta, 0, finals)


def align(d: Dfa, alphabet: Iterable) -> Dfa:
    """Same language over a larger alphabet (new symbols lead to a sink)."""
    alphabet = tuple(sorted(set(alphabet)))
    if not set(d.alphabet) <= set(alphabet):
        raise ValueError("alphabet must contain the DFA's alphabet")
    if alphabet == d.alphabet:
        return d
    sink = d.n_states

    def step(q, a):
        if q == sink or a not in d.alphabet:
            return sink
        return int(d.delta[q, d.alphabet.index(a)])

    return _build(alphabet, d.start, step, lambda q: q in d.finals, 1 << 62)


def _product(d1: Dfa, d2: Dfa, accept) -> Dfa:
    alph = tuple(sorted(set(d1.alphabet) | set(d2.alphabet)))
    a1, a2 = align(d1, alph), align(d2, alph)

    def step(k, a):
        c = alph.index(a)
        return (int(a1.delta[k[0], c]), int(a2.delta[k[1], c]))

    return _build(alph, (a1.start, a2.start), step,
                  lambda k: accept(k[0] in a1.finals, k[1] in a2.finals), 1 << 62)


def intersection(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x and y)


def union(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x or y)


def difference(d1: Dfa, d2: Dfa) -> Dfa:
    return _product(d1, d2, lambda x, y: x and not y)


def is_empty(d: Dfa) -> bool:
    return not d.finals


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    return is_empty(_product(d1, d2, lambda x, y: x != y))


def is_finite(d: Dfa) -> bool:
    """No cycle among states that are reachable (all are) and co-reachable."""
    live = _coreachable(d)
    color = {}
    for root in live:
        if root in color:
            continue
        stack = [(root, iter(int(t) for t in d.delta[root]))]
        color[root] = 1
        while stack:
            q, it = stack[-1]
            for t in it:
                if t not in live:
                    continue
                c = color.get(t, 0)
                if c == 1:
                    return False
                if c == 0:
                    color[t] = 1
                    stack.append((t, iter(int(u) for u in d.delta[t])))
                    break
            else:
                color[q] = 2
                stack.pop()
    return True


def universal(alphabet) -> Dfa:
    alph = tuple(sorted(set(alphabet)))
    return Dfa(alph, np.zeros((1, len(alph)), np.int64), 0, frozenset([0]))


def empty_language(alphabet) -> Dfa:
    alph = tuple(sorted(set(alphabet)))
    return Dfa(alph, np.zeros((1, len(alph)), np.int64), 0, frozenset())


def finite_language(words, alphabet=None) -> Dfa:
    """Trie automaton accepting exactly ``words``."""
    ws = [as_tuple(w) for w in words]
    alph = tuple(sorted(set(alphabet) if alphabet is not None else {a for w in ws for a in w}))
    if not alph:
        alph = (0,)
    prefixes = {w[:i] for w in ws for i in range(len(w) + 1)}
    wset = set(ws)

    def step(p, a):
        if p is None:
            return None
        q = p + (a,)
        return q if q in prefixes else None

    return _build(alph, (), step, lambda p: p in wset, 1 << 62)


# --------------------------------------------------------------------------
# NFA with epsilon moves, determinized on the fly


class _Nfa:
    def __init__(self):
        self.starts = set()
        self.finals = set()
        self.edges = {}  # state -> {symbol: set(states)}
        self.eps = {}

    def add(self, p, a, q):
        self.edges.setdefault(p, {}).setdefault(a, set()).add(q)

    def add_eps(self, p, q):
        self.eps.setdefault(p, set()).add(q)

    def closure(self, states) -> frozenset:
        seen = set(states)
        stack = list(states)
        while stack:
            p = stack.pop()
            for q in self.eps.get(p, ()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    def reversed(self) -> "_Nfa":
        r = _Nfa()
        r.starts = set(self.finals)
        r.finals = set(self.starts)
        for p, m in self.edges.items():
            for a, qs in m.items():
                for q in qs:
                    r.add(q, a, p)
        for p, qs in self.eps.items():
            for q in qs:
                r.add_eps(q, p)
        return r

    def merge(self, other: "_Nfa", tag) -> None:
        """Copy other's states in under ``(tag, state)`` names."""
        for p, m in other.edges.items():
            for a, qs in m.items():
                for q in qs:
                    self.add((tag, p), a, (tag, q))
        for p, qs in other.eps.items():
            for q in qs:
                self.add_eps((tag, p), (tag, q))

    def determinize(self, alphabet, budget: int = STATE_BUDGET) -> Dfa:
        alphabet = tuple(sorted(set(alphabet)))

        def step(S, a):
            nxt = set()
            for p in S:
                nxt |= self.edges.get(p, {}).get(a, set())
            return self.closure(nxt)

        return _build(alphabet, self.closure(self.starts), step,
                      lambda S: bool(S & self.finals), budget)


def _sd_nfa(x: tuple, k: int, budget: int) -> _Nfa:
    """NFA for SD_k^*(x).  After x, a duplicated block of length l <= k is a
    continuation of period l for l symbols, so a state keeps the last
    min(k, length) symbols and the block still being copied."""
    nfa = _Nfa()
    m = len(x)
    nfa.starts.add(("x", 0))
    for i in range(m - 1):
        nfa.add(("x", i), x[i], ("x", i + 1))
    first = ("f", x[-k:])
    nfa.add(("x", m - 1), x[m - 1], first)
    if m == 1:
        pass
    seen = {first}
    stack = [first]
    while stack:
        s = stack.pop()
        if s[0] == "f":
            ctx = s[1]
            nfa.finals.add(s)
            for l in range(1, len(ctx) + 1):
                a = ctx[-l]
                nctx = (ctx + (a,))[-k:]
                t = ("f", nctx) if l == 1 else ("b", nctx, l, l - 1)
                nfa.add(s, a, t)
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        else:
            _, ctx, l, r = s
            a = ctx[-l]
            nctx = (ctx + (a,))[-k:]
            t = ("f", nctx) if r == 1 else ("b", nctx, l, r - 1)
            nfa.add(s, a, t)
            if t not in seen:
                seen.add(t)
                stack.append(t)
        if len(seen) > budget:
            raise BudgetError("automaton state budget exceeded")
    return nfa


def _pd_nfa(x: tuple, k: int, budget: int) -> _Nfa:
    """PD_k^*(x) = reverse of SD_k^*(x^R); its only final state is the end of
    reading x."""
    return _sd_nfa(x[::-1], k, budget).reversed()


def _psd_nfa_long(x: tuple, k: int, budget: int) -> _Nfa:
    """|x| >= k: words y x z with y x in PD_k^*(x) and x z in SD_k^*(x)."""
    pd, sd = _pd_nfa(x, k, budget), _sd_nfa(x, k, budget)
    nfa = _Nfa()
    nfa.merge(pd, "P")
    nfa.merge(sd, "S")
    nfa.starts = {("P", s) for s in pd.starts}
    nfa.finals = {("S", s) for s in sd.finals}
    for f in pd.finals:
        nfa.add_eps(("P", f), ("S", ("f", x[-k:])))
    return nfa


def closure_automaton(x: WordLike, k: int, family: str = "PSD", alphabet=None,
                      budget: int = STATE_BUDGET) -> Dfa:
    """DFA for Θ^*(x), Θ in {SD_k, PD_k, PSD_k}.

    For PSD_k and |x| < k, every derivation either stays below length k or
    first reaches a word of length in [k, 2k-2]; those words are taken from
    a bounded closure and their (long-seed) automata are united."""
    xt = as_tuple(x)
    if not xt:
        raise ValueError("empty seed")
    if k < 1:
        raise ValueError("need k >= 1")
    fam = family.upper().split("_")[0]
    if fam not in ("SD", "PD", "PSD"):
        raise ValueError("family must be SD_k, PD_k or PSD_k")
    alph = tuple(sorted(set(alphabet) if alphabet is not None else set(xt)))
    if not set(xt) <= set(alph):
        raise ValueError("alphabet must contain the seed's symbols")
    if fam == "SD":
        return minimize(_sd_nfa(xt, k, budget).determinize(alph, budget))
    if fam == "PD":
        return minimize(_pd_nfa(xt, k, budget).determinize(alph, budget))
    if len(xt) >= k:
        return minimize(_psd_nfa_long(xt, k, budget).determinize(alph, budget))
    words = closure_upto(OpKind("PSD", k), xt, 2 * k - 2)
    nfa = _Nfa()
    short = [w for w in words if len(w) < k]
    for idx, w in enumerate(short):
        nfa.starts.add(("w", idx, 0))
        for i, a in enumerate(w):
            nfa.add(("w", idx, i), a, ("w", idx, i + 1))
        nfa.finals.add(("w", idx, len(w)))
    for idx, y in enumerate(sorted(w for w in words if len(w) >= k)):
        sub = _psd_nfa_long(y, k, budget)
        nfa.merge(sub, ("y", idx))
        nfa.starts |= {(("y", idx), s) for s in sub.starts}
        nfa.finals |= {(("y", idx), s) for s in sub.finals}
    return minimize(nfa.determinize(alph, budget))


# --------------------------------------------------------------------------
# one-step image and minimal generators


def one_step_image(L: Dfa, k: int, budget: int = STATE_BUDGET) -> Dfa:
    """DFA for PSD_k(L) = {y : y in PSD_k(x) for some x in L}."""
    alph = L.alphabet
    col = {a: c for c, a in enumerate(alph)}
    nfa = _Nfa()
    # suffix duplication: read x keeping its last <= k symbols, then copy
    s0 = ("s", L.start, ())
    nfa.starts.add(s0)
    # prefix duplication: read the block b first, then x which starts with b
    p0 = ("p", ())
    nfa.starts.add(p0)
    seen = {s0, p0}
    stack = [s0, p0]
    while stack:
        st = stack.pop()
        tag = st[0]
        out = []
        if tag == "s":
            _, q, win = st
            for a in alph:
                out.append((a, ("s", int(L.delta[q, col[a]]), (win + (a,))[-k:])))
            if q in L.finals:
                for l in range(1, len(win) + 1):
                    out.append((None, ("a", win[-l:], 0)))
        elif tag == "a":
            _, b, idx = st
            if idx == len(b):
                nfa.finals.add(st)
            else:
                out.append((b[idx], ("a", b, idx + 1)))
        elif tag == "p":
            b = st[1]
            if len(b) < k:
                for a in alph:
                    out.append((a, ("p", b + (a,))))
            if b:
                out.append((None, ("c", b, 0, L.start)))
        elif tag == "c":
            _, b, idx, q = st
            if idx < len(b):
                a = b[idx]
                out.append((a, ("c", b, idx + 1, int(L.delta[q, col[a]]))))
            else:
                if q in L.finals:
                    nfa.finals.add(st)
                for a in alph:
                    out.append((a, ("c", b, idx, int(L.delta[q, col[a]]))))
        for a, t in out:
            if a is None:
                nfa.add_eps(st, t)
            else:
                nfa.add(st, a, t)
            if t not in seen:
                seen.add(t)
                if len(seen) > budget:
                    raise BudgetError("automaton state budget exceeded")
                stack.append(t)
    return minimize(nfa.determinize(alph, budget))


def minimal_generator(L: Dfa, k: int, budget: int = STATE_BUDGET) -> Dfa:
    """M_k(L) = L minus PSD_k(L); L must satisfy PSD_k(L) ⊆ L."""
    img = one_step_image(L, k, budget)
    if not is_empty(difference(img, L)):
        raise ValueError("not duplication-closed")
    return minimize(difference(L, img))


# --------------------------------------------------------------------------
# distance between regular languages


class TupleTrie:
    """Level-order labels for all words of V^{<=k}.

    Label 0 is the empty word; ``child[x, c]`` appends symbol c (or -1 at
    depth k), ``suffix[x]`` drops the first symbol, ``parent[x]`` the last,
    ``prepend[x, c]`` adds c in front (-1 at depth k)."""

    def __init__(self, sigma: int, k: int):
        total = sum(sigma**d for d in range(k + 1))
        self.sigma, self.k, self.size = sigma, k, total
        self.depth = np.zeros(total, np.int64)
        self.child = np.full((total, sigma), -1, np.int64)
        self.parent = np.full(total, -1, np.int64)
        self.suffix = np.zeros(total, np.int64)
        self.prepend = np.full((total, sigma), -1, np.int64)
        self.words = [()]
        index = {(): 0}
        level = [()]
        for d in range(1, k + 1):
            nxt = []
            for w in level:
                for c in range(sigma):
                    u = w + (c,)
                    index[u] = len(self.words)
                    self.words.append(u)
                    nxt.append(u)
            level = nxt
        for u, x in index.items():
            self.depth[x] = len(u)
            if u:
                self.parent[x] = index[u[:-1]]
                self.suffix[x] = index[u[1:]]
            if len(u) < k:
                for c in range(sigma):
                    self.child[x, c] = index[u + (c,)]
                    self.prepend[x, c] = index[(c,) + u]
        self.index = index

    def suf_append(self, x: int, c: int) -> int:
        """suf_k(w·c) from suf_k(w)."""
        if self.depth[x] < self.k:
            return int(self.child[x, c])
        return int(self.child[self.suffix[x], c])

    def pref_append(self, x: int, c: int) -> int:
        """pref_k(w·c) from pref_k(w)."""
        return int(self.child[x, c]) if self.depth[x] < self.k else x

    def pref_prepend(self, x: int, c: int) -> int:
        if self.depth[x] < self.k:
            return int(self.prepend[x, c])
        return int(self.prepend[self.parent[x], c])

    def suf_prepend(self, x: int, c: int) -> int:
        return int(self.prepend[x, c]) if self.depth[x] < self.k else x


def _one_way(A1: Dfa, A2: Dfa, k: int, trie: TupleTrie, budget: int) -> float:
    """Least d with PSD_k^d(L1) ∩ L2 nonempty, by breadth-first search over
    tuples (s1, s2, pref_k, suf_k): some derived word w has these k-windows
    and drives A2 from s1 to s2."""
    nS, sigma = A2.n_states, len(A2.alphabet)
    if nS * nS * trie.size * trie.size > budget:
        raise BudgetError("tuple budget exceeded")
    d1, d2 = A1.delta, A2.delta
    # A2 over whole words: forward run and backward state sets, per label
    fwd = np.zeros((nS, trie.size), np.int64)
    fwd[:, 0] = np.arange(nS)
    for x in range(1, trie.size):
        par = trie.parent[x]
        c = trie.words[x][-1]
        fwd[:, x] = d2[fwd[:, par], c]
    # R_0: words of L1 (nonempty), tracked with A1 state and A2 start/end
    seen5 = set()
    queue = deque()
    for s in range(nS):
        for c in range(sigma):
            x = int(trie.child[0, c])
            t = (int(d1[A1.start, c]), s, int(d2[s, c]), x, x)
            if t not in seen5:
                seen5.add(t)
                queue.append(t)
    R0 = set()
    while queue:
        q, s, s1, w1, w2 = queue.popleft()
        if q in A1.finals:
            R0.add((s, s1, w1, w2))
        for c in range(sigma):
            t = (int(d1[q, c]), s, int(d2[s1, c]), trie.pref_append(w1, c), trie.suf_append(w2, c))
            if t not in seen5:
                seen5.add(t)
                queue.append(t)
    target = lambda t: t[0] == A2.start and t[1] in A2.finals  # noqa: E731
    seen = np.zeros((nS, nS, trie.size, trie.size), np.bool_)
    frontier = []
    for t in R0:
        seen[t] = True
        frontier.append(t)
    d = 0
    while frontier:
        if any(target(t) for t in frontier):
            return d
        nxt = []
        for s1, s2, w1, w2 in frontier:
            # suffix duplication of every nonempty suffix of suf_k(w)
            x = w2
            while trie.depth[x] > 0:
                word = trie.words[x]
                a, b, s = w1, w2, s2
                for c in word:
                    a, b = trie.pref_append(a, c), trie.suf_append(b, c)
                s = int(fwd[s2, x])
                t = (s1, s, a, b)
                if not seen[t]:
                    seen[t] = True
                    nxt.append(t)
                x = int(trie.suffix[x])
            # prefix duplication of every nonempty prefix of pref_k(w)
            x = w1
            while trie.depth[x] > 0:
                word = trie.words[x]
                a, b = w1, w2
                for c in reversed(word):
                    a, b = trie.pref_prepend(a, c), trie.suf_prepend(b, c)
                for s in np.flatnonzero(fwd[:, x] == s1):
                    t = (int(s), s2, a, b)
                    if not seen[t]:
                        seen[t] = True
                        nxt.append(t)
                x = int(trie.parent[x])
        frontier = nxt
        d += 1
    return math.inf


def language_distance(L1: Dfa, L2: Dfa, k: int, budget: int = TUPLE_BUDGET) -> float:
    """min over x in L1, y in L2 of the PSD_k distance between them (in
    whichever direction one derives the other); math.inf if none."""
    if k < 1:
        raise ValueError("need k >= 1")
    alph = tuple(sorted(set(L1.alphabet) | set(L2.alphabet)))
    A1, A2 = align(L1, alph), align(L2, alph)
    trie = TupleTrie(len(alph), k)
    return min(_one_way(A1, A2, k, trie, budget), _one_way(A2, A1, k, trie, budget))
