"""Word representation shared by every module.

Words are stored as 0-based ``numpy.int64`` arrays.  Public functions take
1-based closed positions ``[i..j]``.
"""
from __future__ import annotations

from typing import Iterable, Union

import numpy as np

MAX_ALPHABET = 1 << 16
INF = -1  # distance sentinel inside int arrays; public APIs use math.inf

WordLike = Union[str, bytes, Iterable[int], np.ndarray]


class BudgetError(RuntimeError):
    """Raised when an explicit size budget would be exceeded."""


def as_array(w: WordLike) -> np.ndarray:
    """Convert str/bytes/int sequences to an int64 symbol array."""
    if isinstance(w, np.ndarray):
        a = w.astype(np.int64, copy=False)
    elif isinstance(w, str):
        a = np.fromiter((ord(c) for c in w), dtype=np.int64, count=len(w))
    elif isinstance(w, (bytes, bytearray)):
        a = np.frombuffer(bytes(w), dtype=np.uint8).astype(np.int64)
    else:
        a = np.asarray(list(w), dtype=np.int64)
    if a.ndim != 1:
        raise ValueError("a word must be one-dimensional")
    if a.size and (a.min() < 0 or a.max() >= MAX_ALPHABET):
        raise ValueError(f"symbols must lie in [0, {MAX_ALPHABET})")
    return a


def as_tuple(w: WordLike) -> tuple:
    return tuple(int(c) for c in as_array(w))


def alphabet_size(a: np.ndarray) -> int:
    return int(a.max()) + 1 if a.size else 0


def to_text(w, ref=None) -> str:
    """Render a word.  Small symbols print as characters when printable."""
    a = as_array(w)
    if all(32 < int(c) < 127 for c in a):
        return "".join(chr(int(c)) for c in a)
    return " ".join(str(int(c)) for c in a)


def check_range(n: int, i: int, j: int | None = None) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"position {i} outside [1, {n}]")
    if j is not None and not (i <= j <= n):
        raise IndexError(f"interval [{i}, {j}] outside [1, {n}]")


def is_primitive(a) -> bool:
    """A word is primitive iff it is not a proper power (failure function test)."""
    a = as_array(a)
    m = len(a)
    if m == 0:
        return False
    p = smallest_period(a)
    return not (p < m and m % p == 0)


def smallest_period(a) -> int:
    a = as_array(a)
    m = len(a)
    if m == 0:
        return 0
    fail = [0] * m
    k = 0
    for q in range(1, m):
        while k and a[q] != a[k]:
            k = fail[k - 1]
        if a[q] == a[k]:
            k += 1
        fail[q] = k
    return m - fail[-1]
