"""Brute-force reference implementations, by direct character comparison.

Slow on purpose. These never touch a trie and serve as ground truth for
the index queries.
"""

from __future__ import annotations

import numpy as np

from .queries import CorrelationVector
from .trie import WordSet

__all__ = [
    "naive_max_ov",
    "naive_correlation",
    "naive_overlap_matrix",
    "naive_global_max_ov",
    "overlap_strings",
]


def _as_bytes(s: bytes | str) -> bytes:
    b = s.encode("utf-8") if isinstance(s, str) else bytes(s)
    if not b:
        raise ValueError("empty string")
    return b


def _limit(u: bytes, v: bytes, proper: bool) -> int:
    # longest overlap length allowed
    if u == v:
        return len(u) - 1 if proper else len(u)
    m = min(len(u), len(v))
    return m - 1 if proper else m


def naive_max_ov(u: bytes | str, v: bytes | str, proper: bool = True) -> int:
    """Largest k such that the length-k suffix of u equals the length-k prefix of v.

    With ``proper`` (the default) k stays below both lengths, which is what
    the index queries compute. ``proper=False`` allows k = min(|u|, |v|).
    """
    u = _as_bytes(u)
    v = _as_bytes(v)
    for k in range(_limit(u, v, proper), 0, -1):
        if u[len(u) - k :] == v[:k]:
            return k
    return 0


def naive_correlation(u: bytes | str, v: bytes | str, proper: bool = True) -> CorrelationVector:
    u = _as_bytes(u)
    v = _as_bytes(v)
    n = len(u)
    mask = 0
    for k in range(1, _limit(u, v, proper) + 1):
        if u[n - k :] == v[:k]:
            mask |= 1 << (k - 1)
    if u == v:
        mask |= 1 << (n - 1)
    return CorrelationVector(n, mask)


def naive_overlap_matrix(words: WordSet | list) -> np.ndarray:
    """p x p matrix with entry [x, z] = naive_max_ov(word x, word z)."""
    ws = list(words) if isinstance(words, WordSet) else list(WordSet(words))
    p = len(ws)
    out = np.zeros((p, p), dtype=np.int64)
    for i, a in enumerate(ws):
        for j, b in enumerate(ws):
            out[i, j] = naive_max_ov(a, b)
    return out


def naive_global_max_ov(matrix: np.ndarray) -> tuple[int, list[int]]:
    """Matrix maximum and the rows attaining it; (0, []) when all zero."""
    best = int(matrix.max()) if matrix.size else 0
    if best == 0:
        return 0, []
    return best, [int(i) for i in np.flatnonzero((matrix == best).any(axis=1))]


def overlap_strings(words: WordSet | list) -> set[bytes]:
    """Every proper overlap string between ordered pairs of words, self-pairs included."""
    ws = list(words) if isinstance(words, WordSet) else list(WordSet(words))
    prefixes = {w[:k] for w in ws for k in range(1, len(w))}
    return {w[i:] for w in ws for i in range(1, len(w)) if w[i:] in prefixes}
