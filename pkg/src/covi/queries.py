"""Overlap queries, written once against the navigation contract of an index.

Every query starts from ``failure(leaf(x))`` on the left word and from
``parent(leaf(y))`` on the right word, so whole-word matches never count:
only proper overlaps are reported.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._index import OverlapIndex

__all__ = [
    "CorrelationVector",
    "QueryScratch",
    "max_ov",
    "max_ov_steps",
    "correlation",
    "all_right_ov",
    "all_left_ov",
    "global_max_ov",
    "threshold_ov",
    "threshold_right_ov",
    "threshold_left_ov",
]

EMPTY = -1
_CAND = 1
_OVERLAP = 2


@dataclass(frozen=True)
class CorrelationVector:
    """Correlation of ``x`` over ``y`` as a bit vector of length ``|x|``.

    Position ``i`` (1-based) is set when the suffix of ``x`` starting at
    ``i`` is a prefix of ``y``, i.e. an overlap of length ``|x| - i + 1``.
    ``mask`` keeps bit ``k - 1`` for an overlap of length ``k``.
    """

    length: int
    mask: int = 0

    @classmethod
    def from_string(cls, bits: str) -> "CorrelationVector":
        n = len(bits)
        mask = 0
        for i, ch in enumerate(bits, start=1):
            if ch == "1":
                mask |= 1 << (n - i)
            elif ch != "0":
                raise ValueError(f"not a bit string: {bits!r}")
        return cls(n, mask)

    @classmethod
    def from_lengths(cls, length: int, lengths) -> "CorrelationVector":
        mask = 0
        for k in lengths:
            if not 1 <= k <= length:
                raise ValueError(f"overlap length {k} outside 1..{length}")
            mask |= 1 << (k - 1)
        return cls(length, mask)

    def __str__(self) -> str:
        return "".join("1" if self.mask >> (self.length - i) & 1 else "0"
                       for i in range(1, self.length + 1))

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(f"position {i} out of range 1..{self.length}")
        return self.mask >> (self.length - i) & 1

    def __len__(self) -> int:
        return self.length

    def overlap_lengths(self) -> list[int]:
        """Overlap lengths present, longest first."""
        return [k for k in range(self.length, 0, -1) if self.mask >> (k - 1) & 1]

    def max_overlap(self) -> int:
        return self.mask.bit_length()

    def popcount(self) -> int:
        return self.mask.bit_count()


class QueryScratch:
    """Reusable working memory for the per-word and global queries.

    One memo slot and one flag byte per node (1-based), plus a stack of the
    nodes visited by the current climb. Each query resets it first.
    """

    def __init__(self, size: int):
        self.size = size
        self.memo = [EMPTY] * (size + 1)
        self.flags = bytearray(size + 1)
        self.stack: list[int] = []

    @classmethod
    def for_index(cls, idx: OverlapIndex) -> "QueryScratch":
        return cls(idx.node_count)

    def reset(self) -> None:
        self.memo[:] = [EMPTY] * (self.size + 1)
        self.flags[:] = bytes(self.size + 1)
        self.stack.clear()


def _scratch(idx: OverlapIndex, scratch: QueryScratch | None) -> QueryScratch:
    if scratch is None:
        return QueryScratch(idx.node_count)
    if scratch.size != idx.node_count:
        raise ValueError(f"scratch has {scratch.size} slots, index has {idx.node_count} nodes")
    scratch.reset()
    return scratch


def max_ov_steps(idx: OverlapIndex, x: int, y: int) -> tuple[int, int]:
    """Longest proper overlap of x onto y, and the number of link hops taken."""
    parent = idx.parent
    depth = idx.depth
    fail = idx.failure
    nx = fail(idx.leaf(x))
    ny = parent(idx.leaf(y))
    dx = depth(nx)
    dy = depth(ny)
    steps = 2
    while True:
        if dx == dy:
            if nx == ny or dx == 0:
                return dx, steps
            ny = parent(ny)
            dy = depth(ny)
        elif dx > dy:
            nx = fail(nx)
            dx = depth(nx)
        else:
            ny = parent(ny)
            dy = depth(ny)
        steps += 1


def max_ov(idx: OverlapIndex, x: int, y: int) -> int:
    """Length of the longest proper overlap of word ``x`` onto word ``y``.

    Walks down the failure chain of ``x`` and up the ancestors of ``y``,
    always moving the deeper of the two, until both sit on the same node.
    """
    return max_ov_steps(idx, x, y)[0]


def correlation(idx: OverlapIndex, x: int, y: int) -> CorrelationVector:
    parent = idx.parent
    depth = idx.depth
    fail = idx.failure
    lx = len(idx.words[x])
    mask = 1 << (lx - 1) if x == y else 0
    nx = fail(idx.leaf(x))
    ny = parent(idx.leaf(y))
    dx = depth(nx)
    dy = depth(ny)
    while dx or dy:
        if dx == dy:
            if nx == ny:
                mask |= 1 << (dx - 1)
                nx = fail(nx)
                dx = depth(nx)
            ny = parent(ny)
            dy = depth(ny)
        elif dx > dy:
            nx = fail(nx)
            dx = depth(nx)
        else:
            ny = parent(ny)
            dy = depth(ny)
    return CorrelationVector(lx, mask)


def _right_lengths(idx: OverlapIndex, x: int, scratch: QueryScratch | None, q: int) -> list[int]:
    s = _scratch(idx, scratch)
    memo = s.memo
    stack = s.stack
    parent = idx.parent
    depth = idx.depth
    fail = idx.failure
    leaf = idx.leaf
    root = idx.root
    v = fail(leaf(x))
    while v != root:
        d = depth(v)
        if d < q:
            break
        memo[v] = d
        v = fail(v)
    memo[root] = 0
    out = []
    for z in range(idx.word_count):
        v = parent(leaf(z))
        o = memo[v]
        while o == EMPTY:
            if depth(v) < q:
                o = 0
                break
            stack.append(v)
            v = parent(v)
            o = memo[v]
        for u in stack:
            memo[u] = o
        stack.clear()
        out.append(o)
    return out


def _left_lengths(idx: OverlapIndex, y: int, scratch: QueryScratch | None, q: int) -> list[int]:
    s = _scratch(idx, scratch)
    memo = s.memo
    stack = s.stack
    parent = idx.parent
    depth = idx.depth
    fail = idx.failure
    leaf = idx.leaf
    root = idx.root
    v = parent(leaf(y))
    while v != root:
        d = depth(v)
        if d < q:
            break
        memo[v] = d
        v = parent(v)
    memo[root] = 0
    out = []
    for x in range(idx.word_count):
        v = fail(leaf(x))
        o = memo[v]
        while o == EMPTY:
            if depth(v) < q:
                o = 0
                break
            stack.append(v)
            v = fail(v)
            o = memo[v]
        for u in stack:
            memo[u] = o
        stack.clear()
        out.append(o)
    return out


def all_right_ov(idx: OverlapIndex, x: int, scratch: QueryScratch | None = None) -> np.ndarray:
    """``max_ov(x, z)`` for every word id ``z``, in O(nodes + words)."""
    return np.asarray(_right_lengths(idx, x, scratch, 0), dtype=np.int64)


def all_left_ov(idx: OverlapIndex, y: int, scratch: QueryScratch | None = None) -> np.ndarray:
    """``max_ov(z, y)`` for every word id ``z``."""
    return np.asarray(_left_lengths(idx, y, scratch, 0), dtype=np.int64)


def global_max_ov(idx: OverlapIndex, scratch: QueryScratch | None = None) -> tuple[int, list[int]]:
    """Longest overlap over all ordered pairs, and the left words attaining it.

    Parents of leaves are flagged as candidates, then each word follows its
    failure chain to the first candidate. On an uncompacted index the
    parent of a leaf need not be an overlap, so the overlap nodes are
    flagged first and candidates are lifted to the nearest flagged ancestor.
    Returns ``(0, [])`` when no two words overlap.
    """
    s = _scratch(idx, scratch)
    flags = s.flags
    parent = idx.parent
    depth = idx.depth
    fail = idx.failure
    leaf = idx.leaf
    root = idx.root
    p = idx.word_count
    if idx.compact:
        for w in range(p):
            flags[parent(leaf(w))] = _CAND
    else:
        for w in range(p):
            v = fail(leaf(w))
            while v != root and not flags[v] & _OVERLAP:
                flags[v] |= _OVERLAP
                v = fail(v)
        for w in range(p):
            v = parent(leaf(w))
            while v != root and not flags[v] & _OVERLAP:
                v = parent(v)
            flags[v] |= _CAND
    best = 0
    answers: list[int] = []
    for y in range(p):
        v = fail(leaf(y))
        while v != root and not flags[v] & _CAND:
            v = fail(v)
        d = depth(v)
        if d > best:
            best = d
            answers = [y]
        elif d == best and d > 0:
            answers.append(y)
    return best, answers


def threshold_ov(idx: OverlapIndex, x: int, q: int, direction: str = "right",
                 scratch: QueryScratch | None = None) -> list[tuple[int, int]]:
    """Pairs ``(z, l)`` with ``l >= q``, where ``l`` is ``max_ov(x, z)`` for
    ``direction="right"`` or ``max_ov(z, x)`` for ``"left"``."""
    if q < 1:
        raise ValueError("threshold q must be at least 1")
    if direction == "right":
        lens = _right_lengths(idx, x, scratch, q)
    elif direction == "left":
        lens = _left_lengths(idx, x, scratch, q)
    else:
        raise ValueError(f"direction must be 'right' or 'left', not {direction!r}")
    return [(z, l) for z, l in enumerate(lens) if l >= q]


def threshold_right_ov(idx, x, q, scratch=None):
    return threshold_ov(idx, x, q, "right", scratch)


def threshold_left_ov(idx, x, q, scratch=None):
    return threshold_ov(idx, x, q, "left", scratch)
