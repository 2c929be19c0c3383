"""Word sets, the minimal array trie, and Aho-Corasick failure links.

The trie keeps three per-node arrays: the letter on the arc from the parent,
a leaf flag, and the index of the right sibling (0 if none). Nodes are laid
out in depth-first order, so a non-leaf node's first child is the next
array slot. The builder also keeps parent and depth arrays around, since
both the failure computation and the index builders need them.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "SEPARATOR",
    "PrefixViolationError",
    "WordSet",
    "Trie",
    "FailureArray",
    "build_trie",
    "compute_failure_links",
]

SEPARATOR = 0x0A
_FORBIDDEN = (b"\n", b"\x00")


class PrefixViolationError(ValueError):
    """One word of the input is a proper prefix of another."""

    def __init__(self, prefix: bytes, word: bytes):
        self.prefix = prefix
        self.word = word
        super().__init__(
            f"{prefix.decode('latin-1')} is a prefix of {word.decode('latin-1')}"
        )


def _as_bytes(w: bytes | str) -> bytes:
    if isinstance(w, str):
        return w.encode("utf-8")
    return bytes(w)


class WordSet(Sequence[bytes]):
    """Sorted, deduplicated, prefix-free set of non-empty byte strings.

    Word ids are positions in sorted order.
    """

    __slots__ = ("_words",)

    def __init__(self, words: Iterable[bytes | str]):
        ws = sorted(set(map(_as_bytes, words)))
        for w in ws:
            if not w:
                raise ValueError("empty word")
            if any(c in w for c in _FORBIDDEN):
                raise ValueError(f"word {w!r} contains a separator byte (0x0A or 0x00)")
        for a, b in zip(ws, ws[1:]):
            if b.startswith(a):
                raise PrefixViolationError(a, b)
        self._words = tuple(ws)

    @classmethod
    def parse(cls, data: bytes) -> "WordSet":
        """Parse words separated by 0x0A; a trailing separator is optional."""
        parts = data.split(b"\n")
        if parts and parts[-1] == b"":
            parts.pop()
        if not parts:
            raise ValueError("no words")
        return cls(parts)

    @classmethod
    def read(cls, path: str | Path) -> "WordSet":
        return cls.parse(Path(path).read_bytes())

    def to_bytes(self) -> bytes:
        return b"".join(w + b"\n" for w in self._words)

    def write(self, path: str | Path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @property
    def words(self) -> tuple[bytes, ...]:
        return self._words

    def __len__(self) -> int:
        return len(self._words)

    def __getitem__(self, i):
        return self._words[i]

    def __iter__(self) -> Iterator[bytes]:
        return iter(self._words)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WordSet):
            return self._words == other._words
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._words)

    def __repr__(self) -> str:
        head = ", ".join(w.decode("latin-1") for w in self._words[:5])
        more = ", ..." if len(self._words) > 5 else ""
        return f"WordSet([{head}{more}], p={len(self._words)})"

    def index(self, word: bytes | str) -> int:
        w = _as_bytes(word)
        i = bisect_left(self._words, w)
        if i == len(self._words) or self._words[i] != w:
            raise KeyError(f"unknown word {w.decode('latin-1')!r}")
        return i

    def __contains__(self, word) -> bool:
        try:
            self.index(word)
        except (KeyError, TypeError):
            return False
        return True

    @property
    def total_length(self) -> int:
        return sum(map(len, self._words))

    @property
    def max_length(self) -> int:
        return max(map(len, self._words), default=0)

    @property
    def alphabet(self) -> bytes:
        seen = set()
        for w in self._words:
            seen.update(w)
        return bytes(sorted(seen))


@dataclass
class Trie:
    """Array trie in depth-first layout; node 0 is the root."""

    letter: np.ndarray
    is_leaf: np.ndarray
    neighbour: np.ndarray
    parent: np.ndarray
    depth: np.ndarray
    leaf_of_word: np.ndarray
    #: first node of each maximal parent-to-child run in the layout
    chain_heads: np.ndarray
    _levels: tuple[np.ndarray, np.ndarray] | None = field(default=None, repr=False)

    @property
    def n_nodes(self) -> int:
        return int(self.letter.size)

    def first_child(self, v: int) -> int:
        return 0 if self.is_leaf[v] or v + 1 >= self.n_nodes else v + 1

    def children(self, v: int) -> list[int]:
        out = []
        c = self.first_child(v)
        while c:
            out.append(c)
            c = int(self.neighbour[c])
        return out

    def string(self, v: int) -> bytes:
        """Label of the root path of node ``v``."""
        out = bytearray()
        while v:
            out.append(int(self.letter[v]))
            v = int(self.parent[v])
        return bytes(reversed(out))

    def find(self, s: bytes | str) -> int | None:
        """Node spelling ``s``, or None."""
        v = 0
        for c in _as_bytes(s):
            for u in self.children(v):
                if self.letter[u] == c:
                    v = u
                    break
            else:
                return None
        return v

    def levels(self) -> tuple[np.ndarray, np.ndarray]:
        """Nodes in level (BFS) order, and the start offset of each depth."""
        if self._levels is None:
            d = self.depth
            key = d.astype(np.uint16) if d.size and d.max() < (1 << 16) else d
            order = np.argsort(key, kind="stable").astype(self.parent.dtype)
            offsets = np.zeros(int(d.max()) + 2, dtype=np.int64)
            np.cumsum(np.bincount(d), out=offsets[1:])
            self._levels = (order, offsets)
        return self._levels


@dataclass
class FailureArray:
    """Failure link of every trie node; the root's entry is 0."""

    fail: np.ndarray

    def __getitem__(self, v: int) -> int:
        return int(self.fail[v])

    def __len__(self) -> int:
        return int(self.fail.size)


def _lcp(a: bytes, b: bytes) -> int:
    lo, hi = 0, min(len(a), len(b))
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if a[:mid] == b[:mid]:
            lo = mid
        else:
            hi = mid - 1
    return lo


def build_trie(words: WordSet | Iterable[bytes | str], id_width: int = 32) -> Trie:
    """Build the trie of ``words`` by inserting them in sorted order.

    Sorted insertion places every node right after its parent's earlier
    subtrees, so the depth-first layout comes out directly.
    """
    if not isinstance(words, WordSet):
        words = WordSet(words)
    if id_width not in (32, 64):
        raise ValueError("id_width must be 32 or 64")
    ws = words.words
    p = len(ws)
    if p == 0:
        raise ValueError("no words")
    lcp = np.zeros(p, dtype=np.int64)
    lengths = np.fromiter(map(len, ws), dtype=np.int64, count=p)
    starts = np.zeros(p, dtype=np.int64)
    first_parent = np.zeros(p, dtype=np.int64)
    left_sibling = np.zeros(p, dtype=np.int64)
    path = [0]
    next_id = 1
    prev = b""
    for i, w in enumerate(ws):
        l = _lcp(prev, w) if i else 0
        lcp[i] = l
        if i:
            left_sibling[i] = path[l + 1]
        first_parent[i] = path[l]
        del path[l + 1 :]
        cnt = len(w) - l
        path.extend(range(next_id, next_id + cnt))
        starts[i] = next_id
        next_id += cnt
        prev = w
    n = next_id
    if id_width == 32 and n >= (1 << 32):
        raise OverflowError(f"{n} trie nodes do not fit 32-bit ids; use id_width=64")
    idt = np.uint32 if id_width == 32 else np.uint64

    letter = np.frombuffer(
        b"\x00" + b"".join(w[l:] for w, l in zip(ws, lcp.tolist())), dtype=np.uint8
    ).copy()
    counts = lengths - lcp
    depth = np.zeros(n, dtype=np.uint32)
    depth[1:] = np.arange(1, n) + np.repeat(lcp + 1 - starts, counts)
    parent = np.arange(-1, n - 1, dtype=np.int64)
    parent[0] = 0
    parent[starts] = first_parent
    neighbour = np.zeros(n, dtype=idt)
    neighbour[left_sibling[1:]] = starts[1:]
    leaf_of_word = starts + counts - 1
    is_leaf = np.zeros(n, dtype=bool)
    is_leaf[leaf_of_word] = True
    heads = starts.copy()
    heads[0] = 0
    return Trie(
        letter=letter,
        is_leaf=is_leaf,
        neighbour=neighbour,
        parent=parent.astype(idt),
        depth=depth,
        leaf_of_word=leaf_of_word.astype(idt),
        chain_heads=heads,
    )


def _goto(trie: Trie, nodes: np.ndarray, letters: np.ndarray) -> np.ndarray:
    """Child of each node along the given letter, or 0 when absent.

    Walks the sorted sibling chain, all queries in lockstep.
    """
    res = np.zeros(nodes.size, dtype=np.int64)
    active = np.flatnonzero(~trie.is_leaf[nodes])
    x = nodes[active].astype(np.int64) + 1
    want = letters[active]
    letter = trie.letter
    neighbour = trie.neighbour
    while active.size:
        have = letter[x]
        hit = have == want
        res[active[hit]] = x[hit]
        nxt = neighbour[x].astype(np.int64)
        go = (have < want) & (nxt != 0)
        active = active[go]
        x = nxt[go]
        want = want[go]
    return res


def compute_failure_links(trie: Trie) -> FailureArray:
    """Aho-Corasick failure links, one BFS level at a time.

    For a node reached by letter ``c`` from ``u``, follow the failure chain
    of ``u`` until some state has a ``c``-child; that child is the target,
    otherwise the root.
    """
    n = trie.n_nodes
    fail = np.zeros(n, dtype=trie.parent.dtype)
    order, offsets = trie.levels()
    parent = trie.parent
    letter = trie.letter
    for d in range(2, offsets.size - 1):
        v = order[offsets[d] : offsets[d + 1]]
        if not v.size:
            continue
        c = letter[v]
        cand = fail[parent[v]].astype(np.int64)
        out = np.zeros(v.size, dtype=np.int64)
        pending = np.arange(v.size)
        while pending.size:
            hit = _goto(trie, cand, c)
            found = hit != 0
            out[pending[found]] = hit[found]
            more = ~found & (cand != 0)
            pending = pending[more]
            cand = fail[cand[more]].astype(np.int64)
            c = c[more]
        fail[v] = out
    return FailureArray(fail)
