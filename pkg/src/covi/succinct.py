"""Rank/select bit vectors and the two succinct tree encodings (LOUDS, BP).

Positions and node identifiers are 1-based throughout; 0 is kept free as a
null id. Bits are packed LSB-first into 64-bit words.

LOUDS layout: nodes in level order, each written as ``deg`` zeros followed
by a single one, with no super-root block. BP layout: preorder, ``0`` for an
opening parenthesis and ``1`` for a closing one.
"""

from __future__ import annotations

import struct
import sys
from array import array
from bisect import bisect_left
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "NoSuchOccurrenceError",
    "RankSelectBitVector",
    "LoudsTree",
    "BpTree",
]

_M64 = (1 << 64) - 1
SUPERBLOCK_BITS = 256
SELECT_SAMPLE = 1024
_SAMPLE_SHIFT = 10
_WORDS_PER_SB = SUPERBLOCK_BITS // 64


class NoSuchOccurrenceError(IndexError):
    """Raised by select when the requested occurrence does not exist."""


def _build_select_tables():
    vals = np.arange(1 << 16, dtype=np.uint32)
    bits = ((vals[:, None] >> np.arange(16, dtype=np.uint32)) & 1).astype(np.uint8)
    cum = np.cumsum(bits, axis=1)
    sel = np.zeros((1 << 16, 16), dtype=np.uint8)
    for r in range(1, 17):
        sel[:, r - 1] = np.argmax(cum >= r, axis=1)
    return bytes(bits.sum(axis=1).astype(np.uint8)), sel.tobytes()


_POP16, _SEL16 = _build_select_tables()


def _select_in_word(x: int, r: int) -> int:
    # 0-based offset of the r-th set bit of x (1 <= r <= popcount(x))
    chunk = x & 0xFFFF
    c = _POP16[chunk]
    if r <= c:
        return _SEL16[(chunk << 4) | (r - 1)]
    r -= c
    x >>= 16
    pos = 16
    while True:
        chunk = x & 0xFFFF
        c = _POP16[chunk]
        if r <= c:
            return pos + _SEL16[(chunk << 4) | (r - 1)]
        r -= c
        x >>= 16
        pos += 16


def _as_little_u64(arr: np.ndarray) -> array:
    out = array("Q")
    out.frombytes(np.ascontiguousarray(arr, dtype="<u8").tobytes())
    if sys.byteorder == "big":
        out.byteswap()
    return out


class RankSelectBitVector:
    """Static bit vector with rank and select.

    Rank uses cumulative counts every 256 bits; select uses a position sample
    every 1024 occurrences of each symbol followed by a short search over the
    superblocks. The directories cost about 16% of the raw bits.
    """

    def __init__(self, bits: str | Iterable[int] | np.ndarray):
        if isinstance(bits, str):
            arr = np.frombuffer(bits.encode("ascii"), dtype=np.uint8) - ord("0")
        else:
            arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
        arr = arr.astype(np.uint8, copy=False)
        if arr.size and arr.max() > 1:
            raise ValueError("bits must be 0 or 1")
        self._init_from_words(_pack(arr), int(arr.size))

    @classmethod
    def from_words(cls, words: np.ndarray, n: int) -> "RankSelectBitVector":
        """Wrap ``ceil(n/64)`` LSB-first 64-bit words holding ``n`` bits."""
        words = np.asarray(words, dtype=np.uint64)
        nwords = (n + 63) // 64
        if words.size != nwords:
            raise ValueError(f"expected {nwords} words for {n} bits, got {words.size}")
        words = words.copy()
        if n & 63:
            words[-1] &= np.uint64((1 << (n & 63)) - 1)
        self = cls.__new__(cls)
        self._init_from_words(words, n)
        return self

    @classmethod
    def from_ones(cls, n: int, positions: np.ndarray) -> "RankSelectBitVector":
        """Bit vector of length ``n`` with ones at the given 0-based offsets."""
        bits = np.zeros(n, dtype=np.uint8)
        bits[np.asarray(positions, dtype=np.int64)] = 1
        self = cls.__new__(cls)
        self._init_from_words(_pack(bits), n)
        return self

    def _init_from_words(self, words: np.ndarray, n: int) -> None:
        self._n = n
        nwords = words.size
        nsb = max(1, -(-nwords // _WORDS_PER_SB))
        padded = np.zeros(nsb * _WORDS_PER_SB, dtype=np.uint64)
        padded[:nwords] = words
        sb_counts = np.bitwise_count(padded).reshape(nsb, _WORDS_PER_SB).sum(axis=1)
        sup = np.zeros(nsb + 1, dtype=np.int64)
        np.cumsum(sb_counts, out=sup[1:])
        ones = int(sup[-1])
        self._ones = ones
        self._nsb = nsb
        code = "I" if n < (1 << 32) else "Q"
        self._sup = array(code, sup.tolist())
        # zeros before each superblock; the sentinel entry counts real zeros only
        sb_start = np.arange(nsb + 1, dtype=np.int64) * SUPERBLOCK_BITS
        zsup = sb_start - sup
        zsup[-1] = n - ones
        # one trailing sentinel per sample array bounds the last search range
        self._samp1 = array(code, _samples(sup, ones).tolist() + [nsb - 1])
        self._samp0 = array(code, _samples(zsup, n - ones).tolist() + [nsb - 1])
        self._zeros = n - ones
        self._words = _as_little_u64(words)
        self._np_words = np.asarray(words, dtype=np.uint64)

    # -- basic access -----------------------------------------------------

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self._n:
            raise IndexError(f"position {i} out of range 1..{self._n}")
        i -= 1
        return (self._words[i >> 6] >> (i & 63)) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RankSelectBitVector):
            return NotImplemented
        return self._n == other._n and self._words == other._words

    def __repr__(self) -> str:
        body = self.to01() if self._n <= 64 else f"{self._n} bits"
        return f"RankSelectBitVector({body!r})"

    def count(self, a: int = 1) -> int:
        return self._ones if a else self._n - self._ones

    def to01(self) -> str:
        return "".join(map(str, self.to_numpy().tolist()))

    def to_numpy(self) -> np.ndarray:
        """Unpacked bits as a uint8 array (0-based)."""
        raw = self._np_words.astype("<u8").view(np.uint8)
        return np.unpackbits(raw, bitorder="little")[: self._n]

    @property
    def words(self) -> np.ndarray:
        return self._np_words

    @property
    def aux_bits(self) -> int:
        """Bits used by the rank/select directories."""
        return 8 * (
            self._sup.itemsize * len(self._sup)
            + self._samp1.itemsize * len(self._samp1)
            + self._samp0.itemsize * len(self._samp0)
        )

    # -- rank ---------------------------------------------------------------

    def rank1(self, i: int) -> int:
        """Number of ones in positions 1..i."""
        if not 0 <= i <= self._n:
            raise IndexError(f"rank position {i} out of range 0..{self._n}")
        w = i >> 6
        s = w >> 2
        r = self._sup[s]
        words = self._words
        b = s << 2
        while b < w:
            r += words[b].bit_count()
            b += 1
        rem = i & 63
        if rem:
            r += (words[w] & ((1 << rem) - 1)).bit_count()
        return r

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def rank(self, a: int, i: int) -> int:
        return self.rank1(i) if a else i - self.rank1(i)

    # -- select -------------------------------------------------------------

    def select1(self, j: int) -> int:
        """Position of the j-th one."""
        if not 0 < j <= self._ones:
            raise NoSuchOccurrenceError(f"no {j}-th occurrence of 1 (have {self._ones})")
        samp = self._samp1
        t = (j - 1) >> _SAMPLE_SHIFT
        sup = self._sup
        s = bisect_left(sup, j, samp[t] + 1, samp[t + 1] + 1) - 1
        r = j - sup[s]
        words = self._words
        w = s << 2
        x = words[w]
        c = x.bit_count()
        while r > c:
            r -= c
            w += 1
            x = words[w]
            c = x.bit_count()
        return (w << 6) + _select_in_word(x, r) + 1

    def select0(self, j: int) -> int:
        """Position of the j-th zero."""
        if not 0 < j <= self._zeros:
            raise NoSuchOccurrenceError(f"no {j}-th occurrence of 0 (have {self._zeros})")
        samp = self._samp0
        t = (j - 1) >> _SAMPLE_SHIFT
        lo = samp[t]
        hi = samp[t + 1]
        sup = self._sup
        # zeros before superblock s are 256*s - sup[s]
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if (mid << 8) - sup[mid] < j:
                lo = mid
            else:
                hi = mid - 1
        r = j - (lo << 8) + sup[lo]
        words = self._words
        w = lo << 2
        x = ~words[w] & _M64
        c = x.bit_count()
        while r > c:
            r -= c
            w += 1
            x = ~words[w] & _M64
            c = x.bit_count()
        return (w << 6) + _select_in_word(x, r) + 1

    def select(self, a: int, j: int) -> int:
        return self.select1(j) if a else self.select0(j)

    # -- serialization ------------------------------------------------------

    def to_bytes(self) -> bytes:
        return struct.pack("<Q", self._n) + self._np_words.astype("<u8").tobytes()

    @classmethod
    def from_buffer(cls, buf, offset: int = 0) -> tuple["RankSelectBitVector", int]:
        """Parse a serialized bit vector; returns it and the offset past it."""
        if offset + 8 > len(buf):
            raise EOFError("unexpected end of file in bit vector header")
        (n,) = struct.unpack_from("<Q", buf, offset)
        offset += 8
        nbytes = 8 * ((n + 63) // 64)
        if offset + nbytes > len(buf):
            raise EOFError("unexpected end of file in bit vector payload")
        words = np.frombuffer(buf, dtype="<u8", count=nbytes // 8, offset=offset)
        return cls.from_words(words.astype(np.uint64), n), offset + nbytes


def _pack(bits: np.ndarray) -> np.ndarray:
    packed = np.packbits(bits, bitorder="little")
    pad = (-packed.size) % 8
    if pad:
        packed = np.concatenate([packed, np.zeros(pad, dtype=np.uint8)])
    return packed.view("<u8").astype(np.uint64)


def _samples(cum: np.ndarray, total: int) -> np.ndarray:
    # superblock holding occurrence t*SELECT_SAMPLE + 1, for each t
    targets = np.arange(0, total, SELECT_SAMPLE, dtype=np.int64) + 1
    return np.searchsorted(cum, targets, side="left") - 1


# ---------------------------------------------------------------------------
# LOUDS


class LoudsTree:
    """Level-order unary degree sequence of an ordered tree.

    Node ``v`` (level-order rank, root = 1) is written as ``deg(v)`` zeros
    then a one, so the encoding has exactly ``2m - 1`` bits.
    """

    def __init__(self, bits: RankSelectBitVector):
        m = bits.count(1)
        if m == 0 or bits.count(0) != m - 1:
            raise ValueError("not a LOUDS sequence: need m ones and m-1 zeros")
        self.bits = bits
        self.node_count = m
        self._check_shape()

    def _check_shape(self) -> None:
        raw = self.bits.to_numpy()
        ones = np.flatnonzero(raw)
        degrees = np.diff(np.concatenate([[-1], ones])) - 1
        _check_level_degrees(degrees)

    @classmethod
    def from_degrees(cls, degrees: Sequence[int] | np.ndarray) -> "LoudsTree":
        """Encode a tree given the child counts of its nodes in level order."""
        deg = np.asarray(degrees, dtype=np.int64)
        _check_level_degrees(deg)
        ones = np.cumsum(deg + 1) - 1
        self = cls.__new__(cls)
        self.bits = RankSelectBitVector.from_ones(int(2 * deg.size - 1), ones)
        self.node_count = int(deg.size)
        return self

    @classmethod
    def encode(cls, children: Sequence[Sequence[int]]) -> "LoudsTree":
        """Encode per-node child lists given in level order.

        ``children[k]`` lists the (1-based, level-order) ids of the children
        of node ``k + 1``. The lists must number the nodes in level order.
        """
        flat = [c for kids in children for c in kids]
        if flat != list(range(2, len(children) + 1)):
            raise ValueError("child lists do not describe a tree numbered in level order")
        return cls.from_degrees([len(kids) for kids in children])

    def __len__(self) -> int:
        return len(self.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoudsTree):
            return NotImplemented
        return self.bits == other.bits

    def parent(self, v: int) -> int:
        if v == 1:
            raise ValueError("root has no parent")
        if not 1 < v <= self.node_count:
            raise IndexError(f"node {v} out of range 1..{self.node_count}")
        # rank1(select0(v-1)) + 1, using that select0 lands on a zero
        return self.bits.select0(v - 1) - v + 2

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.node_count:
            raise IndexError(f"node {v} out of range 1..{self.node_count}")
        start = self.bits.select1(v - 1) if v > 1 else 0
        return self.bits.select1(v) - start - 1

    def child(self, v: int, j: int) -> int:
        deg = self.degree(v)
        if not 1 <= j <= deg:
            raise IndexError(f"no such child: node {v} has {deg} children, asked for {j}")
        start = self.bits.select1(v - 1) if v > 1 else 0
        return start - v + j + 2

    def children(self, v: int) -> range:
        deg = self.degree(v)
        if not deg:
            return range(0)
        first = self.child(v, 1)
        return range(first, first + deg)

    def is_leaf(self, v: int) -> bool:
        return self.degree(v) == 0


def _check_level_degrees(deg: np.ndarray) -> None:
    m = deg.size
    if m == 0:
        raise ValueError("empty tree")
    if (deg < 0).any() or int(deg.sum()) != m - 1:
        raise ValueError("degrees do not sum to node_count - 1")
    # node k+1 must already be someone's child after the first k blocks
    if m > 1 and (np.cumsum(deg)[:-1] < np.arange(1, m)).any():
        raise ValueError("degree sequence leaves orphan nodes")


# ---------------------------------------------------------------------------
# BP


def _byte_tables():
    tot = []
    bmin = []
    for b in range(256):
        rel = 0
        lo = 1 << 30
        for t in range(7, -1, -1):
            bit = (b >> t) & 1
            rel -= 1 - 2 * bit
            lo = min(lo, rel)
        tot.append(-rel)
        bmin.append(lo)
    return tot, bmin


_TOT8, _BMIN8 = _byte_tables()
_BLOCK_BITS = 512


class BpTree:
    """Balanced-parentheses encoding of an ordered tree in preorder.

    Depth is read off the excess of the node's opening parenthesis. Parent
    queries use a small min-excess directory (per word and per 512-bit
    block, the latter in a segment tree) to run a backward search.
    """

    def __init__(self, bits: RankSelectBitVector):
        n = len(bits)
        if n == 0 or n % 2 or bits.count(0) != n // 2:
            raise ValueError("not a BP sequence: need equal numbers of 0s and 1s")
        self.bits = bits
        self.node_count = n // 2
        if not _balanced(bits):
            raise ValueError("not a BP sequence: parentheses are unbalanced")
        self._build_directory()

    @classmethod
    def from_depths(cls, depths: Sequence[int] | np.ndarray) -> "BpTree":
        """Encode a tree given the depth of each node in preorder."""
        d = np.asarray(depths, dtype=np.int64)
        if d.size == 0 or d[0] != 0 or (d[1:] < 1).any() or (np.diff(d) > 1).any():
            raise ValueError("not a preorder depth sequence")
        j = np.arange(d.size, dtype=np.int64)
        opens = 2 * j - d
        bits = np.ones(2 * d.size, dtype=np.uint8)
        bits[opens] = 0
        self = cls.__new__(cls)
        self.bits = RankSelectBitVector.from_words(_pack(bits), bits.size)
        self.node_count = int(d.size)
        self._build_directory()
        return self

    @classmethod
    def encode(cls, children: Sequence[Sequence[int]]) -> "BpTree":
        """Encode per-node child lists whose ids are preorder ranks (root = 1)."""
        m = len(children)
        depth = [0] * m
        expect = 2
        stack = [(1, iter(children[0]) if m else iter(()))]
        while stack:
            v, it = stack[-1]
            c = next(it, None)
            if c is None:
                stack.pop()
                continue
            if c != expect or c > m:
                raise ValueError("child lists are not numbered in preorder")
            expect += 1
            depth[c - 1] = depth[v - 1] + 1
            stack.append((c, iter(children[c - 1])))
        if expect != m + 1:
            raise ValueError("child lists leave orphan nodes")
        return cls.from_depths(depth)

    def _build_directory(self) -> None:
        words = self.bits.words
        nwords = words.size
        by = words.astype("<u8").view(np.uint8).reshape(nwords, 8)
        tot8 = np.asarray(_TOT8, dtype=np.int64)[by]
        bmin8 = np.asarray(_BMIN8, dtype=np.int64)[by]
        # excess at each byte end relative to the word end
        after = np.cumsum(tot8[:, ::-1], axis=1)[:, ::-1] - tot8
        wmin = (bmin8 - after).min(axis=1)
        wtot = tot8.sum(axis=1)
        self._wmin = array("b", wmin.tolist())
        self._wtot = array("b", wtot.tolist())
        word_end = np.cumsum(wtot)
        emin = word_end + wmin
        per_block = _BLOCK_BITS // 64
        nblocks = -(-nwords // per_block)
        padded = np.full(nblocks * per_block, np.iinfo(np.int64).max // 2, dtype=np.int64)
        padded[:nwords] = emin
        block_min = padded.reshape(nblocks, per_block).min(axis=1)
        size = 1
        while size < nblocks:
            size *= 2
        tree = np.full(2 * size, np.iinfo(np.int64).max // 2, dtype=np.int64)
        tree[size : size + nblocks] = block_min
        k = size
        while k > 1:
            half = k // 2
            tree[half:k] = np.minimum(tree[k : 2 * k : 2], tree[k + 1 : 2 * k : 2])
            k = half
        self._tree = array("q", tree.tolist())
        self._size = size

    def __len__(self) -> int:
        return len(self.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BpTree):
            return NotImplemented
        return self.bits == other.bits

    def open_position(self, v: int) -> int:
        if not 1 <= v <= self.node_count:
            raise IndexError(f"node {v} out of range 1..{self.node_count}")
        return self.bits.select0(v)

    def depth(self, v: int) -> int:
        if not 1 <= v <= self.node_count:
            raise IndexError(f"node {v} out of range 1..{self.node_count}")
        return 2 * v - self.bits.select0(v) - 1

    def parent(self, v: int) -> int:
        if v == 1:
            raise ValueError("root has no parent")
        if not 1 < v <= self.node_count:
            raise IndexError(f"node {v} out of range 1..{self.node_count}")
        bits = self.bits
        p = bits.select0(v)
        # a first child's opening follows its parent's
        if not (bits._words[(p - 2) >> 6] >> ((p - 2) & 63)) & 1:
            return v - 1
        e = 2 * v - p
        j = self._search_back(p - 1, e - 1, e - 2)
        # bit j+1 opens the parent
        return j - bits.rank1(j) + 1

    def is_leaf(self, v: int) -> bool:
        p = self.open_position(v)
        return self.bits[p + 1] == 1

    def _search_back(self, i: int, e: int, target: int) -> int:
        """Largest j <= i with excess(j) <= target, given excess(i) == e."""
        if e <= target:
            return i
        words = self.bits._words
        start = ((i - 1) >> 3) << 3
        while i > start:
            bit = (words[(i - 1) >> 6] >> ((i - 1) & 63)) & 1
            e += 2 * bit - 1
            i -= 1
            if e <= target:
                return i
        while i & 63:
            b = (words[(i - 1) >> 6] >> ((i - 8) & 63)) & 0xFF
            if e + _BMIN8[b] <= target:
                return _scan_byte(b, i, e, target)
            e -= _TOT8[b]
            i -= 8
        wmin = self._wmin
        wtot = self._wtot
        while i & (_BLOCK_BITS - 1):
            w = (i >> 6) - 1
            if e + wmin[w] <= target:
                return _scan_word(words[w], i, e, target)
            e -= wtot[w]
            i -= 64
        if i == 0:
            return -1
        b = self._find_block(i >> 9, target)
        if b < 0:
            return -1
        i = (b + 1) << 9
        e = i - 2 * self.bits.rank1(i)
        while True:
            w = (i >> 6) - 1
            if e + wmin[w] <= target:
                return _scan_word(words[w], i, e, target)
            e -= wtot[w]
            i -= 64

    def _find_block(self, b: int, target: int) -> int:
        tree = self._tree
        size = self._size
        x = b + size
        while x > 1:
            if x & 1 and tree[x - 1] <= target:
                x -= 1
                while x < size:
                    x = 2 * x + 1 if tree[2 * x + 1] <= target else 2 * x
                return x - size
            x >>= 1
        return -1


def _balanced(bits: RankSelectBitVector, chunk: int = 1 << 22) -> bool:
    # excess must stay >= 1 strictly inside and end at 0 (a single root)
    raw = bits.to_numpy()
    base = 0
    n = raw.size
    for lo in range(0, n, chunk):
        exc = base + np.cumsum(1 - 2 * raw[lo : lo + chunk].astype(np.int32))
        inner = exc if lo + chunk < n else exc[:-1]
        if inner.size and inner.min() < 1:
            return False
        base = int(exc[-1])
    return base == 0


def _scan_word(word: int, i: int, e: int, target: int) -> int:
    # i is the position just past this word; a hit is guaranteed inside
    for shift in range(56, -8, -8):
        b = (word >> shift) & 0xFF
        if e + _BMIN8[b] <= target:
            return _scan_byte(b, i, e, target)
        e -= _TOT8[b]
        i -= 8
    raise AssertionError("min-excess directory is inconsistent")


def _scan_byte(b: int, i: int, e: int, target: int) -> int:
    for t in range(7, -1, -1):
        e += 2 * ((b >> t) & 1) - 1
        i -= 1
        if e <= target:
            return i
    raise AssertionError("min-excess directory is inconsistent")
