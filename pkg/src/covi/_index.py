"""Navigation contract shared by both indexes, and the on-disk container.

Container layout (all integers little-endian):

    magic        4 bytes, b"COVI" or b"FLAC"
    version      u32 (= 1)
    id width     u8 (32 or 64)
    p            u64 word count
    m            u64 node count
    topology     bit vector: u64 bit length, then ceil(n/64) u64 words
    depths       m ids                      (COVI only)
    failure      m ids
    L            p ids
    words        u64 blob length, then words each followed by 0x0A
    checksum     u64 CRC-64/XZ of every preceding byte
"""

from __future__ import annotations

import struct
import sys
from array import array
from pathlib import Path

import numpy as np
from fastcrc import crc64

from .succinct import RankSelectBitVector
from .trie import WordSet

__all__ = [
    "FORMAT_VERSION",
    "IndexFormatError",
    "BadMagicError",
    "WrongIndexKindError",
    "VersionMismatchError",
    "TruncatedIndexError",
    "ChecksumError",
    "OverlapIndex",
    "load_index",
]

FORMAT_VERSION = 1
_KINDS = {b"COVI": "covi", b"FLAC": "fullac"}
_HEADER = struct.Struct("<4sIBQQ")


class IndexFormatError(ValueError):
    """Base class for index file load errors."""


class BadMagicError(IndexFormatError):
    pass


class WrongIndexKindError(IndexFormatError):
    pass


class VersionMismatchError(IndexFormatError):
    pass


class TruncatedIndexError(IndexFormatError, EOFError):
    pass


class ChecksumError(IndexFormatError):
    pass


def id_array(values, id_width: int) -> array:
    """Pack integer ids into a typed array of the given width."""
    out = array("I" if id_width == 32 else "Q")
    dt = np.uint32 if id_width == 32 else np.uint64
    out.frombytes(memoryview(np.ascontiguousarray(values, dtype=dt)).cast("B"))
    return out


def _array_bytes(a: array) -> bytes:
    if sys.byteorder == "big":
        a = array(a.typecode, a)
        a.byteswap()
    return a.tobytes()


class OverlapIndex:
    """Common part of the two indexes.

    Subclasses provide ``parent`` and ``depth``; everything the overlap
    queries need is reachable through ``root``, ``parent``, ``depth``,
    ``failure``, ``leaf``, ``word_of_leaf``, ``node_count`` and
    ``word_count``.
    """

    MAGIC: bytes = b""
    #: every node represents an overlap (true for the compacted index only)
    compact = False
    root = 1

    def __init__(self, topology, failure: array, leaf_map: array, words: WordSet, id_width: int):
        self.topology = topology
        self.failure_links = failure
        self.leaf_map = leaf_map
        self.words = words
        self.id_width = id_width
        m = topology.node_count
        lw = np.full(m + 1, -1, dtype=np.int64)
        lw[np.frombuffer(leaf_map, dtype=np.uint32 if id_width == 32 else np.uint64)] = np.arange(len(words))
        self._leaf_word = array("q")
        self._leaf_word.frombytes(memoryview(lw).cast("B"))

    @property
    def node_count(self) -> int:
        return self.topology.node_count

    @property
    def word_count(self) -> int:
        return len(self.words)

    def failure(self, v: int) -> int:
        return self.failure_links[v - 1]

    def leaf(self, word_id: int) -> int:
        if not 0 <= word_id < len(self.words):
            raise IndexError(f"word id {word_id} out of range 0..{len(self.words) - 1}")
        return self.leaf_map[word_id]

    def word_of_leaf(self, v: int) -> int:
        """Word id whose leaf is ``v``, or -1."""
        return self._leaf_word[v]

    def word_id(self, word: bytes | str | int) -> int:
        """Resolve a word given as an id or as the word itself."""
        if isinstance(word, int):
            if not 0 <= word < len(self.words):
                raise IndexError(f"word id {word} out of range 0..{len(self.words) - 1}")
            return word
        return self.words.index(word)

    def parent(self, v: int) -> int:
        raise NotImplementedError

    def depth(self, v: int) -> int:
        raise NotImplementedError

    def string(self, v: int) -> bytes:
        """Spelled string of node ``v``, recovered from a leaf below it."""
        d = self.depth(v)
        if d == 0:
            return b""
        u = v
        while self.word_of_leaf(u) < 0:
            u = self._some_child(u)
        return self.words[self.word_of_leaf(u)][:d]

    def _some_child(self, v: int) -> int:
        raise NotImplementedError

    def _sections(self) -> list[bytes]:
        return []

    # -- persistence ----------------------------------------------------------

    def to_bytes(self) -> bytes:
        m = self.node_count
        head = _HEADER.pack(self.MAGIC, FORMAT_VERSION, self.id_width, len(self.words), m)
        blob = self.words.to_bytes()
        parts = [head, self.topology.bits.to_bytes()]
        parts.extend(self._sections())
        parts.append(_array_bytes(self.failure_links))
        parts.append(_array_bytes(self.leaf_map))
        parts.append(struct.pack("<Q", len(blob)))
        parts.append(blob)
        body = b"".join(parts)
        return body + struct.pack("<Q", crc64.xz(body))

    def save(self, path: str | Path) -> int:
        """Write the index to ``path``; returns the file size in bytes."""
        data = self.to_bytes()
        Path(path).write_bytes(data)
        return len(data)

    @classmethod
    def from_bytes(cls, data: bytes) -> "OverlapIndex":
        idx = _parse(data)
        if cls is not OverlapIndex and not isinstance(idx, cls):
            raise WrongIndexKindError(
                f"wrong index kind: file holds a {idx.MAGIC.decode()} index, expected {cls.MAGIC.decode()}"
            )
        return idx

    @classmethod
    def load(cls, path: str | Path) -> "OverlapIndex":
        data = Path(path).read_bytes()
        if cls is not OverlapIndex and data[:4] in _KINDS and data[:4] != cls.MAGIC:
            raise WrongIndexKindError(
                f"wrong index kind: file holds a {data[:4].decode()} index, expected {cls.MAGIC.decode()}"
            )
        return cls.from_bytes(data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OverlapIndex):
            return NotImplemented
        return (
            type(self) is type(other)
            and self.id_width == other.id_width
            and self.topology == other.topology
            and self._sections() == other._sections()
            and self.failure_links == other.failure_links
            and self.leaf_map == other.leaf_map
            and self.words == other.words
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"{type(self).__name__}(nodes={self.node_count}, words={self.word_count})"


def load_index(path: str | Path) -> OverlapIndex:
    """Load either kind of index, dispatching on the file magic."""
    return OverlapIndex.load(path)


class _Reader:
    def __init__(self, data: bytes, offset: int):
        self.data = data
        self.offset = offset

    def take(self, nbytes: int, what: str) -> memoryview:
        end = self.offset + nbytes
        if end > len(self.data):
            raise TruncatedIndexError(f"unexpected end of file while reading {what}")
        view = memoryview(self.data)[self.offset : end]
        self.offset = end
        return view

    def ids(self, count: int, id_width: int, what: str) -> array:
        raw = self.take(count * id_width // 8, what)
        out = array("I" if id_width == 32 else "Q")
        out.frombytes(raw)
        if sys.byteorder == "big":
            out.byteswap()
        return out


def _parse(data: bytes) -> OverlapIndex:
    from .covi_index import CoviIndex
    from .fullac import FullAcIndex

    if len(data) < 4:
        raise TruncatedIndexError("unexpected end of file while reading magic")
    magic = bytes(data[:4])
    if magic not in _KINDS:
        raise BadMagicError(f"bad magic {magic!r}: not an overlap index file")
    if len(data) < _HEADER.size:
        raise TruncatedIndexError("unexpected end of file while reading header")
    _, version, id_width, p, m = _HEADER.unpack_from(data, 0)
    if version != FORMAT_VERSION:
        raise VersionMismatchError(f"format version {version} is not supported (expected {FORMAT_VERSION})")
    if id_width not in (32, 64):
        raise IndexFormatError(f"invalid node id width {id_width}")
    try:
        bits, offset = RankSelectBitVector.from_buffer(data, _HEADER.size)
    except EOFError as exc:
        raise TruncatedIndexError(str(exc)) from None
    rd = _Reader(data, offset)
    depths = rd.ids(m, id_width, "depths") if magic == b"COVI" else None
    failure = rd.ids(m, id_width, "failure links")
    leaf_map = rd.ids(p, id_width, "word map")
    (blob_len,) = struct.unpack("<Q", rd.take(8, "word blob length"))
    blob = bytes(rd.take(blob_len, "word blob"))
    (stored,) = struct.unpack("<Q", rd.take(8, "checksum"))
    if rd.offset != len(data):
        raise IndexFormatError("trailing bytes after checksum")
    if crc64.xz(data[: rd.offset - 8]) != stored:
        raise ChecksumError("checksum mismatch: index file is corrupted")
    words = WordSet.parse(blob)
    if len(words) != p:
        raise IndexFormatError(f"header says {p} words, blob holds {len(words)}")
    if magic == b"COVI":
        return CoviIndex._from_parts(bits, depths, failure, leaf_map, words, id_width)
    return FullAcIndex._from_parts(bits, failure, leaf_map, words, id_width)
