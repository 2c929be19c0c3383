"""Compressed overlap index (COvI) over a reduced Aho-Corasick automaton.

Build an index from a prefix-free word set, then ask for suffix-prefix
overlaps between its words::

    >>> from covi import CoviIndex, max_ov, correlation
    >>> idx = CoviIndex.from_words(["ATAT", "ATTA", "TAAT", "TTAA", "TTAT"])
    >>> x, y = idx.word_id("ATTA"), idx.word_id("ATAT")
    >>> max_ov(idx, x, y)
    1
    >>> str(correlation(idx, x, y))
    '0001'

``FullAcIndex`` stores the uncompacted automaton and answers the same
queries; ``covi.oracle`` computes them by brute force.
"""

from ._index import (
    BadMagicError,
    ChecksumError,
    IndexFormatError,
    OverlapIndex,
    TruncatedIndexError,
    VersionMismatchError,
    WrongIndexKindError,
    load_index,
)
from .covi_index import CoviIndex
from .fullac import FullAcIndex
from .queries import (
    CorrelationVector,
    QueryScratch,
    all_left_ov,
    all_right_ov,
    correlation,
    global_max_ov,
    max_ov,
    threshold_left_ov,
    threshold_ov,
    threshold_right_ov,
)
from .succinct import BpTree, LoudsTree, RankSelectBitVector
from .trie import PrefixViolationError, WordSet

__version__ = "0.1.0"

__all__ = [
    "BadMagicError",
    "BpTree",
    "ChecksumError",
    "CorrelationVector",
    "CoviIndex",
    "FullAcIndex",
    "IndexFormatError",
    "LoudsTree",
    "OverlapIndex",
    "PrefixViolationError",
    "QueryScratch",
    "RankSelectBitVector",
    "TruncatedIndexError",
    "VersionMismatchError",
    "WordSet",
    "WrongIndexKindError",
    "all_left_ov",
    "all_right_ov",
    "correlation",
    "global_max_ov",
    "load_index",
    "max_ov",
    "threshold_left_ov",
    "threshold_ov",
    "threshold_right_ov",
]
