"""Baseline index: the whole Aho-Corasick trie in balanced parentheses.

Stores only the trie topology, the failure link of every node, and the
word-to-leaf map. Depth comes from the parenthesis excess, so no depth
array is kept. Node ids are preorder ranks (root = 1).
"""

from __future__ import annotations

import time

import numpy as np

from ._index import OverlapIndex, id_array
from .succinct import BpTree, RankSelectBitVector
from .trie import FailureArray, Trie, WordSet, build_trie, compute_failure_links

__all__ = ["FullAcIndex", "build_fullac"]


def build_fullac(trie: Trie, fail: FailureArray, words: WordSet, id_width: int = 32) -> "FullAcIndex":
    # the trie is already in preorder, so ids shift by one and BP follows from depths
    bp = BpTree.from_depths(trie.depth)
    failure = fail.fail.astype(np.int64) + 1
    failure[0] = 0
    leaf_map = trie.leaf_of_word.astype(np.int64) + 1
    return FullAcIndex(bp, id_array(failure, id_width), id_array(leaf_map, id_width), words, id_width)


class FullAcIndex(OverlapIndex):
    MAGIC = b"FLAC"

    def __init__(self, bp: BpTree, failure, leaf_map, words: WordSet, id_width: int = 32):
        super().__init__(bp, failure, leaf_map, words, id_width)
        self.bp = bp
        self._select0 = bp.bits.select0

    @classmethod
    def from_words(cls, words, id_width: int = 32, timings: dict | None = None) -> "FullAcIndex":
        if not isinstance(words, WordSet):
            words = WordSet(words)
        clock = time.perf_counter
        t0 = clock()
        trie = build_trie(words, id_width)
        t1 = clock()
        fail = compute_failure_links(trie)
        t2 = clock()
        idx = build_fullac(trie, fail, words, id_width)
        t3 = clock()
        if timings is not None:
            timings.update(trie=t1 - t0, failure=t2 - t1, encode=t3 - t2, trie_nodes=trie.n_nodes)
        return idx

    @classmethod
    def _from_parts(cls, bits: RankSelectBitVector, failure, leaf_map, words, id_width):
        return cls(BpTree(bits), failure, leaf_map, words, id_width)

    def parent(self, v: int) -> int:
        return self.bp.parent(v)

    def depth(self, v: int) -> int:
        return 2 * v - self._select0(v) - 1

    def _some_child(self, v: int) -> int:
        return v + 1
