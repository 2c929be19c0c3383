"""The compressed overlap index.

Only the trie nodes that stand for overlaps are kept: the root, the word
leaves, and every node on a failure chain that starts at a leaf. The kept
nodes form a tree under "nearest kept ancestor", stored as LOUDS together
with failure links and string depths in level order.
"""

from __future__ import annotations

import time
from array import array

import numpy as np

from ._index import OverlapIndex, _array_bytes, id_array
from .succinct import LoudsTree, RankSelectBitVector
from .trie import FailureArray, Trie, WordSet, build_trie, compute_failure_links

__all__ = ["CoviIndex", "mark_overlap_nodes", "build_covi"]


def mark_overlap_nodes(trie: Trie, fail: FailureArray) -> np.ndarray:
    """Mark the root, the leaves, and everything on their failure chains.

    Each chain is walked only until it meets a node that is already marked,
    so the total work is proportional to the number of marked nodes.
    """
    marked = np.zeros(trie.n_nodes, dtype=bool)
    marked[0] = True
    f = fail.fail
    frontier = np.asarray(trie.leaf_of_word, dtype=np.int64)
    while frontier.size:
        frontier = np.unique(frontier[~marked[frontier]])
        marked[frontier] = True
        frontier = f[frontier].astype(np.int64)
    return marked


def build_covi(trie: Trie, fail: FailureArray, marked: np.ndarray, words: WordSet,
               id_width: int = 32) -> "CoviIndex":
    """Compact the marked nodes into a LOUDS tree and assemble the index."""
    parent = trie.parent
    heads = trie.chain_heads
    kept = np.flatnonzero(marked)
    m = kept.size
    # The depth-first layout is a concatenation of chains in which every node
    # is the child of its predecessor. Inside a chain the nearest marked
    # ancestor and the count of marked ancestors follow from ranks among the
    # kept ids; across chains they carry over from the parent of each head.
    ph = parent[heads].astype(np.int64)
    ph_seg = np.searchsorted(heads, ph, side="right") - 1
    ph_seg[0] = 0
    ph_head = heads[ph_seg]
    r = np.searchsorted(kept, ph, side="right")
    ph_count = (r - np.searchsorted(kept, ph_head)).tolist()
    # nearest marked ancestor of a head, as a rank among the kept ids
    ph_nma = np.where(kept[r - 1] >= ph_head, r - 1, -1).tolist()
    ph_seg = ph_seg.tolist()
    seg_count = [0] * heads.size  # marked ancestors of the head, root included
    seg_nma = [0] * heads.size
    for s in range(1, heads.size):
        t = ph_seg[s]
        seg_count[s] = ph_count[s] + seg_count[t]
        seg_nma[s] = ph_nma[s] if ph_nma[s] >= 0 else seg_nma[t]
    # kept ids and heads are both sorted, so each chain owns a run of ranks
    head_rank = np.searchsorted(kept, heads)
    per_seg = np.diff(np.append(head_rank, m))
    rank = np.arange(m, dtype=np.int64)
    cdepth = rank + np.repeat(np.asarray(seg_count, dtype=np.int64) - head_rank, per_seg)
    nma = rank - 1
    first = head_rank[per_seg > 0]
    nma[first] = np.asarray(seg_nma, dtype=np.int64)[per_seg > 0]
    del per_seg, first
    # level order of an ordered tree restricted to one level is its preorder,
    # so a stable sort of the depth-first ids by compacted depth gives BFS order
    level = np.argsort(cdepth.astype(np.uint16) if cdepth.max() < 65536 else cdepth,
                       kind="stable")
    del cdepth
    degrees = np.bincount(nma[1:], minlength=m)[level]
    louds = LoudsTree.from_degrees(degrees)
    dt = np.uint32 if id_width == 32 else np.uint64
    covi_of_rank = np.empty(m, dtype=dt)
    covi_of_rank[level] = np.arange(1, m + 1, dtype=dt)
    # trie-sized arrays are only touched through the sorted kept ids
    covi_of_node = np.zeros(trie.n_nodes, dtype=dt)
    covi_of_node[kept] = covi_of_rank
    failure = covi_of_node[fail.fail[kept]][level]
    failure[0] = 0
    depths = trie.depth[kept][level]
    leaf_map = covi_of_node[trie.leaf_of_word]
    return CoviIndex(
        louds,
        id_array(depths, id_width),
        id_array(failure, id_width),
        id_array(leaf_map, id_width),
        words,
        id_width,
    )


class CoviIndex(OverlapIndex):
    """Overlap index over the compacted automaton; node ids are level-order ranks."""

    MAGIC = b"COVI"
    compact = True

    def __init__(self, louds: LoudsTree, depths: array, failure: array, leaf_map: array,
                 words: WordSet, id_width: int = 32):
        super().__init__(louds, failure, leaf_map, words, id_width)
        self.louds = louds
        self.depths = depths
        self._select0 = louds.bits.select0

    @classmethod
    def from_words(cls, words, id_width: int = 32, timings: dict | None = None) -> "CoviIndex":
        """Run the four construction steps; per-step seconds go into ``timings``."""
        if not isinstance(words, WordSet):
            words = WordSet(words)
        clock = time.perf_counter
        t0 = clock()
        trie = build_trie(words, id_width)
        t1 = clock()
        fail = compute_failure_links(trie)
        t2 = clock()
        marked = mark_overlap_nodes(trie, fail)
        t3 = clock()
        idx = build_covi(trie, fail, marked, words, id_width)
        t4 = clock()
        if timings is not None:
            timings.update(trie=t1 - t0, failure=t2 - t1, mark=t3 - t2, compact=t4 - t3,
                           trie_nodes=trie.n_nodes)
        return idx

    @classmethod
    def _from_parts(cls, bits: RankSelectBitVector, depths, failure, leaf_map, words, id_width):
        return cls(LoudsTree(bits), depths, failure, leaf_map, words, id_width)

    def parent(self, v: int) -> int:
        if v == 1:
            raise ValueError("root has no parent")
        # rank1(select0(v-1)) + 1
        return self._select0(v - 1) - v + 2

    def depth(self, v: int) -> int:
        return self.depths[v - 1]

    def children(self, v: int) -> range:
        return self.louds.children(v)

    def _some_child(self, v: int) -> int:
        return self.louds.child(v, 1)

    def _sections(self) -> list[bytes]:
        return [_array_bytes(self.depths)]
