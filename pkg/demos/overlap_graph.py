"""Overlap graph of random reads, and a greedy superstring from it.

One ``all_right_ov`` call per read gives a full row of the overlap graph.
Merging reads along the heaviest arcs first rebuilds a superstring of the
reads that is much shorter than their concatenation.

Run with ``python demos/overlap_graph.py``.
"""

import numpy as np

from covi import CoviIndex, QueryScratch, WordSet, all_right_ov
from covi.datasets import DNA, random_text

genome = random_text(DNA, 400, seed=3)
rng = np.random.default_rng(3)
starts = sorted(set(rng.integers(0, len(genome) - 40, 60).tolist()))
reads = WordSet(genome[s : s + 40] for s in starts)
idx = CoviIndex.from_words(reads)
print(f"{len(reads)} reads of length 40, COvI nodes: {idx.node_count}")

scratch = QueryScratch.for_index(idx)
graph = np.stack([all_right_ov(idx, x, scratch) for x in range(len(reads))])
np.fill_diagonal(graph, 0)
print("arcs with overlap >= 20:", int((graph >= 20).sum()))

# greedy: take arcs by weight while each read has at most one successor
# and one predecessor and no cycle closes
succ = {}
pred = {}
head = list(range(len(reads)))


def find(v):
    while head[v] != v:
        head[v] = head[head[v]]
        v = head[v]
    return v


order = np.dstack(np.unravel_index(np.argsort(-graph, axis=None), graph.shape))[0]
for x, z in order.tolist():
    if graph[x, z] == 0:
        break
    if x in succ or z in pred or find(x) == find(z):
        continue
    succ[x] = z
    pred[z] = x
    head[find(x)] = find(z)

pieces = []
for start in (v for v in range(len(reads)) if v not in pred):
    s = reads[start]
    v = start
    while v in succ:
        z = succ[v]
        s += reads[z][graph[v, z]:]
        v = z
    pieces.append(s)
superstring = b"".join(pieces)
assert all(r in superstring for r in reads)
print(f"superstring length {len(superstring)} from {len(pieces)} contig(s); "
      f"concatenation {sum(map(len, reads))}; genome {len(genome)}")
