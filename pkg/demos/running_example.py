"""Walk through the five-word example: trie, failure links, marking, compaction, queries.

Run with ``python demos/running_example.py``.
"""

from covi import CoviIndex, FullAcIndex, all_left_ov, all_right_ov, correlation, global_max_ov, max_ov
from covi.covi_index import mark_overlap_nodes
from covi.trie import build_trie, compute_failure_links

words = ["ATAT", "ATTA", "TAAT", "TTAA", "TTAT"]

# steps 1 and 2: the trie in depth-first layout, then failure links
trie = build_trie(words)
fail = compute_failure_links(trie)
print(f"trie nodes: {trie.n_nodes}")
for v in range(trie.n_nodes):
    s = trie.string(v).decode() or "(root)"
    f = trie.string(fail[v]).decode() or "(root)"
    print(f"  {v:2d} {s:6s} -> {f}")

# step 3: keep the leaves and whatever their failure chains reach
marked = mark_overlap_nodes(trie, fail)
kept = [trie.string(v).decode() or "(root)" for v in range(trie.n_nodes) if marked[v]]
dropped = [trie.string(v).decode() for v in range(trie.n_nodes) if not marked[v]]
print(f"kept {len(kept)}: {kept}")
print(f"dropped {len(dropped)}: {dropped}")

# step 4: the compacted tree in level order, stored as LOUDS
covi = CoviIndex.from_words(words)
full = FullAcIndex.from_words(words)
print("COvI LOUDS:", covi.topology.bits.to01())
print("Full AC BP:", full.topology.bits.to01())
for v in range(1, covi.node_count + 1):
    print(f"  {v:2d} {covi.string(v).decode() or '(root)':6s} depth={covi.depth(v)} "
          f"fail={covi.failure(v)}")
print(f"kept ratio: {covi.node_count}/{full.node_count}")

# the queries give the same answers on both structures
x, y = covi.word_id("ATTA"), covi.word_id("ATAT")
for idx in (covi, full):
    name = type(idx).__name__
    print(name, "max_ov(ATTA, ATAT) =", max_ov(idx, x, y))
    print(name, "c(ATTA, ATAT) =", correlation(idx, x, y))
    print(name, "all_right_ov(ATTA) =", all_right_ov(idx, x).tolist())
    print(name, "all_left_ov(ATAT) =", all_left_ov(idx, y).tolist())
    d, ids = global_max_ov(idx)
    print(name, "global_max_ov =", d, [words[i] for i in ids])
