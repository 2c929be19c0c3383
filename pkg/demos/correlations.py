"""Correlation vectors of a few classic strings, by index and by brute force.

Run with ``python demos/correlations.py``.
"""

from covi import CoviIndex, correlation
from covi.oracle import naive_correlation

pairs = [("atatat", "atatat"), ("tggata", "tggata"), ("atatat", "tggata"), ("tggata", "atatat")]
idx = CoviIndex.from_words(["atatat", "tggata"])
for u, v in pairs:
    c = correlation(idx, idx.word_id(u), idx.word_id(v))
    print(f"c({u}, {v}) = {c}   oracle {naive_correlation(u, v)}   overlaps {c.overlap_lengths()}")

# a self-correlation has its first bit set by convention
abra = CoviIndex.from_words(["abracadabra"])
print("c(abracadabra) =", correlation(abra, 0, 0))

# period structure: the set bits of c(u) are the periods of u
u = "abaababaab"
c = correlation(CoviIndex.from_words([u]), 0, 0)
periods = [i - 1 for i in range(2, len(u) + 1) if c[i]]
print(f"c({u}) = {c}, periods {periods}")
