"""Small benchmark on k-mers of a random DNA text.

Run with ``python demos/kmer_benchmark.py [text-bytes]`` (default 65536).
"""

import sys

from covi.cli import run_bench
from covi.datasets import DNA, generate_kmers, random_text

n = int(sys.argv[1]) if len(sys.argv) > 1 else 1 << 16
text = random_text(DNA, n, seed=0)
for k in (25, 50, 100):
    words = generate_kmers(text, k, seed=k)
    rep = run_bench(words, pairs=5_000, word_samples=5, global_reps=3, seed=0)
    print(f"--- k={k}")
    print(rep.table())
    steps = rep.covi_build
    share = (steps["mark"] + steps["compact"]) / steps["total"]
    print(f"marking + compaction: {100 * share:.1f}% of the COvI build")
