"""Command-line front end: ``covi gen-kmers | build | query | words | compare | bench``."""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field, fields
from pathlib import Path

import numpy as np

from ._index import IndexFormatError, OverlapIndex, load_index
from .covi_index import CoviIndex
from .datasets import DNA, PROTEIN, generate_kmers, random_word_set
from .fullac import FullAcIndex
from .oracle import naive_correlation, naive_global_max_ov, naive_overlap_matrix
from .queries import (
    QueryScratch,
    all_left_ov,
    all_right_ov,
    correlation,
    global_max_ov,
    max_ov,
    threshold_ov,
)
from .trie import WordSet

__all__ = ["main", "BenchReport", "CompareReport", "compare_word_set", "run_bench"]

STRUCTURES = {"covi": CoviIndex, "fullac": FullAcIndex}
QUERIES = (
    "max-ov",
    "correlation",
    "all-right-ov",
    "all-left-ov",
    "global-max-ov",
    "threshold-right-ov",
    "threshold-left-ov",
)


class CliError(Exception):
    pass


# -- compare -----------------------------------------------------------------


@dataclass
class CompareReport:
    max_ov: int = 0
    correlation: int = 0
    all_right: int = 0
    all_left: int = 0
    global_: int = 0
    threshold: int = 0
    mismatch: str | None = None

    @property
    def ok(self) -> bool:
        return self.mismatch is None

    def add(self, other: "CompareReport") -> None:
        for f in ("max_ov", "correlation", "all_right", "all_left", "global_", "threshold"):
            setattr(self, f, getattr(self, f) + getattr(other, f))
        if self.mismatch is None:
            self.mismatch = other.mismatch

    def summary(self) -> str:
        head = "PASS" if self.ok else f"FAIL: {self.mismatch}"
        return (
            f"{head}\n{self.max_ov} max-ov checks, {self.correlation} correlation checks, "
            f"{self.all_right}+{self.all_left} all-ov checks, {self.global_} global checks, "
            f"{self.threshold} threshold checks"
        )


def compare_word_set(words: WordSet, indexes: list[OverlapIndex] | None = None,
                     thresholds=None) -> CompareReport:
    """Run every query on each index and check it against the brute-force oracle.

    Stops at the first mismatch and says where it is. ``thresholds`` picks the
    q values for the threshold queries (default: every q from 1 up to the
    longest word).
    """
    if indexes is None:
        indexes = [CoviIndex.from_words(words), FullAcIndex.from_words(words)]
    ws = list(words)
    p = len(ws)
    truth = naive_overlap_matrix(words)
    if thresholds is None:
        thresholds = range(1, max(map(len, ws)) + 1)
    rep = CompareReport()
    scratch = [QueryScratch.for_index(idx) for idx in indexes]
    names = [type(idx).__name__ for idx in indexes]

    def fail(msg: str) -> CompareReport:
        rep.mismatch = msg
        return rep

    # every check runs on each index; the counts are per checked item
    for x in range(p):
        for y in range(p):
            want = naive_correlation(ws[x], ws[y])
            for idx, name in zip(indexes, names):
                got = max_ov(idx, x, y)
                if got != truth[x, y]:
                    return fail(f"{name} max_ov({ws[x]!r}, {ws[y]!r}) = {got}, expected {truth[x, y]}")
                c = correlation(idx, x, y)
                if c != want:
                    return fail(f"{name} correlation({ws[x]!r}, {ws[y]!r}) = {c}, expected {want}")
            rep.max_ov += 1
            rep.correlation += 1
    for x in range(p):
        for idx, name, sc in zip(indexes, names, scratch):
            row = all_right_ov(idx, x, sc)
            if not np.array_equal(row, truth[x]):
                z = int(np.flatnonzero(row != truth[x])[0])
                return fail(f"{name} all_right_ov({ws[x]!r})[{ws[z]!r}] = {row[z]}, expected {truth[x, z]}")
            col = all_left_ov(idx, x, sc)
            if not np.array_equal(col, truth[:, x]):
                z = int(np.flatnonzero(col != truth[:, x])[0])
                return fail(f"{name} all_left_ov({ws[x]!r})[{ws[z]!r}] = {col[z]}, expected {truth[z, x]}")
        rep.all_right += 1
        rep.all_left += 1
        for q in thresholds:
            for direction, line in (("right", truth[x]), ("left", truth[:, x])):
                want = [(int(z), int(line[z])) for z in np.flatnonzero(line >= q)]
                for idx, name, sc in zip(indexes, names, scratch):
                    got = threshold_ov(idx, x, q, direction, sc)
                    if got != want:
                        return fail(f"{name} threshold_{direction}_ov({ws[x]!r}, q={q}) = {got}, expected {want}")
                rep.threshold += 1
    want = naive_global_max_ov(truth)
    for idx, name, sc in zip(indexes, names, scratch):
        got = global_max_ov(idx, sc)
        if got != want:
            return fail(f"{name} global_max_ov = {got}, expected {want}")
    rep.global_ += 1
    return rep


# -- bench -------------------------------------------------------------------


@dataclass
class BenchReport:
    """Construction and query measurements for both structures on one word set."""

    words: int
    total_chars: int
    alphabet_size: int
    seed: int
    trie_nodes: int
    covi_nodes: int
    fullac_nodes: int
    kept_ratio: float
    covi_build: dict = field(default_factory=dict)
    fullac_build: dict = field(default_factory=dict)
    covi_bytes: int = 0
    fullac_bytes: int = 0
    pairs: int = 0
    word_samples: int = 0
    global_reps: int = 0
    # mean latencies: max_ov and correlation in microseconds, the rest in seconds
    max_ov_us: dict = field(default_factory=dict)
    correlation_us: dict = field(default_factory=dict)
    all_right_s: dict = field(default_factory=dict)
    all_left_s: dict = field(default_factory=dict)
    global_s: dict = field(default_factory=dict)
    global_max: int = 0

    def items(self) -> list[tuple[str, object]]:
        out = []
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, dict):
                out.extend((f"{f.name}.{k}", x) for k, x in v.items())
            else:
                out.append((f.name, v))
        return out

    def key_values(self) -> str:
        def fmt(v):
            return f"{v:.6g}" if isinstance(v, float) else str(v)

        return "\n".join(f"{k}={fmt(v)}" for k, v in self.items())

    def table(self) -> str:
        rows = [
            ("", "COvI", "Full AC"),
            ("nodes", f"{self.covi_nodes}", f"{self.fullac_nodes}"),
            ("size (bytes)", f"{self.covi_bytes}", f"{self.fullac_bytes}"),
            ("build (s)", f"{self.covi_build.get('total', 0):.3f}", f"{self.fullac_build.get('total', 0):.3f}"),
            ("max_ov (us)", f"{self.max_ov_us.get('covi', 0):.2f}", f"{self.max_ov_us.get('fullac', 0):.2f}"),
            ("correlation (us)", f"{self.correlation_us.get('covi', 0):.2f}",
             f"{self.correlation_us.get('fullac', 0):.2f}"),
            ("all_right_ov (s)", f"{self.all_right_s.get('covi', 0):.4f}", f"{self.all_right_s.get('fullac', 0):.4f}"),
            ("all_left_ov (s)", f"{self.all_left_s.get('covi', 0):.4f}", f"{self.all_left_s.get('fullac', 0):.4f}"),
            ("global_max_ov (s)", f"{self.global_s.get('covi', 0):.4f}", f"{self.global_s.get('fullac', 0):.4f}"),
        ]
        w0 = max(len(r[0]) for r in rows)
        w1 = max(len(r[1]) for r in rows)
        lines = [f"{a:<{w0}}  {b:>{w1}}  {c:>12}" for a, b, c in rows]
        lines.insert(0, f"p={self.words} chars={self.total_chars} sigma={self.alphabet_size} "
                        f"kept={100 * self.kept_ratio:.1f}%")
        return "\n".join(lines)


def _mean_time(fn, args_list) -> float:
    if not args_list:
        return 0.0
    clock = time.perf_counter
    t = clock()
    for a in args_list:
        fn(*a)
    return (clock() - t) / len(args_list)


def run_bench(words: WordSet, pairs: int = 100_000, word_samples: int = 100,
              global_reps: int = 1000, seed: int = 0,
              indexes: tuple[CoviIndex, FullAcIndex] | None = None) -> BenchReport:
    """Build both indexes (unless given) and time every query kind on them.

    Pairs and words are drawn uniformly with replacement from ``seed``.
    """
    if indexes is None:
        tc: dict = {}
        tf: dict = {}
        covi = CoviIndex.from_words(words, timings=tc)
        fullac = FullAcIndex.from_words(words, timings=tf)
    else:
        covi, fullac = indexes
        tc, tf = {}, {}
    trie_nodes = int(tc.pop("trie_nodes", fullac.node_count))
    tf.pop("trie_nodes", None)
    tc["total"] = sum(tc.values())
    tf["total"] = sum(tf.values())
    rng = np.random.default_rng(seed)
    p = len(words)
    pair_list = rng.integers(0, p, size=(pairs, 2)).tolist()
    word_list = rng.integers(0, p, size=word_samples).tolist()
    rep = BenchReport(
        words=p,
        total_chars=words.total_length,
        alphabet_size=len(words.alphabet),
        seed=seed,
        trie_nodes=trie_nodes,
        covi_nodes=covi.node_count,
        fullac_nodes=fullac.node_count,
        kept_ratio=covi.node_count / fullac.node_count,
        covi_build=tc,
        fullac_build=tf,
        covi_bytes=len(covi.to_bytes()),
        fullac_bytes=len(fullac.to_bytes()),
        pairs=pairs,
        word_samples=word_samples,
        global_reps=global_reps,
    )
    for key, idx in (("covi", covi), ("fullac", fullac)):
        sc = QueryScratch.for_index(idx)
        rep.max_ov_us[key] = 1e6 * _mean_time(lambda x, y: max_ov(idx, x, y), pair_list)
        rep.correlation_us[key] = 1e6 * _mean_time(lambda x, y: correlation(idx, x, y), pair_list)
        rep.all_right_s[key] = _mean_time(lambda x: all_right_ov(idx, x, sc), [(w,) for w in word_list])
        rep.all_left_s[key] = _mean_time(lambda x: all_left_ov(idx, x, sc), [(w,) for w in word_list])
        rep.global_s[key] = _mean_time(lambda: global_max_ov(idx, sc), [()] * global_reps)
    rep.global_max = global_max_ov(covi)[0]
    return rep


# -- commands ----------------------------------------------------------------


def _load(path: str, kind: str | None = None) -> OverlapIndex:
    if kind is None:
        return load_index(path)
    return STRUCTURES[kind].load(path)


def _word_arg(idx: OverlapIndex, value: str | None, flag: str) -> int:
    if value is None:
        raise CliError(f"{flag} is required for this query")
    # a stored word wins over reading the argument as an id
    if value in idx.words:
        return idx.words.index(value)
    if value.isdigit():
        wid = int(value)
        if wid < idx.word_count:
            return wid
        raise CliError(f"word id {wid} out of range 0..{idx.word_count - 1}")
    raise CliError(f"unknown word {value!r}")


def cmd_gen_kmers(args, out) -> None:
    try:
        text = Path(args.input).read_bytes()
    except OSError as exc:
        raise CliError(f"cannot read {args.input}: {exc.strerror}") from None
    ws = generate_kmers(text, args.k, max_skip=args.max_skip, seed=args.seed)
    if args.output:
        ws.write(args.output)
        print(f"wrote {len(ws)} words to {args.output}", file=sys.stderr)
    else:
        out.write(ws.to_bytes().decode("latin-1"))


def cmd_build(args, out) -> None:
    words = WordSet.read(args.words)
    timings: dict = {}
    cls = STRUCTURES[args.structure]
    idx = cls.from_words(words, id_width=args.id_width, timings=timings)
    size = idx.save(args.out)
    trie_nodes = timings.pop("trie_nodes")
    print(f"structure={args.structure}", file=out)
    print(f"words={len(words)}", file=out)
    print(f"trie_nodes={trie_nodes}", file=out)
    print(f"nodes={idx.node_count}", file=out)
    if args.structure == "covi":
        print(f"kept_ratio={idx.node_count / trie_nodes:.4f}", file=out)
    for step, sec in timings.items():
        print(f"time.{step}={sec:.6f}", file=out)
    print(f"time.total={sum(timings.values()):.6f}", file=out)
    print(f"bytes={size}", file=out)


def cmd_query(args, out) -> None:
    idx = _load(args.index, args.kind)
    name = args.name
    if name == "max-ov":
        print(max_ov(idx, _word_arg(idx, args.x, "--x"), _word_arg(idx, args.y, "--y")), file=out)
    elif name == "correlation":
        print(correlation(idx, _word_arg(idx, args.x, "--x"), _word_arg(idx, args.y, "--y")), file=out)
    elif name in ("all-right-ov", "all-left-ov"):
        fn = all_right_ov if name == "all-right-ov" else all_left_ov
        flag = "--x" if name == "all-right-ov" else "--y"
        lens = fn(idx, _word_arg(idx, args.x if flag == "--x" else args.y, flag))
        out.write("".join(f"{z} {l}\n" for z, l in enumerate(lens.tolist())))
    elif name == "global-max-ov":
        d, ids = global_max_ov(idx)
        print(f"max={d}", file=out)
        out.write("".join(f"{z}\n" for z in ids))
    else:
        if args.q is None:
            raise CliError("--q is required for threshold queries")
        if args.q < 1:
            raise CliError("--q must be at least 1")
        direction = "right" if name == "threshold-right-ov" else "left"
        flag = "--x" if direction == "right" else "--y"
        wid = _word_arg(idx, args.x if direction == "right" else args.y, flag)
        out.write("".join(f"{z} {l}\n" for z, l in threshold_ov(idx, wid, args.q, direction)))


def cmd_words(args, out) -> None:
    idx = _load(args.index)
    out.write("".join(f"{i} {w.decode('latin-1')}\n" for i, w in enumerate(idx.words)))


def cmd_compare(args, out) -> int:
    if args.words is None and args.random is None:
        raise CliError("give a word file or --random N")
    sets = []
    if args.words is not None:
        sets.append(WordSet.read(args.words))
    if args.random:
        rng = np.random.default_rng(args.seed)
        alphabets = [b"AB", DNA, PROTEIN]
        sets.extend(random_word_set(rng, alphabets[i % 3]) for i in range(args.random))
    for ws in sets:
        cost = len(ws) * ws.max_length
        if cost > args.budget:
            raise CliError(
                f"word set too large for the brute-force oracle (p*maxlen={cost} > budget {args.budget}); "
                f"compare a sample, or raise --budget"
            )
    total = CompareReport()
    for ws in sets:
        total.add(compare_word_set(ws))
        if not total.ok:
            break
    print(f"sets={len(sets)}", file=out)
    print(total.summary(), file=out)
    return 0 if total.ok else 1


def cmd_bench(args, out) -> None:
    words = WordSet.read(args.words)
    rep = run_bench(words, pairs=args.pairs, word_samples=args.samples,
                    global_reps=args.global_reps, seed=args.seed)
    print(rep.table(), file=out)
    print(file=out)
    print(rep.key_values(), file=out)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="covi", description="Compressed overlap index tools.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-kmers", help="extract k-mers from a text with random skips")
    g.add_argument("input")
    g.add_argument("-k", type=int, required=True)
    g.add_argument("--max-skip", type=int, default=10)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen_kmers)

    b = sub.add_parser("build", help="build an index from a word file")
    b.add_argument("words")
    b.add_argument("--structure", choices=sorted(STRUCTURES), default="covi")
    b.add_argument("--out", required=True)
    b.add_argument("--id-width", type=int, choices=(32, 64), default=32)
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("query", help="run one query on a saved index")
    q.add_argument("index")
    q.add_argument("name", choices=QUERIES)
    q.add_argument("--x", help="left word (literal, or id)")
    q.add_argument("--y", help="right word (literal, or id)")
    q.add_argument("--q", type=int, help="threshold length")
    q.add_argument("--kind", choices=sorted(STRUCTURES), help="require this index kind")
    q.set_defaults(func=cmd_query)

    w = sub.add_parser("words", help="print the id to word table of an index")
    w.add_argument("index")
    w.set_defaults(func=cmd_words)

    c = sub.add_parser("compare", help="cross-check both indexes against brute force")
    c.add_argument("words", nargs="?")
    c.add_argument("--random", type=int, help="also check N random word sets")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--budget", type=int, default=5000, help="max p*maxlen per word set")
    c.set_defaults(func=cmd_compare)

    be = sub.add_parser("bench", help="time construction and queries on both indexes")
    be.add_argument("words")
    be.add_argument("--pairs", type=int, default=100_000)
    be.add_argument("--samples", "--words-sampled", dest="samples", type=int, default=100,
                    help="words sampled for all_right_ov / all_left_ov")
    be.add_argument("--global-reps", type=int, default=1000)
    be.add_argument("--seed", type=int, default=0)
    be.set_defaults(func=cmd_bench)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args, out) or 0
    except (CliError, IndexFormatError, ValueError, KeyError, OSError, OverflowError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"covi: error: {msg}", file=sys.stderr)
        return 1
    return code


if __name__ == "__main__":
    sys.exit(main())
