"""Benchmark inputs: sample texts and k-mer word sets drawn from them."""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .trie import WordSet

__all__ = [
    "DNA",
    "PROTEIN",
    "random_text",
    "english_text",
    "generate_kmers",
    "random_word_set",
]

DNA = b"ACGT"
PROTEIN = b"ACDEFGHIKLMNPQRSTVWY"


def random_text(alphabet: bytes, n: int, seed: int = 0) -> bytes:
    """i.i.d. uniform text of ``n`` letters over ``alphabet``."""
    rng = np.random.default_rng(seed)
    letters = np.frombuffer(alphabet, dtype=np.uint8)
    return letters[rng.integers(0, letters.size, n)].tobytes()


def english_text(n: int = 1 << 20) -> bytes:
    """About ``n`` bytes of English prose from the interpreter's own help pages.

    The pydoc topic texts come first, then docstrings parsed (not imported)
    from the standard library sources. Runs of whitespace collapse to one
    space, and the sample repeats if it is still short.
    """
    import ast
    import sysconfig

    import pydoc_data.topics as topics

    chunks = [t for _, t in sorted(topics.topics.items())]
    total = sum(map(len, chunks))
    for src in sorted(Path(sysconfig.get_paths()["stdlib"]).glob("*.py")):
        if total >= n:
            break
        try:
            tree = ast.parse(src.read_text(encoding="utf-8"))
        except (SyntaxError, UnicodeDecodeError, OSError):
            continue
        for node in ast.walk(tree):
            if isinstance(node, (ast.Module, ast.ClassDef, ast.FunctionDef, ast.AsyncFunctionDef)):
                doc = ast.get_docstring(node)
                if doc:
                    chunks.append(doc)
                    total += len(doc)
    text = re.sub(r"\s+", " ", " ".join(chunks)).encode("ascii", "ignore")
    while len(text) < n:
        text += b" " + text
    return text[:n]


def generate_kmers(text: bytes | str | Path, k: int, max_skip: int = 10, seed: int = 0,
                   steps=None) -> WordSet:
    """Slide a length-``k`` window over ``text`` with random skips in ``[1, max_skip]``.

    Windows holding a 0x0A or 0x00 byte are dropped. ``steps`` overrides the
    random skips (one per emitted position; the last one is unused). The
    result is sorted and deduplicated.
    """
    if isinstance(text, Path):
        text = text.read_bytes()
    elif isinstance(text, str):
        text = text.encode("utf-8")
    if k < 2:
        raise ValueError("k must be at least 2")
    if max_skip < 1:
        raise ValueError("max_skip must be at least 1")
    n = len(text)
    if k > n:
        raise ValueError(f"k={k} is larger than the input ({n} bytes)")
    last = n - k
    if steps is None:
        rng = np.random.default_rng(seed)
        # enough draws to pass the end even if every skip is 1
        draws = rng.integers(1, max_skip + 1, last + 1)
    else:
        draws = np.asarray(list(steps), dtype=np.int64)
        if draws.size and draws.min() < 1:
            raise ValueError("steps must be positive")
    pos = np.concatenate(([0], np.cumsum(draws)))
    pos = pos[pos <= last]
    buf = np.frombuffer(text, dtype=np.uint8)
    bad = np.concatenate(([0], np.cumsum((buf == 0x0A) | (buf == 0x00))))
    pos = pos[bad[pos + k] == bad[pos]]
    words = {text[i : i + k] for i in pos.tolist()}
    if not words:
        raise ValueError("no k-mers could be extracted")
    return WordSet(words)


def random_word_set(rng: np.random.Generator, alphabet: bytes, max_words: int = 50,
                    min_len: int = 4, max_len: int = 12) -> WordSet:
    """Random prefix-free set: draw words, then drop any that prefix another."""
    p = int(rng.integers(1, max_words + 1))
    letters = np.frombuffer(alphabet, dtype=np.uint8)
    ws = set()
    for _ in range(p):
        length = int(rng.integers(min_len, max_len + 1))
        ws.add(letters[rng.integers(0, letters.size, length)].tobytes())
    ordered = sorted(ws)
    keep = [w for i, w in enumerate(ordered) if not (i + 1 < len(ordered) and ordered[i + 1].startswith(w))]
    return WordSet(keep)
