"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from covi import WordSet

ALPHABETS = (b"ab", b"ACGT", b"ACDEFGHIKLMNPQRSTVWY")


@st.composite
def word_sets(draw, max_words=50, min_len=1, max_len=12):
    alphabet = draw(st.sampled_from(ALPHABETS))
    letters = st.sampled_from(list(alphabet))
    raw = draw(st.lists(st.lists(letters, min_size=min_len, max_size=max_len).map(bytes),
                        min_size=1, max_size=max_words))
    ordered = sorted(set(raw))
    keep = [w for i, w in enumerate(ordered) if not (i + 1 < len(ordered) and ordered[i + 1].startswith(w))]
    return WordSet(keep)
