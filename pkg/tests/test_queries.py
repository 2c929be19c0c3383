import numpy as np
import pytest
from hypothesis import given, settings

from covi import (
    CorrelationVector,
    CoviIndex,
    FullAcIndex,
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
from covi.oracle import naive_correlation, naive_global_max_ov, naive_max_ov, naive_overlap_matrix
from covi.queries import max_ov_steps
from strategies import word_sets

ATAT, ATTA, TAAT, TTAA, TTAT = range(5)
MATRIX = [[2, 2, 1, 1, 1], [1, 1, 2, 3, 3], [2, 2, 1, 1, 1], [1, 1, 3, 0, 0], [2, 2, 1, 1, 1]]


@pytest.fixture(scope="module", params=["covi", "fullac"])
def classic_pair(request):
    cls = CoviIndex if request.param == "covi" else FullAcIndex
    return cls.from_words(["atatat", "tggata"])


def test_max_ov_meets_at_depth_one(running_index):
    assert max_ov(running_index, ATTA, ATAT) == 1


def test_running_example_matrix(running_index):
    got = [[max_ov(running_index, x, z) for z in range(5)] for x in range(5)]
    assert got == MATRIX
    assert max_ov(running_index, ATTA, TTAA) == 3
    assert max_ov(running_index, TTAA, TAAT) == 3


def test_correlation_running_example(running_index):
    assert str(correlation(running_index, ATTA, ATAT)) == "0001"


def test_correlation_classic_pair(classic_pair):
    u, v = classic_pair.word_id("atatat"), classic_pair.word_id("tggata")
    assert str(correlation(classic_pair, u, u)) == "101010"
    assert str(correlation(classic_pair, v, v)) == "100000"
    assert str(correlation(classic_pair, u, v)) == "000001"
    assert str(correlation(classic_pair, v, u)) == "000101"


@pytest.mark.parametrize("cls", [CoviIndex, FullAcIndex])
def test_autocorrelation_abracadabra(cls):
    idx = cls.from_words(["abracadabra"])
    assert str(correlation(idx, 0, 0)) == "10000001001"


def test_all_right_and_left(running_index):
    assert all_right_ov(running_index, ATTA).tolist() == [1, 1, 2, 3, 3]
    assert all_left_ov(running_index, ATAT).tolist() == [2, 1, 2, 1, 2]


def test_global(running_index):
    assert global_max_ov(running_index) == (3, [ATTA, TTAA])


def test_threshold(running_index):
    assert threshold_right_ov(running_index, ATTA, 2) == [(TAAT, 2), (TTAA, 3), (TTAT, 3)]
    assert threshold_ov(running_index, ATTA, 1) == [(z, l) for z, l in enumerate(MATRIX[ATTA]) if l]
    assert threshold_left_ov(running_index, TAAT, 2) == [(ATTA, 2), (TTAA, 3)]
    assert threshold_right_ov(running_index, ATTA, 4) == []
    with pytest.raises(ValueError, match="at least 1"):
        threshold_ov(running_index, ATTA, 0)
    with pytest.raises(ValueError, match="direction"):
        threshold_ov(running_index, ATTA, 1, "up")


@pytest.mark.parametrize("cls", [CoviIndex, FullAcIndex])
def test_disjoint_alphabets(cls):
    idx = cls.from_words(["AB", "CD"])
    assert max_ov(idx, 0, 1) == 0
    assert str(correlation(idx, 0, 1)) == "00"
    assert all_right_ov(idx, 0).tolist() == [0, 0]
    assert global_max_ov(idx) == (0, [])


@pytest.mark.parametrize("cls", [CoviIndex, FullAcIndex])
def test_single_periodic_word(cls):
    idx = cls.from_words(["AAAA"])
    assert all_left_ov(idx, 0).tolist() == [3]
    assert global_max_ov(idx) == (3, [0])
    assert str(correlation(idx, 0, 0)) == "1111"


def test_word_id_out_of_range(running_index):
    with pytest.raises(IndexError):
        max_ov(running_index, 0, 5)
    with pytest.raises(IndexError):
        correlation(running_index, 5, 0)


def test_scratch(running_index):
    s = QueryScratch.for_index(running_index)
    first = all_right_ov(running_index, ATTA, s)
    assert all_left_ov(running_index, ATAT, s).tolist() == [2, 1, 2, 1, 2]
    assert all_right_ov(running_index, ATTA, s).tolist() == first.tolist()
    assert global_max_ov(running_index, s) == global_max_ov(running_index, s)
    with pytest.raises(ValueError, match="slots"):
        all_right_ov(running_index, 0, QueryScratch(3))


def test_correlation_vector_type():
    c = CorrelationVector.from_string("000101")
    assert len(c) == 6 and c[4] == 1 and c[5] == 0
    assert c.overlap_lengths() == [3, 1]
    assert c.max_overlap() == 3 and c.popcount() == 2
    assert CorrelationVector.from_lengths(6, [1, 3]) == c
    with pytest.raises(ValueError):
        CorrelationVector.from_string("012")
    with pytest.raises(IndexError):
        c[7]


def check_against_oracle(ws):
    words = list(ws)
    p = len(words)
    mat = naive_overlap_matrix(ws)
    expected_global = naive_global_max_ov(mat)
    covi, full = CoviIndex.from_words(ws), FullAcIndex.from_words(ws)
    for idx in (covi, full):
        s = QueryScratch.for_index(idx)
        for x in range(p):
            for z in range(p):
                assert max_ov(idx, x, z) == mat[x, z]
                assert correlation(idx, x, z) == naive_correlation(words[x], words[z])
            right = all_right_ov(idx, x, s)
            left = all_left_ov(idx, x, s)
            assert np.array_equal(right, mat[x]) and np.array_equal(left, mat[:, x])
            for q in range(1, ws.max_length + 1):
                assert threshold_right_ov(idx, x, q, s) == [(z, int(l)) for z, l in enumerate(mat[x]) if l >= q]
                assert threshold_left_ov(idx, x, q, s) == [(z, int(l)) for z, l in enumerate(mat[:, x]) if l >= q]
        assert global_max_ov(idx, s) == expected_global
    return covi, full


@settings(max_examples=200, deadline=None)
@given(word_sets(max_words=15, max_len=8))
def test_queries_match_oracle(ws):
    check_against_oracle(ws)


@settings(max_examples=100, deadline=None)
@given(word_sets(max_words=25, min_len=6, max_len=6))
def test_queries_match_oracle_fixed_length(ws):
    check_against_oracle(ws)


@settings(max_examples=150, deadline=None)
@given(word_sets(max_words=20))
def test_coherence_and_step_bound(ws):
    covi, full = CoviIndex.from_words(ws), FullAcIndex.from_words(ws)
    for x in range(len(ws)):
        for y in range(len(ws)):
            d, steps_c = max_ov_steps(covi, x, y)
            d_full, steps_f = max_ov_steps(full, x, y)
            assert d == d_full
            assert steps_c <= len(ws[x]) + len(ws[y])
            assert steps_c <= steps_f
            c = correlation(covi, x, y)
            if x != y:
                assert c.max_overlap() == d
                assert c.popcount() == len(c.overlap_lengths())
