import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covi.succinct import BpTree, LoudsTree, NoSuchOccurrenceError, RankSelectBitVector

LOUDS_RUNNING = "00101001001010011101111"
BP_RUNNING = "000001100111100001110001011111"


def naive_rank(bits, a, i):
    return sum(1 for b in bits[:i] if b == a)


def naive_select(bits, a, j):
    seen = 0
    for pos, b in enumerate(bits, start=1):
        if b == a:
            seen += 1
            if seen == j:
                return pos
    raise AssertionError


# -- rank / select -------------------------------------------------------------


def test_rank_examples():
    bv = RankSelectBitVector(LOUDS_RUNNING)
    assert bv.rank1(4) == 1
    assert bv.rank0(0) == 0
    assert RankSelectBitVector("1111").rank0(4) == 0


def test_select_examples():
    bv = RankSelectBitVector(LOUDS_RUNNING)
    assert bv.select0(3) == 4
    assert RankSelectBitVector("1").select1(1) == 1


def test_rank_past_end_rejected():
    bv = RankSelectBitVector("0101")
    with pytest.raises(IndexError):
        bv.rank1(5)
    with pytest.raises(IndexError):
        bv.rank(0, -1)


@pytest.mark.parametrize("a,j", [(1, 0), (1, 3), (0, 3), (0, -1)])
def test_select_missing_occurrence(a, j):
    bv = RankSelectBitVector("0101")
    with pytest.raises(NoSuchOccurrenceError, match="no .* occurrence"):
        bv.select(a, j)


def test_rejects_non_bits():
    with pytest.raises(ValueError):
        RankSelectBitVector("0102")


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=3000))
def test_rank_select_laws_against_scan(bits):
    bv = RankSelectBitVector(bits)
    assert bv.to01() == "".join(map(str, bits))
    r1 = np.concatenate([[0], np.cumsum(bits)])
    for i in range(len(bits) + 1):
        assert bv.rank1(i) == r1[i]
        assert bv.rank0(i) + bv.rank1(i) == i
    for a in (0, 1):
        for j in range(1, bv.count(a) + 1):
            pos = bv.select(a, j)
            assert pos == naive_select(bits, a, j)
            assert bv.rank(a, pos) == j
            assert bv[pos] == a


def test_large_vector_against_numpy():
    rng = np.random.default_rng(5)
    for density in (0.02, 0.5, 0.97):
        bits = (rng.random(1_000_000) < density).astype(np.uint8)
        bv = RankSelectBitVector(bits)
        cum = np.cumsum(bits)
        for i in rng.integers(1, bits.size + 1, 3000):
            assert bv.rank1(int(i)) == cum[i - 1]
        ones = np.flatnonzero(bits) + 1
        zeros = np.flatnonzero(bits == 0) + 1
        for j in rng.integers(1, ones.size + 1, 3000):
            assert bv.select1(int(j)) == ones[j - 1]
        for j in rng.integers(1, zeros.size + 1, 3000):
            assert bv.select0(int(j)) == zeros[j - 1]
        assert bv.select1(ones.size) == ones[-1]
        assert bv.select0(zeros.size) == zeros[-1]


def test_directory_overhead_under_quarter():
    bv = RankSelectBitVector(np.random.default_rng(0).integers(0, 2, 1 << 20))
    assert bv.aux_bits / len(bv) <= 0.25


def test_serialization_round_trip():
    bv = RankSelectBitVector("1" * 70 + "0" * 3)
    raw = bv.to_bytes()
    assert len(raw) == 8 + 16
    back, end = RankSelectBitVector.from_buffer(b"xx" + raw, 2)
    assert back == bv and end == 2 + len(raw)
    with pytest.raises(EOFError):
        RankSelectBitVector.from_buffer(raw[:-1])


# -- LOUDS ---------------------------------------------------------------------

RUNNING_CHILDREN = [[2, 3], [4], [5, 6], [7, 8], [9], [10, 11], [], [], [12], [], [], []]


def test_louds_encode_running_example():
    t = LoudsTree.encode(RUNNING_CHILDREN)
    assert t.bits.to01() == LOUDS_RUNNING
    assert len(t) == 2 * 12 - 1


def test_louds_small_trees():
    assert LoudsTree.encode([[]]).bits.to01() == "1"
    star = LoudsTree.encode([[2, 3], [], []])
    assert star.bits.to01() == "00111"
    assert star.child(1, 2) == 3


def test_louds_navigation_running_example():
    t = LoudsTree(RankSelectBitVector(LOUDS_RUNNING))
    assert t.parent(4) == 2
    assert t.parent(2) == 1
    assert [t.parent(v) for v in range(2, 13)] == [1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 9]
    assert t.child(3, 1) == 5 and t.child(3, 2) == 6
    assert t.degree(7) == 0 and t.is_leaf(7)
    with pytest.raises(ValueError, match="root has no parent"):
        t.parent(1)
    with pytest.raises(IndexError, match="no such child"):
        t.child(3, 3)


@pytest.mark.parametrize("children", [[[2], [1]], [[3], [], []], [[2], [], [3]], [[2, 4], [3], []]])
def test_louds_rejects_malformed(children):
    with pytest.raises(ValueError):
        LoudsTree.encode(children)


def test_louds_rejects_bad_bits():
    with pytest.raises(ValueError):
        LoudsTree(RankSelectBitVector("0011"))
    with pytest.raises(ValueError):
        LoudsTree(RankSelectBitVector("10101"))  # root has no children but nodes follow


# -- BP ------------------------------------------------------------------------


def test_bp_running_example():
    depths = [0, 1, 2, 3, 4, 3, 4, 1, 2, 3, 4, 2, 3, 4, 4]
    t = BpTree.from_depths(depths)
    assert t.bits.to01() == BP_RUNNING
    assert len(t) == 30
    assert t.depth(5) == 4
    assert t.depth(1) == 0
    assert [t.parent(v) for v in range(2, 16)] == [1, 2, 3, 4, 3, 6, 1, 8, 9, 10, 8, 12, 13, 13]
    with pytest.raises(ValueError, match="root has no parent"):
        t.parent(1)


def test_bp_small():
    t = BpTree.encode([[]])
    assert t.bits.to01() == "01" and t.depth(1) == 0
    assert BpTree.encode([[2], []]).bits.to01() == "0011"


def test_bp_rejects_unbalanced():
    with pytest.raises(ValueError):
        BpTree(RankSelectBitVector("0110"))
    with pytest.raises(ValueError):
        BpTree(RankSelectBitVector("0101"))  # two roots


# -- random trees: LOUDS and BP agree ------------------------------------------


def random_parent_array(rng, m):
    # parent[v] < v, ids 0-based in creation order
    return [-1] + [int(rng.integers(0, v)) for v in range(1, m)]


def orders(parent):
    m = len(parent)
    kids = [[] for _ in range(m)]
    for v in range(1, m):
        kids[parent[v]].append(v)
    bfs = [0]
    for v in bfs:
        bfs.extend(kids[v])
    pre, stack = [], [0]
    while stack:
        v = stack.pop()
        pre.append(v)
        stack.extend(reversed(kids[v]))
    return kids, bfs, pre


def check_tree(parent):
    kids, bfs, pre = orders(parent)
    m = len(parent)
    lid = {v: i + 1 for i, v in enumerate(bfs)}
    pid = {v: i + 1 for i, v in enumerate(pre)}
    louds = LoudsTree.encode([[lid[c] for c in kids[v]] for v in bfs])
    bp = BpTree.encode([[pid[c] for c in kids[v]] for v in pre])
    assert len(louds) == 2 * m - 1 and len(bp) == 2 * m
    depth = [0] * m
    for v in bfs[1:]:
        depth[v] = depth[parent[v]] + 1
    for v in range(m):
        assert bp.depth(pid[v]) == depth[v]
        for j, c in enumerate(kids[v], start=1):
            assert louds.child(lid[v], j) == lid[c]
            assert louds.parent(lid[c]) == lid[v]
            assert bp.parent(pid[c]) == pid[v]
            assert bp.depth(pid[c]) == bp.depth(pid[v]) + 1
        assert louds.degree(lid[v]) == len(kids[v])


def test_random_trees_small_many():
    rng = np.random.default_rng(11)
    for _ in range(300):
        check_tree(random_parent_array(rng, int(rng.integers(1, 60))))


def test_random_trees_large():
    rng = np.random.default_rng(12)
    for shape in ("random", "deep", "wide"):
        m = 10_000
        if shape == "random":
            parent = random_parent_array(rng, m)
        elif shape == "deep":
            parent = [-1] + [max(0, v - 1 - int(rng.integers(0, 2))) for v in range(1, m)]
        else:
            parent = [-1] + [int(rng.integers(0, min(v, 5))) for v in range(1, m)]
        check_tree(parent)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 10_000), min_size=0, max_size=200))
def test_tree_property(choices):
    parent = [-1] + [c % v for v, c in enumerate(choices, start=1)]
    check_tree(parent)
