import pytest
from hypothesis import given, strategies as st

from rankcrank.partitions import (
    Partition,
    conjugate,
    enumerate_partitions,
    partition_count,
    partition_count_series,
)

# first values of the counting function, long enough to catch an
# off-by-one in either recurrence direction
P_SMALL = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176,
           231, 297, 385, 490, 627]


def test_partition_validation():
    assert Partition([3, 1]) == (3, 1)
    assert Partition([]) == ()
    assert Partition([5]).weight == 5
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_partition_repr():
    assert repr(Partition([3, 1])) == "Partition([3, 1])"
    assert repr(Partition([])) == "Partition([])"


def test_weight():
    assert Partition([4, 2, 1, 1]).weight == 8
    assert Partition([]).weight == 0


def test_enumeration_order_n4():
    got = [tuple(p) for p in enumerate_partitions(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumeration_order_n5():
    got = [tuple(p) for p in enumerate_partitions(5)]
    assert got == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1),
                   (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_enumeration_edge_cases():
    assert [tuple(p) for p in enumerate_partitions(0)] == [()]
    assert [tuple(p) for p in enumerate_partitions(1)] == [(1,)]
    with pytest.raises(ValueError):
        list(enumerate_partitions(-1))


def test_enumeration_is_strictly_decreasing_lex():
    for n in range(2, 26):
        prev = None
        for p in enumerate_partitions(n):
            assert p.weight == n
            if prev is not None:
                assert tuple(p) < prev
            prev = tuple(p)


def test_counts_match_enumeration():
    for n in range(0, 21):
        assert partition_count(n) == P_SMALL[n]
        assert sum(1 for _ in enumerate_partitions(n)) == P_SMALL[n]


def test_count_series():
    assert partition_count_series(20) == P_SMALL
    assert partition_count_series(0) == [1]


def test_large_counts():
    # classical reference values
    assert partition_count(100) == 190569292
    assert partition_count(200) == 3972999029388


def test_count_rejects_negative():
    with pytest.raises(ValueError):
        partition_count(-3)


def test_conjugate_known():
    assert tuple(conjugate(Partition([5, 5, 1]))) == (3, 2, 2, 2, 2)
    assert tuple(conjugate(Partition([3, 1]))) == (2, 1, 1)
    assert tuple(conjugate(Partition([]))) == ()
    assert tuple(conjugate(Partition([1, 1, 1]))) == (3,)


partitions_st = st.lists(st.integers(1, 15), max_size=12).map(
    lambda parts: Partition(sorted(parts, reverse=True)))


@given(partitions_st)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).weight == p.weight


def test_conjugate_transposes_counts():
    # k-th column height counts parts >= k+1
    for n in range(1, 16):
        for p in enumerate_partitions(n):
            q = conjugate(p)
            for k in range(len(q)):
                assert q[k] == sum(1 for v in p if v >= k + 1)
