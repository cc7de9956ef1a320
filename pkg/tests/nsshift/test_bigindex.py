import math

import pytest

from nsshift.bigindex import SparseInt, floor_log2, is_big, log2_approx, sparse


@pytest.fixture
def big():
    return SparseInt.power_of_two(5000)


def test_collapse_to_int():
    assert sparse([(10, 1)]) == 1024
    assert type(sparse([(10, 1), (0, 3)])) is int
    assert sparse([]) == 0
    assert type(SparseInt.power_of_two(4095)) is int
    assert is_big(SparseInt.power_of_two(4096))


def test_arithmetic(big):
    assert (big + 1) - big == 1
    assert type((big + 1) - big) is int
    assert big * big == SparseInt.power_of_two(10000)
    assert 3 * big == big + big + big
    assert -(-big) == big
    assert abs(-big) == big
    assert 5 - big == -(big - 5)


def test_ordering(big):
    assert big > 10 ** 1000
    assert -big < 0
    assert big - 1 < big < big + 1
    assert big + 1 > big
    assert max(big, big + 1) == big + 1
    assert sorted([big + 2, 7, big]) == [7, big, big + 2]


def test_floor_log2(big):
    assert floor_log2(big) == 5000
    assert floor_log2(big + 1) == 5000
    assert floor_log2(big - 1) == 4999
    assert floor_log2(3 * big) == 5001
    assert floor_log2(1024) == 10


def test_canonical_hash():
    a = sparse([(5000, 1), (4990, 1)])
    b = sparse([(4990, 1025)])
    assert a == b
    assert hash(a) == hash(b)


def test_conversions(big):
    assert float(big) == float("inf")
    assert float(-big) == float("-inf")
    with pytest.raises(OverflowError):
        int(big)
    assert log2_approx(3 * big) == pytest.approx(5000 + 1.584962500721156)
    assert log2_approx(1024) == 10.0


def test_pairs_round_trip(big):
    x = big * 7 - 12345
    assert SparseInt.from_pairs(x.to_pairs()) == x
    assert all(isinstance(v, str) for pair in x.to_pairs() for v in pair)


def test_huge_exponents():
    N = 2 ** 744
    x = sparse([(3 * N, 3 * N), (0, 6 * N)])
    assert floor_log2(x) == 3 * N + (3 * N).bit_length() - 1
    assert x - 6 * N == sparse([(3 * N, 3 * N)])
    assert x > sparse([(2 * N, N)])


def test_log2_approx_shift():
    N = 2 ** 744
    x = sparse([(3 * N, 3 * N)])
    assert log2_approx(x, 3 * N) == pytest.approx(math.log2(3 * N))
    assert log2_approx(8, 1) == 2.0
