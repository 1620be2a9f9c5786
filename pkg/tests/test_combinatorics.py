import pytest

from wcqsym.combinatorics import (
    check_composition,
    check_weak_composition,
    coarsen,
    enumerate_compositions,
    enumerate_left_weak_compositions_up_to,
    enumerate_weak_compositions,
    enumerate_weak_compositions_up_to,
    format_composition,
    is_left_weak,
    last_positive_index,
    parse_composition,
    partition_vectors,
    split_trailing_zeros,
    strip_zeros,
    total_size,
    zero_length,
)


@pytest.mark.parametrize(
    ["text", "expected"],
    [
        ("", ()),
        ("   ", ()),
        ("0", (0,)),
        ("0,2,0", (0, 2, 0)),
        (" 1, 2 ", (1, 2)),
        ("10,0", (10, 0)),
    ],
)
def test_parse_composition(text, expected):
    assert parse_composition(text) == expected


@pytest.mark.parametrize("text", ["a", "1,,2", "-1", "1.5", "1;2", ","])
def test_parse_composition_invalid(text):
    with pytest.raises(ValueError):
        parse_composition(text)


@pytest.mark.parametrize("alpha", [(), (0,), (0, 2, 0), (3, 1, 0, 0)])
def test_format_composition(alpha):
    assert parse_composition(format_composition(alpha)) == alpha


def test_check_weak_composition():
    assert check_weak_composition([0, 1]) == (0, 1)
    with pytest.raises(ValueError):
        check_weak_composition((1, -1))
    with pytest.raises(ValueError):
        check_weak_composition((True,))


def test_check_composition():
    assert check_composition([1, 2]) == (1, 2)
    with pytest.raises(ValueError):
        check_composition((1, 0))


@pytest.mark.parametrize(
    ["alpha", "left_weak", "last", "split"],
    [
        ((), True, 0, ((), 0)),
        ((0,), False, 0, ((), 1)),
        ((0, 0), False, 0, ((), 2)),
        ((2, 1), True, 2, ((2, 1), 0)),
        ((0, 2), True, 2, ((0, 2), 0)),
        ((1, 0, 2, 0, 0), False, 3, ((1, 0, 2), 2)),
    ],
)
def test_trailing_zeros(alpha, left_weak, last, split):
    assert is_left_weak(alpha) == left_weak
    assert last_positive_index(alpha) == last
    assert split_trailing_zeros(alpha) == split


def test_statistics():
    assert total_size((0, 2, 0)) == 4
    assert zero_length((0, 2, 0)) == 2
    assert strip_zeros((0, 2, 0, 1)) == (2, 1)


def test_enumerate_compositions():
    assert enumerate_compositions(0) == [()]
    assert enumerate_compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    for k in range(1, 8):
        assert len(enumerate_compositions(k)) == 2 ** (k - 1)
    with pytest.raises(ValueError):
        enumerate_compositions(-1)


def test_enumerate_weak_compositions():
    assert enumerate_weak_compositions(2, 2) == [(0, 2), (1, 1), (2, 0)]
    assert enumerate_weak_compositions(0, 0) == [()]
    assert enumerate_weak_compositions(1, 0) == []


def test_enumerate_up_to():
    assert enumerate_weak_compositions_up_to(1) == [(), (0,), (1,)]
    assert all(total_size(a) <= 3 for a in enumerate_weak_compositions_up_to(3))
    assert all(is_left_weak(a) for a in enumerate_left_weak_compositions_up_to(3))
    assert (0, 0) in enumerate_weak_compositions_up_to(2)
    assert (0, 0) not in enumerate_left_weak_compositions_up_to(2)


def test_coarsen():
    assert coarsen((1, 2), (3, 0, 1)) == (3, 1)
    assert coarsen((3,), (3, 0, 1)) == (4,)
    assert coarsen((1, 1, 1), (3, 0, 1)) == (3, 0, 1)
    with pytest.raises(ValueError):
        coarsen((1, 1), (3, 0, 1))


def test_partition_vectors():
    word = ((1, 2), (0, 1), (3, 1))
    assert partition_vectors(word, (2, 1)) == [((1, 2), (0, 1)), ((3, 1),)]
