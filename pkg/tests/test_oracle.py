import pytest

from pwords import oracle
from pwords.words import enumerate_words, from_partition


def test_naive_partitions_examples():
    assert len(oracle.naive_partitions(4)) == 5
    assert oracle.naive_partitions(1) == [(1,)]
    assert len(oracle.naive_partitions(6)) == 11
    assert oracle.naive_partitions(4) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]


@pytest.mark.parametrize("d, n, count", [(2, 5, 24), (3, 6, 140), (2, 1, 1), (3, 1, 1)])
def test_naive_ddim_counts(d, n, count):
    ps = oracle.naive_ddim_partitions(d, n)
    assert len(ps) == count
    assert all(p.is_valid() and p.n == n for p in ps)


def test_naive_edges_examples():
    assert len(oracle.naive_edges(1, 4)) == 5
    assert oracle.naive_edges(1, 2) == {("0", "1")}
    assert oracle.naive_edges(2, 3) == {
        ("00", "10"), ("00", "20"), ("10", "20"), ("10", "11"),
        ("20", "21"), ("11", "21"), ("21", "22"), ("20", "22"),
    }


def test_naive_edges_size_guard():
    from pwords.errors import BudgetExceededError

    with pytest.raises(BudgetExceededError):
        oracle.naive_edges(1, 30)


def test_naive_partitions_image_is_enumeration():
    for n in range(1, 21):
        words = sorted(from_partition(list(p)) for p in oracle.naive_partitions(n))
        assert words == list(enumerate_words(1, n).words)


@pytest.mark.parametrize("d, top", [(2, 8), (3, 7)])
def test_naive_ddim_counts_match_enumeration(d, top):
    for n in range(1, top + 1):
        assert len(oracle.naive_ddim_partitions(d, n)) == len(enumerate_words(d, n))
        assert oracle.naive_words(d, n) == list(enumerate_words(d, n).words)
