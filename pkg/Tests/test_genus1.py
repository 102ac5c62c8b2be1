import pytest

from genus1 import brute_force_genus, enumerate_genus, sort_sequences
from multseq import TRIVIAL, MultiplicitySequence, validate_sequence

GEN1_COUNTS = [1, 1, 2, 3, 4, 6, 8, 10, 13, 17, 21, 26, 31, 36, 47, 55]


def seq(*entries):
    return MultiplicitySequence(tuple(entries))


def test_genus_zero_is_the_natural_numbers():
    assert enumerate_genus(0) == (TRIVIAL,)


def test_genus_one():
    assert enumerate_genus(1) == (seq(2),)


def test_genus_two_largest_first():
    assert enumerate_genus(2) == (seq(3), seq(2, 2))


def test_genus_three():
    assert enumerate_genus(3) == (seq(4), seq(3, 2), seq(2, 2, 2))


@pytest.mark.parametrize("n, expected", list(enumerate(GEN1_COUNTS)))
def test_counts(n, expected):
    assert len(enumerate_genus(n)) == expected


@pytest.mark.parametrize("n", range(0, 14))
def test_matches_brute_force(n):
    assert set(enumerate_genus(n)) == brute_force_genus(n)


@pytest.mark.parametrize("n", range(1, 12))
def test_every_member_is_valid_with_genus_n(n):
    for M in enumerate_genus(n):
        assert validate_sequence(list(M.entries)) == M
        assert M.genus == n


def test_output_is_sorted_and_unique():
    result = enumerate_genus(9)
    assert list(result) == sort_sequences(set(result))
    assert len(set(result)) == len(result)


def test_negative_genus_is_rejected():
    with pytest.raises(ValueError):
        enumerate_genus(-1)
    with pytest.raises(ValueError):
        brute_force_genus(-1)
