import pytest
from hypothesis import given
from hypothesis import strategies as st

from genus1 import enumerate_genus
from multseq import (
    TRIVIAL,
    UNBOUNDED,
    InvalidEntry,
    MultiplicitySequence,
    NoSuffixSumWitness,
    NonCanonicalTail,
    NotNonincreasing,
    admits,
    compatibility,
    contains,
    prepend,
    s_values,
    semigroup_view,
    sequence_from_csv_cell,
    sequence_from_json,
    tail,
    validate_sequence,
)


def seq(*entries):
    return MultiplicitySequence(tuple(entries))


sequences_of_small_genus = st.integers(min_value=0, max_value=9).flatmap(
    lambda n: st.sampled_from(enumerate_genus(n))
)


@pytest.mark.parametrize(
    "raw, conductor, genus",
    [
        ([1], 0, 0),
        ([2], 2, 1),
        ([3, 2], 5, 3),
        ([2, 2], 4, 2),
        ([4, 4, 4, 2], 14, 10),
    ],
)
def test_validate_sequence_derives_conductor_and_genus(raw, conductor, genus):
    M = validate_sequence(raw)
    assert M.conductor == conductor
    assert M.genus == genus


def test_validate_sequence_rejects_increasing_step():
    with pytest.raises(NotNonincreasing) as info:
        validate_sequence([2, 3])
    assert info.value.index == 1
    assert "entry 1 is smaller than entry 2" in str(info.value)


def test_nonincreasing_error_uses_one_based_index():
    with pytest.raises(NotNonincreasing) as info:
        validate_sequence([4, 2, 3])
    assert info.value.index == 2


def test_validate_sequence_rejects_trailing_one():
    with pytest.raises(NonCanonicalTail):
        validate_sequence([3, 1])


def test_validate_sequence_rejects_missing_witness():
    # 3 is neither 2 nor 2 + 2
    with pytest.raises(NoSuffixSumWitness) as info:
        validate_sequence([3, 2, 2])
    assert info.value.index == 1


@pytest.mark.parametrize("raw", [[], [0], [-2], [2.0], [True]])
def test_validate_sequence_rejects_bad_entries(raw):
    with pytest.raises(InvalidEntry):
        validate_sequence(raw)


def test_trailing_ones_supply_witnesses():
    assert validate_sequence([5, 2]).entries == (5, 2)


@pytest.mark.parametrize(
    "x, expected",
    [(0, True), (1, False), (2, False), (3, True), (4, False), (5, True), (6, True), (100, True)],
)
def test_contains(x, expected):
    assert contains(seq(3, 2), x) is expected


def test_trivial_sequence_is_all_of_n():
    assert all(contains(TRIVIAL, x) for x in range(10))
    assert semigroup_view(TRIVIAL).gaps() == []


def test_semigroup_view():
    view = semigroup_view(seq(3, 2))
    assert view.small_elements == (0, 3)
    assert view.gaps() == [1, 2, 4]
    assert view.genus == 3


def test_prepend_and_tail_stay_canonical():
    assert prepend(2, TRIVIAL) == seq(2)
    assert prepend(1, TRIVIAL) == TRIVIAL
    assert prepend(3, seq(2)) == seq(3, 2)
    assert tail(seq(2)) == TRIVIAL
    assert tail(seq(3, 2)) == seq(2)


def test_entry_is_one_past_the_end():
    M = seq(3, 2)
    assert [M.entry(j) for j in range(1, 6)] == [3, 2, 1, 1, 1]


def test_s_values():
    assert s_values(seq(2, 2), 3) == (2, 4, 4)
    assert s_values(seq(3), 2) == (4, 3)
    assert s_values(TRIVIAL, 2) == (2, 3)


@pytest.mark.parametrize(
    "left, right, expected",
    [
        ((1,), (3,), 2),
        ((1,), (2, 2), 3),
        ((1,), (2,), 2),
        ((2, 2), (3, 2), 2),
        ((4,), (3, 2), 3),
        ((2,), (3,), 3),
        ((2,), (2, 2), 2),
        ((4, 4, 4, 2), (4, 2, 2), 2),
    ],
)
def test_compatibility(left, right, expected):
    assert compatibility(seq(*left), seq(*right)) == expected


def test_equal_sequences_are_unbounded():
    assert compatibility(seq(2), seq(2)) is UNBOUNDED
    assert admits(10**6, UNBOUNDED)
    assert not admits(3, 2)


@given(sequences_of_small_genus, sequences_of_small_genus)
def test_compatibility_is_symmetric_and_admits_level_one(M1, M2):
    comp = compatibility(M1, M2)
    assert comp == compatibility(M2, M1)
    assert admits(1, comp)
    if M1 != M2:
        assert comp >= 2


@given(sequences_of_small_genus)
def test_genus_counts_gaps(M):
    assert len(semigroup_view(M).gaps()) == M.genus


def test_json_and_csv_cells():
    assert sequence_from_json([3, 2]) == seq(3, 2)
    assert seq(3, 2).to_json() == [3, 2]
    assert sequence_from_csv_cell("3,2") == seq(3, 2)
    assert seq(3, 2).to_csv_cell() == "3,2"
    with pytest.raises(InvalidEntry):
        sequence_from_json("3,2")
    with pytest.raises(InvalidEntry):
        sequence_from_csv_cell("3,x")


def test_ordering_is_lexicographic_on_entries():
    assert sorted([seq(2, 2), seq(3), TRIVIAL]) == [TRIVIAL, seq(2, 2), seq(3)]
    assert str(seq(3, 2)) == "[3,2]"
