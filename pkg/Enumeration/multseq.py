"""
========================================
ARF ENUMERATION - MULTIPLICITY SEQUENCES
========================================

This module implements multiplicity sequences, the Arf numerical semigroups
they encode, and the compatibility level between two sequences.

A multiplicity sequence is stored in its canonical form [m1, ..., mk] where
mk is the last entry different from 1; the constant sequence of ones is the
single vector [1] and encodes N itself. Entries past the stored length are 1.

Features:
- Validation of raw integer vectors (nonincreasing, canonical tail,
  suffix-sum witness for every entry)
- Semigroup view: conductor, genus, small elements
- Membership test by binary search over partial sums
- Suffix-sum witnesses s_k and the compatibility Comp(M1, M2)
- JSON / CSV cell serialization

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

import logging
from bisect import bisect_left
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import accumulate
from typing import List, Sequence, Tuple, Union

logger = logging.getLogger(__name__)


# ---------------- Errors ----------------


class SequenceError(ValueError):
    """Base class for invalid multiplicity sequence input."""


class InvalidEntry(SequenceError):
    def __init__(self, message):
        super().__init__(message)


class NotNonincreasing(SequenceError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"entry {index} is smaller than entry {index + 1}")


class NoSuffixSumWitness(SequenceError):
    def __init__(self, index):
        self.index = index
        super().__init__(
            f"entry {index} is not a sum of an initial run of the entries after it"
        )


class NonCanonicalTail(SequenceError):
    def __init__(self):
        super().__init__("sequence ends in 1 but is not [1]")


# ---------------- Unbounded compatibility ----------------


class _Unbounded:
    """Compatibility of two equal sequences: any gluing level is admissible."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Unbounded"

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()

Compatibility = Union[int, _Unbounded]


def admits(level: int, comp: Compatibility) -> bool:
    """True when a gluing at `level` respects the compatibility bound `comp`."""
    return comp is UNBOUNDED or level <= comp


# ---------------- Domain types ----------------


@dataclass(frozen=True, order=True)
class MultiplicitySequence:
    """
    Canonical multiplicity sequence.

    Only `entries` takes part in equality, hashing and ordering; the other
    attributes are derived once at construction.

    Attributes:
        entries (tuple): canonical entries [m1, ..., mk]
        prefix (tuple): partial sums m1, m1+m2, ..., m1+...+mk
        conductor (int): c(M), 0 for [1]
        genus (int): c(M) - l(M), 0 for [1]
    """

    entries: Tuple[int, ...]
    prefix: Tuple[int, ...] = field(init=False, compare=False, repr=False)
    conductor: int = field(init=False, compare=False, repr=False)
    genus: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        prefix = tuple(accumulate(entries))
        object.__setattr__(self, "prefix", prefix)
        if entries == (1,):
            object.__setattr__(self, "conductor", 0)
            object.__setattr__(self, "genus", 0)
        else:
            object.__setattr__(self, "conductor", prefix[-1])
            object.__setattr__(self, "genus", prefix[-1] - len(entries))

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def is_trivial(self) -> bool:
        return self.entries == (1,)

    def entry(self, j: int) -> int:
        """1-based entry; positions past the stored length hold 1."""
        if j <= len(self.entries):
            return self.entries[j - 1]
        return 1

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "[" + ",".join(str(m) for m in self.entries) + "]"

    def to_json(self) -> List[int]:
        return list(self.entries)

    def to_csv_cell(self) -> str:
        return ",".join(str(m) for m in self.entries)


TRIVIAL = MultiplicitySequence((1,))


@dataclass(frozen=True)
class ArfNumericalSemigroupView:
    source: MultiplicitySequence
    conductor: int
    genus: int
    small_elements: Tuple[int, ...]

    def gaps(self) -> List[int]:
        return [x for x in range(self.conductor) if not contains(self.source, x)]


# ---------------- Operations ----------------


def _witness_exists(values: Sequence[int], n: int) -> bool:
    # values are canonical; positions past the end count as 1
    target = values[n]
    running = 0
    for m in values[n + 1 :]:
        running += m
        if running == target:
            return True
        if running > target:
            return False
    # the trailing ones reach any remaining deficit exactly
    return True


def validate_sequence(v: Sequence[int]) -> MultiplicitySequence:
    """
    Validate a raw integer vector as a canonical multiplicity sequence.

    Args:
        v: nonempty vector of positive integers

    Returns:
        MultiplicitySequence: the validated sequence

    Raises:
        InvalidEntry: empty input or a non-positive / non-integer entry
        NotNonincreasing: some entry is smaller than its successor
        NonCanonicalTail: the vector ends in 1 but is not [1]
        NoSuffixSumWitness: some m_n is not m_{n+1} + ... + m_{l(n)}
    """
    values = list(v)
    if not values:
        raise InvalidEntry("multiplicity sequence must be nonempty")
    for m in values:
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise InvalidEntry(f"entries must be positive integers, got {m!r}")
    for i in range(len(values) - 1):
        if values[i] < values[i + 1]:
            raise NotNonincreasing(i + 1)
    if values[-1] == 1 and len(values) > 1:
        raise NonCanonicalTail()
    for n in range(len(values)):
        if not _witness_exists(values, n):
            raise NoSuffixSumWitness(n + 1)
    return MultiplicitySequence(tuple(values))


def semigroup_view(M: MultiplicitySequence) -> ArfNumericalSemigroupView:
    """
    Describe the numerical semigroup of M.

    Args:
        M (MultiplicitySequence): canonical sequence

    Returns:
        ArfNumericalSemigroupView: conductor, genus and the elements below
            the conductor (0 and the proper prefix sums)
    """
    if M.is_trivial:
        small = ()
    else:
        small = (0,) + M.prefix[:-1]
    return ArfNumericalSemigroupView(
        source=M, conductor=M.conductor, genus=M.genus, small_elements=small
    )


def contains(M: MultiplicitySequence, x: int) -> bool:
    """Membership of x in AS(M)."""
    if x == 0 or x >= M.conductor:
        return True
    pos = bisect_left(M.prefix, x)
    return pos < len(M.prefix) and M.prefix[pos] == x


def prepend(k: int, M: MultiplicitySequence) -> MultiplicitySequence:
    """[k | M], kept canonical. No validation."""
    if M.is_trivial:
        return MultiplicitySequence((k,)) if k != 1 else TRIVIAL
    return MultiplicitySequence((k,) + M.entries)


def tail(M: MultiplicitySequence) -> MultiplicitySequence:
    """M without its first entry, kept canonical."""
    rest = M.entries[1:]
    if not rest:
        return TRIVIAL
    return MultiplicitySequence(rest)


def s_values(M: MultiplicitySequence, upto: int) -> Tuple[int, ...]:
    """
    Suffix-sum witnesses s_1, ..., s_upto.

    s_k is the index with M[k] = M[k+1] + ... + M[s_k]; beyond the stored
    length every entry is 1 so s_k = k + 1 there.
    """
    result = []
    for k in range(1, upto + 1):
        target = M.entry(k)
        running, j = 0, k
        while running < target:
            j += 1
            running += M.entry(j)
        result.append(j)
    return tuple(result)


@lru_cache(maxsize=None)
def compatibility(M1: MultiplicitySequence, M2: MultiplicitySequence) -> Compatibility:
    """
    Highest admissible gluing level between branches carrying M1 and M2.

    Returns UNBOUNDED for equal sequences; otherwise the minimum of
    min(s_{1,k}, s_{2,k}) over the indices k where the witnesses differ.
    """
    if M1 == M2:
        return UNBOUNDED
    bound = max(M1.length, M2.length) + 1
    s1 = s_values(M1, bound)
    s2 = s_values(M2, bound)
    levels = [min(a, b) for a, b in zip(s1, s2) if a != b]
    # distinct canonical sequences always differ before both tails are all ones
    assert levels, f"no differing witness for {M1} and {M2}"
    return min(levels)


def sequence_from_json(data) -> MultiplicitySequence:
    """Parse and validate a JSON integer array."""
    if not isinstance(data, list):
        raise InvalidEntry(f"expected an integer array, got {data!r}")
    return validate_sequence(data)


def sequence_from_csv_cell(cell: str) -> MultiplicitySequence:
    """Parse and validate a comma separated cell such as "4,2,2"."""
    try:
        values = [int(part) for part in cell.split(",") if part.strip()]
    except ValueError as exc:
        raise InvalidEntry(f"bad CSV cell {cell!r}") from exc
    return validate_sequence(values)
