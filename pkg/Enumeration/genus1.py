"""
========================================
ARF ENUMERATION - ARF NUMERICAL SEMIGROUPS OF GIVEN GENUS
========================================

Enumeration of Gen(n), the multiplicity sequences of all the Arf numerical
semigroups with genus n, by a single left-to-right pass over the working
sets U^n(i), plus an independent brute-force oracle.

Pipeline Components:
- enumerate_genus(): the working-set pass (memoised per n)
- brute_force_genus(): partitions of n filtered by sequence validation
- sort_sequences(): deterministic output order

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterable, List, Set, Tuple

from multseq import (
    TRIVIAL,
    MultiplicitySequence,
    SequenceError,
    contains,
    prepend,
    validate_sequence,
)

logger = logging.getLogger(__name__)


@dataclass
class GenusWorkingSets:
    """
    Working state of one Gen(n) pass.

    Attributes:
        n (int): target genus
        U (dict): index i -> set of genus-i sequences M with M[1] + i - 1 <= n
        result (set): sequences of genus n found so far
    """

    n: int
    U: Dict[int, Set[MultiplicitySequence]] = field(default_factory=dict)
    result: Set[MultiplicitySequence] = field(default_factory=set)

    def seed(self):
        self.result = {MultiplicitySequence((self.n + 1,))}
        self.U = {
            i: ({MultiplicitySequence((i + 1,))} if i <= self.n // 2 else set())
            for i in range(1, self.n)
        }

    def consume(self, i: int):
        n = self.n
        head = n - i + 1
        upper = (n - i + 2) // 2
        for M in self.U[i]:
            if contains(M, head):
                self.result.add(prepend(head, M))
            for k in range(2, upper + 1):
                if contains(M, k):
                    # writes land on i + k - 1 > i, never on a consumed index
                    self.U[i + k - 1].add(prepend(k, M))


def sort_sequences(sequences: Iterable[MultiplicitySequence]) -> List[MultiplicitySequence]:
    """Largest entry vector first, e.g. [3] before [2,2]."""
    return sorted(sequences, reverse=True)


@lru_cache(maxsize=None)
def enumerate_genus(n: int) -> Tuple[MultiplicitySequence, ...]:
    """
    Compute Gen(n).

    Args:
        n (int): nonnegative genus

    Returns:
        tuple: the multiplicity sequences of genus n, largest first
    """
    if n < 0:
        raise ValueError(f"genus must be nonnegative, got {n}")
    if n == 0:
        return (TRIVIAL,)

    state = GenusWorkingSets(n)
    state.seed()
    for i in range(1, n):
        state.consume(i)

    logger.debug(f"Gen({n}): {len(state.result)} sequences")
    return tuple(sort_sequences(state.result))


def _partitions(total: int, largest: int):
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def brute_force_genus(n: int) -> Set[MultiplicitySequence]:
    """
    Independent oracle for Gen(n).

    A canonical sequence other than [1] has every entry >= 2 and genus
    sum(m_i - 1), so its shifted entries form a partition of n. Every
    partition is tried and kept when the shifted vector validates.
    """
    if n < 0:
        raise ValueError(f"genus must be nonnegative, got {n}")
    if n == 0:
        return {TRIVIAL}
    found = set()
    for parts in _partitions(n, n):
        try:
            found.add(validate_sequence([part + 1 for part in parts]))
        except SequenceError:
            continue
    return found
