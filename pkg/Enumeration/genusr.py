"""
========================================
ARF ENUMERATION - UNTWISTED AND TWISTED TREES OF GIVEN GENUS
========================================

Enumeration of Gen(r,n), the untwisted multiplicity trees of the local Arf
good semigroups of N^r with genus n, and of the full set including twisted
trees obtained by branch permutations.

Pipeline Components:
1. GenusTable: bottom-up memo of Gen(t,k), filled in ascending (t,k) order
2. enumerate_genus_trees(): split at t = floor(r/2), join left and right
   trees at every admissible seam level, close under reversal
3. enumerate_all_trees(): permutation orbits of every untwisted matrix
4. count_genus_trees(): first-branch profile DP, counts without building trees
5. count_table() / ng_row(): the r x n count tables as pandas DataFrames

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

import logging
from collections import deque
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from genus1 import enumerate_genus
from multseq import UNBOUNDED, admits, compatibility
from tree import (
    TreeMatrix,
    UntwistedTree,
    join,
    permute,
    reverse,
    to_matrix,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_TWISTED_RANK = 8
TABLE_INDEX_LABEL = r"r\n"


class RankTooLargeForTwisted(ValueError):
    def __init__(self, rank, cap):
        self.rank = rank
        self.cap = cap
        super().__init__(
            f"twisted enumeration of rank {rank} exceeds the configured cap {cap}"
        )


def _ceil_half(value: int) -> int:
    return -((-value) // 2)


def _check_bounds(r: int, n: int):
    if r < 1:
        raise ValueError(f"rank must be positive, got {r}")
    if n < 0:
        raise ValueError(f"genus must be nonnegative, got {n}")


# ---------------- Memo table ----------------


class GenusTable:
    """
    Bottom-up memo of Gen(t,k).

    Attributes:
        split (int or None): left rank used at every level where it is a
            proper split; None picks floor(t/2)
        use_reversal (bool): restrict the left genus to ceil((k-p-1)/2) and
            recover the rest as reversals (only sound for left rank <= t/2)
        memo (dict): (t, k) -> frozenset of UntwistedTree
    """

    def __init__(self, split: Optional[int] = None, use_reversal: bool = True):
        self.split = split
        self.use_reversal = use_reversal
        self.memo: Dict[Tuple[int, int], FrozenSet[UntwistedTree]] = {}

    def split_for(self, t: int) -> int:
        if self.split is not None and 1 <= self.split < t:
            return self.split
        return t // 2

    def required_ranks(self, r: int) -> List[int]:
        needed: Set[int] = set()
        stack = [r]
        while stack:
            t = stack.pop()
            if t in needed:
                continue
            needed.add(t)
            if t > 1:
                s = self.split_for(t)
                stack.extend([s, t - s])
        return sorted(needed)

    def fill(self, r: int, n: int):
        """Compute every entry Gen(r,n) depends on, ranks ascending then genera."""
        for t in self.required_ranks(r):
            for k in range(n + 1):
                if (t, k) not in self.memo:
                    self.memo[(t, k)] = self._build(t, k)
                    logger.debug(f"Gen({t},{k}): {len(self.memo[(t, k)])} trees")

    def get(self, t: int, k: int) -> FrozenSet[UntwistedTree]:
        if (t, k) not in self.memo:
            self.fill(t, k)
        return self.memo[(t, k)]

    def _build(self, t: int, k: int) -> FrozenSet[UntwistedTree]:
        if t == 1:
            return frozenset(UntwistedTree((M,), ()) for M in enumerate_genus(k))
        if k < t - 1:
            return frozenset()

        s = self.split_for(t)
        halve = self.use_reversal and 2 * s <= t
        found: Set[UntwistedTree] = set()
        for p in range(1, k - t + 3):
            # right part must keep genus >= (t - s) - 1
            upper = k - p - (t - s) + 1
            if halve:
                upper = min(upper, _ceil_half(k - p - 1))
            for k1 in range(s - 1, upper + 1):
                k2 = k - p - k1
                for left in self.memo[(s, k1)]:
                    last = left.sequences[-1]
                    for right in self.memo[(t - s, k2)]:
                        if admits(p, compatibility(last, right.sequences[0])):
                            found.add(join(left, p, right))

        if halve:
            found |= {reverse(T) for T in found}
        return frozenset(found)


def sort_trees(trees: Iterable) -> list:
    """Largest (sequences, levels) first, as for Gen(n)."""
    return sorted(trees, reverse=True)


def enumerate_genus_trees(
    r: int,
    n: int,
    split: Optional[int] = None,
    use_reversal: bool = True,
    table: Optional[GenusTable] = None,
) -> List[UntwistedTree]:
    """
    Compute Gen(r,n).

    Args:
        r (int): rank, at least 1
        n (int): genus, nonnegative
        split (int, optional): left rank of the recursion, floor(r/2) if None
        use_reversal (bool): halve the left genus range and add reversals
        table (GenusTable, optional): shared memo; its own split/reversal
            settings win over the two arguments above

    Returns:
        list: the untwisted trees, sorted largest first
    """
    _check_bounds(r, n)
    if table is None:
        table = GenusTable(split=split, use_reversal=use_reversal)
    trees = table.get(r, n)
    logger.info(f"Gen({r},{n}): {len(trees)} untwisted trees")
    return sort_trees(trees)


# ---------------- Twisted trees ----------------


def adjacent_swaps(r: int) -> List[Tuple[int, ...]]:
    """Transpositions (a, a+1) as permutation tuples; they generate S_r."""
    swaps = []
    for a in range(r - 1):
        sigma = list(range(r))
        sigma[a], sigma[a + 1] = sigma[a + 1], sigma[a]
        swaps.append(tuple(sigma))
    return swaps


def permutation_orbit(matrix: TreeMatrix) -> Set[TreeMatrix]:
    """All branch relabellings of a matrix, breadth-first over adjacent swaps."""
    swaps = adjacent_swaps(matrix.rank)
    orbit = {matrix}
    queue = deque([matrix])
    while queue:
        current = queue.popleft()
        for sigma in swaps:
            candidate = permute(current, sigma)
            if candidate not in orbit:
                orbit.add(candidate)
                queue.append(candidate)
    return orbit


def enumerate_all_trees(
    r: int,
    n: int,
    max_rank: int = DEFAULT_MAX_TWISTED_RANK,
    table: Optional[GenusTable] = None,
    progress: bool = False,
) -> List[TreeMatrix]:
    """
    Compute the set of all trees, twisted ones included, as level matrices.

    Raises:
        RankTooLargeForTwisted: r > max_rank
    """
    _check_bounds(r, n)
    if r > max_rank:
        raise RankTooLargeForTwisted(r, max_rank)

    untwisted = enumerate_genus_trees(r, n, table=table)
    result: Set[TreeMatrix] = set()
    for T in tqdm(untwisted, desc=f"Orbits r={r} n={n}", leave=False, disable=not progress):
        matrix = to_matrix(T)
        # orbits are disjoint or equal
        if matrix in result:
            continue
        result |= permutation_orbit(matrix)

    logger.info(f"Gen-bar({r},{n}): {len(result)} trees")
    return sort_trees(result)


# ---------------- Counting ----------------


_UNBOUNDED_LEVEL = np.iinfo(np.int64).max


@lru_cache(maxsize=None)
def _comp_matrix(g: int, h: int) -> np.ndarray:
    """Comp(M, f) for M in Gen(g) and f in Gen(h); equal pairs map to int64 max."""
    rows = enumerate_genus(g)
    cols = enumerate_genus(h)
    matrix = np.empty((len(rows), len(cols)), dtype=np.int64)
    for a, M in enumerate(rows):
        for b, f in enumerate(cols):
            comp = compatibility(M, f)
            matrix[a, b] = _UNBOUNDED_LEVEL if comp is UNBOUNDED else comp
    return matrix


@lru_cache(maxsize=None)
def _admissible(g: int, h: int, p: int) -> np.ndarray:
    return (_comp_matrix(g, h) >= p).astype(object)


class TreeCounter:
    """
    First-branch profile DP.

    profile(t, k)[g] is an object array over Gen(g): entry a counts the trees
    of Gen(t,k) whose first branch is Gen(g)[a]. Counts are Python integers.
    """

    def __init__(self):
        self.profiles: Dict[Tuple[int, int], Dict[int, np.ndarray]] = {}

    def profile(self, t: int, k: int) -> Dict[int, np.ndarray]:
        key = (t, k)
        if key in self.profiles:
            return self.profiles[key]
        if t == 1:
            result = {k: np.ones(len(enumerate_genus(k)), dtype=object)}
        elif k < t - 1:
            result = {}
        else:
            result = {}
            for g in range(0, k - t + 2):
                acc = np.zeros(len(enumerate_genus(g)), dtype=object)
                # rest keeps genus k' >= t - 2, seam level p = k - g - k' >= 1
                for rest in range(t - 2, k - g):
                    p = k - g - rest
                    for h, counts in self.profile(t - 1, rest).items():
                        acc = acc + _admissible(g, h, p).dot(counts)
                if acc.any():
                    result[g] = acc
        self.profiles[key] = result
        return result

    def count(self, t: int, k: int) -> int:
        return int(sum(int(v.sum()) for v in self.profile(t, k).values()))


def count_genus_trees(r: int, n: int, counter: Optional[TreeCounter] = None) -> int:
    """|Gen(r,n)| without materialising the trees."""
    _check_bounds(r, n)
    counter = counter or TreeCounter()
    return counter.count(r, n)


def ng(n: int, counter: Optional[TreeCounter] = None) -> int:
    """Number of local untwisted Arf semigroups of genus n over all ranks."""
    if n < 0:
        raise ValueError(f"genus must be nonnegative, got {n}")
    counter = counter or TreeCounter()
    return sum(counter.count(r, n) for r in range(1, n + 2))


def ng_row(n_max: int, counter: Optional[TreeCounter] = None) -> List[int]:
    """NG(0), ..., NG(n_max) sharing one counter."""
    counter = counter or TreeCounter()
    return [ng(n, counter) for n in range(n_max + 1)]


def count_table(
    r_max: int,
    n_max: int,
    twisted: bool = False,
    materialize: bool = False,
    with_ng: bool = False,
    progress: bool = True,
) -> pd.DataFrame:
    """
    Build the r x n cardinality table.

    The twisted rank cap does not apply here: the requested rows are
    enumerated whatever r_max is.

    Args:
        r_max (int): last row, rows are 1..r_max
        n_max (int): last column, columns are 0..n_max
        twisted (bool): count twisted trees too (always materialised)
        materialize (bool): count untwisted cells by listing the trees
        with_ng (bool): append the NG(n) row

    Returns:
        pd.DataFrame: integer counts indexed by r
    """
    if r_max < 1 or n_max < 0:
        raise ValueError(f"table bounds must be positive, got r_max={r_max}, n_max={n_max}")

    counter = TreeCounter()
    memo = GenusTable()
    rows = []
    for r in tqdm(range(1, r_max + 1), desc="Table rows", leave=False, disable=not progress):
        row = []
        for n in range(n_max + 1):
            if n < r - 1:
                row.append(0)
            elif twisted:
                row.append(len(enumerate_all_trees(r, n, max_rank=r_max, table=memo)))
            elif materialize:
                row.append(len(memo.get(r, n)))
            else:
                row.append(counter.count(r, n))
        rows.append(row)

    table = pd.DataFrame(rows, index=list(range(1, r_max + 1)), columns=list(range(n_max + 1)))
    if with_ng:
        table.loc["NG"] = ng_row(n_max, counter)
    table.index.name = TABLE_INDEX_LABEL
    logger.info(f"Count table {r_max}x{n_max + 1} ready (twisted={twisted})")
    return table
