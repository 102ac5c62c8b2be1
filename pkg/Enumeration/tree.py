"""
========================================
ARF ENUMERATION - MULTIPLICITY TREES
========================================

This module provides the multiplicity trees of local Arf good semigroups of
N^r, in the untwisted vector form T_E = (p1, ..., p_{r-1}) and in the general
level-matrix form M(T)_E = (p_{i,j}), together with the explicit node grid
and a box-bounded expansion of the semigroup a tree generates.

Features:
- Untwisted trees: validation against pairwise compatibility, genus,
  conductor vector, reversal, conversion to matrix form
- Level matrices: branch permutation, untwisted test, realizability check
  and untwisting for raw input
- Node grid n_i^j with shared glued nodes and lazy canonical tails
- Finite good semigroups: subtree sums clipped to a box plus the
  saturated region above the conductor
- JSON encoding of both tree forms

Conventions:
- Levels are 1-based, branch indices are 0-based internally and 1-based
  in every error message
- Entries of a sequence past its length are 1

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

import logging
from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import numpy as np

from multseq import (
    MultiplicitySequence,
    admits,
    compatibility,
    sequence_from_json,
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]

# Largest rank for which a raw matrix is untwisted by exhaustive search
MAX_UNTWIST_SEARCH_RANK = 8


# ---------------- Errors ----------------


class TreeError(ValueError):
    """Base class for invalid multiplicity tree input."""


class InvalidGluing(TreeError):
    pass


class GluingExceedsCompatibility(TreeError):
    def __init__(self, index, level, bound, other=None):
        self.index = index
        self.other = other if other is not None else index + 1
        self.level = level
        self.bound = bound
        super().__init__(
            f"seam {index}: gluing level {level} between branches {index} and "
            f"{self.other} exceeds their compatibility {bound}"
        )


class BoxTooSmall(TreeError):
    def __init__(self, box, conductor):
        self.box = box
        self.conductor = conductor
        super().__init__(
            f"box {tuple(box)} must exceed the conductor {tuple(conductor)} "
            "in every coordinate"
        )


class UnrealizableMatrix(TreeError):
    pass


# ---------------- Domain types ----------------


@dataclass(frozen=True, order=True)
class UntwistedTree:
    """
    Untwisted multiplicity tree T_E.

    Attributes:
        sequences (tuple): E = (M1, ..., Mr)
        gluing (tuple): (p1, ..., p_{r-1}), p_i glues branches i and i+1
    """

    sequences: Tuple[MultiplicitySequence, ...]
    gluing: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.sequences)

    def level(self, i: int, j: int) -> Optional[int]:
        """Gluing level of branches i and j (0-based); None on the diagonal."""
        if i == j:
            return None
        lo, hi = min(i, j), max(i, j)
        return min(self.gluing[lo:hi])

    def __str__(self):
        seqs = ",".join(str(M) for M in self.sequences)
        return f"E=({seqs}) p=({','.join(str(p) for p in self.gluing)})"


@dataclass(frozen=True, order=True)
class TreeMatrix:
    """
    General multiplicity tree as E plus the level matrix.

    `levels` is the full r x r row-major matrix; only the strict upper
    triangle is meaningful, the rest is zero as in M(T)_E.
    """

    sequences: Tuple[MultiplicitySequence, ...]
    levels: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.sequences)

    def level(self, i: int, j: int) -> Optional[int]:
        if i == j:
            return None
        return self.levels[min(i, j)][max(i, j)]

    def __str__(self):
        seqs = ",".join(str(M) for M in self.sequences)
        rows = ",".join("[" + ",".join(str(p) for p in row) + "]" for row in self.levels)
        return f"E=({seqs}) levels=[{rows}]"


TreeLike = Union[UntwistedTree, TreeMatrix]


@dataclass(frozen=True)
class GridNode:
    level: int
    branches: Tuple[int, ...]
    vector: Vector

    @property
    def is_canonical(self) -> bool:
        return len(self.branches) == 1 and self.vector[self.branches[0]] == 1


@dataclass(frozen=True)
class NodeGrid:
    """
    Explicit nodes n_i^j of a multiplicity tree.

    Attributes:
        depth (int): L, first level at which every node is canonical
        nodes (tuple): nodes[i][j-1] is the vector n_i^j for j <= L
        sequences (tuple): branch sequences, used for lazy deeper levels
        levels (tuple): full level matrix, used to group shared nodes
    """

    depth: int
    nodes: Tuple[Tuple[Vector, ...], ...]
    sequences: Tuple[MultiplicitySequence, ...]
    levels: Tuple[Tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.sequences)

    def node(self, i: int, j: int) -> Vector:
        """n_i^j for any level j >= 1; beyond the depth this is e_i."""
        if j <= self.depth:
            return self.nodes[i][j - 1]
        return tuple(1 if h == i else 0 for h in range(self.rank))

    def block(self, i: int, j: int) -> Tuple[int, ...]:
        """Branches sharing the node of branch i at level j."""
        return tuple(
            h
            for h in range(self.rank)
            if h == i or self.levels[min(i, h)][max(i, h)] >= j
        )

    def level_nodes(self, j: int) -> List[GridNode]:
        seen = set()
        result = []
        for i in range(self.rank):
            block = self.block(i, j)
            if block in seen:
                continue
            seen.add(block)
            result.append(GridNode(j, block, self.node(i, j)))
        return result

    def children(self, parent: GridNode) -> List[GridNode]:
        return [
            child
            for child in self.level_nodes(parent.level + 1)
            if set(child.branches) <= set(parent.branches)
        ]

    def root(self) -> GridNode:
        return self.level_nodes(1)[0]

    def distinct_nodes(self) -> List[GridNode]:
        """Every node of the grid once, level by level from the root."""
        result = []
        for j in range(1, self.depth + 1):
            result.extend(self.level_nodes(j))
        return result


@dataclass(frozen=True)
class FiniteGoodSemigroup:
    """
    Elements of a good semigroup of N^r inside the box 0 <= v < box.

    Attributes:
        rank (int): r
        box (tuple): exclusive componentwise bound
        elements (frozenset): members inside the box
        conductor (tuple): delta, every v with delta <= v < box is a member
    """

    rank: int
    box: Vector
    elements: FrozenSet[Vector]
    conductor: Vector

    def __contains__(self, v) -> bool:
        return tuple(v) in self.elements

    def sorted_elements(self) -> List[Vector]:
        return sorted(self.elements)

    def small_elements(self) -> List[Vector]:
        """Members not above the conductor."""
        return sorted(
            v
            for v in self.elements
            if not all(x >= c for x, c in zip(v, self.conductor))
        )

    def grid(self) -> np.ndarray:
        """Dense boolean membership array of shape `box`."""
        table = np.zeros(self.box, dtype=bool)
        if self.elements:
            coords = np.array(sorted(self.elements), dtype=np.intp)
            table[tuple(coords.T)] = True
        return table


# ---------------- Construction and validation ----------------


def validate_tree(
    E: Sequence[MultiplicitySequence], p: Sequence[int]
) -> UntwistedTree:
    """
    Validate E and the gluing vector p as an untwisted tree.

    Raises:
        InvalidGluing: |p| != |E| - 1 or some p_i < 1
        GluingExceedsCompatibility: p_i > Comp(M_i, M_{i+1}); index is 1-based
    """
    sequences = tuple(E)
    gluing = tuple(p)
    if not sequences:
        raise InvalidGluing("a tree needs at least one branch")
    if len(gluing) != len(sequences) - 1:
        raise InvalidGluing(
            f"{len(sequences)} branches need {len(sequences) - 1} gluing levels, "
            f"got {len(gluing)}"
        )
    for i, level in enumerate(gluing):
        if isinstance(level, bool) or not isinstance(level, int) or level < 1:
            raise InvalidGluing(f"seam {i + 1}: gluing level must be >= 1, got {level!r}")
        bound = compatibility(sequences[i], sequences[i + 1])
        if not admits(level, bound):
            raise GluingExceedsCompatibility(i + 1, level, bound)
    return UntwistedTree(sequences, gluing)


def join(left: UntwistedTree, level: int, right: UntwistedTree) -> UntwistedTree:
    """Concatenate two trees glued at `level`; only the seam is unchecked here."""
    return UntwistedTree(
        left.sequences + right.sequences, left.gluing + (level,) + right.gluing
    )


def genus_of_tree(T: UntwistedTree) -> int:
    """Sum of the branch genera plus the sum of the gluing levels."""
    return sum(M.genus for M in T.sequences) + sum(T.gluing)


def _branch_depths(T: TreeLike) -> List[int]:
    # max(l(M_i), highest level at which branch i is glued to another one)
    r = T.rank
    depths = []
    for i, M in enumerate(T.sequences):
        glued = [T.level(i, h) for h in range(r) if h != i]
        depths.append(max([M.length] + glued))
    return depths


def _sum_upto(M: MultiplicitySequence, d: int) -> int:
    if d <= M.length:
        return M.prefix[d - 1]
    return M.prefix[-1] + (d - M.length)


def conductor_of_tree(T: TreeLike) -> Vector:
    """
    Conductor vector delta of S(T).

    Component i sums M_i over the levels at which its node differs from e_i,
    that is up to max(l(M_i), p_{i-1}, p_i). A single branch delegates to the
    numerical conductor (0 for [1]).
    """
    if T.rank == 1:
        return (T.sequences[0].conductor,)
    return tuple(
        _sum_upto(M, d) for M, d in zip(T.sequences, _branch_depths(T))
    )


def to_matrix(T: UntwistedTree) -> TreeMatrix:
    """
    Full level matrix of an untwisted tree.

    Entry (i, j) for i < j is min(p_i, ..., p_{j-1}); the diagonal and the
    lower triangle are 0.
    """
    r = T.rank
    rows = []
    for i in range(r):
        rows.append(tuple(T.level(i, j) if j > i else 0 for j in range(r)))
    return TreeMatrix(T.sequences, tuple(rows))


def _levels_of(T: TreeLike) -> Tuple[Tuple[int, ...], ...]:
    if isinstance(T, TreeMatrix):
        return T.levels
    return to_matrix(T).levels


def node_grid(T: TreeLike) -> NodeGrid:
    """
    Explicit nodes of T up to the first all-canonical level.

    Component h of n_i^j is M_h[j] when branches i and h are glued at level
    j, else 0.
    """
    r = T.rank
    levels = _levels_of(T)
    depth = 1 + max(_branch_depths(T))
    nodes = []
    for i in range(r):
        column = []
        for j in range(1, depth + 1):
            column.append(
                tuple(
                    T.sequences[h].entry(j)
                    if h == i or levels[min(i, h)][max(i, h)] >= j
                    else 0
                    for h in range(r)
                )
            )
        nodes.append(tuple(column))
    return NodeGrid(depth, tuple(nodes), tuple(T.sequences), levels)


def reverse(T: UntwistedTree) -> UntwistedTree:
    """T^{-1}: branches and gluing vector in reverse order."""
    return UntwistedTree(T.sequences[::-1], T.gluing[::-1])


def permute(T: TreeMatrix, sigma: Sequence[int]) -> TreeMatrix:
    """
    Relabel branches: new branch a carries old branch sigma[a] (0-based).

    The level between new branches a < b is the old level between sigma[a]
    and sigma[b].
    """
    r = T.rank
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(r)):
        raise ValueError(f"{sigma} is not a permutation of 0..{r - 1}")
    sequences = tuple(T.sequences[s] for s in sigma)
    rows = []
    for a in range(r):
        rows.append(
            tuple(T.level(sigma[a], sigma[b]) if b > a else 0 for b in range(r))
        )
    return TreeMatrix(sequences, tuple(rows))


def is_untwisted(T: TreeMatrix) -> bool:
    """True when every level equals the minimum of the consecutive ones between."""
    r = T.rank
    for i in range(r):
        running = None
        for j in range(i + 1, r):
            step = T.levels[j - 1][j]
            running = step if running is None else min(running, step)
            if T.levels[i][j] != running:
                return False
    return True


def untwisted_from_matrix(T: TreeMatrix) -> UntwistedTree:
    """Read the gluing vector off an untwisted matrix."""
    return UntwistedTree(
        T.sequences, tuple(T.levels[i][i + 1] for i in range(T.rank - 1))
    )


def untwist(T: TreeMatrix) -> Tuple[Tuple[int, ...], UntwistedTree]:
    """
    Find sigma with permute(T, sigma) untwisted.

    Returns:
        tuple: (sigma, untwisted tree)

    Raises:
        UnrealizableMatrix: no permutation works, or the rank is beyond the
            exhaustive search bound
    """
    if is_untwisted(T):
        return tuple(range(T.rank)), untwisted_from_matrix(T)
    if T.rank > MAX_UNTWIST_SEARCH_RANK:
        raise UnrealizableMatrix(
            f"rank {T.rank} twisted matrix: search is limited to rank "
            f"{MAX_UNTWIST_SEARCH_RANK}"
        )
    for sigma in permutations(range(T.rank)):
        candidate = permute(T, sigma)
        if is_untwisted(candidate):
            return sigma, untwisted_from_matrix(candidate)
    raise UnrealizableMatrix("no branch permutation makes the level matrix untwisted")


def validate_matrix(
    E: Sequence[MultiplicitySequence], levels: Sequence[Sequence[int]]
) -> TreeMatrix:
    """
    Validate raw matrix input (possibly twisted).

    Args:
        E: branch sequences
        levels: r x r matrix, strict upper triangle holds p_{i,j}

    Raises:
        InvalidGluing: wrong shape or a level < 1
        GluingExceedsCompatibility: p_{i,j} > Comp(M_i, M_j)
        UnrealizableMatrix: not a branch permutation of an untwisted tree
    """
    sequences = tuple(E)
    r = len(sequences)
    if r == 0:
        raise InvalidGluing("a tree needs at least one branch")
    if len(levels) != r or any(len(row) != r for row in levels):
        raise InvalidGluing(f"level matrix must be {r} x {r}")
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            if j <= i:
                row.append(0)
                continue
            level = levels[i][j]
            if isinstance(level, bool) or not isinstance(level, int) or level < 1:
                raise InvalidGluing(
                    f"level between branches {i + 1} and {j + 1} must be >= 1, "
                    f"got {level!r}"
                )
            bound = compatibility(sequences[i], sequences[j])
            if not admits(level, bound):
                raise GluingExceedsCompatibility(i + 1, level, bound, other=j + 1)
            row.append(level)
        rows.append(tuple(row))
    matrix = TreeMatrix(sequences, tuple(rows))
    untwist(matrix)
    return matrix


# ---------------- Semigroup expansion ----------------


def _vector_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _below(v: Vector, box: Sequence[int]) -> bool:
    return all(x < b for x, b in zip(v, box))


def _subtree_sums(grid: NodeGrid, node: GridNode, box: Vector, memo: Dict) -> frozenset:
    key = (node.level, node.branches)
    if key in memo:
        return memo[key]
    if not _below(node.vector, box):
        memo[key] = frozenset()
        return memo[key]
    if node.is_canonical:
        # the rest of the branch is a chain of e_i
        i = node.branches[0]
        sums = frozenset(
            tuple(k if h == i else 0 for h in range(grid.rank))
            for k in range(1, box[i])
        )
        memo[key] = sums
        return sums

    acc = {node.vector}
    for child in grid.children(node):
        child_sums = _subtree_sums(grid, child, box, memo)
        extended = set(acc)
        for a in acc:
            for b in child_sums:
                total = _vector_add(a, b)
                if _below(total, box):
                    extended.add(total)
        acc = extended
    memo[key] = frozenset(acc)
    return memo[key]


def saturated_region(conductor: Vector, box: Vector):
    """Every v with conductor <= v < box."""
    return product(*(range(c, b) for c, b in zip(conductor, box)))


def expand_semigroup(T: TreeLike, box: Sequence[int]) -> FiniteGoodSemigroup:
    """
    Elements of S(T) inside the box.

    Every finite subtree rooted at the root contributes the sum of its nodes;
    glued branches share nodes, so a subtree is grown child block by child
    block. Sums leaving the box are pruned since adding nodes only increases
    coordinates.

    Raises:
        BoxTooSmall: box is not above the conductor in every coordinate
    """
    box = tuple(box)
    delta = conductor_of_tree(T)
    if len(box) != T.rank or any(b < c + 1 for b, c in zip(box, delta)):
        raise BoxTooSmall(box, delta)

    grid = node_grid(T)
    elements = {tuple(0 for _ in range(T.rank))}
    elements |= _subtree_sums(grid, grid.root(), box, {})
    elements.update(saturated_region(delta, box))
    logger.debug(f"Expanded {T} inside {box}: {len(elements)} elements")
    return FiniteGoodSemigroup(T.rank, box, frozenset(elements), delta)


def semigroup_from_elements(
    base: Sequence[Sequence[int]], conductor: Sequence[int], box: Sequence[int]
) -> FiniteGoodSemigroup:
    """Explicit semigroup: the listed elements plus delta <= v < box."""
    box = tuple(box)
    delta = tuple(conductor)
    elements = {tuple(v) for v in base if _below(tuple(v), box)}
    elements.update(saturated_region(delta, box))
    return FiniteGoodSemigroup(len(box), box, frozenset(elements), delta)


def default_box(T: TreeLike, margin: int = 2) -> Vector:
    """Conductor of T plus `margin` in each coordinate."""
    return tuple(c + margin for c in conductor_of_tree(T))


# ---------------- JSON ----------------


def tree_to_json(T: UntwistedTree) -> dict:
    """{"sequences": [...], "gluing": [...]}"""
    return {
        "sequences": [M.to_json() for M in T.sequences],
        "gluing": list(T.gluing),
    }


def matrix_to_json(T: TreeMatrix) -> dict:
    """{"sequences": [...], "levels": [[...], ...]}"""
    return {
        "sequences": [M.to_json() for M in T.sequences],
        "levels": [list(row) for row in T.levels],
    }


def tree_from_json(data) -> TreeLike:
    """
    Parse either tree form.

    {"sequences": [[1],[3]], "gluing": [1]} gives an UntwistedTree;
    {"sequences": ..., "levels": [[0,1],[0,0]]} gives a TreeMatrix.
    """
    if not isinstance(data, dict) or "sequences" not in data:
        raise InvalidGluing("tree JSON needs a 'sequences' array")
    sequences = [sequence_from_json(item) for item in data["sequences"]]
    if "levels" in data:
        return validate_matrix(sequences, data["levels"])
    return validate_tree(sequences, data.get("gluing", []))
