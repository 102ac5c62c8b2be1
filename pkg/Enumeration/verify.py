"""
========================================
ARF ENUMERATION - VERIFICATION ORACLES
========================================

Independent checks for the enumeration modules:

- genus through the saturated-chain definition, g(S) = d(N^r \\ C) - d(S \\ C)
- good-semigroup axioms and the Arf condition on box-bounded semigroups
- a brute-force tree enumerator built directly on the genus formula
- run_suite(): the batch used by `cli verify`

Boundary rule: a check whose witness would have to lie outside the box is
counted as unchecked, never as failed.

Author: LSL Team
Version: 1.0
Last Updated: 2026-10-19
"""

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np
from tqdm import tqdm

from genus1 import brute_force_genus, enumerate_genus
from genusr import (
    DEFAULT_MAX_TWISTED_RANK,
    GenusTable,
    adjacent_swaps,
    enumerate_all_trees,
    enumerate_genus_trees,
)
from multseq import admits, compatibility
from tree import (
    FiniteGoodSemigroup,
    TreeError,
    UntwistedTree,
    default_box,
    expand_semigroup,
    genus_of_tree,
    permute,
    reverse,
    untwist,
    validate_tree,
)

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


# ---------------- Errors ----------------


class NotComparable(ValueError):
    def __init__(self, start, end):
        super().__init__(f"{tuple(start)} is not below {tuple(end)}")


class NotMembers(ValueError):
    def __init__(self, vector):
        self.vector = tuple(vector)
        super().__init__(f"{self.vector} is not an element of the semigroup")


class InconsistentChainLength(ValueError):
    def __init__(self, lengths):
        self.lengths = sorted(set(lengths))
        super().__init__(f"saturated chains of different lengths: {self.lengths}")


# ---------------- Reports ----------------


@dataclass
class Violation:
    axiom: str
    witness_vectors: List[Vector]

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "witness_vectors": [list(v) for v in self.witness_vectors]}


@dataclass
class AxiomReport:
    checked: int = 0
    unchecked: int = 0
    violations: List[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, axiom: str, *vectors):
        self.violations.append(Violation(axiom, [tuple(int(x) for x in v) for v in vectors]))

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        self.checked += other.checked
        self.unchecked += other.unchecked
        self.violations.extend(other.violations)
        return self

    def axioms(self) -> Set[str]:
        return {v.axiom for v in self.violations}

    def to_json(self) -> dict:
        return {
            "checked": self.checked,
            "unchecked": self.unchecked,
            "violations": [v.to_json() for v in self.violations],
        }


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    rank: int
    genus: int
    level: str
    checks: List[CheckResult] = field(default_factory=list)
    axioms: AxiomReport = field(default_factory=AxiomReport)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and self.axioms.passed

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "genus": self.genus,
            "level": self.level,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "axioms": self.axioms.to_json(),
        }


# ---------------- Saturated chains ----------------


def _leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimal(candidates: List[Vector]) -> List[Vector]:
    # a non-minimal vector always sits above a minimal one of smaller sum
    kept: List[Vector] = []
    for y in sorted(candidates, key=sum):
        if not any(_leq(z, y) for z in kept):
            kept.append(y)
    return kept


def saturated_chain_length(
    S: FiniteGoodSemigroup,
    start: Sequence[int],
    end: Sequence[int],
    samples: int = 8,
    seed: int = 42,
) -> int:
    """
    Length of a saturated chain of S from `start` to `end`.

    Each run climbs by covers, picking at random one of the minimal
    elements strictly above the current link and below `end`. Several runs
    are compared and must agree.

    Raises:
        NotComparable: start is not below end
        NotMembers: an endpoint is not in S
        InconsistentChainLength: two runs disagree
    """
    start, end = tuple(start), tuple(end)
    if not _leq(start, end):
        raise NotComparable(start, end)
    for v in (start, end):
        if v not in S:
            raise NotMembers(v)

    interval = [v for v in S.elements if _leq(start, v) and _leq(v, end)]
    lengths = []
    for run in range(max(1, samples)):
        rng = random.Random(seed + run)
        current, steps = start, 0
        while current != end:
            above = [v for v in interval if v != current and _leq(current, v)]
            current = rng.choice(_minimal(above))
            steps += 1
        lengths.append(steps)

    if len(set(lengths)) > 1:
        raise InconsistentChainLength(lengths)
    return lengths[0]


def chain_genus(T: UntwistedTree, margin: int = 2, samples: int = 8, seed: int = 42) -> int:
    """sum(delta) minus the saturated chain length of S(T) from 0 to delta."""
    S = expand_semigroup(T, default_box(T, margin))
    delta = S.conductor
    zero = tuple(0 for _ in delta)
    return sum(delta) - saturated_chain_length(S, zero, delta, samples=samples, seed=seed)


# ---------------- Axioms ----------------


def _element_array(S: FiniteGoodSemigroup) -> np.ndarray:
    return np.array(S.sorted_elements(), dtype=np.intp).reshape(-1, S.rank)


def check_good_axioms(S: FiniteGoodSemigroup, local: bool = True) -> AxiomReport:
    """
    Locality, min-closure, conductor saturation and axiom 2 inside the box.

    N^r itself is good but not local; pass local=False to skip that check.

    Axiom 2: for a != b with a[i] = b[i] there is c in S with c[i] > a[i],
    c[j] >= min(a,b)[j] and equality where a[j] != b[j]. A pair is checkable
    when a[i] + 1 < box[i].
    """
    report = AxiomReport()
    grid = S.grid()
    elements = _element_array(S)
    box = np.array(S.box, dtype=np.intp)

    if local:
        for v in elements:
            report.checked += 1
            if (v == 0).any() and v.any():
                report.add("locality", v)

    # conductor saturation
    region = tuple(slice(c, b) for c, b in zip(S.conductor, S.box))
    report.checked += 1
    if not grid[region].all():
        missing = np.argwhere(~grid[region])[0] + np.array(S.conductor)
        report.add("saturation", missing)

    for idx, a in enumerate(elements):
        later = elements[idx + 1 :]
        inside = grid[tuple(np.minimum(later, a).T)]
        report.checked += len(later)
        for b in later[~inside]:
            report.add("min_closure", a, b, np.minimum(a, b))

        for i in range(S.rank):
            partners = elements[(elements[:, i] == a[i]) & (elements != a).any(axis=1)]
            if len(partners) == 0:
                continue
            if a[i] + 1 >= box[i]:
                report.unchecked += len(partners)
                continue
            report.checked += len(partners)
            m = np.minimum(partners, a)
            c0 = m.copy()
            c0[:, i] = a[i] + 1
            hit = grid[tuple(c0.T)]
            for b, mb in zip(partners[~hit], m[~hit]):
                if not _axiom2_witness(elements, a, b, mb, i):
                    report.add("axiom2", a, b)
    return report


def _axiom2_witness(elements: np.ndarray, a, b, m, i: int) -> bool:
    mask = elements[:, i] > a[i]
    for j in range(elements.shape[1]):
        if j == i:
            continue
        if a[j] != b[j]:
            mask &= elements[:, j] == m[j]
        else:
            mask &= elements[:, j] >= m[j]
    return bool(mask.any())


def check_arf_axiom(S: FiniteGoodSemigroup) -> AxiomReport:
    """
    S(alpha) - alpha is closed under addition: beta1 + beta2 - alpha in S.

    Triples with beta1 or beta2 above the conductor land above it too, so
    only the small elements need testing. Sums leaving the box are
    unchecked.
    """
    report = AxiomReport()
    grid = S.grid()
    box = np.array(S.box, dtype=np.intp)
    small = np.array(S.small_elements(), dtype=np.intp).reshape(-1, S.rank)

    for alpha in small:
        above = small[(small >= alpha).all(axis=1)]
        if len(above) == 0:
            continue
        sums = above[:, None, :] + above[None, :, :] - alpha
        sums = sums.reshape(-1, S.rank)
        pairs = np.array(list(product(range(len(above)), repeat=2)), dtype=np.intp)
        in_box = (sums < box).all(axis=1)
        report.unchecked += int((~in_box).sum())
        report.checked += int(in_box.sum())
        member = np.zeros(len(sums), dtype=bool)
        member[in_box] = grid[tuple(sums[in_box].T)]
        for idx in np.flatnonzero(in_box & ~member):
            b1, b2 = pairs[idx]
            report.add("arf", alpha, above[b1], above[b2])
    return report


# ---------------- Brute-force trees ----------------


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def brute_force_genus_trees(r: int, n: int) -> Set[UntwistedTree]:
    """
    Gen(r,n) straight from the genus formula.

    Every r-tuple of sequences with genus sum g <= n - (r - 1) is crossed
    with every gluing vector summing to n - g, keeping the seams that fit
    under the compatibility.
    """
    if r == 1:
        return {UntwistedTree((M,), ()) for M in brute_force_genus(n)}
    found = set()
    budget = n - (r - 1)
    pools = {g: sorted(brute_force_genus(g)) for g in range(budget + 1)}
    for genera in product(range(budget + 1), repeat=r):
        g = sum(genera)
        if g > budget:
            continue
        for E in product(*(pools[h] for h in genera)):
            for p in _compositions(n - g, r - 1):
                if all(admits(p[i], compatibility(E[i], E[i + 1])) for i in range(r - 1)):
                    found.add(UntwistedTree(tuple(E), p))
    return found


# ---------------- Suite ----------------


def _check_tree(args) -> Tuple[Optional[str], Optional[AxiomReport]]:
    T, margin, samples, seed, with_axioms = args
    problem = None
    try:
        got = chain_genus(T, margin=margin, samples=samples, seed=seed)
        if got != genus_of_tree(T):
            problem = f"{T}: chain genus {got} != {genus_of_tree(T)}"
    except InconsistentChainLength as exc:
        problem = f"{T}: {exc}"

    axioms = None
    if with_axioms:
        S = expand_semigroup(T, default_box(T, margin))
        axioms = check_good_axioms(S).merge(check_arf_axiom(S))
    return problem, axioms


def run_suite(
    r: int,
    n: int,
    level: str = "quick",
    jobs: int = 1,
    margin: int = 2,
    samples: int = 8,
    seed: int = 42,
    max_oracle_rank: int = 4,
    max_twisted_rank: int = DEFAULT_MAX_TWISTED_RANK,
    progress: bool = False,
) -> SuiteReport:
    """
    Verify Gen(r,n) against the oracles.

    Args:
        level (str): "quick" (oracle, tree validity, chain genus, reversal)
            or "full" (adds axioms and, for r <= 4, permutation closure)
        jobs (int): worker processes for the per-tree checks
    """
    if level not in ("quick", "full"):
        raise ValueError(f"unknown verification level {level!r}")
    report = SuiteReport(r, n, level)
    trees = enumerate_genus_trees(r, n, table=GenusTable())
    tree_set = set(trees)

    # oracle equivalence
    if r == 1:
        same = set(enumerate_genus(n)) == brute_force_genus(n)
        report.checks.append(CheckResult("oracle", same, "Gen(n) vs partitions"))
    elif r <= max_oracle_rank:
        expected = brute_force_genus_trees(r, n)
        same = tree_set == expected
        detail = f"{len(tree_set)} enumerated, {len(expected)} brute force"
        report.checks.append(CheckResult("oracle", same, detail))
    else:
        report.checks.append(CheckResult("oracle", True, f"skipped above rank {max_oracle_rank}"))

    bad = []
    for T in trees:
        try:
            validate_tree(T.sequences, T.gluing)
        except TreeError as exc:
            bad.append(f"{T}: {exc}")
            continue
        if genus_of_tree(T) != n:
            bad.append(f"{T}: genus {genus_of_tree(T)}")
    report.checks.append(CheckResult("trees_valid", not bad, "; ".join(bad[:5])))

    missing = [T for T in trees if reverse(T) not in tree_set]
    report.checks.append(
        CheckResult("reversal", not missing, "; ".join(str(T) for T in missing[:5]))
    )

    with_axioms = level == "full"
    tasks = [(T, margin, samples, seed, with_axioms) for T in trees]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_check_tree, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        outcomes = [
            _check_tree(task)
            for task in tqdm(tasks, desc=f"Verify r={r} n={n}", leave=False, disable=not progress)
        ]

    problems = [problem for problem, _ in outcomes if problem]
    report.checks.append(CheckResult("chain_genus", not problems, "; ".join(problems[:5])))
    for _, axioms in outcomes:
        if axioms is not None:
            report.axioms.merge(axioms)

    if with_axioms and r <= 4 and r <= max_twisted_rank:
        report.checks.append(_permutation_closure(r, n, max_twisted_rank))

    logger.info(f"Verification r={r} n={n} level={level}: {'pass' if report.passed else 'FAIL'}")
    return report


def _permutation_closure(r: int, n: int, max_twisted_rank: int) -> CheckResult:
    members = set(enumerate_all_trees(r, n, max_rank=max_twisted_rank))
    swaps = adjacent_swaps(r)
    for matrix in members:
        for sigma in swaps:
            if permute(matrix, sigma) not in members:
                return CheckResult("permutation_closure", False, f"{matrix} leaves the set")
        _, T = untwist(matrix)
        if genus_of_tree(T) != n:
            return CheckResult("permutation_closure", False, f"{matrix} untwists to {T}")
    return CheckResult("permutation_closure", True, f"{len(members)} trees")
