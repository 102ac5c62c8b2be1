import pytest

from genus1 import brute_force_genus
from genusr import enumerate_genus_trees
from multseq import TRIVIAL, MultiplicitySequence
from tree import (
    UntwistedTree,
    default_box,
    expand_semigroup,
    semigroup_from_elements,
    validate_tree,
)
from verify import (
    AxiomReport,
    InconsistentChainLength,
    NotComparable,
    NotMembers,
    brute_force_genus_trees,
    chain_genus,
    check_arf_axiom,
    check_good_axioms,
    run_suite,
    saturated_chain_length,
)


def seq(*entries):
    return MultiplicitySequence(tuple(entries))


def tree(sequences, gluing):
    return validate_tree([seq(*s) for s in sequences], gluing)


def test_chain_through_glued_ones():
    S = expand_semigroup(tree([(1,), (1,)], (3,)), (5, 5))
    assert saturated_chain_length(S, (0, 0), (3, 3)) == 3


def test_chain_of_length_zero():
    S = expand_semigroup(tree([(1,), (1,)], (3,)), (5, 5))
    assert saturated_chain_length(S, (2, 2), (2, 2)) == 0


def test_chain_in_full_lattice_has_coordinate_sum_length():
    S = semigroup_from_elements([], (0, 0), (4, 5))
    assert saturated_chain_length(S, (0, 0), (3, 4)) == 7


def test_chain_endpoints_are_checked():
    S = expand_semigroup(tree([(1,), (1,)], (3,)), (5, 5))
    with pytest.raises(NotComparable):
        saturated_chain_length(S, (3, 3), (0, 0))
    with pytest.raises(NotMembers):
        saturated_chain_length(S, (0, 1), (3, 3))


def test_chain_length_disagreement_is_reported():
    # not a good semigroup: (0,0) < (1,2) < (1,3) < (3,3) and (0,0) < (2,1) < (3,3)
    S = semigroup_from_elements([(0, 0), (1, 2), (1, 3), (2, 1)], (3, 3), (4, 4))
    with pytest.raises(InconsistentChainLength):
        for seed in range(20):
            saturated_chain_length(S, (0, 0), (3, 3), samples=8, seed=seed)


@pytest.mark.parametrize(
    "sequences, gluing, expected",
    [
        ([(1,), (1,)], (3,), 3),
        ([(1,), (3,)], (1,), 3),
        ([(2, 2)], (), 2),
        ([(1,)], (), 0),
        ([(4, 4, 4, 2), (4, 2, 2)], (2,), 17),
    ],
)
def test_chain_genus(sequences, gluing, expected):
    assert chain_genus(tree(sequences, gluing)) == expected


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 4) for n in range(0, 7)])
def test_chain_genus_agrees_with_formula(r, n):
    for T in enumerate_genus_trees(r, n):
        assert chain_genus(T) == n


@pytest.mark.parametrize("r, n", [(r, n) for r in range(1, 4) for n in range(0, 6)])
def test_expanded_trees_satisfy_the_axioms(r, n):
    for T in enumerate_genus_trees(r, n):
        S = expand_semigroup(T, default_box(T))
        good = check_good_axioms(S)
        arf = check_arf_axiom(S)
        assert good.passed, good.to_json()
        assert arf.passed, arf.to_json()
        assert good.checked > 0


def test_min_closure_counterexample():
    S = semigroup_from_elements([(0, 0), (1, 2), (2, 1)], (3, 3), (5, 5))
    report = check_good_axioms(S)
    assert "min_closure" in report.axioms()
    witness = next(v for v in report.violations if v.axiom == "min_closure")
    assert witness.witness_vectors[-1] == (1, 1)


def test_locality_counterexample():
    S = semigroup_from_elements([(0, 0), (0, 2)], (2, 2), (4, 4))
    assert "locality" in check_good_axioms(S).axioms()


def test_full_lattice_passes():
    S = semigroup_from_elements([], (0, 0), (4, 4))
    assert check_good_axioms(S, local=False).passed
    assert check_good_axioms(S).axioms() == {"locality"}
    assert check_arf_axiom(S).passed


def test_arf_violation_in_one_dimension():
    S = semigroup_from_elements([(0,), (3,), (5,)], (7,), (10,))
    report = check_arf_axiom(S)
    assert not report.passed
    assert report.violations[0].witness_vectors == [(0,), (3,), (3,)]


def test_arf_numerical_semigroup_passes():
    S = semigroup_from_elements([(0,), (3,)], (5,), (8,))
    assert check_arf_axiom(S).passed


def test_boxes_leave_unchecked_pairs():
    S = expand_semigroup(tree([(1,), (3,)], (1,)), (3, 5))
    report = check_good_axioms(S)
    assert report.passed
    assert report.unchecked > 0


def test_report_json():
    report = AxiomReport()
    report.add("arf", (0,), (3,), (3,))
    assert report.to_json() == {
        "checked": 0,
        "unchecked": 0,
        "violations": [{"axiom": "arf", "witness_vectors": [[0], [3], [3]]}],
    }


def test_brute_force_rank_two_genus_three():
    assert brute_force_genus_trees(2, 3) == set(enumerate_genus_trees(2, 3))
    assert len(brute_force_genus_trees(2, 3)) == 8


def test_brute_force_single_chain():
    assert brute_force_genus_trees(3, 2) == {UntwistedTree((TRIVIAL,) * 3, (1, 1))}


def test_brute_force_rank_one_delegates():
    assert {T.sequences[0] for T in brute_force_genus_trees(1, 7)} == brute_force_genus(7)


@pytest.mark.parametrize(
    "r, n", [(r, n) for r in range(1, 4) for n in range(0, 8)] + [(4, n) for n in range(0, 7)]
)
def test_brute_force_matches_enumeration(r, n):
    assert brute_force_genus_trees(r, n) == set(enumerate_genus_trees(r, n))


@pytest.mark.slow
def test_brute_force_matches_enumeration_rank_four_genus_seven():
    assert brute_force_genus_trees(4, 7) == set(enumerate_genus_trees(4, 7))


def test_suite_quick():
    report = run_suite(1, 10)
    assert report.passed
    assert {c.name for c in report.checks} == {"oracle", "trees_valid", "reversal", "chain_genus"}


@pytest.mark.parametrize("r, n", [(2, 3), (3, 4)])
def test_suite_full(r, n):
    report = run_suite(r, n, level="full")
    assert report.passed, report.to_json()
    names = {c.name for c in report.checks}
    assert "permutation_closure" in names
    assert report.to_json()["axioms"]["violations"] == []


def test_suite_with_workers():
    assert run_suite(2, 4, level="full", jobs=2).passed


def test_suite_rejects_unknown_level():
    with pytest.raises(ValueError):
        run_suite(2, 3, level="thorough")
