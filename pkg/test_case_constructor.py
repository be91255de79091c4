"""Tests for case classification and the constructive labelings."""
import pytest

from case_constructor import (
    CaseKind, case3_labels, classify, claimed_k, construct, construct_case1, construct_case2,
    construct_case3, repaired_labeling, theorem_bounds, verbatim_labeling,
)
from dandelion_builder import dandelion
from labeling_verifier import Labeling, verify
from toolkit_errors import ParameterDomainError, WrongCaseError


def named(labeling):
    return labeling.to_document()['labels']


def admissible_grid(l_max, n_max):
    return [(n, l) for l in range(2, l_max + 1) for n in range(l + 1, n_max + 1)]


@pytest.mark.parametrize('n, l, case', [
    (13, 5, CaseKind.CASE1),
    (9, 5, CaseKind.CASE2),
    (7, 5, CaseKind.CASE3),
    (10, 5, CaseKind.CASE1),
    (8, 5, CaseKind.CASE2),
    (6, 4, CaseKind.CASE2),
    (3, 2, CaseKind.CASE2),
    (4, 2, CaseKind.CASE1),
])
def test_classify(n, l, case):
    assert classify(n, l) is case


@pytest.mark.parametrize('n, l', admissible_grid(15, 30))
def test_classify_matches_hub_degree_comparison(n, l):
    hub_degree, half = n - l + 1, (n + 1) // 2
    case = classify(n, l)
    assert (case is CaseKind.CASE1) == (hub_degree > half)
    assert (case is CaseKind.CASE2) == (hub_degree == half)
    assert (case is CaseKind.CASE3) == (hub_degree < half)
    assert construct(n, l).case is case


def test_classify_rejects_inadmissible():
    with pytest.raises(ParameterDomainError):
        classify(5, 5)


def test_case1_figure_instance():
    result = construct_case1(13, 5)
    assert named(result.labeling) == {
        'x1': 1, 'x2': 2, 'x3': 3, 'x4': 4, 'x5': 5, 'x6': 6, 'x7': 7, 'x8': 8,
        'p0': 1, 'p1': 9, 'p2': 4, 'p3': 8, 'p4': 8,
    }
    assert result.weights == (2, 3, 4, 5, 6, 7, 8, 9, 10, 13, 12, 16)
    assert result.valid
    assert result.claimed_k == 9
    assert not result.repaired


def test_case1_collision_at_n_equal_2l():
    result = construct_case1(10, 5)
    assert not result.valid
    assert named(result.labeling)['p2'] == 4
    assert [(a[0].name, a[1].name, b[0].name, b[1].name, w) for a, b, w in result.report.collisions] == [
        ('p1', 'p2', 'p3', 'p4', 10),
    ]
    assert not result.repaired


def test_case1_repair():
    result = construct_case1(10, 5, allow_repair=True)
    assert result.valid
    assert result.repaired
    assert result.claimed_k == 6
    assert named(result.labeling)['p2'] == 3
    assert sorted(result.weights) == [2, 3, 4, 5, 6, 7, 8, 9, 10]
    assert result.weights == (2, 3, 4, 5, 6, 7, 9, 8, 10)


def test_repair_is_not_applied_when_verbatim_verifies():
    assert not construct_case1(13, 5, allow_repair=True).repaired


@pytest.mark.parametrize('n, l, path_labels, weights', [
    (9, 5, {'p0': 1, 'p1': 5, 'p2': 5, 'p3': 4, 'p4': 4}, (2, 3, 4, 5, 6, 10, 9, 8)),
    (11, 6, {'p0': 1, 'p1': 6, 'p2': 6, 'p3': 5, 'p4': 5, 'p5': 4}, (2, 3, 4, 5, 6, 7, 12, 11, 10, 9)),
    (5, 3, {'p0': 1, 'p1': 3, 'p2': 3}, (2, 3, 4, 6)),
])
def test_case2_examples(n, l, path_labels, weights):
    result = construct_case2(n, l)
    labels = named(result.labeling)
    assert {v: labels[v] for v in path_labels} == path_labels
    assert all(labels[f'x{i}'] == i for i in range(1, n - l + 1))
    assert result.weights == weights
    assert result.valid
    assert result.claimed_k == n - l + 1


@pytest.mark.parametrize('n, l, path_labels, weights', [
    (7, 5, {'p0': 1, 'p1': 3, 'p2': 3, 'p3': 4, 'p4': 4}, (2, 3, 4, 6, 7, 8)),
    (8, 6, {'p0': 1, 'p1': 3, 'p2': 3, 'p3': 4, 'p4': 4, 'p5': 5}, (2, 3, 4, 6, 7, 8, 9)),
])
def test_case3_examples(n, l, path_labels, weights):
    result = construct_case3(n, l)
    labels = named(result.labeling)
    assert {v: labels[v] for v in path_labels} == path_labels
    assert result.weights == weights
    assert result.valid
    assert result.max_label <= result.claimed_k == n - l + (l + 1) // 2


def test_case3_formulas_on_a_case2_instance():
    # D(6,4) sits on the Case2 boundary; the ascending formulas still separate its weights
    assert classify(6, 4) is CaseKind.CASE2
    with pytest.raises(WrongCaseError):
        construct_case3(6, 4)
    g = dandelion(6, 4)
    report = verify(g, Labeling(case3_labels(6, 4), 4))
    assert report.valid
    assert report.weight_list == (2, 3, 4, 6, 7)
    assert construct(6, 4).weights == (2, 3, 4, 6, 5)


@pytest.mark.parametrize('i', range(1, 21))
def test_case2_stated_families(i):
    for n, l in [(2 * i + 3, i + 2), (2 * i + 4, i + 3)]:
        result = construct_case2(n, l)
        assert result.valid, f'D({n},{l})'
        assert result.claimed_k == n - l + 1
        assert result.max_label <= result.claimed_k


@pytest.mark.parametrize('n, l', [(n, l) for n, l in admissible_grid(12, 24)
                                  if classify(n, l) is CaseKind.CASE3])
def test_case3_upper_bound_grid(n, l):
    result = construct_case3(n, l)
    assert result.valid
    assert result.max_label == n - l + l // 2
    assert result.max_label <= result.claimed_k


@pytest.mark.parametrize('n, l', [(n, l) for n, l in admissible_grid(12, 30)
                                  if classify(n, l) is CaseKind.CASE1])
def test_case1_grid(n, l):
    verbatim = construct_case1(n, l)
    if n > 2 * l or l < 5:
        assert verbatim.valid
    else:
        assert not verbatim.valid
        repaired = construct_case1(n, l, allow_repair=True)
        assert repaired.valid and repaired.repaired
        assert repaired.claimed_k == n - l + 1


def test_wrong_case_is_rejected():
    with pytest.raises(WrongCaseError, match=r'D\(9,5\) is Case2, not Case1'):
        construct_case1(9, 5)
    with pytest.raises(WrongCaseError):
        construct_case2(13, 5)
    with pytest.raises(WrongCaseError):
        repaired_labeling(7, 5)


@pytest.mark.parametrize('n, l', [(13, 5), (9, 5), (7, 5)])
def test_construct_dispatch(n, l):
    result = construct(n, l)
    assert result.case is classify(n, l)
    assert result.valid


def test_library_default_is_verbatim():
    assert not construct(10, 5).valid
    assert construct(10, 5, allow_repair=True).valid


def test_claimed_k_and_theorem_bounds():
    assert claimed_k(13, 5) == 9
    assert claimed_k(9, 5) == 5
    assert claimed_k(7, 5) == 5
    assert theorem_bounds(13, 5) == (9, 9)
    assert theorem_bounds(7, 5) == (4, 5)


def test_verbatim_labeling_matches_construction():
    assert verbatim_labeling(10, 5) == construct(10, 5).labeling
    assert verbatim_labeling(9, 5).k == 5


def test_result_document():
    doc = construct(10, 5, allow_repair=True).to_document()
    assert doc['family'] == 'dandelion'
    assert (doc['n'], doc['l'], doc['case'], doc['claimed_k']) == (10, 5, 'Case1', 6)
    assert doc['repaired'] is True and doc['valid'] is True
    assert doc['labeling']['labels']['p2'] == 3
    assert doc['report']['collisions'] == []
