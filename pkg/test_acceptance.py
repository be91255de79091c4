"""End-to-end checks of the dandelion results the toolkit exists to reproduce."""
import json

import numpy as np
import pytest

from case_constructor import CaseKind, classify, construct
from dandelion_builder import dandelion
from document_codec import graph_from_document, graph_to_json
from exact_solver import EsStatus, SearchBudget, SearchStatus, es_exact, exists_labeling
from labeling_verifier import Labeling, lower_bound, naive_verify, verify, weight
from sweep_analyzer import run_sweep

EQUALITY_GRID = [(n, l) for l in range(2, 14) for n in range(l + 1, 15)
                 if classify(n, l) is not CaseKind.CASE3]
REFERENCE = [(13, 5), (9, 5), (7, 5)]

SOUNDNESS_BUDGET = SearchBudget(max_nodes=200_000)


def test_case1_reference_instance():
    result = construct(13, 5)
    assert result.valid and result.claimed_k == 9 == 13 - 5 + 1
    es = es_exact(dandelion(13, 5))
    assert (es.status, es.k) == (EsStatus.EXACT, 9)


def test_case2_reference_instance():
    result = construct(9, 5)
    assert result.valid and result.case is CaseKind.CASE2 and result.claimed_k == 5
    assert sorted(result.weights) == [2, 3, 4, 5, 6, 8, 9, 10]
    es = es_exact(dandelion(9, 5))
    assert (es.status, es.k) == (EsStatus.EXACT, 5)


def test_case3_reference_instance():
    result = construct(7, 5)
    assert result.valid and result.case is CaseKind.CASE3
    assert result.max_label <= 5 == 7 - 5 + 3
    es = es_exact(dandelion(7, 5))
    assert es.status is EsStatus.EXACT
    assert 4 <= es.k <= 5
    assert es.k == 4


@pytest.mark.slow
@pytest.mark.parametrize('n, l', EQUALITY_GRID)
def test_theorem_equality_at_desk_scale(n, l):
    es = es_exact(dandelion(n, l))
    assert es.status is EsStatus.EXACT
    assert es.k == n - l + 1


def test_case1_gap_is_exactly_n_equal_2l():
    verbatim = run_sweep(5, 8, 16, allow_repair=False)
    failures = verbatim[~verbatim['construction_valid']]
    assert set(zip(failures['n'], failures['l'])) == {(10, 5), (12, 6), (14, 7), (16, 8)}
    assert (failures['case'] == 'Case1').all()
    flagged = verbatim[verbatim['discrepancy']]
    assert set(zip(flagged['n'], flagged['l'])) == {(10, 5), (12, 6), (14, 7), (16, 8)}

    for n, l in [(10, 5), (12, 6), (14, 7), (16, 8)]:
        result = construct(n, l)
        assert result.report.collisions
        for first, second, w in result.report.collisions:
            assert weight(result.labeling, first) == weight(result.labeling, second) == w

    repaired = run_sweep(5, 8, 16, allow_repair=True)
    rows = repaired.set_index(['n', 'l'])
    for n, l in [(10, 5), (12, 6), (14, 7), (16, 8)]:
        assert rows.loc[(n, l), 'construction_valid']
        assert rows.loc[(n, l), 'repaired']
        assert rows.loc[(n, l), 'constructive_k'] == n - l + 1
    assert not repaired['discrepancy'].any()


def test_verifier_matches_naive_oracle_on_random_pairs():
    rng = np.random.default_rng(20240601)
    disagreements = 0
    for _ in range(1000):
        l = int(rng.integers(2, 12))
        n = int(rng.integers(l + 1, 13))
        g = dandelion(n, l)
        k = int(rng.integers(1, n + 1))
        labels = rng.integers(1, k + 3, size=n)
        labeling = Labeling({v: int(x) for v, x in zip(g.vertices, labels)}, k)
        fast, slow = verify(g, labeling), naive_verify(g, labeling)
        if fast.valid != slow.valid or set(fast.collisions) != set(slow.collisions):
            disagreements += 1
    assert disagreements == 0


@pytest.mark.slow
@pytest.mark.parametrize('n, l', REFERENCE + EQUALITY_GRID + [(6, 5), (8, 6), (9, 7), (10, 7)])
def test_lower_bound_soundness(n, l):
    g = dandelion(n, l)
    bound = lower_bound(g).lower_bound
    es = es_exact(g)
    assert es.status is EsStatus.EXACT
    assert es.k >= bound
    outcome = exists_labeling(g, bound - 1, budget=SOUNDNESS_BUDGET, use_bound=False)
    assert outcome.status is not SearchStatus.WITNESS


@pytest.mark.parametrize('n, l', [(n, l) for l in range(2, 12) for n in range(l + 1, l + 6)][:50])
def test_graph_documents_are_byte_stable(n, l):
    text = graph_to_json(dandelion(n, l))
    assert graph_to_json(graph_from_document(json.loads(text))) == text


@pytest.mark.parametrize('n, l, allow_repair', [(13, 5, False), (9, 5, False), (7, 5, False),
                                                 (10, 5, False), (10, 5, True), (16, 8, False)])
def test_label_verify_round_trip(n, l, allow_repair):
    doc = json.loads(json.dumps(construct(n, l, allow_repair=allow_repair).to_document()))
    labeling = Labeling.from_names(doc['labeling']['labels'], doc['labeling']['k'])
    g = graph_from_document(json.loads(graph_to_json(dandelion(n, l))))
    report = verify(g, labeling)
    assert report.to_document() == doc['report']
    assert report.valid == doc['valid']
