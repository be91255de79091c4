#!/usr/bin/env python3
"""Constructive edge irregular labelings of dandelion graphs, one per case.

Every instance D(n, l) falls in exactly one case, comparing the hub degree
n-l+1 with ceil(n/2):

- Case1 (hub degree larger): k = n-l+1, labels x_i = i, p0 = 1,
  p1 = n-l+1, p2 = 4, then pairs (p3, p4), (p5, p6), ... get n-l, n-l-1, ...
- Case2 (equal): k = n-l+1, p1 = p2 = n-l+1, then the same descending pairs.
- Case3 (hub degree smaller): k = n-l+ceil(l/2), pairs (p1, p2), (p3, p4), ...
  get n-l+1, n-l+2, ...

A trailing unpaired path node takes its pair's value. The Case1 formulas
collide when n = 2l and l >= 5: w(p1 p2) = n-l+5 equals the bottom of the
descending tail. The repair sets p2 = 3, which moves w(p1 p2) and w(p2 p3)
to n-l+4 and n-l+3. Repaired labelings are always re-verified.
"""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

from dandelion_builder import HUB, Vertex, check_dandelion_parameters, dandelion, leaf, path_node
from labeling_verifier import Labeling, VerifyReport, verify
from toolkit_errors import WrongCaseError

CASE1_P2_LABEL = 4
REPAIRED_P2_LABEL = 3


class CaseKind(str, enum.Enum):
    CASE1 = 'Case1'
    CASE2 = 'Case2'
    CASE3 = 'Case3'


def half_up(n: int) -> int:
    return (n + 1) // 2


def classify(n: int, l: int) -> CaseKind:
    check_dandelion_parameters(n, l)
    hub_degree = n - l + 1
    edge_term = half_up(n)
    if hub_degree > edge_term:
        return CaseKind.CASE1
    if hub_degree == edge_term:
        return CaseKind.CASE2
    return CaseKind.CASE3


def claimed_k(n: int, l: int) -> int:
    if classify(n, l) is CaseKind.CASE3:
        return n - l + half_up(l)
    return n - l + 1


def theorem_bounds(n: int, l: int) -> tuple[int, int]:
    """Interval the theorem asserts for es(D(n, l))."""
    if classify(n, l) is CaseKind.CASE3:
        return half_up(n), n - l + half_up(l)
    return n - l + 1, n - l + 1


@dataclass(frozen=True)
class ConstructionResult:
    n: int
    l: int
    case: CaseKind
    labeling: Labeling
    claimed_k: int
    repaired: bool
    report: VerifyReport

    @property
    def valid(self) -> bool:
        return self.report.valid

    @property
    def max_label(self) -> int:
        return self.labeling.max_label

    @property
    def weights(self) -> tuple[int, ...]:
        return self.report.weight_list

    def to_document(self) -> dict:
        return {
            'family': 'dandelion',
            'n': self.n,
            'l': self.l,
            'case': self.case.value,
            'claimed_k': self.claimed_k,
            'repaired': self.repaired,
            'valid': self.valid,
            'labeling': self.labeling.to_document(),
            'report': self.report.to_document(),
        }


def _star_labels(n: int, l: int) -> dict[Vertex, int]:
    labels = {leaf(i): i for i in range(1, n - l + 1)}
    labels[HUB] = 1
    return labels


def _descending_pair_value(n: int, l: int, j: int) -> int:
    # p3, p4 -> n-l; p5, p6 -> n-l-1; ...
    i = (j - 1) // 2
    return n - l - (i - 1)


def _ascending_pair_value(n: int, l: int, j: int) -> int:
    # p1, p2 -> n-l+1; p3, p4 -> n-l+2; ...
    return n - l + (j + 1) // 2


def case1_labels(n: int, l: int, p2_label: int = CASE1_P2_LABEL) -> dict[Vertex, int]:
    labels = _star_labels(n, l)
    labels[path_node(1)] = n - l + 1
    if l > 2:
        labels[path_node(2)] = p2_label
    for j in range(3, l):
        labels[path_node(j)] = _descending_pair_value(n, l, j)
    return labels


def case2_labels(n: int, l: int) -> dict[Vertex, int]:
    labels = _star_labels(n, l)
    for j in range(1, min(l, 3)):
        labels[path_node(j)] = n - l + 1
    for j in range(3, l):
        labels[path_node(j)] = _descending_pair_value(n, l, j)
    return labels


def case3_labels(n: int, l: int) -> dict[Vertex, int]:
    labels = _star_labels(n, l)
    for j in range(1, l):
        labels[path_node(j)] = _ascending_pair_value(n, l, j)
    return labels


_VERBATIM = {
    CaseKind.CASE1: case1_labels,
    CaseKind.CASE2: case2_labels,
    CaseKind.CASE3: case3_labels,
}


def verbatim_labeling(n: int, l: int) -> Labeling:
    """The case formulas as written, before any verification."""
    return Labeling(_VERBATIM[classify(n, l)](n, l), claimed_k(n, l))


def repaired_labeling(n: int, l: int) -> Labeling:
    _require_case(n, l, CaseKind.CASE1)
    return Labeling(case1_labels(n, l, p2_label=REPAIRED_P2_LABEL), claimed_k(n, l))


def _require_case(n: int, l: int, expected: CaseKind) -> None:
    actual = classify(n, l)
    if actual is not expected:
        raise WrongCaseError(f'D({n},{l}) is {actual.value}, not {expected.value}')


def construct_case1(n: int, l: int, allow_repair: bool = False) -> ConstructionResult:
    _require_case(n, l, CaseKind.CASE1)
    g = dandelion(n, l)
    labeling = verbatim_labeling(n, l)
    report = verify(g, labeling)
    repaired = False

    if not report.valid:
        logging.info(f'D({n},{l}): Case1 formulas collide at weights '
                     f'{sorted({w for _, _, w in report.collisions})}')
        if allow_repair and l > 2:
            labeling = repaired_labeling(n, l)
            report = verify(g, labeling)
            repaired = True
            if report.valid:
                logging.info(f'D({n},{l}): repaired with p2={REPAIRED_P2_LABEL}')
            else:
                logging.warning(f'D({n},{l}): repair with p2={REPAIRED_P2_LABEL} still collides')

    return ConstructionResult(n, l, CaseKind.CASE1, labeling, claimed_k(n, l), repaired, report)


def construct_case2(n: int, l: int) -> ConstructionResult:
    _require_case(n, l, CaseKind.CASE2)
    labeling = verbatim_labeling(n, l)
    return ConstructionResult(n, l, CaseKind.CASE2, labeling, claimed_k(n, l), False,
                              verify(dandelion(n, l), labeling))


def construct_case3(n: int, l: int) -> ConstructionResult:
    _require_case(n, l, CaseKind.CASE3)
    labeling = verbatim_labeling(n, l)
    return ConstructionResult(n, l, CaseKind.CASE3, labeling, claimed_k(n, l), False,
                              verify(dandelion(n, l), labeling))


def construct(n: int, l: int, allow_repair: bool = False) -> ConstructionResult:
    case = classify(n, l)
    if case is CaseKind.CASE1:
        return construct_case1(n, l, allow_repair=allow_repair)
    if case is CaseKind.CASE2:
        return construct_case2(n, l)
    return construct_case3(n, l)
