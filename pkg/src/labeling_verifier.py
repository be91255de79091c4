#!/usr/bin/env python3
"""Vertex k-labelings, edge weights and the edge-irregularity verifier.

The weight of an edge xy is label(x) + label(y). A labeling is edge
irregular when every label lies in [1, k] and all edge weights differ.
verify() reports every colliding pair, not just the first, so sweeps can
keep a full certificate for each failure.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

import numpy as np

from dandelion_builder import Edge, Graph, Vertex, max_degree, parse_vertex
from toolkit_errors import LabelingError, UnlabeledVertexError

# Largest label whose pairwise sums still fit in int64.
MAX_SAFE_LABEL = 2 ** 62 - 1


@dataclass(frozen=True)
class Labeling:
    """Map vertex -> positive integer label, with its declared bound k.

    Labels above k are accepted here; the verifier reports them.
    """
    labels: Mapping[Vertex, int]
    k: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, (int, np.integer)) or self.k < 1:
            raise LabelingError(f'k: must be a positive integer (got {self.k!r})')
        checked = {}
        for v, label in self.labels.items():
            if isinstance(label, bool) or not isinstance(label, (int, np.integer)):
                raise LabelingError(f'labels.{v}: must be an integer (got {label!r})')
            if label < 1:
                raise LabelingError(f'labels.{v}: must be >= 1 (got {label})')
            checked[v] = int(label)
        object.__setattr__(self, 'labels', dict(sorted(checked.items(), key=lambda item: item[0].sort_key)))
        object.__setattr__(self, 'k', int(self.k))

    @classmethod
    def from_names(cls, labels: Mapping[str, int], k: int) -> 'Labeling':
        return cls({parse_vertex(name): label for name, label in labels.items()}, k)

    def __getitem__(self, v: Vertex) -> int:
        try:
            return self.labels[v]
        except KeyError:
            raise UnlabeledVertexError(f'unlabeled vertex {v}') from None

    @property
    def max_label(self) -> int:
        return max(self.labels.values(), default=0)

    def with_bound(self, k: int) -> 'Labeling':
        return Labeling(self.labels, k)

    def to_document(self) -> dict:
        return {'k': self.k, 'labels': {v.name: label for v, label in self.labels.items()}}


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    out_of_range: tuple[tuple[Vertex, int], ...]
    collisions: tuple[tuple[Edge, Edge, int], ...]
    weight_list: tuple[int, ...]

    def to_document(self) -> dict:
        return {
            'valid': self.valid,
            'out_of_range': [{'vertex': v.name, 'label': label} for v, label in self.out_of_range],
            'collisions': [
                {'edges': [[e.name for e in first], [e.name for e in second]], 'weight': w}
                for first, second, w in self.collisions
            ],
            'weights': list(self.weight_list),
        }


@dataclass(frozen=True)
class BoundInfo:
    edge_term: int
    degree_term: int
    lower_bound: int

    def to_document(self) -> dict:
        return {'edge_term': self.edge_term, 'degree_term': self.degree_term,
                'lower_bound': self.lower_bound}


def weight(labeling: Labeling, edge: Edge) -> int:
    u, v = edge
    return labeling[u] + labeling[v]


def _check_total(g: Graph, labeling: Labeling) -> None:
    for v in g.vertices:
        if v not in labeling.labels:
            raise UnlabeledVertexError(f'unlabeled vertex {v}')
    if len(labeling.labels) != len(g.vertices):
        known = set(g.vertices)
        foreign = [v for v in labeling.labels if v not in known]
        raise LabelingError(f'labels.{foreign[0]}: vertex is not in the graph')


def edge_weights(g: Graph, labeling: Labeling) -> np.ndarray:
    """int64 weights in g.edges order."""
    _check_total(g, labeling)
    if labeling.max_label > MAX_SAFE_LABEL:
        raise OverflowError(f'label {labeling.max_label} exceeds {MAX_SAFE_LABEL}; weights would overflow int64')
    if not g.edges:
        return np.zeros(0, dtype=np.int64)
    index = {v: i for i, v in enumerate(g.vertices)}
    labels = np.array([labeling.labels[v] for v in g.vertices], dtype=np.int64)
    ends = np.array([(index[u], index[v]) for u, v in g.edges], dtype=np.intp)
    return labels[ends[:, 0]] + labels[ends[:, 1]]


def _out_of_range(g: Graph, labeling: Labeling) -> tuple[tuple[Vertex, int], ...]:
    return tuple((v, labeling.labels[v]) for v in g.vertices if not 1 <= labeling.labels[v] <= labeling.k)


def verify(g: Graph, labeling: Labeling) -> VerifyReport:
    weights = edge_weights(g, labeling)
    out_of_range = _out_of_range(g, labeling)

    collisions = []
    values, counts = np.unique(weights, return_counts=True)
    for value in values[counts > 1]:
        members = np.flatnonzero(weights == value)
        for a, b in combinations(members.tolist(), 2):
            collisions.append((g.edges[a], g.edges[b], int(value)))

    return VerifyReport(
        valid=not out_of_range and not collisions,
        out_of_range=out_of_range,
        collisions=tuple(collisions),
        weight_list=tuple(int(w) for w in weights),
    )


def naive_verify(g: Graph, labeling: Labeling) -> VerifyReport:
    """All-pairs comparison in plain Python; the oracle verify() is checked against."""
    _check_total(g, labeling)
    weights = [weight(labeling, e) for e in g.edges]
    collisions = []
    for a in range(len(g.edges)):
        for b in range(a + 1, len(g.edges)):
            if weights[a] == weights[b]:
                collisions.append((g.edges[a], g.edges[b], weights[a]))
    out_of_range = _out_of_range(g, labeling)
    return VerifyReport(not out_of_range and not collisions, out_of_range, tuple(collisions), tuple(weights))


def collisions_by_weight(report: VerifyReport) -> dict[int, list[tuple[Edge, Edge]]]:
    grouped = defaultdict(list)
    for first, second, w in report.collisions:
        grouped[w].append((first, second))
    return dict(grouped)


def permute_leaves(labeling: Labeling, permutation: Mapping[Vertex, Vertex]) -> Labeling:
    """Move each leaf's label to its image under `permutation`; other labels stay."""
    moved = {v: label for v, label in labeling.labels.items() if v not in permutation}
    for source, target in permutation.items():
        moved[target] = labeling.labels[source]
    return Labeling(moved, labeling.k)


def lower_bound(g: Graph) -> BoundInfo:
    """max(ceil((|E|+1)/2), max degree); the edge term is ceil(n/2) on a dandelion."""
    degree_term = max_degree(g)
    edge_term = (g.edge_count + 2) // 2
    return BoundInfo(edge_term, degree_term, max(edge_term, degree_term))
