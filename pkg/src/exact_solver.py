#!/usr/bin/env python3
"""Exact edge irregularity strength of small graphs by backtracking.

Labels are assigned vertex by vertex in search order (path nodes from the
hub outwards, then leaves). Each assignment adds the weights of the edges
it closes; a repeated weight prunes the branch. Vertices with the same
neighbourhood are interchangeable, so their labels are forced to be
non-decreasing along the search order. A labeled vertex with r unlabeled
neighbours also needs r unused weights in [label+1, label+k]; branches
without that room are cut before descending.

es_exact() walks k upwards from the lower bound; the first k with a
witness is the answer and the previous k is the recorded infeasibility.
A SearchBudget turns an overlong search into an explicit UNKNOWN.
"""
from __future__ import annotations

import enum
import itertools
import logging
import time
from collections import defaultdict
from dataclasses import dataclass

import networkx as nx

from dandelion_builder import Graph, Role, Vertex
from labeling_verifier import Labeling, lower_bound
from toolkit_errors import EmptyGraphError, GraphError, ParameterDomainError

# How often (in nodes) the wall clock is consulted.
CLOCK_STRIDE = 1024


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_time: float | None = None  # seconds

    def to_document(self) -> dict:
        return {'max_nodes': self.max_nodes, 'max_time': self.max_time}


class SearchStatus(str, enum.Enum):
    WITNESS = 'witness'
    INFEASIBLE = 'infeasible'
    UNKNOWN = 'unknown'


class EsStatus(str, enum.Enum):
    EXACT = 'exact'
    INFEASIBLE_AT = 'infeasible_at'
    UNKNOWN = 'unknown'


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    k: int
    witness: Labeling | None
    nodes_explored: int


@dataclass(frozen=True)
class EsResult:
    status: EsStatus
    k: int
    witness: Labeling | None
    nodes_explored: int
    k_range_checked: tuple[int, int]
    infeasible_below: int | None = None

    def to_document(self) -> dict:
        return {
            'status': self.status.value,
            'k': self.k,
            'witness': self.witness.to_document() if self.witness is not None else None,
            'nodes_explored': self.nodes_explored,
            'k_range_checked': list(self.k_range_checked),
            'infeasible_below': self.infeasible_below,
        }


class _BudgetExhausted(Exception):
    pass


class _BudgetMeter:
    """Node and wall-clock accounting shared by every k of one es_exact run."""

    def __init__(self, budget: SearchBudget | None):
        self.budget = budget or SearchBudget()
        self.nodes = 0
        self.started = time.monotonic()

    def tick(self) -> None:
        self.nodes += 1
        if self.budget.max_nodes is not None and self.nodes > self.budget.max_nodes:
            raise _BudgetExhausted
        if (self.budget.max_time is not None and self.nodes % CLOCK_STRIDE == 0
                and time.monotonic() - self.started > self.budget.max_time):
            raise _BudgetExhausted


def search_order(g: Graph) -> tuple[Vertex, ...]:
    """Hub first, path nodes by index, leaves last."""
    path_nodes = [v for v in g.vertices if v.role is Role.PATH]
    leaves = [v for v in g.vertices if v.role is Role.LEAF]
    return tuple(path_nodes + leaves)


def interchangeable_classes(g: Graph) -> tuple[tuple[Vertex, ...], ...]:
    """Groups (size >= 2) of vertices sharing the same neighbour set, in search order."""
    groups = defaultdict(list)
    for v in search_order(g):
        groups[frozenset(g.neighbors(v))].append(v)
    return tuple(tuple(members) for members in groups.values() if len(members) > 1)


class _LabelingSearch:

    def __init__(self, g: Graph, k: int, meter: _BudgetMeter):
        self.k = k
        self.meter = meter
        self.order = search_order(g)
        position = {v: i for i, v in enumerate(self.order)}
        neighbour_positions = [sorted(position[u] for u in g.neighbors(v)) for v in self.order]
        self.earlier = [
            tuple(position[u] for u in g.neighbors(v) if position[u] < i)
            for i, v in enumerate(self.order)
        ]
        # watch[i]: (j, r) for labeled j <= i that still have r >= 2 unlabeled neighbours
        self.watch = []
        for i in range(len(self.order)):
            pending = ((j, sum(1 for p in neighbour_positions[j] if p > i)) for j in range(i + 1))
            self.watch.append(tuple((j, r) for j, r in pending if r >= 2))
        self.previous_twin = [None] * len(self.order)
        for members in interchangeable_classes(g):
            for before, after in itertools.pairwise(members):
                self.previous_twin[position[after]] = position[before]
        self.labels = [0] * len(self.order)
        self.used = set()

    def run(self) -> Labeling | None:
        if not self._extend(0):
            return None
        return Labeling(dict(zip(self.order, self.labels)), self.k)

    def _room_for_pending_edges(self, i: int) -> bool:
        # edges still to come at j need distinct unused weights in [label_j+1, label_j+k]
        for j, pending in self.watch[i]:
            base = self.labels[j]
            free = sum(1 for w in range(base + 1, base + self.k + 1) if w not in self.used)
            if free < pending:
                return False
        return True

    def _extend(self, i: int) -> bool:
        if i == len(self.order):
            return True
        twin = self.previous_twin[i]
        start = self.labels[twin] if twin is not None else 1
        for label in range(start, self.k + 1):
            self.meter.tick()
            closed = []
            for j in self.earlier[i]:
                w = label + self.labels[j]
                if w in self.used or w in closed:
                    break
                closed.append(w)
            else:
                self.labels[i] = label
                self.used.update(closed)
                if self._room_for_pending_edges(i) and self._extend(i + 1):
                    return True
                self.used.difference_update(closed)
        self.labels[i] = 0
        return False


def _check_searchable(g: Graph) -> None:
    if not g.vertices:
        raise EmptyGraphError('exact search on an empty graph')
    if not nx.is_connected(g.to_networkx()):
        raise GraphError('exact search needs a connected graph')


def es_pigeonhole_check(g: Graph, k: int) -> bool:
    """True when k is below the lower bound, so no k-labeling can exist."""
    return k < lower_bound(g).lower_bound


def exists_labeling(g: Graph, k: int, budget: SearchBudget | None = None,
                    use_bound: bool = True) -> SearchOutcome:
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ParameterDomainError(f'k must be >= 1 (got k={k!r})')
    _check_searchable(g)
    if use_bound and es_pigeonhole_check(g, k):
        return SearchOutcome(SearchStatus.INFEASIBLE, k, None, 0)

    meter = _BudgetMeter(budget)
    try:
        witness = _LabelingSearch(g, k, meter).run()
    except _BudgetExhausted:
        logging.warning(f'{g!r}: budget exhausted at k={k} after {meter.nodes} nodes')
        return SearchOutcome(SearchStatus.UNKNOWN, k, None, meter.nodes)
    if witness is None:
        return SearchOutcome(SearchStatus.INFEASIBLE, k, None, meter.nodes)
    return SearchOutcome(SearchStatus.WITNESS, k, witness, meter.nodes)


def es_exact(g: Graph, budget: SearchBudget | None = None, k_max: int | None = None) -> EsResult:
    """Smallest k with an edge irregular k-labeling, searching up from the lower bound."""
    _check_searchable(g)
    start = lower_bound(g).lower_bound
    if k_max is not None and k_max < start:
        return EsResult(EsStatus.INFEASIBLE_AT, k_max, None, 0, (start, k_max), infeasible_below=k_max)

    meter = _BudgetMeter(budget)
    infeasible_below = None
    k = start
    while True:
        if k_max is not None and k > k_max:
            return EsResult(EsStatus.INFEASIBLE_AT, k_max, None, meter.nodes, (start, k_max),
                            infeasible_below=infeasible_below)
        logging.debug(f'{g!r}: searching k={k}')
        try:
            witness = _LabelingSearch(g, k, meter).run()
        except _BudgetExhausted:
            logging.warning(f'{g!r}: budget exhausted at k={k} after {meter.nodes} nodes')
            return EsResult(EsStatus.UNKNOWN, k, None, meter.nodes, (start, k), infeasible_below)
        if witness is not None:
            return EsResult(EsStatus.EXACT, k, witness, meter.nodes, (start, k), infeasible_below)
        infeasible_below = k
        k += 1


def enumerate_oracle(g: Graph, k: int) -> Labeling | None:
    """Unpruned enumeration of {1..k}^V in canonical order; first valid labeling or None."""
    index = {v: i for i, v in enumerate(g.vertices)}
    ends = [(index[u], index[v]) for u, v in g.edges]
    for labels in itertools.product(range(1, k + 1), repeat=len(g.vertices)):
        weights = {labels[a] + labels[b] for a, b in ends}
        if len(weights) == len(ends):
            return Labeling(dict(zip(g.vertices, labels)), k)
    return None
