#!/usr/bin/env python3
"""Dandelion, star and path graphs with the shared vertex naming.

Vertices are leaves x1..x(n-l) and path nodes p0..p(l-1). p0 is the hub:
the star centre identified with the first path vertex. Canonical order is
leaves by index, then path nodes by index; documents, searches and reports
all iterate in that order.

Creates:
- dandelion(n, l): star on n-l leaves glued to a path on l vertices at p0
- star(m): p0 with leaves x1..xm
- path(l): p0 - p1 - ... - p(l-1)
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable

import networkx as nx

from toolkit_errors import DocumentError, EmptyGraphError, GraphError, ParameterDomainError

VERTEX_NAME = re.compile(r'x[1-9][0-9]*|p(?:0|[1-9][0-9]*)')

FAMILIES = ('dandelion', 'star', 'path')


class Role(str, enum.Enum):
    LEAF = 'x'
    PATH = 'p'


@dataclass(frozen=True)
class Vertex:
    role: Role
    index: int

    def __post_init__(self):
        lowest = 1 if self.role is Role.LEAF else 0
        if self.index < lowest:
            raise GraphError(f'{self.role.value}{self.index}: index must be >= {lowest}')

    @property
    def name(self) -> str:
        return f'{self.role.value}{self.index}'

    @property
    def sort_key(self) -> tuple[int, int]:
        return (0 if self.role is Role.LEAF else 1, self.index)

    def __str__(self) -> str:
        return self.name


def leaf(i: int) -> Vertex:
    return Vertex(Role.LEAF, i)


def path_node(j: int) -> Vertex:
    return Vertex(Role.PATH, j)


HUB = path_node(0)


def parse_vertex(name) -> Vertex:
    """Parse 'x3' / 'p0' style names; anything else is a DocumentError."""
    if not isinstance(name, str) or not VERTEX_NAME.fullmatch(name):
        raise DocumentError(f'vertex: {name!r} is not a valid vertex name')
    return Vertex(Role(name[0]), int(name[1:]))


def canonical(vertices: Iterable[Vertex]) -> tuple[Vertex, ...]:
    return tuple(sorted(set(vertices), key=lambda v: v.sort_key))


Edge = tuple[Vertex, Vertex]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph; immutable once built.

    `edges` keeps generation order (hub-leaf edges, then path edges);
    equality compares the family, the parameters and the edge *set*.
    """
    family: str
    n: int
    l: int
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    _adjacency: dict = field(init=False, repr=False)

    def __post_init__(self):
        adjacency = {v: [] for v in self.vertices}
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f'loop at {u}')
            if u not in adjacency or v not in adjacency:
                missing = u if u not in adjacency else v
                raise GraphError(f'edge ({u}, {v}) uses unknown vertex {missing}')
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f'parallel edge ({u}, {v})')
            seen.add(key)
            adjacency[u].append(v)
            adjacency[v].append(u)
        frozen = {v: tuple(sorted(nbrs, key=lambda w: w.sort_key)) for v, nbrs in adjacency.items()}
        object.__setattr__(self, '_adjacency', frozen)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(frozenset(e) for e in self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def hub(self) -> Vertex | None:
        return HUB if HUB in self._adjacency else None

    @property
    def leaves(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if v.role is Role.LEAF)

    @property
    def path_nodes(self) -> tuple[Vertex, ...]:
        return tuple(v for v in self.vertices if v.role is Role.PATH)

    def neighbors(self, v: Vertex) -> tuple[Vertex, ...]:
        return self._adjacency[v]

    def degree(self, v: Vertex) -> int:
        return len(self._adjacency[v])

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(v.name for v in self.vertices)
        G.add_edges_from((u.name, v.name) for u, v in self.edges)
        return G

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return ((self.family, self.n, self.l, frozenset(self.vertices), self.edge_set)
                == (other.family, other.n, other.l, frozenset(other.vertices), other.edge_set))

    def __hash__(self):
        return hash((self.family, self.n, self.l, self.edge_set))

    def __repr__(self):
        return f'Graph({self.family}, n={self.n}, l={self.l}, edges={self.edge_count})'


def graph_from_edges(family: str, n: int, l: int, edges: Iterable[Edge],
                     vertices: Iterable[Vertex] = ()) -> Graph:
    """Build a Graph from explicit edges; vertices default to the edge endpoints."""
    edges = tuple((u, v) for u, v in edges)
    every = list(vertices) + [v for e in edges for v in e]
    return Graph(family, n, l, canonical(every), edges)


def _require_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParameterDomainError(f'{name} must be an integer (got {value!r})')


def check_dandelion_parameters(n: int, l: int) -> None:
    _require_int('n', n)
    _require_int('l', l)
    if l < 2:
        raise ParameterDomainError(f'l must be >= 2 (got l={l})')
    if n <= l:
        raise ParameterDomainError(f'n must be >= l+1 = {l + 1} (got n={n})')


def dandelion(n: int, l: int) -> Graph:
    """D(n, l): hub p0 with leaves x1..x(n-l) and the path p0..p(l-1)."""
    check_dandelion_parameters(n, l)
    hub_edges = [(HUB, leaf(i)) for i in range(1, n - l + 1)]
    path_edges = [(path_node(j), path_node(j + 1)) for j in range(l - 1)]
    return graph_from_edges('dandelion', n, l, hub_edges + path_edges)


def star(m: int) -> Graph:
    """Star with centre p0 and m leaves."""
    _require_int('m', m)
    if m < 1:
        raise ParameterDomainError(f'm must be >= 1 (got m={m})')
    return graph_from_edges('star', m + 1, 1, [(HUB, leaf(i)) for i in range(1, m + 1)])


def path(l: int) -> Graph:
    _require_int('l', l)
    if l < 1:
        raise ParameterDomainError(f'l must be >= 1 (got l={l})')
    edges = [(path_node(j), path_node(j + 1)) for j in range(l - 1)]
    return graph_from_edges('path', l, l, edges, vertices=[HUB])


def generate(family: str, n: int, l: int) -> Graph:
    """Rebuild a family member from its document header (family, n, l)."""
    if family == 'dandelion':
        return dandelion(n, l)
    if family == 'star':
        if l != 1:
            raise ParameterDomainError(f'star documents carry l=1 (got l={l})')
        return star(n - 1)
    if family == 'path':
        if n != l:
            raise ParameterDomainError(f'path documents carry n=l (got n={n}, l={l})')
        return path(l)
    raise ParameterDomainError(f'family must be one of {", ".join(FAMILIES)} (got {family!r})')


def max_degree(g: Graph) -> int:
    if not g.vertices:
        raise EmptyGraphError('max_degree of an empty graph')
    return max(d for _, d in g.to_networkx().degree())


def is_tree(g: Graph) -> bool:
    return bool(g.vertices) and nx.is_tree(g.to_networkx())
