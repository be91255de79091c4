#!/usr/bin/env python3
"""JSON and DOT documents for graphs, labelings, reports and solver results.

Every document written here is byte-stable for fixed inputs: keys keep
insertion order, vertices are written in canonical order and edges in
generation order. Incoming documents are checked against the JSON Schema
files under schemas/ before they are turned into objects.
"""
from __future__ import annotations

import json
from functools import lru_cache
from pathlib import Path

import jsonschema

from dandelion_builder import Graph, generate, parse_vertex
from labeling_verifier import Labeling, verify
from toolkit_errors import DocumentError

ROOT = Path(__file__).resolve().parents[1]
SCHEMAS = ROOT / 'schemas'

SCHEMA_FILES = {
    'graph': 'graph.schema.json',
    'labeling': 'labeling.schema.json',
    'verify_report': 'verify_report.schema.json',
    'es_result': 'es_result.schema.json',
}

HUB_FILL = '#d9d9d9'


@lru_cache(maxsize=None)
def load_schema(kind: str) -> dict:
    with (SCHEMAS / SCHEMA_FILES[kind]).open('r', encoding='utf-8') as f:
        return json.load(f)


def validate_document(doc, kind: str) -> None:
    """Raise DocumentError naming the offending field when doc breaks its schema."""
    try:
        jsonschema.validate(instance=doc, schema=load_schema(kind))
    except jsonschema.ValidationError as e:
        where = '.'.join(str(part) for part in e.absolute_path) or '<root>'
        raise DocumentError(f'{where}: {e.message}') from None


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + '\n'


def load_json(path: Path) -> dict:
    path = Path(path)
    try:
        with path.open('r', encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise DocumentError(f'{path.name}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}') from None


# --- graphs -----------------------------------------------------------------

def graph_to_document(g: Graph) -> dict:
    return {
        'family': g.family,
        'n': g.n,
        'l': g.l,
        'edges': [[u.name, v.name] for u, v in g.edges],
    }


def graph_to_json(g: Graph) -> str:
    return dumps(graph_to_document(g))


def graph_from_document(doc) -> Graph:
    """Rebuild a family member and check the document's edges against it."""
    validate_document(doc, 'graph')
    g = generate(doc['family'], doc['n'], doc['l'])
    edges = {frozenset((parse_vertex(u), parse_vertex(v))) for u, v in doc['edges']}
    if len(edges) != len(doc['edges']) or edges != g.edge_set:
        raise DocumentError(f"edges: do not form {doc['family']} with n={doc['n']}, l={doc['l']}")
    return g


def load_graph(path: Path) -> Graph:
    return graph_from_document(load_json(path))


def graph_to_dot(g: Graph, labeling: Labeling | None = None, title: str | None = None) -> str:
    """Radial DOT layout rooted at the hub; with a labeling, nodes show labels and edges weights."""
    name = title or f'{g.family}_{g.n}_{g.l}'
    lines = [f'graph "{name}" {{']
    lines.append('  layout=twopi;')
    if g.hub is not None:
        lines.append(f'  root="{g.hub.name}";')
    lines.append('  node [shape=circle, fontname="Helvetica", fontsize=10];')
    lines.append('  edge [fontname="Helvetica", fontsize=9];')

    for v in g.vertices:
        attrs = []
        if labeling is not None:
            attrs += [f'label="{labeling[v]}"', f'xlabel="{v.name}"']
        if v == g.hub:
            attrs += ['style=filled', f'fillcolor="{HUB_FILL}"']
        suffix = f' [{", ".join(attrs)}]' if attrs else ''
        lines.append(f'  "{v.name}"{suffix};')

    weights = verify(g, labeling).weight_list if labeling is not None else None
    for i, (u, v) in enumerate(g.edges):
        suffix = f' [label="{weights[i]}"]' if weights is not None else ''
        lines.append(f'  "{u.name}" -- "{v.name}"{suffix};')

    lines.append('}')
    return '\n'.join(lines) + '\n'


# --- labelings --------------------------------------------------------------

def labeling_to_json(labeling: Labeling) -> str:
    return dumps(labeling.to_document())


def labeling_from_document(doc) -> Labeling:
    validate_document(doc, 'labeling')
    return Labeling.from_names(doc['labels'], doc['k'])


def load_labeling(path: Path) -> Labeling:
    """Accept a bare labeling document or a `label` command output embedding one."""
    doc = load_json(path)
    if isinstance(doc, dict) and 'labeling' in doc and 'labels' not in doc:
        doc = doc['labeling']
    return labeling_from_document(doc)
