#!/usr/bin/env python3
"""Command-line front end for the dandelion edge irregularity toolkit.

Subcommands:
  gen      graph document (JSON or DOT) for D(n, l)
  label    case labeling plus its verify report
  verify   check a labeling file against a graph file
  es       exact edge irregularity strength
  bound    lower bound, case and theorem interval
  sweep    CSV of construction/solver results over a grid
  figures  DOT files for the reference instances

Exit codes: 0 success/valid, 1 invalid/discrepancy, 2 usage/parse,
3 solver budget exhausted.
"""
from __future__ import annotations

import functools
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from case_constructor import classify, construct, theorem_bounds
from dandelion_builder import dandelion
from document_codec import dumps, graph_to_dot, graph_to_json, load_graph, load_labeling, validate_document
from exact_solver import EsStatus, SearchBudget, es_exact
from figure_exporter import FIGS, export_figures
from labeling_verifier import lower_bound, verify
from sweep_analyzer import run_sweep, summarize, summary_line, sweep_to_csv, write_sweep_outputs
from toolkit_errors import ToolkitError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3

DEFAULT_BUDGET_NODES = 2_000_000
DEFAULT_BUDGET_MS = None


@dataclass
class CliSettings:
    fmt: str | None = None
    jobs: int = 1
    budget_nodes: int | None = DEFAULT_BUDGET_NODES
    budget_ms: int | None = DEFAULT_BUDGET_MS
    seed: int | None = None

    def budget(self, nodes: int | None = None, ms: int | None = None) -> SearchBudget:
        nodes = nodes if nodes is not None else self.budget_nodes
        ms = ms if ms is not None else self.budget_ms
        return SearchBudget(max_nodes=nodes, max_time=ms / 1000 if ms is not None else None)


def exits_on_toolkit_error(command):
    """Report ToolkitError / OverflowError on stderr and exit 2."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (ToolkitError, OverflowError) as e:
            click.echo(f'error: {e}', err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


@click.group(context_settings={'help_option_names': ['-h', '--help']})
@click.option('--format', 'fmt', type=click.Choice(['json', 'dot', 'csv']), default=None,
              help='Default output format for subcommands that take one.')
@click.option('--jobs', type=click.IntRange(min=1), default=1, show_default=True,
              help='Worker processes for sweep.')
@click.option('--budget-nodes', type=click.IntRange(min=1), default=DEFAULT_BUDGET_NODES,
              show_default=True, help='Search-tree node budget per exact solve.')
@click.option('--budget-ms', type=click.IntRange(min=1), default=DEFAULT_BUDGET_MS,
              help='Wall-clock budget per exact solve, in milliseconds.')
@click.option('--seed', type=int, default=None, help='Reserved; every component is deterministic.')
@click.option('--verbose', '-v', is_flag=True, help='Log solver progress (DEBUG).')
@click.option('--quiet', '-q', is_flag=True, help='Only log warnings and errors.')
@click.pass_context
def cli(ctx, fmt, jobs, budget_nodes, budget_ms, seed, verbose, quiet):
    """Dandelion graphs D(n, l): labelings, verification and exact es."""
    logging.basicConfig(level=logging.INFO, format='%(levelname)s: %(message)s')
    logging.getLogger().setLevel(logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO)
    ctx.obj = CliSettings(fmt=fmt, jobs=jobs, budget_nodes=budget_nodes, budget_ms=budget_ms, seed=seed)


@cli.command()
@click.argument('n', type=int)
@click.argument('l', type=int)
@click.option('--format', 'fmt', type=click.Choice(['json', 'dot']), default=None)
@click.pass_obj
@exits_on_toolkit_error
def gen(settings: CliSettings, n, l, fmt):
    """Print D(n, l) as a JSON graph document or DOT."""
    fmt = fmt or (settings.fmt if settings.fmt in ('json', 'dot') else 'json')
    g = dandelion(n, l)
    click.echo(graph_to_dot(g) if fmt == 'dot' else graph_to_json(g), nl=False)


@cli.command()
@click.argument('n', type=int)
@click.argument('l', type=int)
@click.option('--verbatim/--repair', default=False,
              help='Emit the Case1 formulas as written, or repair colliding instances (default).')
@click.pass_obj
@exits_on_toolkit_error
def label(settings: CliSettings, n, l, verbatim):
    """Construct the case labeling of D(n, l) and verify it."""
    result = construct(n, l, allow_repair=not verbatim)
    click.echo(dumps(result.to_document()), nl=False)
    if not result.valid:
        click.echo(f'D({n},{l}): labeling is not edge irregular '
                   f'({len(result.report.collisions)} collisions)', err=True)
        sys.exit(EXIT_INVALID)


@cli.command('verify')
@click.argument('graph_file', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.argument('labeling_file', type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.pass_obj
@exits_on_toolkit_error
def verify_cmd(settings: CliSettings, graph_file, labeling_file):
    """Verify a labeling document against a graph document."""
    g = load_graph(graph_file)
    labeling = load_labeling(labeling_file)
    report = verify(g, labeling)
    doc = report.to_document()
    validate_document(doc, 'verify_report')
    click.echo(dumps(doc), nl=False)
    sys.exit(EXIT_OK if report.valid else EXIT_INVALID)


@cli.command()
@click.argument('n', type=int)
@click.argument('l', type=int)
@click.option('--budget-nodes', type=click.IntRange(min=1), default=None)
@click.option('--budget-ms', type=click.IntRange(min=1), default=None)
@click.option('--k-max', type=click.IntRange(min=1), default=None,
              help='Stop with infeasible_at once k exceeds this value.')
@click.pass_obj
@exits_on_toolkit_error
def es(settings: CliSettings, n, l, budget_nodes, budget_ms, k_max):
    """Exact edge irregularity strength of D(n, l)."""
    result = es_exact(dandelion(n, l), budget=settings.budget(budget_nodes, budget_ms), k_max=k_max)
    doc = result.to_document()
    validate_document(doc, 'es_result')
    click.echo(dumps(doc), nl=False)
    if result.status is EsStatus.UNKNOWN:
        sys.exit(EXIT_UNKNOWN)
    if result.status is EsStatus.INFEASIBLE_AT:
        sys.exit(EXIT_INVALID)


@cli.command()
@click.argument('n', type=int)
@click.argument('l', type=int)
@exits_on_toolkit_error
def bound(n, l):
    """Lower bound, case and the theorem's interval for es(D(n, l))."""
    case = classify(n, l)
    low, high = theorem_bounds(n, l)
    doc = {'n': n, 'l': l, 'case': case.value, **lower_bound(dandelion(n, l)).to_document(),
           'theorem_interval': [low, high]}
    click.echo(dumps(doc), nl=False)


@cli.command()
@click.argument('l_min', type=int)
@click.argument('l_max', type=int)
@click.argument('n_max', type=int)
@click.option('--exact-up-to', type=int, default=None, help='Solve es exactly for n <= this value.')
@click.option('--jobs', type=click.IntRange(min=1), default=None)
@click.option('--budget-nodes', type=click.IntRange(min=1), default=None)
@click.option('--budget-ms', type=click.IntRange(min=1), default=None)
@click.option('--verbatim/--repair', default=False)
@click.option('--out-dir', type=click.Path(file_okay=False, path_type=Path), default=None,
              help='Also write sweep.csv, sweep_case_summary.csv and SWEEP_REPORT.txt here.')
@click.pass_obj
@exits_on_toolkit_error
def sweep(settings: CliSettings, l_min, l_max, n_max, exact_up_to, jobs, budget_nodes, budget_ms,
          verbatim, out_dir):
    """CSV over all admissible D(n, l) with l_min <= l <= l_max and n <= n_max."""
    df = run_sweep(l_min, l_max, n_max, exact_up_to=exact_up_to, jobs=jobs or settings.jobs,
                   allow_repair=not verbatim, budget=settings.budget(budget_nodes, budget_ms))
    click.echo(sweep_to_csv(df), nl=False)
    summary = summarize(df)
    click.echo(summary_line(summary), err=True)
    if out_dir is not None:
        write_sweep_outputs(df, out_dir, allow_repair=not verbatim)
    sys.exit(EXIT_INVALID if summary['discrepancies'] else EXIT_OK)


@cli.command()
@click.option('--out-dir', type=click.Path(file_okay=False, path_type=Path), default=FIGS,
              show_default=True)
@exits_on_toolkit_error
def figures(out_dir):
    """Write DOT files for D(17,8), D(13,5), D(9,5) and D(7,5)."""
    for path in export_figures(out_dir):
        click.echo(str(path))


if __name__ == '__main__':
    cli()
