#!/usr/bin/env python3
"""Grid sweep over dandelion instances D(n, l).

For each admissible (n, l) with l_min <= l <= l_max and n <= n_max:
1. classify and construct the case labeling (verbatim or with the Case1 repair)
2. verify it
3. optionally compute es exactly (n <= exact_up_to)
4. flag discrepancies against the theorem

Creates (with an output directory):
- sweep.csv: one row per instance, columns in CSV_COLUMNS order
- sweep_case_summary.csv: per-case counts and mean runtimes
- SWEEP_REPORT.txt: see sweep_report.py
"""
from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from pathlib import Path

import pandas as pd

from case_constructor import CaseKind, construct
from dandelion_builder import dandelion
from exact_solver import EsStatus, SearchBudget, es_exact
from labeling_verifier import lower_bound
from toolkit_errors import ParameterDomainError

CSV_COLUMNS = [
    'n', 'l', 'case', 'lower_bound', 'constructive_k', 'construction_valid',
    'repaired', 'exact_k', 'discrepancy', 'construct_ms', 'exact_ms',
]
RUNTIME_COLUMNS = ['construct_ms', 'exact_ms']


@dataclass(frozen=True)
class SweepTask:
    n: int
    l: int
    allow_repair: bool = True
    exact: bool = False
    budget: SearchBudget | None = None


@dataclass(frozen=True)
class SweepRecord:
    n: int
    l: int
    case: str
    lower_bound: int
    constructive_k: int
    construction_valid: bool
    repaired: bool
    exact_k: int | None
    discrepancy: bool
    construct_ms: float
    exact_ms: float | None
    exact_status: str | None = None


def run_instance(task: SweepTask) -> SweepRecord:
    """generate -> construct -> verify -> solve, for one (n, l)."""
    g = dandelion(task.n, task.l)

    t0 = time.perf_counter()
    result = construct(task.n, task.l, allow_repair=task.allow_repair)
    construct_ms = (time.perf_counter() - t0) * 1000

    exact_k = exact_ms = exact_status = None
    if task.exact:
        t0 = time.perf_counter()
        es = es_exact(g, budget=task.budget)
        exact_ms = (time.perf_counter() - t0) * 1000
        exact_status = es.status.value
        if es.status is EsStatus.EXACT:
            exact_k = es.k

    equality_case = result.case in (CaseKind.CASE1, CaseKind.CASE2)
    discrepancy = (not result.valid
                   or (equality_case and exact_k is not None and exact_k != task.n - task.l + 1))

    return SweepRecord(
        n=task.n,
        l=task.l,
        case=result.case.value,
        lower_bound=lower_bound(g).lower_bound,
        constructive_k=result.claimed_k,
        construction_valid=result.valid,
        repaired=result.repaired,
        exact_k=exact_k,
        discrepancy=discrepancy,
        construct_ms=construct_ms,
        exact_ms=exact_ms,
        exact_status=exact_status,
    )


def sweep_tasks(l_min: int, l_max: int, n_max: int, exact_up_to: int | None = None,
                allow_repair: bool = True, budget: SearchBudget | None = None) -> list[SweepTask]:
    if l_min < 2:
        raise ParameterDomainError(f'l_min must be >= 2 (got l_min={l_min})')
    if l_max < l_min:
        raise ParameterDomainError(f'l_max must be >= l_min = {l_min} (got l_max={l_max})')
    if n_max < l_min + 1:
        raise ParameterDomainError(f'n_max must be >= l_min+1 = {l_min + 1} (got n_max={n_max})')
    return [
        SweepTask(n, l, allow_repair=allow_repair,
                  exact=exact_up_to is not None and n <= exact_up_to, budget=budget)
        for l in range(l_min, l_max + 1)
        for n in range(l + 1, n_max + 1)
    ]


def run_sweep(l_min: int, l_max: int, n_max: int, exact_up_to: int | None = None,
              jobs: int = 1, allow_repair: bool = True,
              budget: SearchBudget | None = None) -> pd.DataFrame:
    """One row per instance, sorted by (l, n) after collection."""
    tasks = sweep_tasks(l_min, l_max, n_max, exact_up_to, allow_repair, budget)
    mode = 'repair' if allow_repair else 'verbatim'
    logging.info(f'Sweeping {len(tasks)} instances (l={l_min}..{l_max}, n<={n_max}, '
                 f'exact<={exact_up_to}, mode={mode}, jobs={jobs})')

    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=min(jobs, len(tasks))) as pool:
            records = pool.map(run_instance, tasks)
    else:
        records = [run_instance(task) for task in tasks]

    df = pd.DataFrame([asdict(r) for r in records], columns=CSV_COLUMNS + ['exact_status'])
    df['exact_k'] = df['exact_k'].astype('Int64')
    df['exact_ms'] = df['exact_ms'].astype('float64')
    df = df.sort_values(['l', 'n'], kind='stable').reset_index(drop=True)
    logging.info(f'Sweep finished: {int(df["discrepancy"].sum())} discrepancies')
    return df


def sweep_to_csv(df: pd.DataFrame) -> str:
    return df[CSV_COLUMNS].to_csv(index=False, float_format='%.3f', lineterminator='\n')


def summarize(df: pd.DataFrame) -> dict:
    return {
        'instances': len(df),
        'case1': int((df['case'] == CaseKind.CASE1.value).sum()),
        'case2': int((df['case'] == CaseKind.CASE2.value).sum()),
        'case3': int((df['case'] == CaseKind.CASE3.value).sum()),
        'invalid': int((~df['construction_valid']).sum()),
        'repaired': int(df['repaired'].sum()),
        'exact_solved': int(df['exact_k'].notna().sum()),
        'exact_unknown': int((df['exact_status'] == EsStatus.UNKNOWN.value).sum()),
        'discrepancies': int(df['discrepancy'].sum()),
    }


def summary_line(summary: dict) -> str:
    return ' '.join(f'{key}={value}' for key, value in summary.items())


def case_summary(df: pd.DataFrame) -> pd.DataFrame:
    """Per-case counts and mean runtimes."""
    summary = df.groupby('case').agg(
        instances=('n', 'size'),
        valid=('construction_valid', 'sum'),
        repaired=('repaired', 'sum'),
        discrepancies=('discrepancy', 'sum'),
        exact_solved=('exact_k', 'count'),
        mean_construct_ms=('construct_ms', 'mean'),
        mean_exact_ms=('exact_ms', 'mean'),
    ).round(3)
    return summary.reset_index()


def write_sweep_outputs(df: pd.DataFrame, out_dir: Path, allow_repair: bool = True) -> list[Path]:
    from sweep_report import write_sweep_report

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    csv_path = out_dir / 'sweep.csv'
    csv_path.write_text(sweep_to_csv(df), encoding='utf-8')
    logging.info(f'Saved sweep table to {csv_path} ({len(df)} rows)')

    summary_path = out_dir / 'sweep_case_summary.csv'
    case_summary(df).to_csv(summary_path, index=False)
    logging.info(f'Saved case summary to {summary_path}')

    report_path = write_sweep_report(df, out_dir, allow_repair=allow_repair)
    return [csv_path, summary_path, report_path]
