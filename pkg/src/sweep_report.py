#!/usr/bin/env python3
"""Plain-text report for a sweep table.

Sections: case breakdown, construction failures with their collision
certificates, exact solver agreement with the theorem, repaired instances.
"""
from pathlib import Path
import logging

import pandas as pd

from case_constructor import CaseKind, construct, theorem_bounds
from sweep_analyzer import summarize


def _certificate_lines(n: int, l: int, allow_repair: bool) -> list[str]:
    result = construct(n, l, allow_repair=allow_repair)
    lines = []
    for first, second, w in result.report.collisions:
        lines.append(f"      ({first[0]},{first[1]}) and ({second[0]},{second[1]}) both weigh {w}")
    for v, label in result.report.out_of_range:
        lines.append(f"      {v} labeled {label} outside [1, {result.claimed_k}]")
    return lines


def build_sweep_report(df: pd.DataFrame, allow_repair: bool = True) -> str:
    summary = summarize(df)
    mode = 'repair' if allow_repair else 'verbatim'

    report = []
    report.append("=" * 80)
    report.append(f"DANDELION EDGE IRREGULARITY SWEEP ({mode} mode)")
    report.append("=" * 80)
    report.append("")
    report.append(f"Instances: {summary['instances']}  "
                  f"(l {df['l'].min()}..{df['l'].max()}, n {df['n'].min()}..{df['n'].max()})"
                  if not df.empty else "Instances: 0")
    report.append("")

    # 1. Case breakdown
    report.append("1. CASE BREAKDOWN")
    report.append("-" * 80)
    for case in CaseKind:
        rows = df[df['case'] == case.value]
        report.append(f"  • {case.value}: {len(rows)} instances, "
                      f"{int(rows['construction_valid'].sum())} valid constructions")
    report.append("")

    # 2. Construction failures
    failures = df[~df['construction_valid']]
    report.append("2. CONSTRUCTION FAILURES")
    report.append("-" * 80)
    if failures.empty:
        report.append("  none")
    for _, row in failures.iterrows():
        report.append(f"  • D({row['n']},{row['l']}) {row['case']}, k={row['constructive_k']}:")
        report.extend(_certificate_lines(int(row['n']), int(row['l']), allow_repair))
    report.append("")

    # 3. Exact solver
    solved = df[df['exact_k'].notna()]
    report.append("3. EXACT SOLVER CHECK")
    report.append("-" * 80)
    report.append(f"  solved: {summary['exact_solved']}, budget exhausted: {summary['exact_unknown']}")
    for _, row in solved.iterrows():
        low, high = theorem_bounds(int(row['n']), int(row['l']))
        verdict = 'ok' if low <= row['exact_k'] <= high else 'OUTSIDE THEOREM INTERVAL'
        report.append(f"  • D({row['n']},{row['l']}) {row['case']}: es={row['exact_k']} "
                      f"theorem [{low}, {high}] {verdict}")
    report.append("")

    # 4. Repairs
    repaired = df[df['repaired']]
    report.append("4. REPAIRED CASE1 INSTANCES (p2 = 3)")
    report.append("-" * 80)
    if repaired.empty:
        report.append("  none")
    for _, row in repaired.iterrows():
        status = 'valid' if row['construction_valid'] else 'still invalid'
        report.append(f"  • D({row['n']},{row['l']}): {status} with k={row['constructive_k']}")
    report.append("")

    report.append(f"Discrepancies: {summary['discrepancies']}")
    report.append("=" * 80)
    report.append("END OF REPORT")
    report.append("=" * 80)
    return '\n'.join(report) + '\n'


def write_sweep_report(df: pd.DataFrame, out_dir: Path, allow_repair: bool = True) -> Path:
    report_path = Path(out_dir) / 'SWEEP_REPORT.txt'
    report_path.write_text(build_sweep_report(df, allow_repair=allow_repair), encoding='utf-8')
    logging.info(f'Generated sweep report: {report_path}')
    return report_path
