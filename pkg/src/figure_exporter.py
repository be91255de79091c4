#!/usr/bin/env python3
"""Write DOT figures for the reference dandelion instances.

Creates:
1. D(17,8) unlabeled, hub-centred
2. D(13,5) with its Case1 labeling (k = 9)
3. D(9,5) with its Case2 labeling (k = 5)
4. D(7,5) with its Case3 labeling (max label 4 <= 5)

Render with e.g. `twopi -Tpng results/figures/figure2_D13_5.dot -o fig2.png`.
"""
from pathlib import Path
import logging

from case_constructor import construct
from dandelion_builder import dandelion
from document_codec import graph_to_dot

ROOT = Path(__file__).resolve().parents[1]
FIGS = ROOT / 'results' / 'figures'

# name -> (n, l, labeled)
GOLDEN_INSTANCES = {
    'figure1_D17_8': (17, 8, False),
    'figure2_D13_5': (13, 5, True),
    'figure3_D9_5': (9, 5, True),
    'figure4_D7_5': (7, 5, True),
}


def figure_dot(n: int, l: int, labeled: bool) -> str:
    g = dandelion(n, l)
    if not labeled:
        return graph_to_dot(g, title=f'D({n},{l})')
    result = construct(n, l, allow_repair=True)
    return graph_to_dot(g, result.labeling, title=f'D({n},{l}) {result.case.value} k={result.claimed_k}')


def export_figures(out_dir: Path = FIGS) -> list[Path]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, (n, l, labeled) in GOLDEN_INSTANCES.items():
        out_path = out_dir / f'{name}.dot'
        out_path.write_text(figure_dot(n, l, labeled), encoding='utf-8')
        logging.info(f'Saved {out_path}')
        written.append(out_path)
    return written
