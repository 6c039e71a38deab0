"""Batch experiment driver: sample-size sweeps against a ground-truth model.

For each requested word count, a number of independent trials draw random
words, label a random fraction of the pairs from the truth model, check
whether the sample came out characteristic, learn an automaton, and test
it for equivalence against the truth.  Rows aggregate per word count.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .automata import PDFA, equivalent
from .characteristic import is_characteristic
from .learner import learn_pdfa
from .oracle import GenerationConfig, draw_words, label_pairs
from .prefix_tree import build_prefix_tree
from .sample import close_sample

CSV_COLUMNS = (
    "words",
    "characteristic",
    "viol_c1",
    "viol_c2",
    "viol_c3",
    "viol_c4",
    "canonical",
    "time_seconds",
)


@dataclass(frozen=True)
class ExperimentConfig:
    truth: PDFA
    counts: Tuple[int, ...]
    trials: int = 10
    fraction: float = 1 / 3
    seed: int = 0
    extend_probability: float = 0.25
    stop_probability: float = 0.25


@dataclass(frozen=True)
class ExperimentRow:
    words: int
    characteristic: int
    violations: Tuple[int, int, int, int]
    canonical: int
    mean_seconds: float


@dataclass(frozen=True)
class TrialOutcome:
    words: int
    trial: int
    characteristic: bool
    violated: Tuple[int, ...]
    canonical: bool
    seconds: float


def run_trial(cfg: ExperimentConfig, count: int, trial: int) -> TrialOutcome:
    gen = GenerationConfig(
        word_count=count,
        extend_probability=cfg.extend_probability,
        stop_probability=cfg.stop_probability,
        comparison_fraction=cfg.fraction,
        seed=cfg.seed * 1_000_003 + count * 1_009 + trial,
    )
    start = time.perf_counter()
    words = draw_words(gen, cfg.truth.alphabet)
    sample = label_pairs(cfg.truth, words, gen)
    closed = close_sample(sample)
    report = is_characteristic(cfg.truth, closed)
    learned = learn_pdfa(build_prefix_tree(closed))
    verdict = equivalent(learned.automaton, cfg.truth)
    seconds = time.perf_counter() - start
    return TrialOutcome(
        words=count,
        trial=trial,
        characteristic=report.overall,
        violated=report.violated(),
        canonical=verdict.equivalent,
        seconds=seconds,
    )


def run_experiment(cfg: ExperimentConfig) -> List[ExperimentRow]:
    rows = []
    for count in cfg.counts:
        char = canonical = 0
        violations = [0, 0, 0, 0]
        total = 0.0
        for trial in range(cfg.trials):
            outcome = run_trial(cfg, count, trial)
            char += outcome.characteristic
            canonical += outcome.canonical
            for c in outcome.violated:
                violations[c - 1] += 1
            total += outcome.seconds
        rows.append(
            ExperimentRow(
                words=count,
                characteristic=char,
                violations=tuple(violations),
                canonical=canonical,
                mean_seconds=total / max(1, cfg.trials),
            )
        )
    return rows


def rows_to_csv(rows: Sequence[ExperimentRow]) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.words,
                row.characteristic,
                *row.violations,
                row.canonical,
                f"{row.mean_seconds:.3f}",
            ]
        )
    return out.getvalue()
