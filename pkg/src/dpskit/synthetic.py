"""Deterministic synthetic questionnaire data with the canonical shape.

Produces a 170-respondent, 54-item dataset (86 married / 84 divorced) whose
class-conditional answer distributions make it nearly but not perfectly
separable: most items shift strongly between classes, a few barely move, one
is constant, and four respondents give deliberately mixed answers. The same
seed always yields the same file, so the checked-in copy can be regenerated.

Usage: python -m dpskit.synthetic OUT.csv
"""

from __future__ import annotations

import sys

import numpy as np

from .data import Dataset, QuestionnaireInstance, save_dataset
from .questions import QUESTION_COUNT

# [married dist, divorced dist] over answer values 0..4, by tier
_TIER_TABLES = (
    ((0.75, 0.20, 0.05, 0.00, 0.00), (0.00, 0.02, 0.13, 0.45, 0.40)),  # very strong
    ((0.55, 0.30, 0.12, 0.03, 0.00), (0.02, 0.08, 0.25, 0.40, 0.25)),  # strong
    ((0.45, 0.30, 0.15, 0.08, 0.02), (0.05, 0.15, 0.30, 0.30, 0.20)),  # moderate
)
_WEAK_TABLE = ((0.25, 0.25, 0.20, 0.15, 0.15), (0.20, 0.20, 0.20, 0.20, 0.20))

_WEAK_ATTRIBUTES = frozenset({6, 7, 44, 47, 52})  # 1-based
_CONSTANT_ATTRIBUTE = 49

# (class, blend): blended respondents draw each answer from the other class's
# distribution with probability blend, which plants realistic near-boundary rows.
_BLENDED_RESPONDENTS = ((0, 0.5), (0, 0.42), (1, 0.5), (1, 0.42))

DEFAULT_SEED = 13


def _attribute_tables(rng: np.random.Generator):
    tables = []
    for idx in range(1, QUESTION_COUNT + 1):
        if idx == _CONSTANT_ATTRIBUTE:
            tables.append(None)
        elif idx in _WEAK_ATTRIBUTES:
            tables.append(_WEAK_TABLE)
        else:
            tables.append(_TIER_TABLES[rng.choice(3, p=(0.5, 0.4, 0.1))])
    return tables


def _draw_row(rng: np.random.Generator, tables, label: int, blend: float) -> tuple[int, ...]:
    answers = []
    for table in tables:
        if table is None:
            answers.append(0)
            continue
        source = label
        if blend > 0.0 and rng.random() < blend:
            source = 1 - label
        answers.append(int(rng.choice(5, p=table[source])))
    return tuple(answers)


def generate_synthetic_dataset(
    n_married: int = 86, n_divorced: int = 84, seed: int = DEFAULT_SEED
) -> Dataset:
    """Build the dataset; retries with consecutive seeds until rows are unique."""
    for attempt_seed in range(seed, seed + 100):
        rng = np.random.default_rng(attempt_seed)
        tables = _attribute_tables(rng)
        plan = [(0, 0.0)] * n_married + [(1, 0.0)] * n_divorced
        for pos, (label, blend) in enumerate(_BLENDED_RESPONDENTS):
            plan[pos if label == 0 else n_married + pos] = (label, blend)
        rows = [(label, _draw_row(rng, tables, label, blend)) for label, blend in plan]
        if len({answers for _, answers in rows}) != len(rows):
            continue  # duplicate respondents could carry conflicting labels
        order = rng.permutation(len(rows))
        instances = tuple(
            QuestionnaireInstance(answers=rows[i][1], label=rows[i][0]) for i in order
        )
        return Dataset(instances=instances, attribute_count=QUESTION_COUNT)
    raise RuntimeError("could not generate unique rows in 100 attempts")


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 1:
        print("usage: python -m dpskit.synthetic OUT.csv", file=sys.stderr)
        return 2
    save_dataset(generate_synthetic_dataset(), argv[0])
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
