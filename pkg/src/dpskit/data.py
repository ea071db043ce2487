"""Loading, validation, splitting, and summary statistics for questionnaire data.

The on-disk format is plain delimited text: one row per respondent, 54 Likert
answers (integers 0..4) followed by a class code (0 or 1). The delimiter is
auto-detected (';' preferred, ',' fallback) and a single header row of
non-numeric tokens is tolerated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .questions import QUESTION_COUNT, SCALE_MAX, SCALE_MIN


class MalformedRowError(ValueError):
    """A data row failed validation; carries the 1-based line number."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class EmptyDatasetError(ValueError):
    pass


class DegenerateSplitError(ValueError):
    pass


class UnlabeledDataError(ValueError):
    pass


@dataclass(frozen=True)
class QuestionnaireInstance:
    """One respondent: a vector of Likert answers plus an optional class code."""

    answers: tuple[int, ...]
    label: int | None = None

    def __post_init__(self):
        for v in self.answers:
            if not SCALE_MIN <= v <= SCALE_MAX:
                raise ValueError(f"answer {v} outside [{SCALE_MIN}, {SCALE_MAX}]")
        if self.label is not None and self.label not in (0, 1):
            raise ValueError(f"label {self.label} not in {{0, 1}}")


@dataclass(frozen=True)
class Dataset:
    instances: tuple[QuestionnaireInstance, ...]
    attribute_count: int
    source_path: str | None = None

    def __post_init__(self):
        for inst in self.instances:
            if len(inst.answers) != self.attribute_count:
                raise ValueError(
                    f"instance has {len(inst.answers)} answers, expected {self.attribute_count}"
                )

    def __len__(self) -> int:
        return len(self.instances)

    def features(self) -> np.ndarray:
        """Answer matrix, shape (n, attribute_count), float64."""
        return np.array([inst.answers for inst in self.instances], dtype=np.float64)

    def labels(self) -> np.ndarray:
        """Label vector; raises UnlabeledDataError if any instance is unlabeled."""
        labels = [inst.label for inst in self.instances]
        if any(lb is None for lb in labels):
            raise UnlabeledDataError("dataset contains unlabeled instances")
        return np.array(labels, dtype=np.int64)

    def class_counts(self) -> dict[int, int]:
        counts = {0: 0, 1: 0}
        for inst in self.instances:
            if inst.label is not None:
                counts[inst.label] += 1
        return counts

    def subset(self, indices) -> "Dataset":
        """New Dataset keeping the given instance positions, in the given order."""
        return Dataset(
            instances=tuple(self.instances[i] for i in indices),
            attribute_count=self.attribute_count,
            source_path=self.source_path,
        )


@dataclass(frozen=True)
class ScalerStats:
    """Per-feature mean and population std; zero-variance columns store std 1.0."""

    means: tuple[float, ...]
    stds: tuple[float, ...]


@dataclass(frozen=True)
class Histogram:
    attribute_index: int  # 1-based
    counts: tuple[int, ...]  # one count per Likert value 0..4


def _detect_delimiter(first_line: str) -> str:
    return ";" if ";" in first_line else ","


def _looks_like_header(fields: list[str]) -> bool:
    def is_int(tok: str) -> bool:
        try:
            int(tok)
            return True
        except ValueError:
            return False

    # a header row has no integer tokens at all; a data row with a stray
    # non-integer token must still surface as a MalformedRowError
    return not any(is_int(tok) for tok in fields)


def load_dataset(path: str, attribute_count: int = QUESTION_COUNT) -> Dataset:
    """Load a delimited questionnaire file: 55 integer fields per row (54 + class).

    Raises FileNotFoundError, MalformedRowError, or EmptyDatasetError.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            raw_lines = fh.read().splitlines()
    except FileNotFoundError:
        raise FileNotFoundError(f"dataset file not found: {path}") from None

    lines = [(i + 1, ln.strip()) for i, ln in enumerate(raw_lines) if ln.strip()]
    if not lines:
        raise EmptyDatasetError(f"no rows in {path}")

    delimiter = _detect_delimiter(lines[0][1])
    if _looks_like_header([t.strip() for t in lines[0][1].split(delimiter)]):
        lines = lines[1:]
    if not lines:
        raise EmptyDatasetError(f"no data rows in {path}")

    expected = attribute_count + 1
    instances = []
    for lineno, line in lines:
        fields = [t.strip() for t in line.split(delimiter)]
        if len(fields) != expected:
            raise MalformedRowError(lineno, f"expected {expected} fields, got {len(fields)}")
        values = []
        for t in fields:
            try:
                values.append(int(t))
            except ValueError:
                raise MalformedRowError(lineno, f"non-integer token {t!r}") from None
        answers, label = values[:-1], values[-1]
        for j, v in enumerate(answers):
            if not SCALE_MIN <= v <= SCALE_MAX:
                raise MalformedRowError(
                    lineno, f"answer {v} at attribute {j + 1} outside [{SCALE_MIN}, {SCALE_MAX}]"
                )
        if label not in (0, 1):
            raise MalformedRowError(lineno, f"class code {label} not in {{0, 1}}")
        instances.append(QuestionnaireInstance(answers=tuple(answers), label=label))

    return Dataset(instances=tuple(instances), attribute_count=attribute_count, source_path=path)


def save_dataset(d: Dataset, path: str, delimiter: str = ";", header: bool = True) -> None:
    """Write a Dataset back to delimited text (inverse of load_dataset)."""
    with open(path, "w", encoding="utf-8") as fh:
        if header:
            names = [f"Atr{i + 1}" for i in range(d.attribute_count)] + ["Class"]
            fh.write(delimiter.join(names) + "\n")
        for inst in d.instances:
            if inst.label is None:
                raise UnlabeledDataError("cannot save unlabeled instance")
            fh.write(delimiter.join(str(v) for v in (*inst.answers, inst.label)) + "\n")


def split_train_test(d: Dataset, train_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Stratified, seeded train/test split.

    The overall train size is round(train_fraction * n); per-class train counts
    follow class proportions by largest remainder, so each class lands within
    one instance of round(train_fraction * class_count). Membership is
    deterministic for a fixed seed, and train/test partition the input.
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError(f"train_fraction {train_fraction} outside (0, 1)")
    n = len(d)
    if n < 2:
        raise DegenerateSplitError("need at least 2 instances to split")
    labels = d.labels()

    target_train = int(np.floor(train_fraction * n + 0.5))
    if target_train == 0 or target_train == n:
        raise DegenerateSplitError(
            f"train_fraction {train_fraction} leaves an empty side for n={n}"
        )

    by_class = {c: np.flatnonzero(labels == c) for c in sorted(set(labels.tolist()))}
    quotas = {c: train_fraction * len(idx) for c, idx in by_class.items()}
    take = {c: int(np.floor(q)) for c, q in quotas.items()}
    leftover = target_train - sum(take.values())
    # Hand remaining slots to the largest fractional remainders (ties: lower class code).
    order = sorted(by_class, key=lambda c: (-(quotas[c] - take[c]), c))
    for c in order[:leftover]:
        take[c] += 1

    rng = np.random.default_rng(seed)
    train_idx: list[int] = []
    test_idx: list[int] = []
    for c in sorted(by_class):
        members = by_class[c].copy()
        rng.shuffle(members)
        train_idx.extend(members[: take[c]].tolist())
        test_idx.extend(members[take[c] :].tolist())

    return d.subset(sorted(train_idx)), d.subset(sorted(test_idx))


def standardize_fit(d: Dataset) -> ScalerStats:
    """Per-feature mean and population std of a dataset (std 0 stored as 1.0)."""
    if len(d) == 0:
        raise EmptyDatasetError("cannot fit scaler on empty dataset")
    X = d.features()
    means = X.mean(axis=0)
    stds = X.std(axis=0)
    stds = np.where(stds > 0.0, stds, 1.0)
    return ScalerStats(means=tuple(means.tolist()), stds=tuple(stds.tolist()))


def standardize_apply(s: ScalerStats, x) -> np.ndarray:
    """(x - means) / stds, elementwise; accepts a vector or a matrix."""
    x = np.asarray(x, dtype=np.float64)
    means = np.asarray(s.means)
    stds = np.asarray(s.stds)
    if x.shape[-1] != means.shape[0]:
        raise ValueError(f"width {x.shape[-1]} does not match scaler width {means.shape[0]}")
    return (x - means) / stds


def attribute_histogram(d: Dataset, index: int) -> Histogram:
    """Counts of each Likert value 0..4 for a 1-based attribute index."""
    if not 1 <= index <= d.attribute_count:
        raise IndexError(f"attribute index {index} outside 1..{d.attribute_count}")
    counts = [0] * (SCALE_MAX - SCALE_MIN + 1)
    for inst in d.instances:
        counts[inst.answers[index - 1]] += 1
    return Histogram(attribute_index=index, counts=tuple(counts))
