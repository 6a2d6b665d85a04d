"""Agreement metrics and feature-importance scoring.

Metrics compare predicted difficulty against reference grades.  The
ranking harness checks ordered groups (hardest first): a group counts as
correct only when scores strictly decrease, so ties score as failures.

Feature tables hold absolute correlation values per feature and dataset.
Two point schemes summarize them: one ranks features within each dataset
(top ten ranks earn 10 points, the next ten 9, and so on), the other
awards points by correlation band (10 points at or above 0.9 down to 1
point below 0.1).  Either way the per-feature total across five datasets
tops out at 50.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ConstantSeries,
    ConstantTruth,
    EmptyGroups,
    EmptyInput,
    EmptyPairs,
    FileUnreadable,
    LengthMismatch,
    MalformedRow,
)

_BAND_EPSILON = 1e-9


def _paired(predicted: Sequence[float], actual: Sequence[float]):
    if len(predicted) != len(actual):
        raise LengthMismatch(
            f"got {len(predicted)} predictions for {len(actual)} reference values"
        )
    if not predicted:
        raise EmptyInput("no values to compare")
    return [float(p) for p in predicted], [float(a) for a in actual]


def mae(predicted: Sequence[float], actual: Sequence[float]) -> float:
    """Mean absolute error."""
    p, a = _paired(predicted, actual)
    return sum(abs(x - y) for x, y in zip(p, a)) / len(p)


def r2_score(predicted: Sequence[float], actual: Sequence[float]) -> float:
    """Coefficient of determination against the mean baseline.

    Predicting the mean of the reference values scores exactly 0; a
    constant reference has no variance to explain and is rejected.
    """
    p, a = _paired(predicted, actual)
    mean = sum(a) / len(a)
    total = sum((y - mean) ** 2 for y in a)
    if total == 0.0:
        raise ConstantTruth("reference values are constant; r2 is undefined")
    residual = sum((y - x) ** 2 for x, y in zip(p, a))
    return 1.0 - residual / total


def pearson_r(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson correlation of two equal-length series."""
    xs, ys = _paired(x, y)
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    dx = [v - mx for v in xs]
    dy = [v - my for v in ys]
    sx = math.sqrt(sum(v * v for v in dx))
    sy = math.sqrt(sum(v * v for v in dy))
    if sx == 0.0 or sy == 0.0:
        raise ConstantSeries("correlation is undefined for a constant series")
    return sum(a * b for a, b in zip(dx, dy)) / (sx * sy)


def rank_accuracy(score_groups: Sequence[Sequence[float]]) -> float:
    """Fraction of groups whose scores strictly decrease.

    Each group lists scores ordered from hardest to easiest item, so a
    perfect scorer produces a strictly decreasing sequence.  Any tie or
    inversion makes the group incorrect.
    """
    if not score_groups:
        raise EmptyGroups("no groups to rank")
    correct = 0
    for group in score_groups:
        if len(group) < 2:
            raise EmptyGroups("each group needs at least two items")
        if all(group[i] > group[i + 1] for i in range(len(group) - 1)):
            correct += 1
    return correct / len(score_groups)


def pairwise_accuracy(pairs: Sequence[tuple[float, float]]) -> float:
    """Fraction of (harder, easier) score pairs ordered correctly."""
    if not pairs:
        raise EmptyPairs("no pairs to compare")
    return sum(1 for harder, easier in pairs if harder > easier) / len(pairs)


# --- feature-importance tables -----------------------------------------------

@dataclass(frozen=True)
class FeatureTable:
    """Absolute correlations, one row per feature and one column per dataset."""

    features: tuple[str, ...]
    datasets: tuple[str, ...]
    values: tuple[tuple[float, ...], ...]

    def column(self, index: int) -> list[tuple[str, float]]:
        return [(name, row[index]) for name, row in zip(self.features, self.values)]


def load_feature_table(path) -> FeatureTable:
    """Load a delimited table: feature names down the first column,
    dataset names across the header, cell values in [0, 1]."""
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            sample = fh.readline()
            fh.seek(0)
            delimiter = "\t" if "\t" in sample else ","
            rows = list(csv.reader(fh, delimiter=delimiter))
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
    if len(rows) < 2 or len(rows[0]) < 2:
        raise MalformedRow(f"{path}: need a header row plus at least one feature row")
    datasets = tuple(name.strip() for name in rows[0][1:])
    features = []
    values = []
    seen = set()
    for row_number, row in enumerate(rows[1:], start=2):
        if len(row) != len(datasets) + 1:
            raise MalformedRow(
                f"{path}: row {row_number} has {len(row)} cells, expected {len(datasets) + 1}",
                row_number,
            )
        name = row[0].strip()
        if not name:
            raise MalformedRow(f"{path}: row {row_number} has no feature name", row_number)
        if name in seen:
            raise MalformedRow(
                f"{path}: duplicate feature {name!r} at row {row_number}", row_number
            )
        seen.add(name)
        cells = []
        for cell in row[1:]:
            try:
                value = float(cell)
            except ValueError:
                raise MalformedRow(
                    f"{path}: row {row_number} has non-numeric cell {cell!r}", row_number
                ) from None
            if not (math.isfinite(value) and 0.0 <= value <= 1.0):
                raise MalformedRow(
                    f"{path}: row {row_number} value {value} outside [0, 1]", row_number
                )
            cells.append(value)
        features.append(name)
        values.append(tuple(cells))
    return FeatureTable(tuple(features), tuple(datasets), tuple(values))


def _rank_points(rank: int) -> int:
    if rank > 100:
        return 0
    return 11 - math.ceil(rank / 10)


def approach_a_scores(table: FeatureTable) -> dict[str, int]:
    """Points from per-dataset rank: ranks 1-10 earn 10, 11-20 earn 9,
    and so on; ranks beyond 100 earn nothing.  Ties break by feature name."""
    if not table.features:
        raise EmptyInput("feature table has no rows")
    totals = {name: 0 for name in table.features}
    for col in range(len(table.datasets)):
        ordered = sorted(table.column(col), key=lambda item: (-item[1], item[0]))
        for rank, (name, _) in enumerate(ordered, start=1):
            totals[name] += _rank_points(rank)
    return totals


def band_points(value: float) -> int:
    """Points for one absolute correlation: 10 at or above 0.9, stepping
    down one point per 0.1 band, to 1 below 0.1."""
    for tenths in range(9, 0, -1):
        if value >= tenths / 10.0 - _BAND_EPSILON:
            return tenths + 1
    return 1


def approach_b_scores(table: FeatureTable) -> dict[str, int]:
    """Points from correlation bands, summed across datasets."""
    if not table.features:
        raise EmptyInput("feature table has no rows")
    return {
        name: sum(band_points(value) for value in row)
        for name, row in zip(table.features, table.values)
    }
