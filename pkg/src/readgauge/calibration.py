"""Fitting formula coefficients to graded corpora.

Grade labels may be band names (K1 through K11-CCR) or plain numbers; bands
map to their numeric midpoints.  The five classic formulas are refit with a
damped (Levenberg-Marquardt) least-squares loop using analytic Jacobians
and fixed tolerances, so a refit is bit-reproducible: no randomness, stop
when the parameter step drops below 1e-10, the relative residual
improvement drops below 1e-12, or after 1,000 iterations.  The difficulty
model is linear in its seven weights and solves in closed form.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import (
    DivergedFit,
    FileUnreadable,
    MalformedRow,
    NonFiniteStats,
    TooFewItems,
    UnknownBand,
    WrongFormula,
)
from .formulas import (
    AUTO,
    COLE,
    CUSTOM,
    FKGL,
    FOGI,
    ORIGINAL,
    SMOG,
    TRADITIONAL_FORMULAS,
    CoefficientSet,
    builtin_coefficients,
)
from .nerf import NerfCoefficients, NerfFeatures
from .text_core import TextStats, text_stats

BAND_MIDPOINTS = {
    "K1": 1.0,
    "K2-3": 2.5,
    "K4-5": 4.5,
    "K6-8": 7.0,
    "K9-10": 9.5,
    "K11-CCR": 12.0,
}

_STEP_TOL = 1e-10
_RSS_TOL = 1e-12
_MAX_ITERATIONS = 1000
_GRADIENT_TOL = 1e-6
_RIDGE = 1e-9


def grade_band_to_midpoint(band: str) -> float:
    """Convert a grade-band label or numeric string to a numeric grade."""
    key = band.strip().upper()
    if key in BAND_MIDPOINTS:
        return BAND_MIDPOINTS[key]
    try:
        value = float(band)
    except ValueError:
        raise UnknownBand(f"unknown grade band {band!r}") from None
    if not math.isfinite(value):
        raise UnknownBand(f"grade {band!r} is not finite")
    return value


@dataclass(frozen=True)
class CorpusItem:
    id: str
    text: str
    label: float


@dataclass(frozen=True)
class LabeledCorpus:
    items: tuple[CorpusItem, ...]

    def __len__(self):
        return len(self.items)

    def labels(self) -> list[float]:
        return [item.label for item in self.items]

    def texts(self) -> list[str]:
        return [item.text for item in self.items]


@dataclass(frozen=True)
class FitResult:
    coefficients: object
    rss: float
    iterations: int
    converged: bool
    rank_deficient: bool = False


def _read_delimited(path) -> tuple[list[dict], str]:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            sample = fh.readline()
            fh.seek(0)
            delimiter = "\t" if "\t" in sample else ","
            return list(csv.DictReader(fh, delimiter=delimiter)), delimiter
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc


def load_corpus(path) -> LabeledCorpus:
    """Load a graded corpus.

    Accepts either a delimited file with id, label, and text columns
    (quoted text may span lines) or a directory holding <id>.txt files plus
    a labels.csv/labels.tsv index with id and label columns.
    """
    path = Path(path)
    items = []
    seen = set()
    if path.is_dir():
        index = next((path / n for n in ("labels.csv", "labels.tsv") if (path / n).exists()), None)
        if index is None:
            raise FileUnreadable(f"{path} has no labels.csv or labels.tsv index")
        rows, _ = _read_delimited(index)
        for row_number, row in enumerate(rows, start=2):
            item_id = (row.get("id") or "").strip()
            label = row.get("label")
            if not item_id or label is None:
                raise MalformedRow(
                    f"{index}: row {row_number} needs id and label", row_number
                )
            if item_id in seen:
                raise MalformedRow(
                    f"{index}: duplicate id {item_id!r} at row {row_number}", row_number
                )
            seen.add(item_id)
            text_path = path / f"{item_id}.txt"
            try:
                text = text_path.read_text(encoding="utf-8")
            except (OSError, UnicodeDecodeError) as exc:
                raise FileUnreadable(f"cannot read {text_path}: {exc}") from exc
            items.append(CorpusItem(item_id, text, grade_band_to_midpoint(label)))
    else:
        rows, _ = _read_delimited(path)
        for row_number, row in enumerate(rows, start=2):
            item_id = (row.get("id") or "").strip()
            label = row.get("label")
            text = row.get("text")
            if not item_id or label is None or text is None:
                raise MalformedRow(
                    f"{path}: row {row_number} needs id, label, and text", row_number
                )
            if item_id in seen:
                raise MalformedRow(
                    f"{path}: duplicate id {item_id!r} at row {row_number}", row_number
                )
            seen.add(item_id)
            items.append(CorpusItem(item_id, text, grade_band_to_midpoint(label)))
    return LabeledCorpus(tuple(items))


# --- classic-formula fitting -------------------------------------------------

def _ratio_arrays(stats_list: Sequence[TextStats]):
    words = np.array([s.words for s in stats_list], dtype=float)
    sents = np.array([s.sentences for s in stats_list], dtype=float)
    return {
        "u": words / sents,                                            # words per sentence
        "v": np.array([s.syllables for s in stats_list]) / words,      # syllables per word
        "d": np.array([s.difficult_words for s in stats_list]) / words,
        "p": np.array([s.polysyllable_words for s in stats_list]) / sents,
        "L": np.array([s.letters for s in stats_list]) / words,
        "S": sents / words,
    }


def _fkgl_model(r):
    def predict(t):
        return t[0] * r["u"] + t[1] * r["v"] + t[2]

    def jacobian(t):
        return np.column_stack([r["u"], r["v"], np.ones_like(r["u"])])

    return predict, jacobian


def _fogi_model(r):
    def predict(t):
        return t[0] * (r["u"] + t[1] * r["d"]) + t[2]

    def jacobian(t):
        return np.column_stack([r["u"] + t[1] * r["d"], t[0] * r["d"], np.ones_like(r["u"])])

    return predict, jacobian


def _smog_model(r):
    def predict(t):
        return t[0] * np.sqrt(np.maximum(t[1] * r["p"], 0.0)) + t[2]

    def jacobian(t):
        root = np.sqrt(np.maximum(t[1] * r["p"], 0.0))
        db = np.where(root > 0, t[0] * r["p"] / (2 * np.maximum(root, 1e-300)), 0.0)
        return np.column_stack([root, db, np.ones_like(root)])

    return predict, jacobian


def _cole_model(r):
    def predict(t):
        return t[0] * 100.0 * r["L"] + t[1] * 100.0 * r["S"] + t[2]

    def jacobian(t):
        return np.column_stack([100.0 * r["L"], 100.0 * r["S"], np.ones_like(r["L"])])

    return predict, jacobian


def _auto_model(r):
    # Fit targets the raw value; the original variant's ceiling is an
    # output convention, not part of the regression.
    def predict(t):
        return t[0] * r["L"] + t[1] * r["u"] + t[2]

    def jacobian(t):
        return np.column_stack([r["L"], r["u"], np.ones_like(r["L"])])

    return predict, jacobian


_MODELS = {
    FKGL: _fkgl_model,
    FOGI: _fogi_model,
    SMOG: _smog_model,
    COLE: _cole_model,
    AUTO: _auto_model,
}


def _project(formula: str, theta: np.ndarray) -> np.ndarray:
    if formula == SMOG and theta[1] < 0:
        theta = theta.copy()
        theta[1] = 0.0
    return theta


def fit_formula(
    corpus: LabeledCorpus,
    formula: str,
    init: Optional[CoefficientSet] = None,
) -> FitResult:
    """Refit one classic formula's (a, b, c) against a graded corpus.

    Initialization defaults to the formula's original published
    coefficients.  The surface-rounding convention never applies during
    fitting, and the polysyllable law's b stays non-negative by projection.
    """
    if formula not in _MODELS:
        raise ValueError(f"unknown formula {formula!r}")
    if init is not None and init.formula != formula:
        raise WrongFormula(f"init coefficients are for {init.formula!r}, not {formula!r}")
    if len(corpus) < 3:
        raise TooFewItems(f"need at least 3 items to fit 3 coefficients, got {len(corpus)}")

    stats_list = [text_stats(item.text) for item in corpus.items]
    y = np.array(corpus.labels(), dtype=float)
    if not np.all(np.isfinite(y)):
        raise NonFiniteStats("corpus labels contain non-finite values")
    ratios = _ratio_arrays(stats_list)
    if not all(np.all(np.isfinite(arr)) for arr in ratios.values()):
        raise NonFiniteStats("corpus statistics contain non-finite values")

    predict, jacobian = _MODELS[formula](ratios)
    start = init or builtin_coefficients(formula, ORIGINAL)
    theta = _project(formula, np.array([start.a, start.b, start.c], dtype=float))

    residuals = predict(theta) - y
    if not np.all(np.isfinite(residuals)):
        raise DivergedFit("initial coefficients produce non-finite residuals")
    rss = float(residuals @ residuals)

    lam = 1e-3
    iterations = 0
    reached_tolerance = False
    while iterations < _MAX_ITERATIONS:
        iterations += 1
        jac = jacobian(theta)
        gradient = jac.T @ residuals
        normal = jac.T @ jac
        damping = np.diag(np.maximum(np.diag(normal), 1e-12))
        try:
            delta = np.linalg.solve(normal + lam * damping, -gradient)
        except np.linalg.LinAlgError:
            delta = np.linalg.lstsq(normal + lam * damping, -gradient, rcond=None)[0]

        candidate = _project(formula, theta + delta)
        new_residuals = predict(candidate) - y
        if not np.all(np.isfinite(new_residuals)):
            lam *= 10.0
            if lam > 1e12:
                raise DivergedFit("no finite step found; the fit diverged")
            continue
        new_rss = float(new_residuals @ new_residuals)

        if new_rss <= rss:
            step = float(np.linalg.norm(candidate - theta))
            relative_drop = (rss - new_rss) / max(rss, 1e-300)
            theta, residuals, rss = candidate, new_residuals, new_rss
            lam = max(lam / 10.0, 1e-12)
            if step < _STEP_TOL or relative_drop < _RSS_TOL:
                reached_tolerance = True
                break
        else:
            lam *= 10.0
            if lam > 1e10:
                # Damping is saturated: no improving step exists at this
                # point, which is the projected minimum.
                reached_tolerance = True
                break

    gradient = jacobian(theta).T @ residuals
    gradient_small = float(np.max(np.abs(gradient))) <= _GRADIENT_TOL * (1.0 + rss)
    coefficients = CoefficientSet(formula, CUSTOM, float(theta[0]), float(theta[1]), float(theta[2]))
    return FitResult(
        coefficients=coefficients,
        rss=rss,
        iterations=iterations,
        converged=reached_tolerance and gradient_small,
    )


# --- difficulty-model fitting ------------------------------------------------

def nerf_design_row(features: NerfFeatures) -> list[float]:
    """The model's regressors for one document, bias term last."""
    s = float(features.sentences)
    return [
        features.aoa_sum / s,
        features.familiarity_sum / s,
        features.content_words / s,
        features.noun_phrases / s,
        features.tree_height_sum / s,
        features.unique_words / math.sqrt(features.words),
        1.0,
    ]


def fit_nerf(features: Sequence[NerfFeatures], labels: Sequence[float]) -> FitResult:
    """Fit the seven difficulty-model weights by least squares.

    The model is linear in its parameters, so the fit solves the normal
    equations directly.  A rank-deficient design falls back to a tiny
    ridge (1e-9) and flags the result rather than failing.
    """
    if len(features) != len(labels):
        raise ValueError("features and labels must have equal length")
    if len(features) < 7:
        raise TooFewItems(f"need at least 7 items to fit 7 weights, got {len(features)}")
    design = np.array([nerf_design_row(f) for f in features], dtype=float)
    y = np.array(labels, dtype=float)
    if not (np.all(np.isfinite(design)) and np.all(np.isfinite(y))):
        raise NonFiniteStats("non-finite feature or label values")

    normal = design.T @ design
    moment = design.T @ y
    rank_deficient = bool(np.linalg.matrix_rank(design) < design.shape[1])
    if rank_deficient:
        weights = np.linalg.solve(normal + _RIDGE * np.eye(design.shape[1]), moment)
    else:
        try:
            weights = np.linalg.solve(normal, moment)
        except np.linalg.LinAlgError:
            rank_deficient = True
            weights = np.linalg.solve(normal + _RIDGE * np.eye(design.shape[1]), moment)

    residuals = design @ weights - y
    coefficients = NerfCoefficients(*(float(w) for w in weights))
    return FitResult(
        coefficients=coefficients,
        rss=float(residuals @ residuals),
        iterations=1,
        converged=True,
        rank_deficient=rank_deficient,
    )
