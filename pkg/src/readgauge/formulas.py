"""Five classic readability formulas with original and refitted coefficients.

Each formula reduces a TextStats to a grade-level estimate.  The "original"
coefficient sets are the published ones; the "adjusted" sets were refit
against leveled passages so that all five predict on a common grade scale.
Only the original automated-index convention rounds: scores are ceiled to
the next whole grade.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NegativeRadicand, WrongFormula
from .text_core import TextStats

FKGL = "fkgl"
FOGI = "fogi"
SMOG = "smog"
COLE = "cole"
AUTO = "auto"
NERF = "nerf"
TRADITIONAL_FORMULAS = (FKGL, FOGI, SMOG, COLE, AUTO)

ORIGINAL = "original"
ADJUSTED = "adjusted"
CUSTOM = "custom"
DEFAULT = "default"


@dataclass(frozen=True)
class CoefficientSet:
    formula: str
    variant: str
    a: float
    b: float
    c: float


@dataclass(frozen=True)
class Score:
    formula: str
    variant: str
    value: float
    rounded: bool


_BUILTIN = {
    (FKGL, ORIGINAL): (0.390, 11.80, -15.59),
    (FKGL, ADJUSTED): (0.1014, 20.89, -21.94),
    (FOGI, ORIGINAL): (0.4000, 100.0, 0.0000),
    (FOGI, ADJUSTED): (0.1229, 415.7, 1.866),
    (SMOG, ORIGINAL): (1.043, 30.00, 3.129),
    (SMOG, ADJUSTED): (2.694, 8.815, 3.367),
    (COLE, ORIGINAL): (0.05880, -0.2960, -15.80),
    (COLE, ADJUSTED): (0.03993, -0.4976, -5.747),
    (AUTO, ORIGINAL): (4.710, 0.5000, -21.43),
    (AUTO, ADJUSTED): (6.000, 0.1035, -19.61),
}


def builtin_coefficients(formula: str, variant: str) -> CoefficientSet:
    """Return the built-in coefficient set for a formula and variant."""
    try:
        a, b, c = _BUILTIN[(formula, variant)]
    except KeyError:
        raise ValueError(
            f"no built-in coefficients for formula {formula!r}, variant {variant!r}"
        ) from None
    return CoefficientSet(formula, variant, a, b, c)


def _require(coeffs: CoefficientSet, formula: str) -> CoefficientSet:
    if coeffs is None:
        return builtin_coefficients(formula, ADJUSTED)
    if coeffs.formula != formula:
        raise WrongFormula(
            f"coefficients are for {coeffs.formula!r}, not {formula!r}"
        )
    return coeffs


def fkgl(stats: TextStats, coeffs: CoefficientSet | None = None) -> Score:
    """Grade level from sentence length and syllables per word."""
    k = _require(coeffs, FKGL)
    value = (
        k.a * (stats.words / stats.sentences)
        + k.b * (stats.syllables / stats.words)
        + k.c
    )
    return Score(FKGL, k.variant, value, rounded=False)


def fogi(stats: TextStats, coeffs: CoefficientSet | None = None) -> Score:
    """Grade level from sentence length and the share of difficult words."""
    k = _require(coeffs, FOGI)
    value = k.a * (
        stats.words / stats.sentences
        + k.b * (stats.difficult_words / stats.words)
    ) + k.c
    return Score(FOGI, k.variant, value, rounded=False)


def smog(stats: TextStats, coeffs: CoefficientSet | None = None) -> Score:
    """Grade level from polysyllable density via a square-root law."""
    k = _require(coeffs, SMOG)
    radicand = k.b * (stats.polysyllable_words / stats.sentences)
    if radicand < 0:
        raise NegativeRadicand(
            f"smog radicand {radicand!r} is negative; b must be non-negative"
        )
    value = k.a * math.sqrt(radicand) + k.c
    return Score(SMOG, k.variant, value, rounded=False)


def cole(stats: TextStats, coeffs: CoefficientSet | None = None) -> Score:
    """Grade level from letters and sentences per hundred words."""
    k = _require(coeffs, COLE)
    value = (
        k.a * 100.0 * (stats.letters / stats.words)
        + k.b * 100.0 * (stats.sentences / stats.words)
        + k.c
    )
    return Score(COLE, k.variant, value, rounded=False)


def auto(stats: TextStats, coeffs: CoefficientSet | None = None) -> Score:
    """Grade level from characters per word and words per sentence.

    The original variant keeps the published convention of rounding up to
    the next whole grade; the adjusted variant reports the raw value.
    """
    k = _require(coeffs, AUTO)
    value = (
        k.a * (stats.letters / stats.words)
        + k.b * (stats.words / stats.sentences)
        + k.c
    )
    if k.variant == ORIGINAL:
        return Score(AUTO, k.variant, float(math.ceil(value)), rounded=True)
    return Score(AUTO, k.variant, value, rounded=False)


EVALUATORS = {FKGL: fkgl, FOGI: fogi, SMOG: smog, COLE: cole, AUTO: auto}


def score_stats(stats: TextStats, coeffs: CoefficientSet) -> Score:
    """Evaluate whichever traditional formula the coefficient set names."""
    try:
        evaluate = EVALUATORS[coeffs.formula]
    except KeyError:
        raise ValueError(f"unknown formula {coeffs.formula!r}") from None
    return evaluate(stats, coeffs)
