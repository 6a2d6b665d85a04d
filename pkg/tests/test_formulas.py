"""Formula evaluator tests against independently computed values."""

import math
import random

import pytest

from readgauge.errors import NegativeRadicand, WrongFormula
from readgauge.formulas import (
    ADJUSTED,
    AUTO,
    COLE,
    CUSTOM,
    FKGL,
    FOGI,
    ORIGINAL,
    SMOG,
    TRADITIONAL_FORMULAS,
    CoefficientSet,
    auto,
    builtin_coefficients,
    cole,
    fkgl,
    fogi,
    score_stats,
    smog,
)
from readgauge.text_core import TextStats

# (formula, variant) -> (a, b, c); typed from the published tables.
GOLDEN_COEFFICIENTS = {
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

# One-line definitions used as the independent oracle throughout.
ORACLES = {
    FKGL: lambda s, a, b, c: a * (s.words / s.sentences) + b * (s.syllables / s.words) + c,
    FOGI: lambda s, a, b, c: a * ((s.words / s.sentences) + b * (s.difficult_words / s.words)) + c,
    SMOG: lambda s, a, b, c: a * math.sqrt(b * (s.polysyllable_words / s.sentences)) + c,
    COLE: lambda s, a, b, c: a * 100 * (s.letters / s.words) + b * 100 * (s.sentences / s.words) + c,
    AUTO: lambda s, a, b, c: a * (s.letters / s.words) + b * (s.words / s.sentences) + c,
}


def make_stats(words=100, sentences=10, syllables=150, letters=450,
               difficult=10, poly=30, unique=80):
    return TextStats(words, sentences, syllables, letters, difficult, poly, unique)


def random_stats(rng):
    words = rng.randint(1, 500)
    sentences = rng.randint(1, words)
    return TextStats(
        words=words,
        sentences=sentences,
        syllables=rng.randint(words, 3 * words),
        letters=rng.randint(words, 8 * words),
        difficult_words=rng.randint(0, words),
        polysyllable_words=rng.randint(0, words),
        unique_words=rng.randint(1, words),
    )


class TestBuiltinCoefficients:
    def test_all_thirty_values(self):
        for (formula, variant), (a, b, c) in GOLDEN_COEFFICIENTS.items():
            got = builtin_coefficients(formula, variant)
            assert (got.a, got.b, got.c) == (a, b, c), (formula, variant)
            assert got.formula == formula and got.variant == variant

    def test_unknown_combination(self):
        with pytest.raises(ValueError):
            builtin_coefficients("fkgl", "custom")
        with pytest.raises(ValueError):
            builtin_coefficients("nope", "original")


class TestKnownScores:
    def test_fkgl(self):
        stats = make_stats()
        assert fkgl(stats, builtin_coefficients(FKGL, ORIGINAL)).value == pytest.approx(6.01)
        assert fkgl(stats, builtin_coefficients(FKGL, ADJUSTED)).value == pytest.approx(10.409)
        unit = TextStats(10, 10, 10, 10, 0, 0, 10)
        assert fkgl(unit, builtin_coefficients(FKGL, ORIGINAL)).value == pytest.approx(-3.4)

    def test_fogi(self):
        stats = make_stats()
        assert fogi(stats, builtin_coefficients(FOGI, ORIGINAL)).value == pytest.approx(8.0)
        assert fogi(stats, builtin_coefficients(FOGI, ADJUSTED)).value == pytest.approx(8.203953)

    def test_smog(self):
        stats = make_stats(sentences=30, poly=30)
        assert smog(stats, builtin_coefficients(SMOG, ORIGINAL)).value == pytest.approx(8.841746274778883)
        assert smog(stats, builtin_coefficients(SMOG, ADJUSTED)).value == pytest.approx(11.365503693816738)

    def test_smog_zero_polysyllables_gives_intercept(self):
        stats = make_stats(poly=0)
        assert smog(stats, builtin_coefficients(SMOG, ORIGINAL)).value == 3.129

    def test_cole(self):
        stats = make_stats(letters=450, sentences=5)
        assert cole(stats, builtin_coefficients(COLE, ORIGINAL)).value == pytest.approx(9.18)
        assert cole(stats, builtin_coefficients(COLE, ADJUSTED)).value == pytest.approx(9.7335)
        unit = TextStats(10, 10, 10, 10, 0, 0, 10)
        assert cole(unit, builtin_coefficients(COLE, ORIGINAL)).value == pytest.approx(-39.52)

    def test_auto(self):
        stats = make_stats(words=100, sentences=5, letters=450)  # 4.5 l/w, 20 w/s
        original = auto(stats, builtin_coefficients(AUTO, ORIGINAL))
        assert original.value == 10.0
        assert original.rounded
        adjusted = auto(stats, builtin_coefficients(AUTO, ADJUSTED))
        assert adjusted.value == pytest.approx(9.46)
        assert not adjusted.rounded

    def test_score_metadata(self):
        stats = make_stats()
        for formula in TRADITIONAL_FORMULAS:
            for variant in (ORIGINAL, ADJUSTED):
                score = score_stats(stats, builtin_coefficients(formula, variant))
                assert score.formula == formula
                assert score.variant == variant
                assert score.rounded == (formula == AUTO and variant == ORIGINAL)


class TestOracleProperty:
    def test_thousand_random_stats_match_oracles(self):
        rng = random.Random(12345)
        for _ in range(1000):
            stats = random_stats(rng)
            for formula in TRADITIONAL_FORMULAS:
                for variant in (ORIGINAL, ADJUSTED):
                    coeffs = builtin_coefficients(formula, variant)
                    expected = ORACLES[formula](stats, coeffs.a, coeffs.b, coeffs.c)
                    got = score_stats(stats, coeffs).value
                    if formula == AUTO and variant == ORIGINAL:
                        assert got == math.ceil(expected)
                        assert 0 <= got - expected < 1
                    else:
                        assert got == pytest.approx(expected, abs=1e-12)

    def test_defaults_are_adjusted(self):
        stats = make_stats()
        assert fkgl(stats).value == fkgl(stats, builtin_coefficients(FKGL, ADJUSTED)).value
        assert fkgl(stats).variant == ADJUSTED


class TestErrors:
    def test_wrong_formula(self):
        stats = make_stats()
        with pytest.raises(WrongFormula):
            fkgl(stats, builtin_coefficients(SMOG, ORIGINAL))
        with pytest.raises(WrongFormula):
            smog(stats, builtin_coefficients(FKGL, ORIGINAL))

    def test_negative_radicand(self):
        stats = make_stats(poly=30)
        bad = CoefficientSet(SMOG, CUSTOM, 1.0, -1.0, 0.0)
        with pytest.raises(NegativeRadicand):
            smog(stats, bad)

    def test_negative_b_with_zero_polysyllables_is_fine(self):
        stats = make_stats(poly=0)
        bad = CoefficientSet(SMOG, CUSTOM, 1.0, -1.0, 5.0)
        assert smog(stats, bad).value == 5.0


class TestMonotonicity:
    def test_longer_sentences_never_lower_grade(self):
        for formula, fn in ((FKGL, fkgl), (FOGI, fogi), (AUTO, auto)):
            for variant in (ORIGINAL, ADJUSTED):
                coeffs = builtin_coefficients(formula, variant)
                lo = fn(make_stats(words=100, sentences=10), coeffs).value
                hi = fn(make_stats(words=100, sentences=5), coeffs).value
                assert hi >= lo, (formula, variant)
