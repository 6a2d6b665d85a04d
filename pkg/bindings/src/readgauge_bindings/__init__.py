"""Object-style API over the readgauge scoring engine.

`request(text)` returns a handle whose methods score that one text:

    handle = request("The dog ran across the field.")
    handle.FKGL()              # adjusted variant by default
    handle.FKGL(adjusted=False)
    handle.NERF()              # needs lexicons, see below
    handle.RT(wpm=240)

Each shortcut also has a long-form alias (flesch_kincaid_grade_level,
fog_index, smog_index, coleman_liau_index, automated_readability_index,
new_english_readability_formula, read_time) bound to the same function.

The difficulty model resolves its two lexicons exactly like the command
line: from the READGAUGE_LEXICON_DIR environment variable, a directory
holding aoa.csv/aoa.tsv and familiarity.csv/familiarity.tsv, unless paths
are passed to request() directly.  All numbers come from the engine; the
wrapper computes nothing itself.
"""

from __future__ import annotations

import os
from pathlib import Path

from readgauge.formulas import ADJUSTED, ORIGINAL, builtin_coefficients, score_stats
from readgauge.lexicons import KIND_AOA, KIND_FAMILIARITY, load_lexicon
from readgauge.nerf import extract_features, nerf_score
from readgauge.text_core import read_time, text_stats

ENV_LEXICON_DIR = "READGAUGE_LEXICON_DIR"

__all__ = ["ConfigurationError", "RequestHandle", "request"]


class ConfigurationError(RuntimeError):
    """Engine resources are missing or misconfigured."""


def _find_lexicon_file(root: Path, stem: str) -> Path:
    for suffix in (".csv", ".tsv"):
        candidate = root / (stem + suffix)
        if candidate.exists():
            return candidate
    raise ConfigurationError(
        f"{ENV_LEXICON_DIR} directory {root} has no {stem}.csv or {stem}.tsv"
    )


class RequestHandle:
    """Scores for one fixed text, with statistics computed lazily once."""

    def __init__(self, text: str, aoa_path=None, familiarity_path=None):
        if not isinstance(text, str):
            raise TypeError(f"text must be a string, not {type(text).__name__}")
        self._text = text
        self._aoa_path = aoa_path
        self._familiarity_path = familiarity_path
        self._stats = None
        self._features = None

    @property
    def text(self) -> str:
        return self._text

    def _text_stats(self):
        if self._stats is None:
            self._stats = text_stats(self._text)
        return self._stats

    def _nerf_features(self):
        if self._features is None:
            aoa_path, familiarity_path = self._aoa_path, self._familiarity_path
            if aoa_path is None or familiarity_path is None:
                root = os.environ.get(ENV_LEXICON_DIR)
                if not root:
                    raise ConfigurationError(
                        "difficulty scoring needs lexicons: pass lexicon paths "
                        f"to request() or set {ENV_LEXICON_DIR}"
                    )
                aoa_path = aoa_path or _find_lexicon_file(Path(root), "aoa")
                familiarity_path = familiarity_path or _find_lexicon_file(
                    Path(root), "familiarity"
                )
            aoa = load_lexicon(aoa_path, KIND_AOA)
            familiarity = load_lexicon(familiarity_path, KIND_FAMILIARITY)
            self._features = extract_features(self._text, aoa, familiarity)
        return self._features

    def _classic(self, formula: str, adjusted: bool) -> float:
        variant = ADJUSTED if adjusted else ORIGINAL
        return score_stats(self._text_stats(), builtin_coefficients(formula, variant)).value

    def NERF(self) -> float:
        return nerf_score(self._nerf_features()).value

    def FKGL(self, adjusted: bool = True) -> float:
        return self._classic("fkgl", adjusted)

    def FOGI(self, adjusted: bool = True) -> float:
        return self._classic("fogi", adjusted)

    def SMOG(self, adjusted: bool = True) -> float:
        return self._classic("smog", adjusted)

    def COLE(self, adjusted: bool = True) -> float:
        return self._classic("cole", adjusted)

    def AUTO(self, adjusted: bool = True) -> float:
        return self._classic("auto", adjusted)

    def RT(self, wpm: float = 240) -> float:
        return read_time(self._text_stats(), float(wpm))

    new_english_readability_formula = NERF
    flesch_kincaid_grade_level = FKGL
    fog_index = FOGI
    smog_index = SMOG
    coleman_liau_index = COLE
    automated_readability_index = AUTO
    read_time = RT


def request(text: str, aoa_path=None, familiarity_path=None) -> RequestHandle:
    """Create a scoring handle for one text."""
    return RequestHandle(text, aoa_path, familiarity_path)
