"""Word-value lexicons: loading from delimited files and summed lookups.

A lexicon maps lowercase words to one numeric value each, e.g. age of
acquisition in years or a log contextual-diversity familiarity score.
Lookups fall back to a naive suffix-stripped form (s/es/ed/ing) so that
plain inflections still hit; out-of-vocabulary words contribute zero and
are tallied as misses so callers can report coverage.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import EmptyLexicon, FileUnreadable, MalformedRow
from .text_core import Token

KIND_AOA = "aoa"
KIND_FAMILIARITY = "familiarity"

# Kind-specific value domains: age of acquisition is strictly positive,
# familiarity scores are non-negative.
_DOMAIN_CHECKS = {
    KIND_AOA: lambda v: v > 0,
    KIND_FAMILIARITY: lambda v: v >= 0,
}


@dataclass(frozen=True)
class Lexicon:
    kind: str
    entries: dict[str, float]
    duplicates: int
    source: str = ""

    @property
    def size(self) -> int:
        return len(self.entries)


class LookupSum(NamedTuple):
    total: float
    hits: int
    misses: int


def load_lexicon(path, kind: str, word_col: str = "word", value_col: str = "value") -> Lexicon:
    """Load a lexicon from a comma- or tab-delimited file with a header row.

    The delimiter is inferred from the header line.  Words are lowercased;
    when a word repeats, the first value wins and the duplicate is counted.
    Rows with a missing word, an unparseable or non-finite value, or a value
    outside the kind's domain raise MalformedRow naming the 1-based file row.
    """
    if kind not in _DOMAIN_CHECKS:
        raise ValueError(f"unknown lexicon kind: {kind!r}")
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            content = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"cannot read lexicon file {path}: {exc}") from exc

    lines = content.splitlines()
    if not lines:
        raise EmptyLexicon(f"lexicon file {path} is empty")
    delimiter = "\t" if "\t" in lines[0] else ","
    rows = csv.reader(lines, delimiter=delimiter)

    header = next(rows)
    columns = {name.strip().lower(): i for i, name in enumerate(header)}
    try:
        word_idx = columns[word_col.lower()]
        value_idx = columns[value_col.lower()]
    except KeyError as exc:
        raise MalformedRow(
            f"{path}: header is missing column {exc.args[0]!r}", row_index=1
        ) from exc

    in_domain = _DOMAIN_CHECKS[kind]
    entries: dict[str, float] = {}
    duplicates = 0
    for row_index, row in enumerate(rows, start=2):
        if not row:
            continue
        if len(row) <= max(word_idx, value_idx):
            raise MalformedRow(f"{path}: row {row_index} has too few fields", row_index)
        word = row[word_idx].strip().lower()
        if not word:
            raise MalformedRow(f"{path}: row {row_index} has an empty word", row_index)
        try:
            value = float(row[value_idx])
        except ValueError:
            raise MalformedRow(
                f"{path}: row {row_index} has a non-numeric value "
                f"{row[value_idx]!r}", row_index,
            ) from None
        if not math.isfinite(value) or not in_domain(value):
            raise MalformedRow(
                f"{path}: row {row_index} value {value!r} is outside the "
                f"{kind} domain", row_index,
            )
        if word in entries:
            duplicates += 1
        else:
            entries[word] = value

    if not entries:
        raise EmptyLexicon(f"lexicon file {path} has no usable entries")
    return Lexicon(kind=kind, entries=entries, duplicates=duplicates, source=str(path))


def _suffix_variants(word: str):
    if word.endswith("ing") and len(word) > 4:
        yield word[:-3]
    if word.endswith(("ed", "es")) and len(word) > 3:
        yield word[:-2]
    if word.endswith("s") and len(word) > 2:
        yield word[:-1]


def lookup_sum(lexicon: Lexicon, tokens: Iterable[Token], lemma_fallback: bool = True) -> LookupSum:
    """Sum lexicon values over the word tokens of a document.

    Every word token counts exactly once as a hit or a miss; misses
    contribute zero to the total.  With lemma_fallback enabled, a missed
    word retries with naive s/es/ed/ing suffix stripping.
    """
    entries = lexicon.entries
    total = 0.0
    hits = misses = 0
    for token in tokens:
        if not token.is_word:
            continue
        value = entries.get(token.norm)
        if value is None and lemma_fallback:
            for variant in _suffix_variants(token.norm):
                value = entries.get(variant)
                if value is not None:
                    break
        if value is None:
            misses += 1
        else:
            total += value
            hits += 1
    return LookupSum(total, hits, misses)
