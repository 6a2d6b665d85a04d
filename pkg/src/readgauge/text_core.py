"""Tokenization, sentence splitting, syllable counting, and surface statistics.

The rules here are deliberately fixed and rule-based so that every count is
reproducible: a word token is a maximal run of alphanumerics joined by
internal apostrophes or hyphens, sentences end at ./!/? followed by a
capitalized word (with an abbreviation list suppressing false ends), and
syllables are vowel groups with a terminal-silent-e correction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import EmptyText, NonPositiveRate

# Word: alphanumeric runs joined by internal apostrophes (straight or curly)
# or hyphens.  Everything else non-whitespace tokenizes as punctuation runs.
_WORD_PATTERN = r"[^\W_]+(?:['’-][^\W_]+)*"
_TOKEN_RE = re.compile(rf"{_WORD_PATTERN}|(?:[^\w\s]|_)+")
_JOINER_RE = re.compile(r"['’-]")
_VOWEL_GROUP_RE = re.compile(r"[aeiouy]+")
_VOWELS = frozenset("aeiouy")

#: Period-bearing tokens whose trailing dot does not end a sentence.
#: Multi-part entries like "e.g" are matched across their internal periods.
DEFAULT_ABBREVIATIONS = frozenset({
    "mr", "mrs", "dr", "ms", "st", "vs", "etc",
    "e.g", "i.e", "u.s", "fig", "no",
})

_TERMINALS = frozenset(".!?")


@dataclass(frozen=True)
class Token:
    """One token of input text.

    surface is the text as written; norm is the lowercased surface with
    apostrophes and hyphens removed (empty for punctuation tokens).
    """

    surface: str
    norm: str
    is_word: bool


@dataclass(frozen=True)
class SentenceSpan:
    """Half-open [start, stop) index range into a document's token list."""

    start: int
    stop: int


@dataclass(frozen=True)
class TextStats:
    """Surface statistics for one document."""

    words: int
    sentences: int
    syllables: int
    letters: int
    difficult_words: int
    polysyllable_words: int
    unique_words: int


def tokenize(text: str) -> list[Token]:
    """Split text into word and punctuation tokens.

    Newlines are normalized first, so any newline convention is accepted.
    Word tokens keep internal apostrophes/hyphens in their surface but drop
    them from the norm: "it's rule-based" norms to "its", "rulebased".
    """
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        surface = match.group(0)
        if surface[0].isalnum():
            tokens.append(Token(surface, _JOINER_RE.sub("", surface).lower(), True))
        else:
            tokens.append(Token(surface, "", False))
    return tokens


def _matches_abbreviation(tokens: list[Token], i: int, abbreviations) -> bool:
    """True when the period at index i lies inside or closes a listed entry.

    Dotted entries such as "e.g" or "u.s" tokenize into word/period
    alternations, so the chain around position i is reassembled and every
    sub-chain spanning this period is tested against the list.
    """
    left = i - 1
    parts = []
    while left >= 0 and tokens[left].is_word:
        parts.insert(0, tokens[left].norm)
        if left - 1 >= 0 and tokens[left - 1].surface == ".":
            left -= 2
        else:
            break
    if not parts:
        return False
    last_left = len(parts) - 1  # index of the word just before the period
    if any(".".join(parts[k:]) in abbreviations for k in range(len(parts))):
        return True
    right = i + 1
    while right < len(tokens) and tokens[right].is_word:
        parts.append(tokens[right].norm)
        if any(".".join(parts[k:]) in abbreviations for k in range(last_left + 1)):
            return True
        if right + 1 < len(tokens) and tokens[right + 1].surface == ".":
            right += 2
        else:
            break
    return False


def split_sentences(tokens: list[Token], abbreviations=DEFAULT_ABBREVIATIONS) -> list[SentenceSpan]:
    """Group tokens into sentence spans.

    A boundary falls after a token containing '.', '!', or '?' when the next
    word token is capitalized or the input ends.  A bare period preceded by a
    listed abbreviation never ends a sentence.  Text with no terminal
    punctuation is a single sentence.  Every span contains at least one word
    token; spans jointly cover the whole token list.
    """
    n = len(tokens)
    first_word = next((k for k, t in enumerate(tokens) if t.is_word), None)
    if first_word is None:
        return []

    cuts = []
    for i, tok in enumerate(tokens):
        if tok.is_word or not _TERMINALS.intersection(tok.surface):
            continue
        if tok.surface == "." and _matches_abbreviation(tokens, i, abbreviations):
            continue
        j = i + 1
        while j < n and not tokens[j].is_word:
            j += 1
        if j >= n:
            continue  # trailing punctuation stays with the last sentence
        if tokens[j].surface[0].isupper():
            cuts.append(j)

    spans = []
    start = 0
    for cut in cuts + [n]:
        if cut > start:
            spans.append(SentenceSpan(start, cut))
            start = cut
    # A document opening with punctuation has no word before the first cut;
    # fold that lead-in into the first real sentence.
    if len(spans) > 1 and first_word >= spans[0].stop:
        spans[0:2] = [SentenceSpan(spans[0].start, spans[1].stop)]
    return spans


def count_syllables(word: str) -> int:
    """Count syllables in one word using vowel groups.

    Maximal runs of a/e/i/o/u/y count one each.  A terminal silent 'e' is
    subtracted unless the word ends in consonant+'le' or the 'e' belongs to
    the only vowel group.  The result is clamped to at least 1, which also
    covers purely numeric tokens.
    """
    w = word.lower()
    groups = len(_VOWEL_GROUP_RE.findall(w))
    if groups >= 2 and w.endswith("e"):
        if not (w.endswith("le") and len(w) >= 3 and w[-3] not in _VOWELS):
            groups -= 1
    return max(1, groups)


def text_stats(
    text: str,
    abbreviations=DEFAULT_ABBREVIATIONS,
    difficult_threshold: int = 3,
    polysyllable_threshold: int = 3,
) -> TextStats:
    """Compute surface statistics for a document.

    difficult_threshold and polysyllable_threshold are the minimum syllable
    counts for the two hard-word tallies (both default to 3).  Raises
    EmptyText when the document has no word token.
    """
    tokens = tokenize(text)
    words = [t for t in tokens if t.is_word]
    if not words:
        raise EmptyText("text contains no word token")
    spans = split_sentences(tokens, abbreviations)

    syllable_cache: dict[str, int] = {}
    syllables = letters = difficult = poly = 0
    norms = set()
    for tok in words:
        norm = tok.norm
        s = syllable_cache.get(norm)
        if s is None:
            s = syllable_cache[norm] = count_syllables(norm)
        syllables += s
        letters += len(norm)
        if s >= difficult_threshold:
            difficult += 1
        if s >= polysyllable_threshold:
            poly += 1
        norms.add(norm)

    return TextStats(
        words=len(words),
        sentences=max(1, len(spans)),
        syllables=syllables,
        letters=letters,
        difficult_words=difficult,
        polysyllable_words=poly,
        unique_words=len(norms),
    )


def read_time(stats: TextStats, wpm: float) -> float:
    """Estimated reading time in minutes at the given words-per-minute rate."""
    if not wpm > 0:
        raise NonPositiveRate(f"words-per-minute rate must be positive, got {wpm}")
    return stats.words / wpm
