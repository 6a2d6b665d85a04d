"""Lexical-syntactic difficulty model: feature extraction and scoring.

The score combines word-difficulty sums (age of acquisition minus a
familiarity credit), per-sentence structural load (content words, noun
phrases, parse-tree height), and a type-token richness term.  Out-of-
vocabulary words contribute nothing to the lexicon sums but still count
as content words and toward the richness term, so rare-word inflation is
damped rather than rewarded; the miss tallies let callers report coverage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EmptyText, LeafMismatch
from .formulas import CUSTOM, DEFAULT, NERF, Score
from .lexicons import Lexicon, lookup_sum
from .syntax import (
    ParseTree,
    count_content_words,
    count_np,
    heuristic_syntax,
    pos_tag,
    tree_height,
)
from .text_core import split_sentences, tokenize


@dataclass(frozen=True)
class NerfFeatures:
    """Per-document inputs to the difficulty score."""

    aoa_sum: float
    familiarity_sum: float
    content_words: int
    noun_phrases: int
    tree_height_sum: int
    unique_words: int
    words: int
    sentences: int
    approximate_syntax: bool = False
    aoa_misses: int = 0
    familiarity_misses: int = 0


@dataclass(frozen=True)
class NerfCoefficients:
    w_aoa: float
    w_fam: float
    w_cw: float
    w_np: float
    w_th: float
    w_ttr: float
    bias: float


def default_nerf_coefficients() -> NerfCoefficients:
    """The published fitted weights."""
    return NerfCoefficients(
        w_aoa=0.04876,
        w_fam=-0.1145,
        w_cw=0.3091,
        w_np=0.1866,
        w_th=0.2645,
        w_ttr=1.1017,
        bias=-4.125,
    )


def extract_features(
    text: str,
    aoa: Lexicon,
    familiarity: Lexicon,
    parses: Optional[Sequence[ParseTree]] = None,
    lemma_fallback: bool = True,
) -> NerfFeatures:
    """Compute the feature vector for one document.

    With parses (one tree per sentence, in order), content words, noun
    phrases, and heights come from the trees; otherwise the heuristic
    tagger and chunker stand in and the result is flagged approximate.
    """
    tokens = tokenize(text)
    words = [t for t in tokens if t.is_word]
    if not words:
        raise EmptyText("text contains no word token")
    spans = split_sentences(tokens)

    aoa_result = lookup_sum(aoa, words, lemma_fallback)
    fam_result = lookup_sum(familiarity, words, lemma_fallback)

    if parses is not None and len(parses) != len(spans):
        raise LeafMismatch(
            f"document has {len(spans)} sentences but {len(parses)} parse trees"
        )

    content = noun_phrases = height_sum = 0
    for index, span in enumerate(spans):
        sentence = tokens[span.start:span.stop]
        if parses is None:
            content += count_content_words(pos_tag(sentence))
            approx = heuristic_syntax(sentence)
            noun_phrases += approx.np_count
            height_sum += approx.tree_height
        else:
            tree = parses[index]
            content += count_content_words(pos_tag(sentence, tree))
            noun_phrases += count_np(tree)
            height_sum += tree_height(tree)

    return NerfFeatures(
        aoa_sum=aoa_result.total,
        familiarity_sum=fam_result.total,
        content_words=content,
        noun_phrases=noun_phrases,
        tree_height_sum=height_sum,
        unique_words=len({t.norm for t in words}),
        words=len(words),
        sentences=len(spans),
        approximate_syntax=parses is None,
        aoa_misses=aoa_result.misses,
        familiarity_misses=fam_result.misses,
    )


def nerf_score(features: NerfFeatures, coeffs: Optional[NerfCoefficients] = None) -> Score:
    """Evaluate the difficulty model on an extracted feature vector."""
    variant = DEFAULT if coeffs is None else CUSTOM
    k = coeffs or default_nerf_coefficients()
    s = features.sentences
    lexical = (k.w_aoa * features.aoa_sum + k.w_fam * features.familiarity_sum) / s
    structural = (
        k.w_cw * features.content_words
        + k.w_np * features.noun_phrases
        + k.w_th * features.tree_height_sum
    ) / s
    richness = k.w_ttr * (features.unique_words / math.sqrt(features.words))
    return Score(NERF, variant, lexical + structural + richness + k.bias, rounded=False)
