"""Bracketed parse trees, coarse part-of-speech tags, and heuristic fallbacks.

Trees follow the bracketed treebank convention: "(S (NP (DT the) (NN dog))
(VP (VBD ran)))", with -LRB-/-RRB- escapes for literal parentheses in
leaves.  When no tree is available, a rule-based tagger (a few hundred
closed-class and irregular words, suffix rules, default noun) feeds a
noun-phrase chunker and a log-scaled depth proxy, so downstream features
degrade gracefully instead of failing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import EmptyNode, LeafMismatch, TreeSyntaxError, UnbalancedBrackets
from .text_core import Token

NOUN = "NOUN"
VERB = "VERB"
NUM = "NUM"
ADJ = "ADJ"
ADV = "ADV"
PRON = "PRON"
DET = "DET"
ADP = "ADP"
CONJ = "CONJ"
PRT = "PRT"
PUNCT = "PUNCT"
X = "X"

COARSE_TAGS = frozenset({NOUN, VERB, NUM, ADJ, ADV, PRON, DET, ADP, CONJ, PRT, PUNCT, X})
CONTENT_TAGS = frozenset({NOUN, VERB, NUM, ADJ, ADV})

# Treebank label -> coarse tag.  Prefix rules below cover the open classes.
_PENN_EXACT = {
    "CC": CONJ, "CD": NUM, "DT": DET, "EX": DET, "FW": X, "IN": ADP,
    "LS": X, "MD": VERB, "PDT": DET, "POS": PRT, "PRP": PRON, "PRP$": PRON,
    "RP": PRT, "SYM": X, "TO": PRT, "UH": X, "WDT": DET, "WP": PRON,
    "WP$": PRON, "WRB": ADV,
    ".": PUNCT, ",": PUNCT, ":": PUNCT, "``": PUNCT, "''": PUNCT,
    "-LRB-": PUNCT, "-RRB-": PUNCT, "(": PUNCT, ")": PUNCT,
    "#": PUNCT, "$": PUNCT, "HYPH": PUNCT, "NFP": PUNCT,
}
_PENN_PREFIXES = (("NN", NOUN), ("VB", VERB), ("JJ", ADJ), ("RB", ADV))


def penn_to_coarse(label: str) -> str:
    """Map a treebank part-of-speech label to its coarse tag."""
    tag = _PENN_EXACT.get(label)
    if tag is not None:
        return tag
    for prefix, coarse in _PENN_PREFIXES:
        if label.startswith(prefix):
            return coarse
    return X


@dataclass(frozen=True)
class ParseTree:
    """A node in a bracketed parse: a nonempty label plus either children
    or a single leaf token, never both."""

    label: str
    children: tuple["ParseTree", ...] = ()
    leaf: Optional[str] = None


@dataclass(frozen=True)
class PosTagging:
    """Coarse tags, one per word token, plus how they were produced."""

    tags: tuple[str, ...]
    from_tree: bool


_LEAF_DECODE = {"-LRB-": "(", "-RRB-": ")"}
_LEAF_ENCODE = {"(": "-LRB-", ")": "-RRB-"}


def parse_bracketed(text: str) -> ParseTree:
    """Parse one bracketed tree string.

    Raises UnbalancedBrackets (with the character position) when nesting
    does not balance or content appears outside the single root, and
    EmptyNode when a node lacks a label, or has neither children nor a leaf.
    """
    s = text
    n = len(s)
    pos = 0

    def skip_ws(i):
        while i < n and s[i].isspace():
            i += 1
        return i

    def read_atom(i):
        start = i
        while i < n and not s[i].isspace() and s[i] not in "()":
            i += 1
        return s[start:i], i

    def parse_node(i):
        if i >= n or s[i] != "(":
            raise UnbalancedBrackets(f"expected '(' at position {i}", position=i)
        open_pos = i
        i = skip_ws(i + 1)
        label, i = read_atom(i)
        if not label:
            raise EmptyNode(f"node at position {open_pos} has no label", position=open_pos)
        children = []
        leaf = None
        while True:
            i = skip_ws(i)
            if i >= n:
                raise UnbalancedBrackets(
                    f"unclosed '(' from position {open_pos}", position=open_pos
                )
            if s[i] == ")":
                i += 1
                break
            if s[i] == "(":
                if leaf is not None:
                    raise TreeSyntaxError(
                        f"node at position {open_pos} mixes a leaf with children",
                        position=i,
                    )
                child, i = parse_node(i)
                children.append(child)
            else:
                atom, i = read_atom(i)
                if children or leaf is not None:
                    raise TreeSyntaxError(
                        f"unexpected token {atom!r} at position {i - len(atom)}",
                        position=i - len(atom),
                    )
                leaf = _LEAF_DECODE.get(atom, atom)
        if leaf is None and not children:
            raise EmptyNode(
                f"node {label!r} at position {open_pos} is empty", position=open_pos
            )
        return ParseTree(label, tuple(children), leaf), i

    pos = skip_ws(pos)
    tree, pos = parse_node(pos)
    pos = skip_ws(pos)
    if pos < n:
        raise UnbalancedBrackets(
            f"unexpected content at position {pos} after the tree", position=pos
        )
    return tree


def serialize(tree: ParseTree) -> str:
    """Render a tree in canonical single-space bracketed form."""
    if tree.leaf is not None:
        return f"({tree.label} {_LEAF_ENCODE.get(tree.leaf, tree.leaf)})"
    inner = " ".join(serialize(c) for c in tree.children)
    return f"({tree.label} {inner})"


def tree_height(tree: ParseTree) -> int:
    """Height with leaves counting 1, so "(NN dog)" has height 2."""
    if tree.leaf is not None:
        return 2
    return 1 + max(tree_height(c) for c in tree.children)


def _base_label(label: str) -> str:
    return label.split("-", 1)[0]


def count_np(tree: ParseTree) -> int:
    """Count noun-phrase nodes; function suffixes like NP-SBJ still count."""
    total = 1 if _base_label(tree.label) == "NP" else 0
    for child in tree.children:
        total += count_np(child)
    return total


def _leaves_with_labels(tree: ParseTree, out: list) -> list:
    if tree.leaf is not None:
        out.append((tree.label, tree.leaf))
    else:
        for child in tree.children:
            _leaves_with_labels(child, out)
    return out


# --- heuristic tagging -------------------------------------------------------

def _build_word_tags() -> dict[str, str]:
    groups = {
        DET: """the a an this that these those each every either neither some
            any no all both few several many much most another such what which
            whose""",
        PRON: """i you he she it we they me him her us them mine yours hers
            ours theirs myself yourself himself herself itself ourselves
            themselves who whom someone somebody something anyone anybody
            anything everyone everybody everything nobody nothing""",
        ADP: """of in on at by for with about against between into through
            during before after above below from under over off near since
            until upon within without among around behind beyond despite
            except inside outside toward towards across along beneath beside
            onto""",
        PRT: "to up down out",
        CONJ: """and or but nor so yet because although though while whereas
            unless if than whether once lest""",
        ADV: """not very also just now then here there always never often
            sometimes again too quite rather almost already still soon perhaps
            maybe ever far away back even only well how when where why""",
        NUM: """zero one two three four five six seven eight nine ten hundred
            thousand million""",
        ADJ: """good new old great big small little long short own other same
            right different important bad sure best better young hard easy
            high happy sad""",
        VERB: """be am is are was were been being have has had having do does
            did doing done will would shall should can could may might must
            ought go went gone get got make made know knew known take took
            taken see saw seen come came think thought say said find found
            give gave given tell told become became show shown leave left
            feel felt put bring brought begin began begun keep kept hold held
            write wrote written hear heard let mean meant set run ran sit sat
            read grow grew grown fall fell fallen send sent build built
            understand understood break broke broken cut drive drove driven
            buy bought eat ate eaten win won sell sold chase want like love
            move seem use try call ask help start stop turn look live talk
            walk jump sleep play""",
    }
    table = {}
    for tag, words in groups.items():
        for word in words.split():
            table[word] = tag
    return table


_WORD_TAGS = _build_word_tags()

_NOUN_SUFFIXES = ("tion", "sion", "ment", "ness", "ship", "ence", "ance", "ity", "ism", "hood")
_ADJ_SUFFIXES = ("ous", "ful", "ish", "ive", "able", "ible", "less", "ical")
_VERB_SUFFIXES = ("ize", "ise", "ify")


def _heuristic_tag(norm: str) -> str:
    if norm[0].isdigit():
        return NUM
    tag = _WORD_TAGS.get(norm)
    if tag is not None:
        return tag
    if len(norm) >= 4 and norm.endswith("ly"):
        return ADV
    if len(norm) >= 5 and norm.endswith("ing"):
        return VERB
    if len(norm) >= 4 and norm.endswith("ed"):
        return VERB
    if len(norm) >= 5:
        if norm.endswith(_NOUN_SUFFIXES):
            return NOUN
        if norm.endswith(_ADJ_SUFFIXES):
            return ADJ
        if norm.endswith(_VERB_SUFFIXES):
            return VERB
    return NOUN


def pos_tag(tokens: Sequence[Token], tree: Optional[ParseTree] = None) -> PosTagging:
    """Tag the word tokens of one sentence.

    With a tree, tags come from its leaf labels; the tree's non-punctuation
    leaves must align one-to-one with the word tokens (LeafMismatch
    otherwise).  Without a tree, the rule-based tagger is used.
    """
    words = [t for t in tokens if t.is_word]
    if tree is None:
        return PosTagging(tuple(_heuristic_tag(t.norm) for t in words), from_tree=False)
    leaves = _leaves_with_labels(tree, [])
    tagged = [penn_to_coarse(label) for label, _ in leaves]
    word_tags = [tag for tag in tagged if tag != PUNCT]
    if len(word_tags) != len(words):
        raise LeafMismatch(
            f"tree has {len(word_tags)} word leaves but the text has "
            f"{len(words)} word tokens"
        )
    return PosTagging(tuple(word_tags), from_tree=True)


def count_content_words(tagging: PosTagging) -> int:
    """Count open-class tags: nouns, verbs, numerals, adjectives, adverbs."""
    return sum(tag in CONTENT_TAGS for tag in tagging.tags)


@dataclass(frozen=True)
class HeuristicSyntax:
    np_count: int
    tree_height: int


def heuristic_syntax(tokens: Sequence[Token]) -> HeuristicSyntax:
    """Approximate one sentence's noun-phrase count and parse depth.

    Noun phrases are chunked as optional determiner + adjectives + noun run
    over the heuristic tags.  Depth is a log-scaled proxy, 3 + ceil(log2(
    word count)), clamped to [3, 12].
    """
    tagging = pos_tag(tokens)
    tags = tagging.tags
    n = len(tags)
    np_count = 0
    i = 0
    while i < n:
        j = i
        if tags[j] == DET:
            j += 1
        while j < n and tags[j] == ADJ:
            j += 1
        if j < n and tags[j] == NOUN:
            while j < n and tags[j] == NOUN:
                j += 1
            np_count += 1
            i = j
        else:
            i += 1
    if n == 0:
        height = 3
    else:
        height = min(12, max(3, 3 + math.ceil(math.log2(n))))
    return HeuristicSyntax(np_count=np_count, tree_height=height)
