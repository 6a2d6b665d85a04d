"""Exception types raised across the package.

Every error is a subclass of ReadgaugeError so callers can catch broadly,
and of ValueError so untyped callers still get sensible behaviour.
"""


class ReadgaugeError(ValueError):
    """Base class for all errors raised by this package."""


# --- text statistics ---------------------------------------------------------

class EmptyText(ReadgaugeError):
    """Text contains no word token, so no statistics can be derived."""


class NonPositiveRate(ReadgaugeError):
    """A reading rate (words per minute) must be strictly positive."""


# --- lexicons ----------------------------------------------------------------

class FileUnreadable(ReadgaugeError):
    """A required file could not be opened or decoded."""


class MalformedRow(ReadgaugeError):
    """A delimited row failed validation; the message names the row index."""

    def __init__(self, message, row_index=None):
        super().__init__(message)
        self.row_index = row_index


class EmptyLexicon(ReadgaugeError):
    """A lexicon file yielded zero usable entries."""


# --- bracketed trees ---------------------------------------------------------

class TreeSyntaxError(ReadgaugeError):
    """A bracketed parse string is not well formed."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class UnbalancedBrackets(TreeSyntaxError):
    """Bracket nesting does not balance; the message reports the position."""


class EmptyNode(TreeSyntaxError):
    """A node is missing its label, or has neither children nor a leaf."""


class LeafMismatch(ReadgaugeError):
    """Tree leaves do not align one-to-one with the word tokens."""


# --- formulas ----------------------------------------------------------------

class WrongFormula(ReadgaugeError):
    """A coefficient set was supplied to a different formula's evaluator."""


class NegativeRadicand(ReadgaugeError):
    """A custom coefficient set produced a negative value under a square root."""


# --- calibration -------------------------------------------------------------

class UnknownBand(ReadgaugeError):
    """A grade label is neither a known band name nor a numeric grade."""


class TooFewItems(ReadgaugeError):
    """A corpus has fewer items than the fit has free parameters."""


class NonFiniteStats(ReadgaugeError):
    """An item produced a non-finite statistic, so fitting cannot proceed."""


class DivergedFit(ReadgaugeError):
    """The optimizer produced non-finite residuals and cannot continue."""


# --- evaluation --------------------------------------------------------------

class LengthMismatch(ReadgaugeError):
    """Paired series must have equal length."""


class EmptyInput(ReadgaugeError):
    """A metric was called with no data points."""


class ConstantTruth(ReadgaugeError):
    """The truth series is constant, so relative error is undefined."""


class ConstantSeries(ReadgaugeError):
    """A correlation input is constant, so the correlation is undefined."""


class EmptyGroups(ReadgaugeError):
    """A ranking evaluation was called with no groups."""


class EmptyPairs(ReadgaugeError):
    """A pairwise evaluation was called with no pairs."""
