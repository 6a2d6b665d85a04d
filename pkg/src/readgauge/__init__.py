"""Readability scoring: classic grade-level formulas, a lexical-syntactic
difficulty model, coefficient calibration, and evaluation tools."""

__version__ = "0.1.0"
