"""Quasi-shuffle algebra and flowmap expansions for Levy-driven SDEs."""

import json as _json
from fractions import Fraction

from ._core import (
    hoffman_log_letter as _hoffman_log_letter,
    log_flowmap_json as _log_flowmap_json,
    magnus_table_json as _magnus_table_json,
    psi as _psi,
    quasi_shuffle as _quasi_shuffle,
    shuffle as _shuffle,
    simulate_json as _simulate_json,
    verify_json as _verify_json,
)

__all__ = [
    "quasi_shuffle",
    "shuffle",
    "hoffman_log_letter",
    "psi",
    "log_flowmap",
    "magnus_table",
    "verify",
    "simulate",
]


def _fractions(d):
    return {w: Fraction(c) for w, c in d.items()}


def quasi_shuffle(u, v, wiener=1, drivers=2, max_grade=6):
    """Quasi-shuffle product of two words, as {word: Fraction}."""
    return _fractions(_quasi_shuffle(u, v, wiener, drivers, max_grade))


def shuffle(u, v):
    """Plain shuffle product of two words, as {word: Fraction}."""
    return _fractions(_shuffle(u, v))


def hoffman_log_letter(letter, wiener=1, drivers=2, max_grade=6):
    """Zero-basis (primitive) expansion of a letter, as {word: Fraction}."""
    return _fractions(_hoffman_log_letter(letter, wiener, drivers, max_grade))


def psi(word):
    """Chen-Strichartz Lie polynomial of a word, as {word: Fraction}."""
    return _fractions(_psi(word))


def log_flowmap(basis="J", wiener=1, drivers=2, grade=3):
    """Log-flowmap expansion as a parsed JSON document."""
    return _json.loads(_log_flowmap_json(basis, wiener, drivers, grade))


def magnus_table(degree=4):
    """Pre-Lie Magnus tree coefficients as a parsed JSON document."""
    return _json.loads(_magnus_table_json(degree))


def verify(wiener=1, drivers=2, grade=3, tree_degree=4, seed=1):
    """Run the algebraic verification suite; returns the parsed report."""
    return _json.loads(_verify_json(wiener, drivers, grade, tree_degree, seed))


def simulate(toml_text, grade=3, samples=100, t=0.1, seed=1):
    """Monte Carlo truncation-error statistics for a TOML SDE spec."""
    return _json.loads(_simulate_json(toml_text, grade, samples, t, seed))
