"""Word calculus in the free 3-step nilpotent group on two generators.

Exact-mode values are ``fractions.Fraction``; pass ``exact=False`` for floats.
Words are either text (``"X^1/2 Y^1 X^1/2"``) or sequences of
``(generator, exponent)`` pairs.
"""

import json

from . import _coarselen
from ._coarselen import (
    GOLDEN_GAP,
    CoarselenError,
    bracket,
    map_uvw,
    map_xy,
    membership,
    multiply,
    render_svg,
    run_suite,
)

DEFAULT_SEED = 20100613

__all__ = [
    "GOLDEN_GAP",
    "CoarselenError",
    "balanced_word",
    "bracket",
    "coarse_length",
    "coarse_length_profile",
    "diagonal_gap",
    "eval_uvw",
    "eval_xy",
    "evaluate_word",
    "map_uvw",
    "map_xy",
    "membership",
    "multiply",
    "nearest_reachable",
    "normalize",
    "render_svg",
    "run_suite",
    "synthesize_word",
    "word_length",
]


def _word_text(word):
    if isinstance(word, str):
        return word
    letters = []
    for gen, exponent in word:
        if isinstance(exponent, float):
            exponent = repr(exponent)
        letters.append(f"{gen}^{exponent}")
    return " ".join(letters)


def evaluate_word(word, exact=True):
    return _coarselen.evaluate_word(_word_text(word), exact)


def word_length(word, exact=True):
    return _coarselen.word_length(_word_text(word), exact)


def coarse_length(word):
    return _coarselen.coarse_length(_word_text(word))


def normalize(word, exact=True):
    return _coarselen.normalize(_word_text(word), exact)


def eval_uvw(word, exact=True):
    return _coarselen.eval_uvw(_word_text(word), exact)


def eval_xy(word, exact=True):
    return _coarselen.eval_xy(_word_text(word), exact)


def balanced_word(n):
    """(X^1/n Y^1/n)^n as word text."""
    return _coarselen.balanced_word(n)


def _decode(text):
    return json.loads(text)


def nearest_reachable(x, y, k, seed=DEFAULT_SEED, pattern_cap=12, threads=0):
    return _decode(_coarselen._nearest_reachable(float(x), float(y), k, seed, pattern_cap, threads))


def coarse_length_profile(x, y, k_max, seed=DEFAULT_SEED, pattern_cap=12, threads=0):
    return _decode(_coarselen._coarse_length_profile(float(x), float(y), k_max, seed, pattern_cap, threads))


def diagonal_gap(k, seed=DEFAULT_SEED, pattern_cap=12, threads=0):
    return _decode(_coarselen._diagonal_gap(k, seed, pattern_cap, threads))


def synthesize_word(x, y, tol=1e-9, max_steps=12, seed=DEFAULT_SEED, threads=0):
    return _decode(_coarselen._synthesize_word(float(x), float(y), tol, max_steps, seed, threads))

