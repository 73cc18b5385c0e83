"""
EvalResult Model
"""

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mpf

from models.letter_word import LetterWord


@dataclass(frozen=True)
class EvalResult:
    """One value I(w) together with how it was obtained"""
    word: LetterWord
    c: Fraction
    value: mpf
    precision: int
    order: int
    cut: mpf
    dual_cut: mpf
    doublings: int = 0
