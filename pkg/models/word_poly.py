"""
WordPoly Model - element of the shuffle algebra with rational coefficients
"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from models.letter_word import LetterWord

Scalar = Union[int, Fraction]


class WordPoly:
    """
    Finite linear combination of words with exact rational coefficients.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[LetterWord, Scalar]] = None):
        cleaned: Dict[LetterWord, Fraction] = {}
        for word, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff != 0:
                cleaned[word] = coeff
        self._terms = cleaned
        self._hash = None

    @classmethod
    def zero(cls) -> "WordPoly":
        return cls()

    @classmethod
    def unit(cls) -> "WordPoly":
        return cls({LetterWord.empty(): 1})

    @classmethod
    def from_word(cls, word: LetterWord, coeff: Scalar = 1) -> "WordPoly":
        return cls({word: coeff})

    @property
    def terms(self) -> Dict[LetterWord, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[LetterWord, Fraction]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, word: LetterWord) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def support(self):
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({w.weight for w in self._terms}) <= 1

    @property
    def weight(self) -> Optional[int]:
        """Weight of a homogeneous element, None for zero or mixed weights"""
        weights = {w.weight for w in self._terms}
        return weights.pop() if len(weights) == 1 else None

    def total_mass(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def __add__(self, other: "WordPoly") -> "WordPoly":
        merged = dict(self._terms)
        for word, coeff in other._terms.items():
            merged[word] = merged.get(word, Fraction(0)) + coeff
        return WordPoly(merged)

    def __neg__(self) -> "WordPoly":
        return WordPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "WordPoly") -> "WordPoly":
        return self + (-other)

    def scale(self, factor: Scalar) -> "WordPoly":
        return WordPoly({w: c * factor for w, c in self._terms.items()})

    def __rmul__(self, factor: Scalar) -> "WordPoly":
        return self.scale(factor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {c}" for w, c in self.items())
        return f"WordPoly({{{body}}})"
