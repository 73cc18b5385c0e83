"""
LetterWord Model
"""

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True, order=True)
class LetterWord:
    """
    Binary word ε₁…ε_k of integration letters.

    ε₁ is the innermost form (smallest variable t₁), ε_k the outermost one.
    Letter 0 stands for ω₀ = dt/t, letter 1 for ω₁ = dt/(1-t) - c dt/(1-ct).
    Ordering is lexicographic on the letters with 0 < 1.
    """
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if any(x not in (0, 1) for x in letters):
            raise ValueError(f"Letters must be 0 or 1, got {self.letters!r}")
        object.__setattr__(self, "letters", letters)

    @property
    def weight(self) -> int:
        """Number of letters (number of integration signs)"""
        return len(self.letters)

    def is_empty(self) -> bool:
        return not self.letters

    def is_admissible(self) -> bool:
        """
        Empty word is the unit and counts as admissible.
        Otherwise the word needs k >= 2, ε₁ = 1 and ε_k = 0.
        """
        if not self.letters:
            return True
        return len(self.letters) >= 2 and self.letters[0] == 1 and self.letters[-1] == 0

    def prefix(self, length: int) -> "LetterWord":
        return LetterWord(self.letters[:length])

    def suffix(self, start: int) -> "LetterWord":
        return LetterWord(self.letters[start:])

    def __add__(self, other: "LetterWord") -> "LetterWord":
        return LetterWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(str(x) for x in self.letters)

    @classmethod
    def parse(cls, text: str) -> "LetterWord":
        """
        Parse word text such as "11010".

        Args:
            text: String of 0/1 characters (empty string is the unit)

        Returns:
            LetterWord
        """
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"Word text must contain only 0 and 1: {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @classmethod
    def empty(cls) -> "LetterWord":
        return cls(())
