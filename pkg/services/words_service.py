"""
Words Service - index/word conversion, duality and enumeration
"""

from functools import lru_cache
from itertools import product
from typing import List, Tuple, Union

from models.errors import InadmissibleError
from models.index import Index
from models.letter_word import LetterWord


class WordsService:
    """
    Service for binary words and admissible indices.

    Conversion rule: Z(k₁,…,k_r) = I(1 0^{k₁-1} 1 0^{k₂-1} … 1 0^{k_r-1}).
    """

    @staticmethod
    def index_to_word(idx: Index) -> LetterWord:
        """
        Convert an admissible index to its word.

        Args:
            idx: Admissible index (k₁,…,k_r)

        Returns:
            LetterWord 1 0^{k₁-1} … 1 0^{k_r-1}
        """
        if not idx.parts:
            raise InadmissibleError("Empty index is not admissible")
        if any(k < 1 for k in idx.parts):
            raise InadmissibleError(f"Index parts must be >= 1: ({idx})")
        if idx.parts[-1] < 2:
            raise InadmissibleError(f"Last part must be >= 2 for convergence: ({idx})")
        letters: List[int] = []
        for k in idx.parts:
            letters.append(1)
            letters.extend([0] * (k - 1))
        return LetterWord(tuple(letters))

    @staticmethod
    def word_to_index(word: LetterWord) -> Index:
        """
        Inverse of index_to_word.

        Args:
            word: Nonempty admissible word

        Returns:
            Index
        """
        if word.is_empty():
            raise InadmissibleError("The empty word has no index")
        if word.letters[0] != 1:
            raise InadmissibleError(f"Word must start with 1: {word}")
        if word.letters[-1] != 0:
            raise InadmissibleError(f"Word must end with 0: {word}")
        parts: List[int] = []
        for letter in word.letters:
            if letter == 1:
                parts.append(1)
            else:
                parts[-1] += 1
        return Index(tuple(parts))

    @staticmethod
    def dual(word: LetterWord) -> LetterWord:
        """(ε₁,…,ε_k) -> (1-ε_k,…,1-ε₁)"""
        return LetterWord(tuple(1 - x for x in reversed(word.letters)))

    @staticmethod
    def dual_index(idx: Index) -> Index:
        word = WordsService.index_to_word(idx)
        return WordsService.word_to_index(WordsService.dual(word))

    @staticmethod
    def enumerate_admissible(n: int) -> List[LetterWord]:
        """
        All admissible words of weight n in lexicographic order.

        Returns:
            [empty] for n = 0, [] for n = 1, 2^{n-2} words for n >= 2
        """
        return list(_admissible_words(n))

    @staticmethod
    def canonical_rep(word: LetterWord) -> LetterWord:
        """Lexicographic minimum of {w, dual(w)}"""
        return min(word, WordsService.dual(word))

    @staticmethod
    def is_self_dual(word: LetterWord) -> bool:
        return WordsService.dual(word) == word

    @staticmethod
    def duality_classes(n: int) -> List[LetterWord]:
        """One canonical representative per duality class of weight n"""
        return sorted({WordsService.canonical_rep(w) for w in _admissible_words(n)})

    @staticmethod
    def self_dual_words(n: int) -> List[LetterWord]:
        return [w for w in _admissible_words(n) if WordsService.is_self_dual(w)]

    @staticmethod
    def duality_pairs(n: int) -> List[Tuple[LetterWord, LetterWord]]:
        """Non-self-dual classes of weight n as (canonical, dual) pairs"""
        pairs = []
        for w in _admissible_words(n):
            d = WordsService.dual(w)
            if w < d:
                pairs.append((w, d))
        return pairs

    @staticmethod
    def admissible_indices(n: int) -> List[Index]:
        return [WordsService.word_to_index(w) for w in _admissible_words(n) if not w.is_empty()]

    @staticmethod
    def parse_argument(text: str) -> Union[Index, LetterWord]:
        """
        Read index or word text.

        A string made only of 0/1 characters with at least two characters is a
        word ("11010"); anything with a comma or another digit, or the wrapped
        form "Z(10)", is an index.
        """
        stripped = text.strip()
        if stripped.startswith("Z"):
            return Index.parse(stripped)
        if len(stripped) >= 2 and set(stripped) <= {"0", "1"}:
            return LetterWord.parse(stripped)
        return Index.parse(stripped)

    @staticmethod
    def as_word(value: Union[Index, LetterWord]) -> LetterWord:
        if isinstance(value, Index):
            return WordsService.index_to_word(value)
        if not value.is_admissible():
            raise InadmissibleError(f"Word is not admissible: {value}")
        return value

    @staticmethod
    def format_like(word: LetterWord, template: Union[Index, LetterWord]) -> str:
        """Render a word in the same notation as the user's input"""
        if isinstance(template, Index) and not word.is_empty():
            return str(WordsService.word_to_index(word))
        return str(word)


@lru_cache(maxsize=None)
def _admissible_words(n: int) -> Tuple[LetterWord, ...]:
    if n < 0:
        raise ValueError("weight must be >= 0")
    if n == 0:
        return (LetterWord.empty(),)
    if n == 1:
        return ()
    return tuple(
        LetterWord((1,) + middle + (0,)) for middle in product((0, 1), repeat=n - 2)
    )
