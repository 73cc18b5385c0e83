"""
Shuffle Service - shuffle product on words and on WordPoly
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Tuple

from models.index import Index
from models.letter_word import LetterWord
from models.word_poly import WordPoly
from services.words_service import WordsService

Letters = Tuple[int, ...]


@lru_cache(maxsize=200_000)
def _shuffle_letters(u: Letters, v: Letters) -> Tuple[Tuple[Letters, int], ...]:
    """
    u ⧢ v as (word, multiplicity) pairs.

    Recursion on the first letters: u ⧢ v = u₁(u' ⧢ v) + v₁(u ⧢ v'); identical
    words coming from both branches are merged, so the table of suffix pairs
    is filled once per (i, j).
    """
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    merged: Dict[Letters, int] = {}
    head_u, head_v = u[0], v[0]
    for word, mult in _shuffle_letters(u[1:], v):
        key = (head_u,) + word
        merged[key] = merged.get(key, 0) + mult
    for word, mult in _shuffle_letters(u, v[1:]):
        key = (head_v,) + word
        merged[key] = merged.get(key, 0) + mult
    return tuple(sorted(merged.items()))


class ShuffleService:
    """Service for the shuffle algebra on binary words"""

    @staticmethod
    def shuffle_counts(u: LetterWord, v: LetterWord) -> Dict[Letters, int]:
        """Integer multiplicities of u ⧢ v keyed by raw letter tuples"""
        return dict(_shuffle_letters(u.letters, v.letters))

    @staticmethod
    def shuffle_words(u: LetterWord, v: LetterWord) -> WordPoly:
        """
        Shuffle product of two words.

        Args:
            u, v: Arbitrary binary words

        Returns:
            WordPoly whose coefficients sum to C(|u|+|v|, |u|)
        """
        return WordPoly(
            {LetterWord(word): mult for word, mult in _shuffle_letters(u.letters, v.letters)}
        )

    @staticmethod
    def poly_product(p: WordPoly, q: WordPoly) -> WordPoly:
        """Bilinear extension of the shuffle product"""
        out: Dict[LetterWord, Fraction] = {}
        for u, a in p.items():
            for v, b in q.items():
                for word, mult in _shuffle_letters(u.letters, v.letters):
                    key = LetterWord(word)
                    out[key] = out.get(key, Fraction(0)) + a * b * mult
        return WordPoly(out)

    @staticmethod
    def shuffle_power(p: WordPoly, exponent: int) -> WordPoly:
        result = WordPoly.unit()
        for _ in range(exponent):
            result = ShuffleService.poly_product(result, p)
        return result

    @staticmethod
    def brute_force_shuffle(u: LetterWord, v: LetterWord) -> WordPoly:
        """
        Reference shuffle by enumerating the positions taken by u.

        Only meant for cross-checking shuffle_words on short words.
        """
        n = len(u) + len(v)
        out: Dict[LetterWord, int] = {}
        for positions in combinations(range(n), len(u)):
            chosen = set(positions)
            iu, iv = iter(u.letters), iter(v.letters)
            word = LetterWord(tuple(next(iu) if k in chosen else next(iv) for k in range(n)))
            out[word] = out.get(word, 0) + 1
        return WordPoly(out)

    @staticmethod
    def z(idx: Index) -> WordPoly:
        """Formal element Z(k₁,…,k_r) of the algebra of admissible words"""
        return WordPoly.from_word(WordsService.index_to_word(idx))

    @staticmethod
    def format_poly(p: WordPoly) -> str:
        """
        Text rendering, e.g. "6*Z(1,4) + 3*Z(2,3) + Z(3,2)".

        Terms are sorted by decreasing coefficient then by index; words that are
        not admissible are written as I(word) and the unit as 1.
        """
        if p.is_zero():
            return "0"

        def label(word: LetterWord) -> str:
            if word.is_empty():
                return "1"
            if word.is_admissible():
                return WordsService.word_to_index(word).label()
            return f"I({word})"

        ordered = sorted(p.items(), key=lambda item: (-item[1], item[0]))
        pieces: List[str] = []
        for position, (word, coeff) in enumerate(ordered):
            mag = abs(coeff)
            body = label(word)
            if mag != 1:
                body = f"{mag}*{body}" if not word.is_empty() else str(mag)
            if position == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"{'-' if coeff < 0 else '+'} {body}")
        return " ".join(pieces)

    @staticmethod
    def poly_to_json(p: WordPoly) -> List[Dict]:
        """[{index: [..], coeff: "p/q"}, …]; non-admissible words carry a "word" key instead"""
        out = []
        for word, coeff in p.items():
            entry: Dict = {"coeff": str(coeff)}
            if word.is_admissible() and not word.is_empty():
                entry["index"] = list(WordsService.word_to_index(word).parts)
            else:
                entry["word"] = str(word)
            out.append(entry)
        return out

    @staticmethod
    def poly_from_json(items: List[Dict]) -> WordPoly:
        terms: Dict[LetterWord, Fraction] = {}
        for entry in items:
            if "index" in entry:
                word = WordsService.index_to_word(Index(tuple(entry["index"])))
            else:
                word = LetterWord.parse(entry["word"])
            terms[word] = terms.get(word, Fraction(0)) + Fraction(entry["coeff"])
        return WordPoly(terms)
