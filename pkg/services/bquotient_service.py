"""
B-Quotient Service - graded dimensions of the quotient by the duality ideal
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from models.letter_word import LetterWord
from models.rational_matrix import RationalMatrix
from models.word_poly import WordPoly
from services.shuffle_service import ShuffleService
from services.words_service import WordsService

logger = logging.getLogger(__name__)

DEFAULT_MAX_WEIGHT = 10
LONG_MAX_WEIGHT = 13


class BQuotientService:
    """
    Service for 𝓑 = 𝓐′ / (Z(α) - Z(α*)).

    The degree-n piece of the ideal is spanned by g ⧢ w, where g runs over the
    generators Z(α) - Z(α*) of weight m <= n and w over admissible words of
    weight n - m (the empty word included).
    """

    @staticmethod
    def duality_generators(m: int) -> List[WordPoly]:
        """Z(α) - Z(α*), one per non-self-dual pair of weight m"""
        return [
            WordPoly({w: 1, d: -1}) for w, d in WordsService.duality_pairs(m)
        ]

    @staticmethod
    def ideal_generators(n: int) -> List[WordPoly]:
        """
        Spanning set of the degree-n piece of the duality ideal.

        Args:
            n: Weight (>= 2)

        Returns:
            List of homogeneous WordPoly of weight n
        """
        return [WordPoly(_integer_row_to_terms(row)) for row in _ideal_rows(n)]

    @staticmethod
    def graded_ideal_rank(n: int) -> int:
        """Rank over Q of the degree-n ideal piece inside the 2^{n-2} admissible words"""
        return _ideal_matrix(n).rank

    @staticmethod
    def bdim(n: int) -> int:
        if n == 0:
            return 1
        if n == 1:
            return 0
        return 2 ** (n - 2) - BQuotientService.graded_ideal_rank(n)

    @staticmethod
    def bdim_table(max_weight: int) -> List[int]:
        """
        dim 𝓑_n for n = 0..max_weight.

        Returns:
            [1, 0, 1, 1, 3, 4, 9, 15, 31, 55, 109, …]
        """
        if max_weight < 0:
            raise ValueError("max_weight must be >= 0")
        dims = []
        for n in range(max_weight + 1):
            dims.append(BQuotientService.bdim(n))
            logger.info("dim B_%d = %d", n, dims[-1])
        return dims

    @staticmethod
    def rank_table(max_weight: int) -> List[int]:
        return [
            BQuotientService.graded_ideal_rank(n) if n >= 2 else 0
            for n in range(max_weight + 1)
        ]

    @staticmethod
    def linear_duality_rank(n: int) -> int:
        """Rank of the degree-n linear generators Z(α) - Z(α*) alone"""
        matrix = RationalMatrix(WordsService.enumerate_admissible(n))
        matrix.add_rows([g.terms for g in BQuotientService.duality_generators(n)])
        return matrix.rank

    @staticmethod
    def is_in_ideal(poly: WordPoly) -> bool:
        """Membership test for a homogeneous element"""
        n = poly.weight
        if n is None:
            return poly.is_zero()
        if n < 2:
            return poly.is_zero()
        return _ideal_matrix(n).contains(poly.terms)

    @staticmethod
    def is_in_linear_span(poly: WordPoly) -> bool:
        """Does the element lie in the span of the degree-n linear generators only?"""
        n = poly.weight
        matrix = RationalMatrix(WordsService.enumerate_admissible(n))
        matrix.add_rows([g.terms for g in BQuotientService.duality_generators(n)])
        return matrix.contains(poly.terms)

    @staticmethod
    def quotient_basis(n: int, preferred: Optional[Sequence[LetterWord]] = None) -> List[LetterWord]:
        """
        Words whose classes form a basis of 𝓑_n.

        Without `preferred`, the basis is made of canonical representatives
        (lexicographically smaller member of each duality pair), listed in
        lexicographic order. With `preferred`, that list is checked to be a
        basis of 𝓑_n and returned unchanged.
        """
        if preferred is not None:
            preferred = list(preferred)
            if not BQuotientService.is_quotient_basis(n, preferred):
                raise ValueError(f"The given words are not a basis of B_{n}")
            return preferred
        return sorted(_basis_matrix(n).free_columns())

    @staticmethod
    def is_quotient_basis(n: int, words: Sequence[LetterWord]) -> bool:
        """True when the ideal piece plus the given words span all of degree n"""
        words = list(words)
        if len(set(words)) != len(words) or len(words) != BQuotientService.bdim(n):
            return False
        if any(w.weight != n or not w.is_admissible() for w in words):
            return False
        matrix = _ideal_matrix(n).copy()
        for w in words:
            if not matrix.add_row({w: 1}):
                return False
        return matrix.rank == len(WordsService.enumerate_admissible(n))

    @staticmethod
    def normal_form(poly: WordPoly, basis: Optional[Sequence[LetterWord]] = None) -> Dict[LetterWord, Fraction]:
        """
        Coordinates of a homogeneous element of 𝓐′ in 𝓑_n over a quotient basis.

        Args:
            poly: Homogeneous element of weight n
            basis: Quotient basis (default: quotient_basis(n))

        Returns:
            {basis word: coefficient}
        """
        n = poly.weight
        if n is None:
            return {}
        basis = list(basis) if basis is not None else BQuotientService.quotient_basis(n)
        basis_set = set(basis)
        others = [w for w in WordsService.enumerate_admissible(n) if w not in basis_set]
        # non-basis words first so that they are the ones eliminated
        matrix = RationalMatrix(others + basis)
        matrix.add_rows(_ideal_term_rows(n))
        if set(matrix.pivot_columns()) != set(others):
            raise ValueError(f"Basis of size {len(basis)} does not complement the ideal in weight {n}")
        reduced = matrix.normal_form(poly.terms)
        return {w: reduced.get(w, Fraction(0)) for w in basis if reduced.get(w, 0) != 0}


def _integer_row_to_terms(row: Tuple[Tuple[Tuple[int, ...], int], ...]) -> Dict[LetterWord, int]:
    return {LetterWord(word): coeff for word, coeff in row}


@lru_cache(maxsize=None)
def _ideal_rows(n: int) -> Tuple[Tuple[Tuple[Tuple[int, ...], int], ...], ...]:
    """
    g ⧢ w for every generator g of weight m <= n and basis word w of weight n-m,
    as integer rows keyed by raw letter tuples.
    """
    if n < 2:
        return ()
    rows = []
    for m in range(3, n + 1):
        rest = n - m
        if rest == 1:
            continue
        pairs = WordsService.duality_pairs(m)
        if not pairs:
            continue
        cofactors = WordsService.enumerate_admissible(rest)
        for w, d in pairs:
            for cofactor in cofactors:
                row: Dict[Tuple[int, ...], int] = {}
                for word, mult in ShuffleService.shuffle_counts(w, cofactor).items():
                    row[word] = row.get(word, 0) + mult
                for word, mult in ShuffleService.shuffle_counts(d, cofactor).items():
                    row[word] = row.get(word, 0) - mult
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(tuple(sorted(row.items())))
        logger.debug("weight %d: %d generator rows after m = %d", n, len(rows), m)
    logger.info("weight %d: %d ideal generator rows", n, len(rows))
    return tuple(rows)


def _ideal_term_rows(n: int) -> List[Dict[LetterWord, int]]:
    return [_integer_row_to_terms(row) for row in _ideal_rows(n)]


@lru_cache(maxsize=None)
def _ideal_matrix(n: int) -> RationalMatrix:
    matrix = RationalMatrix(WordsService.enumerate_admissible(n))
    added = matrix.add_rows(_ideal_term_rows(n))
    logger.info("weight %d: ideal rank %d", n, added)
    return matrix


@lru_cache(maxsize=None)
def _basis_matrix(n: int) -> RationalMatrix:
    """
    Elimination with non-canonical words first, then canonical words in
    decreasing lexicographic order; the free columns are then the lexicographically
    smallest canonical representatives that survive the ideal.
    """
    words = WordsService.enumerate_admissible(n)
    canonical = {WordsService.canonical_rep(w) for w in words}
    non_canonical = [w for w in words if w not in canonical]
    order = non_canonical + sorted(canonical, reverse=True)
    matrix = RationalMatrix(order)
    matrix.add_rows(_ideal_term_rows(n))
    return matrix
