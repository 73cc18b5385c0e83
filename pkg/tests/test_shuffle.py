from fractions import Fraction
from math import comb

from hypothesis import given, settings, strategies as st

from models.index import Index
from models.letter_word import LetterWord
from models.word_poly import WordPoly
from services.shuffle_service import ShuffleService
from services.words_service import WordsService

words = st.lists(st.integers(0, 1), max_size=6).map(lambda letters: LetterWord(tuple(letters)))

homogeneous_polys = st.integers(min_value=2, max_value=4).flatmap(
    lambda n: st.dictionaries(
        st.sampled_from(WordsService.enumerate_admissible(n)),
        st.integers(min_value=-5, max_value=5).filter(bool),
        min_size=1,
        max_size=3,
    ).map(WordPoly)
)


def z(*parts):
    return ShuffleService.z(Index(parts))


def test_zeta_two_times_zeta_three():
    product = ShuffleService.poly_product(z(2), z(3))
    assert product == z(1, 4).scale(6) + z(2, 3).scale(3) + z(3, 2)
    assert ShuffleService.format_poly(product) == "6*Z(1,4) + 3*Z(2,3) + Z(3,2)"


def test_square_of_zeta_two():
    square = ShuffleService.shuffle_power(z(2), 2)
    assert square == z(1, 3).scale(4) + z(2, 2).scale(2)
    brute = ShuffleService.brute_force_shuffle(LetterWord.parse("10"), LetterWord.parse("10"))
    assert square == brute


def test_unit_laws():
    u = LetterWord.parse("1100")
    assert ShuffleService.shuffle_words(u, LetterWord.empty()) == WordPoly.from_word(u)
    p = z(2, 3) + z(5).scale(Fraction(1, 2))
    assert ShuffleService.poly_product(p, WordPoly.unit()) == p


def test_single_letters():
    product = ShuffleService.shuffle_words(LetterWord.parse("1"), LetterWord.parse("0"))
    assert product == WordPoly({LetterWord.parse("10"): 1, LetterWord.parse("01"): 1})


def test_first_ideal_generator_in_weight_six():
    generator = z(3) - z(1, 2)
    product = ShuffleService.poly_product(generator, z(3))
    assert product.weight == 6
    assert product == ShuffleService.poly_product(z(3), z(3)) - ShuffleService.poly_product(z(1, 2), z(3))


@given(words, words)
def test_mass_and_agreement_with_brute_force(u, v):
    product = ShuffleService.shuffle_words(u, v)
    assert product.total_mass() == comb(len(u) + len(v), len(u))
    assert product == ShuffleService.brute_force_shuffle(u, v)


@given(words, words)
def test_commutative_on_words(u, v):
    assert ShuffleService.shuffle_words(u, v) == ShuffleService.shuffle_words(v, u)


@settings(max_examples=40, deadline=None)
@given(homogeneous_polys, homogeneous_polys, homogeneous_polys)
def test_poly_product_is_commutative_and_associative(p, q, r):
    pq = ShuffleService.poly_product(p, q)
    assert pq == ShuffleService.poly_product(q, p)
    assert pq.weight == p.weight + q.weight
    left = ShuffleService.poly_product(pq, r)
    right = ShuffleService.poly_product(p, ShuffleService.poly_product(q, r))
    assert left == right


def test_json_rendering_round_trips():
    product = ShuffleService.poly_product(z(2), z(3))
    items = ShuffleService.poly_to_json(product)
    assert {"index": [1, 4], "coeff": "6"} in items
    assert ShuffleService.poly_from_json(items) == product


def test_format_of_negative_and_fractional_terms():
    p = z(3) - z(1, 2)
    assert ShuffleService.format_poly(p) == "Z(3) - Z(1,2)"
    assert ShuffleService.format_poly(z(2).scale(Fraction(-1, 2))) == "-1/2*Z(2)"
    assert ShuffleService.format_poly(WordPoly.zero()) == "0"
