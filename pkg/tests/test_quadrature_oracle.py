from fractions import Fraction

import pytest
from mpmath import mp, mpf

from models.errors import InadmissibleError
from models.eval_config import EvalConfig
from models.index import Index
from models.letter_word import LetterWord
from services.evaluator_service import EvaluatorService
from services.quadrature_oracle_service import QuadratureOracleService
from services.words_service import WordsService


@pytest.fixture(scope="module")
def oracle():
    return QuadratureOracleService()


@pytest.fixture(scope="module")
def evaluator():
    return EvaluatorService()


def test_omega0_density_at_zero_parameter():
    with mp.workdps(30):
        u = mpf(1) / 3
        assert abs(QuadratureOracleService.omega0_density(u, mpf(0)) - 1 / mp.expm1(u)) < mpf(10) ** -28


def test_depth_one_against_polylog(oracle):
    with mp.workdps(40):
        value = oracle.evaluate_index(Index((2,)), Fraction(1, 2), digits=30)
        expected = mp.zeta(2) - mp.polylog(2, mpf(1) / 2)
        assert abs(value - expected) < mpf(10) ** -30


def test_rejects_inadmissible(oracle):
    with pytest.raises(InadmissibleError):
        oracle.evaluate_word(LetterWord.parse("01"), Fraction(0))
    with pytest.raises(ValueError):
        oracle.evaluate_word(LetterWord.parse("10"), Fraction(1))


def test_values_are_cached(oracle):
    w = LetterWord.parse("110")
    first = oracle.evaluate_word(w, Fraction(0), digits=30)
    assert oracle.evaluate_word(w, Fraction(0), digits=30) is first


@pytest.mark.slow
@pytest.mark.parametrize("c", [Fraction(0), Fraction(1, 2)])
def test_agrees_with_series_evaluator_up_to_weight_five(oracle, evaluator, c):
    cfg = EvalConfig.from_digits(c, 45)
    for n in range(2, 6):
        for w in WordsService.enumerate_admissible(n):
            brute = oracle.evaluate_word(w, c, digits=35)
            series = evaluator.evaluate_word(w, cfg)
            with mp.workdps(50):
                assert abs(brute - series) < mpf(10) ** -30, (str(w), c)
