import logging
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from mpmath import mp, mpf

from models.errors import ConvergenceError, InadmissibleError
from models.eval_config import EvalConfig
from models.index import Index
from models.letter_word import LetterWord
from models.power_series import PowerSeries
from services.evaluator_service import EvaluatorService
from services.shuffle_service import ShuffleService
from services.words_service import WordsService

SAMPLES = [Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3)]


@pytest.fixture(scope="module")
def evaluator():
    return EvaluatorService()


def word(text):
    return LetterWord.parse(text)


def depth_one_oracle(m, c):
    return mpmath.zeta(m) - mpmath.polylog(m, mpf(c.numerator) / c.denominator)


def evaluate_poly(evaluator, poly, cfg):
    return mp.fsum(coeff.numerator * evaluator.evaluate_word(w, cfg) / coeff.denominator
                   for w, coeff in poly.items())


def test_omega1_coefficients():
    assert EvaluatorService.omega1_coefficients(Fraction(0), 4) == [1, 1, 1, 1]
    assert EvaluatorService.omega1_coefficients(Fraction(-1), 4) == [2, 0, 2, 0]
    with mp.workdps(30):
        got = EvaluatorService.omega1_coefficients(Fraction(1, 2), 3)
        assert got == [mpf(1) / 2, mpf(3) / 4, mpf(7) / 8]


def test_omega1_coefficients_rejects_bad_input():
    with pytest.raises(ValueError):
        EvaluatorService.omega1_coefficients(Fraction(0), 0)
    with pytest.raises(ValueError):
        EvaluatorService.omega1_coefficients(Fraction(1), 3)


def test_series_of_single_letter(evaluator):
    c = Fraction(1, 3)
    series = evaluator.series_for_word(word("1"), c, order=30, precision=200)
    with mp.workprec(200):
        assert series.coeffs[0] == 0
        for n in range(1, 31):
            expected = (1 - mpf(1) / 3 ** n) / n
            assert abs(series.coeffs[n] - expected) < mpf(10) ** -55
        x = mpf(1) / 4
        closed = mp.log((1 - mpf(c.numerator) / c.denominator * x) / (1 - x))
        assert abs(series.evaluate(x) - closed) < mpf(10) ** -15


def test_series_of_dilogarithm_word(evaluator):
    series = evaluator.series_for_word(word("10"), Fraction(0), order=20, precision=128)
    with mp.workprec(128):
        for n in range(1, 21):
            assert abs(series.coeffs[n] - mpf(1) / n ** 2) < mpf(10) ** -35


def test_series_rejects_innermost_zero(evaluator):
    with pytest.raises(InadmissibleError):
        evaluator.series_for_word(word("01"), Fraction(0), order=10)


def test_fixed_point():
    with mp.workdps(40):
        assert abs(EvaluatorService.fixed_point(Fraction(-1), 140) - (mp.sqrt(2) - 1)) < mpf(10) ** -38
        assert EvaluatorService.fixed_point(Fraction(0)) == mpf(1) / 2
        p = EvaluatorService.fixed_point(Fraction(3, 4), 140)
        assert abs(p - mpf(2) / 3) < mpf(10) ** -38
        assert abs(EvaluatorService.dual_point(Fraction(3, 4), p) - p) < mpf(10) ** -38


@pytest.mark.parametrize("c", SAMPLES)
@pytest.mark.parametrize("m", range(2, 9))
def test_depth_one_identity(evaluator, m, c):
    cfg = EvalConfig.from_digits(c, 60)
    value = evaluator.evaluate_index(Index((m,)), cfg)
    with mp.workdps(70):
        assert abs(value - depth_one_oracle(m, c)) < mpf(10) ** -50


def test_zeta_two_at_half_cut(evaluator):
    value = evaluator.evaluate_word(word("10"), EvalConfig.from_digits(0, 40))
    with mp.workdps(50):
        assert abs(value - (2 * mp.polylog(2, mpf(1) / 2) + mp.log(2) ** 2)) < mpf(10) ** -38
        assert abs(value - mp.pi ** 2 / 6) < mpf(10) ** -38


def test_known_closed_forms(evaluator):
    with mp.workdps(50):
        t2 = evaluator.evaluate_word(word("10"), EvalConfig.from_digits(-1, 40))
        assert abs(t2 - mp.pi ** 2 / 4) < mpf(10) ** -38
        half = evaluator.evaluate_index(Index((2,)), EvalConfig.from_digits(Fraction(1, 2), 40))
        assert abs(half - (mp.pi ** 2 / 12 + mp.log(2) ** 2 / 2)) < mpf(10) ** -38
        t3 = evaluator.evaluate_index(Index((3,)), EvalConfig.from_digits(-1, 40))
        assert abs(t3 - mp.zeta(3) * 7 / 4) < mpf(10) ** -38
        z12 = evaluator.evaluate_index(Index((1, 2)), EvalConfig.from_digits(0, 40))
        assert abs(z12 - mp.zeta(3)) < mpf(10) ** -38


def test_classical_double_zeta(evaluator):
    with mp.workdps(50):
        value = evaluator.evaluate_index(Index((2, 2)), EvalConfig.from_digits(0, 40))
        assert abs(value - mp.pi ** 4 / 120) < mpf(10) ** -38


def test_duality_at_half(evaluator):
    cfg = EvalConfig.from_digits(Fraction(1, 2), 50)
    a = evaluator.evaluate_word(word("110"), cfg)
    b = evaluator.evaluate_word(word("100"), cfg)
    with mp.workdps(60):
        assert abs(a - b) < mpf(10) ** -40


@pytest.mark.slow
@pytest.mark.parametrize("c", [Fraction(0), Fraction(-1), Fraction(1, 2)])
def test_duality_suite(evaluator, c):
    cfg = EvalConfig.from_digits(c, 50)
    for n in range(2, 9):
        for w in WordsService.duality_classes(n):
            d = WordsService.dual(w)
            if d == w:
                continue
            a = evaluator.evaluate_word(w, cfg)
            b = evaluator.evaluate_word(d, cfg)
            with mp.workdps(60):
                assert abs(a - b) < mpf(10) ** -40, (str(w), c)


@pytest.mark.parametrize("c", [Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(-1, 2)])
def test_cut_point_independence(evaluator, c):
    fixed = EvalConfig.from_digits(c, 40)
    moved = fixed.with_cut(Fraction(2, 5))
    for text in ("10", "110", "1010", "11000", "101100"):
        a = evaluator.evaluate_word(word(text), fixed)
        b = evaluator.evaluate_word(word(text), moved)
        with mp.workdps(50):
            assert abs(a - b) < mpf(10) ** -35, text


@pytest.mark.parametrize("c", [Fraction(0), Fraction(-1), Fraction(1, 2), Fraction(-1, 2)])
def test_shuffle_homomorphism_on_zeta_two_zeta_three(evaluator, c):
    cfg = EvalConfig.from_digits(c, 50)
    z2, z3 = ShuffleService.z(Index((2,))), ShuffleService.z(Index((3,)))
    with mp.workprec(cfg.working_precision):
        lhs = evaluate_poly(evaluator, z2, cfg) * evaluate_poly(evaluator, z3, cfg)
        rhs = evaluate_poly(evaluator, ShuffleService.poly_product(z2, z3), cfg)
    with mp.workdps(60):
        assert abs(lhs - rhs) < mpf(10) ** -40


@pytest.mark.slow
def test_shuffle_homomorphism_on_random_pairs(evaluator):
    rng = np.random.default_rng(7)
    samples = [Fraction(0), Fraction(-1), Fraction(1, 2)]
    for _ in range(50):
        total = int(rng.integers(4, 9))
        left_weight = int(rng.integers(2, total - 1))
        left_words = WordsService.enumerate_admissible(left_weight)
        right_words = WordsService.enumerate_admissible(total - left_weight)
        u = left_words[int(rng.integers(len(left_words)))]
        v = right_words[int(rng.integers(len(right_words)))]
        cfg = EvalConfig.from_digits(samples[int(rng.integers(0, 3))], 45)
        with mp.workprec(cfg.working_precision):
            lhs = evaluator.evaluate_word(u, cfg) * evaluator.evaluate_word(v, cfg)
            rhs = evaluate_poly(evaluator, ShuffleService.shuffle_words(u, v), cfg)
        with mp.workdps(55):
            assert abs(lhs - rhs) < mpf(10) ** -40, (str(u), str(v), cfg.c)


def test_rejects_inadmissible_words(evaluator):
    cfg = EvalConfig.from_digits(0, 30)
    for text in ("", "01", "11", "1"):
        with pytest.raises(InadmissibleError):
            evaluator.evaluate_word(word(text), cfg)
    with pytest.raises(InadmissibleError):
        evaluator.evaluate_index(Index((2, 1)), cfg)


def test_reports_non_convergent_parameter(evaluator):
    with pytest.raises(ConvergenceError):
        evaluator.evaluate_word(word("10"), EvalConfig.from_digits(-4, 30))


def test_config_validation():
    with pytest.raises(ValueError):
        EvalConfig(c=Fraction(1))
    with pytest.raises(ValueError):
        EvalConfig(c=Fraction(0), precision=32)
    with pytest.raises(ValueError):
        EvalConfig(c=Fraction(0), cut=Fraction(3, 2))
    with pytest.raises(ValueError):
        EvalConfig(c=Fraction(97, 100))


def test_detailed_result_reports_truncation(evaluator):
    result = evaluator.evaluate_word_detailed(word("1100"), EvalConfig.from_digits(Fraction(-1, 2), 40))
    assert result.order >= 2
    assert result.cut == result.dual_cut
    moved = evaluator.evaluate_word_detailed(
        word("1100"), EvalConfig.from_digits(Fraction(-1, 2), 40, cut=Fraction(1, 3))
    )
    assert moved.cut != moved.dual_cut


def test_tail_estimate_within_target_is_silent(evaluator, caplog):
    with caplog.at_level(logging.WARNING, logger="services.evaluator_service"):
        evaluator.evaluate_word(word("1100"), EvalConfig.from_digits(Fraction(-1, 2), 40))
    assert not [r for r in caplog.records if "tail estimate" in r.getMessage()]


def test_large_tail_estimate_is_reported(caplog, monkeypatch):
    monkeypatch.setattr(PowerSeries, "tail_bound", lambda self, x: mpf(1))
    with caplog.at_level(logging.WARNING, logger="services.evaluator_service"):
        EvaluatorService().evaluate_word(word("100"), EvalConfig.from_digits(Fraction(1, 3), 30))
    assert any("tail estimate" in r.getMessage() for r in caplog.records)


def test_evaluate_many_matches_serial(evaluator):
    cfg = EvalConfig.from_digits(Fraction(1, 3), 30)
    words = WordsService.enumerate_admissible(5)
    serial = evaluator.evaluate_many(words, cfg, jobs=1)
    parallel = EvaluatorService().evaluate_many(words, cfg, jobs=2)
    with mp.workdps(40):
        for a, b in zip(serial, parallel):
            assert abs(a - b) < mpf(10) ** -30


def test_polylog():
    with mp.workdps(50):
        assert abs(EvaluatorService.polylog(1, Fraction(1, 2), 170) - mp.log(2)) < mpf(10) ** -45
        assert abs(EvaluatorService.polylog(2, 1, 170) - mp.pi ** 2 / 6) < mpf(10) ** -45
        assert abs(EvaluatorService.polylog(2, -1, 170) + mp.pi ** 2 / 12) < mpf(10) ** -45
    with pytest.raises(ValueError):
        EvaluatorService.polylog(1, 1)
    with pytest.raises(ValueError):
        EvaluatorService.polylog(2, 2)


def test_zc_depth_one():
    with mp.workdps(50):
        assert abs(EvaluatorService.zc_depth_one(2, Fraction(0), 170) - mp.pi ** 2 / 6) < mpf(10) ** -45
        assert abs(EvaluatorService.zc_depth_one(2, Fraction(-1), 170) - mp.pi ** 2 / 4) < mpf(10) ** -45
        expected = mp.zeta(3) - mp.polylog(3, mpf(1) / 2)
        assert abs(EvaluatorService.zc_depth_one(3, Fraction(1, 2), 170) - expected) < mpf(10) ** -45
    with pytest.raises(ValueError):
        EvaluatorService.zc_depth_one(1, Fraction(0))
