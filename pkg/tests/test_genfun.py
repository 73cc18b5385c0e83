from fractions import Fraction

import pytest
from mpmath import mp, mpf

from models.index import Index
from models.eval_config import EvalConfig
from services.evaluator_service import EvaluatorService
from services.genfun_service import GAUSS_PATH, PFAFF_PATH, GenfunService


@pytest.fixture(scope="module")
def service():
    return GenfunService(evaluator=EvaluatorService(), jobs=1)


def test_gamma_ratio_low_coefficients():
    series = GenfunService.gamma_ratio_series(4, 200)
    with mp.workprec(200):
        assert series.coefficient(0, 0) == 1
        assert series.coefficient(1, 0) == 0
        assert series.coefficient(0, 1) == 0
        assert abs(series.coefficient(1, 1) + mp.zeta(2)) < mpf(10) ** -50


@pytest.mark.parametrize("c", [Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(-1)])
def test_hypergeometric_constant_term(c):
    series = GenfunService.hypergeometric_series(c, 3, 200)
    with mp.workprec(200):
        expected = 1 / (1 - mpf(c.numerator) / c.denominator)
        assert abs(series.coefficient(0, 0) - expected) < mpf(10) ** -50


def test_hypergeometric_at_zero_is_one():
    series = GenfunService.hypergeometric_series(Fraction(0), 3, 200)
    assert series.coefficient(0, 0) == 1
    assert all(series.coefficient(i, j) == 0 for i, j in series.keys() if (i, j) != (0, 0))


def test_path_choice():
    assert GenfunService.hypergeometric_path(Fraction(1, 2)) == GAUSS_PATH
    assert GenfunService.hypergeometric_path(Fraction(0)) == GAUSS_PATH
    assert GenfunService.hypergeometric_path(Fraction(-1)) == PFAFF_PATH


def test_pfaff_agrees_with_direct_sum():
    c = Fraction(-1, 3)
    order = 3
    pfaff = GenfunService.hypergeometric_series(c, order, 200)
    with mp.workprec(232):
        direct = GenfunService.hyp2f1_series((1, -1, 0), (1, 0, -1), (1, -1, -1), mpf(-1) / 3, order, 200)
        for i, j in direct.keys():
            assert abs(direct.coefficient(i, j) - pfaff.coefficient(i, j)) < mpf(10) ** -50


def test_lhs_index():
    assert GenfunService.lhs_index(1, 1) == Index((2,))
    assert GenfunService.lhs_index(2, 3) == Index((1, 1, 3))


def test_lhs_coefficients(service):
    series = service.lhs_series(Fraction(0), 3, EvalConfig(c=Fraction(0), precision=200))
    with mp.workprec(200):
        assert series.coefficient(0, 0) == 1
        assert series.coefficient(1, 0) == 0
        assert abs(series.coefficient(1, 1) + mp.zeta(2)) < mpf(10) ** -50
        assert abs(series.coefficient(2, 1) + mp.zeta(3)) < mpf(10) ** -50


def test_classical_case_order_three(service):
    report = service.verify_theorem(Fraction(0), order=3, precision=200)
    assert report.passed
    assert report.max_discrepancy < mpf(10) ** -40
    assert report.path == GAUSS_PATH


@pytest.mark.slow
@pytest.mark.parametrize("c", [Fraction(0), Fraction(1, 2), Fraction(-1, 2), Fraction(-1)])
def test_theorem_at_order_four(service, c):
    report = service.verify_theorem(c, order=4, precision=200)
    assert report.passed, report.first_failure()
    assert report.max_discrepancy < mpf(10) ** -30


def test_failure_is_located(service):
    report = service.verify_theorem(Fraction(1, 3), order=2, precision=200)
    assert report.passed
    strict = service.verify_theorem(Fraction(1, 3), order=2, precision=200, tolerance=mpf(-1))
    assert not strict.passed
    assert strict.first_failure() == (0, 0)
    assert len(strict.failures) == len(strict.checks)


@pytest.mark.parametrize("c", [Fraction(1, 2), Fraction(-1)])
def test_side_checks(service, c):
    assert service.depth_one_check(c, order=4, precision=200).passed
    assert service.symmetry_check(c, order=4, precision=200).passed
    assert service.degenerate_slice_check(c, order=4, precision=200).passed
