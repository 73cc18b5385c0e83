"""
Genfun Service - the generating series identity for Z_c(1,…,1,m+1)
"""

import logging
from fractions import Fraction
from math import comb
from typing import Optional, Tuple

import mpmath
from mpmath import mp, mpf

from models.bivariate_series import BivariateSeries
from models.errors import ConvergenceError
from models.eval_config import EvalConfig
from models.index import Index
from models.theorem_report import CoefficientCheck, TheoremReport
from services.evaluator_service import EvaluatorService, to_mpf
from services.words_service import WordsService

logger = logging.getLogger(__name__)

# (constant, coefficient of X, coefficient of Y)
Affine = Tuple[int, int, int]

GAUSS_PATH = "gauss"
PFAFF_PATH = "pfaff"
DEFAULT_ORDER = 4
GUARD_BITS = 32
MAX_TERMS = 200_000


class GenfunService:
    """
    Service checking, coefficient by coefficient at a fixed numeric c,

        1 - Σ_{m,n>=1} Z_c(1^{n-1}, m+1) Xᵐ Yⁿ
            = (1-c) · Γ(1-X)Γ(1-Y)/Γ(1-X-Y) · ₂F₁(1-X, 1-Y; 1-X-Y; c).
    """

    def __init__(self, evaluator: Optional[EvaluatorService] = None, jobs: Optional[int] = 1):
        """
        Args:
            evaluator: Evaluator used for the left-hand side
            jobs: Worker processes for the left-hand side coefficients
        """
        self.evaluator = evaluator or EvaluatorService()
        self.jobs = jobs

    @staticmethod
    def default_tolerance(precision: int) -> mpf:
        return mpf(2) ** (-(precision - 64))

    @staticmethod
    def gamma_ratio_series(order: int, precision: int = 200) -> BivariateSeries:
        """
        Γ(1-X)Γ(1-Y)/Γ(1-X-Y) = exp(Σ_{k>=2} ζ(k)/k · (Xᵏ + Yᵏ - (X+Y)ᵏ)).

        The Euler constant terms cancel; ζ(k) is taken from polylog at 1.

        Args:
            order: Truncation degree
            precision: Bits

        Returns:
            BivariateSeries with constant term 1
        """
        if order < 0:
            raise ValueError("order must be >= 0")
        with mp.workprec(precision + GUARD_BITS):
            log_coeffs = {}
            for k in range(2, order + 1):
                weight = EvaluatorService.polylog(k, 1, precision + GUARD_BITS) / k
                # Xᵏ + Yᵏ - (X+Y)ᵏ keeps only the mixed terms, with a minus sign
                for i in range(1, k):
                    log_coeffs[(i, k - i)] = -comb(k, i) * weight
            return BivariateSeries(order, log_coeffs).exp()

    @staticmethod
    def _affine(order: int, params: Affine, shift: int) -> BivariateSeries:
        const, x, y = params
        return BivariateSeries.linear(order, const + shift, x, y)

    @staticmethod
    def _reciprocal_affine(order: int, params: Affine, shift: int) -> BivariateSeries:
        """1/(K + xX + yY) = (1/K) Σ_j (-(xX + yY)/K)^j"""
        const, x, y = params
        k = mpf(const + shift)
        if k == 0:
            raise ValueError("Hypergeometric lower parameter hits a non-positive integer")
        ratio = BivariateSeries.linear(order, 0, -mpf(x) / k, -mpf(y) / k)
        out = BivariateSeries.constant(order, 1)
        power = BivariateSeries.constant(order, 1)
        for _ in range(order):
            power = power * ratio
            out = out + power
        return out.scale(1 / k)

    @staticmethod
    def hyp2f1_series(a: Affine, b: Affine, d: Affine, z: mpf, order: int,
                      precision: int = 200) -> BivariateSeries:
        """
        ₂F₁(a, b; d; z) for parameters affine in X, Y, as a truncated series.

        Terms follow tₙ = tₙ₋₁ · (a+n-1)(b+n-1) / ((d+n-1)·n) · z, and the sum
        stops once every coefficient of a term is below 2^{-(precision+guard)}.

        Args:
            a, b, d: (constant, X coefficient, Y coefficient)
            z: Argument with |z| < 1
            order: Truncation degree in X, Y
            precision: Bits

        Returns:
            BivariateSeries
        """
        with mp.workprec(precision + GUARD_BITS):
            z = mpf(z)
            if abs(z) >= 1:
                raise ValueError(f"Gauss series needs |z| < 1, got {mpmath.nstr(z, 8)}")
            threshold = mpf(2) ** (-(precision + GUARD_BITS))
            term = BivariateSeries.constant(order, 1)
            total = BivariateSeries.constant(order, 1)
            for n in range(1, MAX_TERMS + 1):
                step = (
                    GenfunService._affine(order, a, n - 1)
                    * GenfunService._affine(order, b, n - 1)
                    * GenfunService._reciprocal_affine(order, d, n - 1)
                )
                term = (term * step).scale(z / n)
                total = total + term
                if term.max_abs() < threshold:
                    logger.debug("2F1 at z = %s converged after %d terms", mpmath.nstr(z, 8), n)
                    return total
        raise ConvergenceError(f"2F1 series at z = {mpmath.nstr(z, 8)} did not converge in {MAX_TERMS} terms")

    @staticmethod
    def hypergeometric_path(c: Fraction) -> str:
        """Direct Gauss summation for 0 <= c < 1, Pfaff transformation for c < 0"""
        return GAUSS_PATH if Fraction(c) >= 0 else PFAFF_PATH

    @staticmethod
    def hypergeometric_series(c: Fraction, order: int, precision: int = 200) -> BivariateSeries:
        """
        ₂F₁(1-X, 1-Y; 1-X-Y; c).

        For c < 0 the Pfaff transformation
            ₂F₁(a, b; d; c) = (1-c)^{-a} ₂F₁(a, d-b; d; c/(c-1))
        is used with a = 1-X, d-b = -X, and (1-c)^{-a} = (1-c)^{-1}·exp(X·ln(1-c)).
        """
        c = Fraction(c)
        if c >= 1:
            raise ValueError(f"c must be < 1, got {c}")
        a, b, d = (1, -1, 0), (1, 0, -1), (1, -1, -1)
        if GenfunService.hypergeometric_path(c) == GAUSS_PATH:
            if c > Fraction(1, 2):
                logger.warning("2F1 summed directly at c = %s; convergence is slow", c)
            with mp.workprec(precision + GUARD_BITS):
                z = to_mpf(c)
            return GenfunService.hyp2f1_series(a, b, d, z, order, precision)

        with mp.workprec(precision + GUARD_BITS):
            cm = to_mpf(c)
            z = cm / (cm - 1)
            series = GenfunService.hyp2f1_series(a, (0, -1, 0), d, z, order, precision)
            log_one_minus_c = mp.log(1 - cm)
            prefactor = BivariateSeries(order, {(1, 0): log_one_minus_c}).exp().scale(1 / (1 - cm))
            return prefactor * series

    @staticmethod
    def rhs_series(c: Fraction, order: int, precision: int = 200) -> BivariateSeries:
        """(1-c) · Γ-ratio · ₂F₁"""
        c = Fraction(c)
        gamma = GenfunService.gamma_ratio_series(order, precision)
        hyp = GenfunService.hypergeometric_series(c, order, precision)
        with mp.workprec(precision + GUARD_BITS):
            return (gamma * hyp).scale(1 - to_mpf(c))

    @staticmethod
    def lhs_index(m: int, n: int) -> Index:
        """Index (1^{n-1}, m+1) attached to Xᵐ Yⁿ"""
        return Index((1,) * (n - 1) + (m + 1,))

    def lhs_series(self, c: Fraction, order: int, cfg: Optional[EvalConfig] = None) -> BivariateSeries:
        """
        1 - Σ Z_c(1^{n-1}, m+1) Xᵐ Yⁿ over m, n >= 1, m + n <= order.

        Args:
            c: Parameter
            order: Truncation degree
            cfg: Evaluation settings (default: 200 bits at c)

        Returns:
            BivariateSeries
        """
        c = Fraction(c)
        cfg = cfg.with_c(c) if cfg is not None else EvalConfig(c=c)
        keys = [(m, n) for n in range(1, order) for m in range(1, order - n + 1)]
        words = [WordsService.index_to_word(self.lhs_index(m, n)) for m, n in keys]
        logger.info("Left-hand side at c = %s: %d coefficients", c, len(words))
        values = self.evaluator.evaluate_many(words, cfg, jobs=self.jobs)
        with mp.workprec(cfg.working_precision):
            coeffs = {(0, 0): mp.one}
            for key, value in zip(keys, values):
                coeffs[key] = -value
            return BivariateSeries(order, coeffs)

    def verify_theorem(self, c: Fraction, order: int = DEFAULT_ORDER, precision: int = 200,
                       tolerance: Optional[mpf] = None) -> TheoremReport:
        """
        Compare both sides for every X^i Y^j with i + j <= order.

        Returns:
            TheoremReport; `failures` lists every coefficient above tolerance
        """
        c = Fraction(c)
        tolerance = tolerance if tolerance is not None else self.default_tolerance(precision)
        lhs = self.lhs_series(c, order, EvalConfig(c=c, precision=precision))
        rhs = self.rhs_series(c, order, precision)
        report = TheoremReport(
            name="generating series", c=c, order=order, precision=precision,
            tolerance=tolerance, path=self.hypergeometric_path(c),
        )
        for i, j in lhs.keys():
            report.checks.append(CoefficientCheck(i, j, lhs.coefficient(i, j), rhs.coefficient(i, j)))
        if report.passed:
            logger.info("Generating series agree at c = %s up to degree %d (max %s)",
                        c, order, mpmath.nstr(report.max_discrepancy, 5))
        else:
            logger.warning("Generating series differ at c = %s, first at X^%d Y^%d",
                           c, *report.first_failure())
        return report

    def depth_one_check(self, c: Fraction, order: int = DEFAULT_ORDER, precision: int = 200,
                        tolerance: Optional[mpf] = None) -> TheoremReport:
        """Coefficient of Xᵐ Y on the right against -(Li_{m+1}(1) - Li_{m+1}(c))"""
        c = Fraction(c)
        tolerance = tolerance if tolerance is not None else self.default_tolerance(precision)
        rhs = self.rhs_series(c, order, precision)
        report = TheoremReport(name="depth one", c=c, order=order, precision=precision,
                               tolerance=tolerance, path=self.hypergeometric_path(c))
        for m in range(1, order):
            oracle = -EvaluatorService.zc_depth_one(m + 1, c, precision + GUARD_BITS)
            report.checks.append(CoefficientCheck(m, 1, oracle, rhs.coefficient(m, 1)))
        return report

    def symmetry_check(self, c: Fraction, order: int = DEFAULT_ORDER, precision: int = 200,
                       tolerance: Optional[mpf] = None) -> TheoremReport:
        """Right-hand side coefficients under X <-> Y"""
        c = Fraction(c)
        tolerance = tolerance if tolerance is not None else self.default_tolerance(precision)
        rhs = self.rhs_series(c, order, precision)
        swapped = rhs.swap()
        report = TheoremReport(name="symmetry", c=c, order=order, precision=precision,
                               tolerance=tolerance, path=self.hypergeometric_path(c))
        for i, j in rhs.keys():
            if i < j:
                report.checks.append(CoefficientCheck(i, j, rhs.coefficient(i, j), swapped.coefficient(i, j)))
        return report

    def degenerate_slice_check(self, c: Fraction, order: int = DEFAULT_ORDER, precision: int = 200,
                               tolerance: Optional[mpf] = None) -> TheoremReport:
        """Right-hand side at Y = 0 (and X = 0) is the constant 1"""
        c = Fraction(c)
        tolerance = tolerance if tolerance is not None else self.default_tolerance(precision)
        rhs = self.rhs_series(c, order, precision)
        report = TheoremReport(name="degenerate slice", c=c, order=order, precision=precision,
                               tolerance=tolerance, path=self.hypergeometric_path(c))
        for i in range(order + 1):
            expected = mpf(1) if i == 0 else mpf(0)
            report.checks.append(CoefficientCheck(i, 0, expected, rhs.coefficient(i, 0)))
            if i > 0:
                report.checks.append(CoefficientCheck(0, i, expected, rhs.coefficient(0, i)))
        return report
