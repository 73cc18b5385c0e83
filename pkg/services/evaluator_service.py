"""
Evaluator Service - high precision values of I(ε₁,…,ε_k) and Z_c
"""

import logging
import math
import os
import threading
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

import mpmath
from mpmath import mp, mpf

from models.errors import ConvergenceError, EvaluationError, InadmissibleError
from models.eval_config import EvalConfig
from models.eval_result import EvalResult
from models.index import Index
from models.letter_word import LetterWord
from models.power_series import PowerSeries
from services.words_service import WordsService

logger = logging.getLogger(__name__)

Number = Union[int, Fraction, mpf]
SeriesKey = Tuple[Tuple[int, ...], Fraction, int, int]


def to_mpf(value: Number) -> mpf:
    """Exact rational -> mpf at the current working precision"""
    if isinstance(value, Fraction):
        return mpf(value.numerator) / value.denominator
    return mpf(value)


def convergence_ratio(c: Fraction, p: float, p_dual: float) -> float:
    """max(p, p′)·max(1, |c|): geometric rate of the prefix series at the cut"""
    return max(p, p_dual) * max(1.0, abs(float(c)))


class EvaluatorService:
    """
    Service for numerical evaluation of the iterated integrals.

    Each prefix integral F_u(x) is a power series around 0. The path [0, 1] is
    cut at p; the piece [p, 1] is pulled back by the involution
    t ↦ (t-1)/(ct-1), which turns it into a series in p′ = (p-1)/(cp-1)
    for the dual word, so
        I(w) = Σ_i F_{w[:i]}(p) · F_{dual(w)[:k-i]}(p′).
    """

    def __init__(self, max_cached_series: int = 20_000):
        """
        Args:
            max_cached_series: Number of prefix series kept in memory
        """
        self.max_cached_series = max_cached_series
        self._series_cache: Dict[SeriesKey, PowerSeries] = {}
        self._lock = threading.Lock()

    @staticmethod
    def omega1_coefficients(c: Fraction, n_terms: int, precision: int = 200) -> List[mpf]:
        """
        Coefficients of ω₁/dt = 1/(1-t) - c/(1-ct).

        Args:
            c: Parameter (< 1)
            n_terms: Number of coefficients N (>= 1)
            precision: Bits

        Returns:
            [1 - c^{m+1} for m = 0..N-1]
        """
        if n_terms < 1:
            raise ValueError("n_terms must be >= 1")
        c = Fraction(c)
        if c >= 1:
            raise ValueError(f"c must be < 1, got {c}")
        with mp.workprec(precision):
            cm = to_mpf(c)
            power = cm
            out = []
            for _ in range(n_terms):
                out.append(1 - power)
                power *= cm
            return out

    @staticmethod
    def _append_letter(coeffs: List[mpf], letter: int, cm: mpf) -> List[mpf]:
        """
        Coefficients of ∫₀ˣ F(t) ω_letter(t) from those of F.

        letter 0: bₙ = aₙ / n.
        letter 1: bₙ = gₙ₋₁ / n with gₘ = Σ_{j<=m} aⱼ (1 - c^{m-j+1}) = Sₘ - Tₘ,
        Sₘ the running sum and Tₘ = c(aₘ + Tₘ₋₁).
        """
        order = len(coeffs) - 1
        out = [mp.zero] * (order + 1)
        if letter == 0:
            for n in range(1, order + 1):
                out[n] = coeffs[n] / n
            return out
        running = mp.zero
        tail = mp.zero
        for m in range(order):
            running += coeffs[m]
            tail = cm * (coeffs[m] + tail)
            out[m + 1] = (running - tail) / (m + 1)
        return out

    def _prefix_chain(self, word: LetterWord, c: Fraction, wp: int, order: int) -> List[PowerSeries]:
        """
        Series of every nonempty prefix of `word`, memoized per prefix.

        Returns:
            [F_{w[:1]}, …, F_{w[:k]}]
        """
        letters = word.letters
        k = len(letters)
        with self._lock:
            chain = [self._series_cache.get((letters[: i + 1], c, wp, order)) for i in range(k)]
        start = 0
        while start < k and chain[start] is not None:
            start += 1
        if start == k:
            return chain

        fresh = {}
        with mp.workprec(wp):
            cm = to_mpf(c)
            if start == 0:
                coeffs = [mp.one] + [mp.zero] * order
            else:
                coeffs = list(chain[start - 1].coeffs)
            for i in range(start, k):
                coeffs = self._append_letter(coeffs, letters[i], cm)
                chain[i] = PowerSeries(coeffs)
                fresh[(letters[: i + 1], c, wp, order)] = chain[i]

        with self._lock:
            if len(self._series_cache) + len(fresh) > self.max_cached_series:
                logger.debug("Series cache full (%d entries), clearing", len(self._series_cache))
                self._series_cache.clear()
            self._series_cache.update(fresh)
        return chain

    def series_for_word(self, word: LetterWord, c: Fraction, order: int, precision: int = 200) -> PowerSeries:
        """
        Truncated series of F_u(x) = ∫_{0<t₁<…<t_j<x} ω_{ε₁}(t₁)…ω_{ε_j}(t_j).

        Args:
            word: Word with innermost letter 1 (or empty)
            c: Parameter
            order: Truncation order N
            precision: Bits

        Returns:
            PowerSeries a₀…a_N
        """
        if order < 1:
            raise ValueError("order must be >= 1")
        c = Fraction(c)
        if word.is_empty():
            with mp.workprec(precision):
                return PowerSeries([mp.one] + [mp.zero] * order)
        if word.letters[0] != 1:
            raise InadmissibleError(f"Innermost letter must be 1 for convergence at 0: {word}")
        return self._prefix_chain(word, c, precision, order)[-1]

    @staticmethod
    def fixed_point(c: Fraction, precision: int = 200) -> mpf:
        """
        Fixed point in (0, 1) of t ↦ (t-1)/(ct-1).

        (1 - √(1-c))/c is written as 1/(1 + √(1-c)), which also covers c = 0.
        """
        c = Fraction(c)
        if c >= 1:
            raise ValueError(f"c must be < 1, got {c}")
        with mp.workprec(precision):
            return 1 / (1 + mp.sqrt(1 - to_mpf(c)))

    @staticmethod
    def dual_point(c: Fraction, p: mpf) -> mpf:
        """Image (p-1)/(cp-1) of p under the involution"""
        return (p - 1) / (to_mpf(Fraction(c)) * p - 1)

    def cut_points(self, cfg: EvalConfig) -> Tuple[mpf, mpf]:
        with mp.workprec(cfg.working_precision):
            if cfg.uses_fixed_point:
                p = self.fixed_point(cfg.c, cfg.working_precision)
                return p, p
            p = to_mpf(cfg.cut)
            return p, self.dual_point(cfg.c, p)

    def initial_order(self, word: LetterWord, cfg: EvalConfig, ratio: float) -> int:
        """Order N with ratio^N below 2^{-(precision+guard)}, plus headroom for the n^k growth"""
        bits = cfg.precision + cfg.guard_bits
        n = bits * math.log(2) / -math.log(ratio)
        return int(math.ceil(n)) + 2 * word.weight + 8

    def _combine(self, left: List[PowerSeries], right: List[PowerSeries],
                 p: mpf, p_dual: mpf, upto: int) -> mpf:
        k = len(left)
        left_values = [mp.one] + [s.evaluate(p, upto) for s in left]
        right_values = [mp.one] + [s.evaluate(p_dual, upto) for s in right]
        return mp.fsum(left_values[i] * right_values[k - i] for i in range(k + 1))

    def evaluate_word_detailed(self, word: LetterWord, cfg: EvalConfig) -> EvalResult:
        """
        Evaluate I(w) and report the truncation actually used.

        Args:
            word: Nonempty admissible word
            cfg: Evaluation settings

        Returns:
            EvalResult (value carries cfg.working_precision bits)
        """
        if word.is_empty() or not word.is_admissible():
            raise InadmissibleError(f"Word is not admissible: {word}")

        wp = cfg.working_precision
        p, p_dual = self.cut_points(cfg)
        pf, pdf = float(p), float(p_dual)
        if max(pf, pdf) > cfg.warn_cut:
            logger.warning("Cut point %.4f is close to 1 for c = %s; convergence will be slow", max(pf, pdf), cfg.c)
        ratio = convergence_ratio(cfg.c, pf, pdf)
        if ratio >= 1:
            raise ConvergenceError(
                f"Series at the cut do not converge for c = {cfg.c} (ratio {ratio:.4f} >= 1)"
            )

        dual = WordsService.dual(word)
        order = self.initial_order(word, cfg, ratio)
        bits = cfg.precision + cfg.guard_bits

        with mp.workprec(wp):
            tolerance = mpf(2) ** (-bits)
            for doubling in range(cfg.max_doublings + 1):
                full = 2 * order
                left = self._prefix_chain(word, cfg.c, wp, full)
                right = self._prefix_chain(dual, cfg.c, wp, full)
                coarse = self._combine(left, right, p, p_dual, order)
                fine = self._combine(left, right, p, p_dual, full)
                gap = abs(fine - coarse)
                if gap <= tolerance * max(mp.one, abs(fine)):
                    tail = max(
                        max(s.tail_bound(p) for s in left),
                        max(s.tail_bound(p_dual) for s in right),
                    )
                    if tail > tolerance * max(mp.one, abs(fine)):
                        logger.warning(
                            "I(%s) at c = %s: tail estimate %s at order %d exceeds the target 2^-%d",
                            word, cfg.c, mpmath.nstr(tail, 3), full, bits,
                        )
                    logger.debug(
                        "I(%s) at c = %s: order %d, gap %s, tail estimate %s",
                        word, cfg.c, full, mpmath.nstr(gap, 3), mpmath.nstr(tail, 3),
                    )
                    return EvalResult(
                        word=word, c=cfg.c, value=fine, precision=cfg.precision,
                        order=full, cut=p, dual_cut=p_dual, doublings=doubling,
                    )
                logger.info(
                    "I(%s) at c = %s: order %d not enough (gap %s), doubling",
                    word, cfg.c, full, mpmath.nstr(gap, 3),
                )
                order *= 2

        raise ConvergenceError(
            f"I({word}) at c = {cfg.c} did not reach {cfg.precision} bits after "
            f"{cfg.max_doublings} doublings"
        )

    def evaluate_word(self, word: LetterWord, cfg: EvalConfig) -> mpf:
        """
        Value of I(ε₁,…,ε_k) at parameter cfg.c.

        Raises:
            InadmissibleError: word empty or not of the form 1…0
            ConvergenceError: truncation did not stabilise
        """
        return self.evaluate_word_detailed(word, cfg).value

    def evaluate_index(self, idx: Index, cfg: EvalConfig) -> mpf:
        return self.evaluate_word(WordsService.index_to_word(idx), cfg)

    def evaluate_many(self, words: Sequence[LetterWord], cfg: EvalConfig,
                      jobs: Optional[int] = None) -> List[mpf]:
        """
        Evaluate several words, in parallel worker processes when jobs > 1.

        Each worker keeps its own EvaluatorService, so prefix series are
        shared only between words handled by the same process.

        Args:
            words: Admissible words
            cfg: Evaluation settings (same for every word)
            jobs: Worker processes (default: CPU count)

        Returns:
            Values in the order of `words`
        """
        words = list(words)
        jobs = jobs or os.cpu_count() or 1
        if jobs <= 1 or len(words) < 2:
            return [self.evaluate_word(w, cfg) for w in words]
        logger.info("Evaluating %d words at c = %s with %d workers", len(words), cfg.c, jobs)
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker) as pool:
            return list(pool.map(_evaluate_in_worker, [w.letters for w in words], [cfg] * len(words)))

    def clear_cache(self) -> None:
        with self._lock:
            self._series_cache.clear()

    @staticmethod
    def polylog(m: int, x: Number, precision: int = 200) -> mpf:
        """
        Li_m(x) = Σ_{n>=1} xⁿ/nᵐ.

        Args:
            m: Order (>= 1)
            x: Real argument with |x| <= 1; x = 1 needs m >= 2
            precision: Bits

        Returns:
            Li_m(x) as mpf
        """
        if m < 1:
            raise ValueError(f"polylog order must be >= 1, got {m}")
        with mp.workprec(precision):
            xm = to_mpf(x)
            if abs(xm) > 1:
                raise ValueError(f"polylog argument must satisfy |x| <= 1, got {x}")
            if xm == 1:
                if m == 1:
                    raise ValueError("Li_1(1) diverges")
                return mpmath.zeta(m)
            return mpmath.polylog(m, xm)

    @staticmethod
    def zc_depth_one(m: int, c: Fraction, precision: int = 200) -> mpf:
        """Z_c(m) = Li_m(1) - Li_m(c)"""
        if m < 2:
            raise ValueError(f"depth-one index needs m >= 2, got {m}")
        c = Fraction(c)
        if c >= 1:
            raise ValueError(f"c must be < 1, got {c}")
        with mp.workprec(precision + 16):
            # Li_m(c) for c < -1 is the real analytic continuation
            return mpmath.zeta(m) - mpmath.re(mpmath.polylog(m, to_mpf(c)))


_worker_service: Optional[EvaluatorService] = None


def _init_worker() -> None:
    global _worker_service
    _worker_service = EvaluatorService()


def _evaluate_in_worker(letters: Tuple[int, ...], cfg: EvalConfig) -> mpf:
    service = _worker_service or EvaluatorService()
    try:
        return service.evaluate_word(LetterWord(letters), cfg)
    except EvaluationError as exc:
        raise EvaluationError(f"I({LetterWord(letters)}) at c = {cfg.c}: {exc}") from exc
