"""
Quadrature Oracle Service - independent brute-force values of I(w)
"""

import logging
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np
from numpy.polynomial import chebyshev
from mpmath import mp, mpf

from models.errors import InadmissibleError
from models.index import Index
from models.letter_word import LetterWord
from services.evaluator_service import to_mpf
from services.words_service import WordsService

logger = logging.getLogger(__name__)

BASE_BREAKS = (0, 0.5, 1, 2, 3, 4)
WIDE_STEP = 4


@dataclass(frozen=True)
class _Panel:
    half: mpf
    nodes: np.ndarray
    density: np.ndarray


@lru_cache(maxsize=8)
def _chebyshev_setup(m: int, dps: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    First-kind Chebyshev nodes xⱼ = cos(π(j+½)/M) and the matrix
    cos(πk(j+½)/M) mapping node values to coefficients.
    """
    with mp.workdps(dps):
        x = np.array([mp.cos(mp.pi * (j + mpf(1) / 2) / m) for j in range(m)], dtype=object)
        cos_matrix = np.array(
            [[mp.cos(mp.pi * k * (j + mpf(1) / 2) / m) for j in range(m)] for k in range(m)],
            dtype=object,
        )
    return x, cos_matrix


class QuadratureOracleService:
    """
    Iterated integrals by spectral quadrature, used to cross-check EvaluatorService.

    In the coordinate u = 𝓛(t) = log((1-ct)/(1-t)) the path [0, 1) becomes
    [0, ∞), ω₁ = du and ω₀ = (1-c)eᵘ / ((eᵘ-c)(eᵘ-1)) du. The pole of ω₁ at
    t = 1 is gone and ω₀ decays like e^{-u}, so the integral is truncated at
    a finite U. Each level of the iterated integral is interpolated on
    Chebyshev panels and integrated exactly from its Chebyshev coefficients.
    """

    def __init__(self, nodes_per_panel: int = 48, max_bisections: int = 6):
        """
        Args:
            nodes_per_panel: Chebyshev nodes M on each panel
            max_bisections: How many times a panel may be halved
        """
        self.nodes_per_panel = nodes_per_panel
        self.max_bisections = max_bisections
        self._panels: Dict[Tuple[Fraction, int], List[_Panel]] = {}
        self._values: Dict[Tuple[Tuple[int, ...], Fraction, int], mpf] = {}
        self._lock = threading.Lock()

    @staticmethod
    def omega0_density(u: mpf, c: mpf) -> mpf:
        """ω₀/du written with expm1 so that it stays accurate near u = 0"""
        em1 = mp.expm1(u)
        return (1 - c) * (em1 + 1) / ((em1 + 1 - c) * em1)

    @staticmethod
    def truncation_point(dps: int) -> float:
        """U with e^{-U} far below 10^{-dps}"""
        return 1.2 * dps * math.log(10) + 20

    def chebyshev_coefficients(self, values: np.ndarray, dps: int) -> np.ndarray:
        """aₖ = (2/M) Σⱼ fⱼ cos(πk(j+½)/M), a₀ halved"""
        m = self.nodes_per_panel
        _, cos_matrix = _chebyshev_setup(m, dps)
        coeffs = cos_matrix.dot(values) * (mpf(2) / m)
        coeffs[0] = coeffs[0] / 2
        return coeffs

    def _make_panel(self, left: mpf, right: mpf, cm: mpf, dps: int) -> _Panel:
        x, _ = _chebyshev_setup(self.nodes_per_panel, dps)
        half = (right - left) / 2
        nodes = (left + right) / 2 + half * x
        density = np.array([self.omega0_density(u, cm) for u in nodes], dtype=object)
        return _Panel(half=half, nodes=nodes, density=density)

    def _is_resolved(self, panel: _Panel, dps: int) -> bool:
        """Tail of the Chebyshev expansion of u·ω₀(u) on the panel"""
        coeffs = self.chebyshev_coefficients(panel.nodes * panel.density, dps)
        scale = max(abs(a) for a in coeffs)
        tail = max(abs(a) for a in coeffs[-4:])
        return tail <= mpf(10) ** (-(dps - 5)) * max(scale, mpf(1))

    def panels(self, c: Fraction, dps: int) -> List[_Panel]:
        """Panels covering [0, U], bisected until u·ω₀(u) is resolved on each"""
        key = (Fraction(c), dps)
        with self._lock:
            cached = self._panels.get(key)
        if cached is not None:
            return cached

        with mp.workdps(dps):
            cm = to_mpf(Fraction(c))
            upper = self.truncation_point(dps)
            breaks = [mpf(b) for b in BASE_BREAKS]
            while breaks[-1] < upper:
                breaks.append(breaks[-1] + WIDE_STEP)

            out: List[_Panel] = []
            pending = [(breaks[i], breaks[i + 1], 0) for i in range(len(breaks) - 1)]
            while pending:
                left, right, depth = pending.pop(0)
                panel = self._make_panel(left, right, cm, dps)
                if depth < self.max_bisections and not self._is_resolved(panel, dps):
                    mid = (left + right) / 2
                    pending[0:0] = [(left, mid, depth + 1), (mid, right, depth + 1)]
                    continue
                if depth == self.max_bisections and not self._is_resolved(panel, dps):
                    logger.warning("Panel [%s, %s] not resolved at c = %s", mp.nstr(left, 5), mp.nstr(right, 5), c)
                out.append(panel)

        logger.debug("c = %s, %d digits: %d quadrature panels up to U = %.1f", c, dps, len(out), upper)
        with self._lock:
            self._panels[key] = out
        return out

    def evaluate_word(self, word: LetterWord, c: Fraction, digits: int = 40) -> mpf:
        """
        Brute-force value of I(w).

        Args:
            word: Nonempty admissible word
            c: Parameter (< 1)
            digits: Target decimal digits

        Returns:
            I(w) as mpf
        """
        if word.is_empty() or not word.is_admissible():
            raise InadmissibleError(f"Word is not admissible: {word}")
        c = Fraction(c)
        if c >= 1:
            raise ValueError(f"c must be < 1, got {c}")
        dps = digits + 15
        key = (word.letters, c, dps)
        with self._lock:
            if key in self._values:
                return self._values[key]

        panels = self.panels(c, dps)
        k = len(word)
        m = self.nodes_per_panel
        with mp.workdps(dps):
            x, _ = _chebyshev_setup(m, dps)
            offsets = [mp.zero] * (k + 1)
            offsets[0] = mp.one
            for panel in panels:
                level = np.array([mp.one] * m, dtype=object)
                for i, letter in enumerate(word.letters, start=1):
                    integrand = level if letter == 1 else level * panel.density
                    coeffs = self.chebyshev_coefficients(integrand, dps)
                    antiderivative = chebyshev.chebint(coeffs, lbnd=-1, scl=panel.half)
                    level = chebyshev.chebval(x, antiderivative) + offsets[i]
                    offsets[i] = chebyshev.chebval(mp.one, antiderivative) + offsets[i]
            value = offsets[k]

        with self._lock:
            self._values[key] = value
        return value

    def evaluate_index(self, idx: Index, c: Fraction, digits: int = 40) -> mpf:
        return self.evaluate_word(WordsService.index_to_word(idx), c, digits)
