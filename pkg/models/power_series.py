"""
PowerSeries Model
"""

from dataclasses import dataclass, field
from typing import List, Optional

from mpmath import mp, mpf


@dataclass(frozen=True)
class PowerSeries:
    """
    Truncated power series Σ aₙ xⁿ, n = 0..N, with mpmath coefficients.

    Used for the prefix integrals F_u(x) = ∫_{0<t₁<…<t_j<x} ω_{ε₁}(t₁)…ω_{ε_j}(t_j).
    """
    coeffs: List[mpf] = field(default_factory=list)

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("A power series needs truncation order N >= 1")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: mpf, upto: Optional[int] = None) -> mpf:
        """
        Horner evaluation of the partial sum up to x^upto.

        Args:
            x: Evaluation point
            upto: Highest power kept (default: full order)

        Returns:
            Partial sum at x
        """
        n = self.order if upto is None else min(upto, self.order)
        total = mp.zero
        for k in range(n, -1, -1):
            total = total * x + self.coeffs[k]
        return total

    def tail_bound(self, x: mpf) -> mpf:
        """Geometric estimate |a_N| x^(N+1) / (1-x) of the neglected tail"""
        n = self.order
        return abs(self.coeffs[n]) * x ** (n + 1) / (1 - x)
