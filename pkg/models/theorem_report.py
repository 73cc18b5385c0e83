"""
TheoremReport Model
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from mpmath import mpf


@dataclass(frozen=True)
class CoefficientCheck:
    """One coefficient of X^i Y^j compared on both sides"""
    i: int
    j: int
    lhs: mpf
    rhs: mpf

    @property
    def discrepancy(self) -> mpf:
        return abs(self.lhs - self.rhs)


@dataclass
class TheoremReport:
    """
    Coefficient-wise comparison of two truncated bivariate series.

    Attributes:
        name: Which identity was checked
        c: Parameter value
        order: Truncation degree
        precision: Bits
        tolerance: Acceptance bound on every discrepancy
        path: How the hypergeometric factor was summed ("gauss" or "pfaff")
        checks: One entry per coefficient
    """
    name: str
    c: Fraction
    order: int
    precision: int
    tolerance: mpf
    path: str = ""
    checks: List[CoefficientCheck] = field(default_factory=list)

    @property
    def max_discrepancy(self) -> mpf:
        return max((chk.discrepancy for chk in self.checks), default=mpf(0))

    @property
    def worst(self) -> Optional[CoefficientCheck]:
        if not self.checks:
            return None
        return max(self.checks, key=lambda chk: chk.discrepancy)

    @property
    def failures(self) -> List[CoefficientCheck]:
        return [chk for chk in self.checks if chk.discrepancy > self.tolerance]

    @property
    def passed(self) -> bool:
        return not self.failures

    def first_failure(self) -> Optional[Tuple[int, int]]:
        failures = self.failures
        return (failures[0].i, failures[0].j) if failures else None
