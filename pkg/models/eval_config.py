"""
EvalConfig Model
"""

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Union

CutSpec = Union[str, Fraction]

FIXED_CUT = "fixed"
DEFAULT_C_MAX = Fraction(19, 20)


def digits_to_bits(digits: int) -> int:
    """Decimal digits -> binary precision (rounded up)"""
    return int(math.ceil(digits * math.log2(10)))


@dataclass(frozen=True)
class EvalConfig:
    """Settings for one evaluation of Z_c"""
    c: Fraction
    precision: int = 200
    cut: CutSpec = FIXED_CUT
    guard_bits: int = 10
    c_max: Fraction = DEFAULT_C_MAX
    max_doublings: int = 6
    warn_cut: float = 0.8

    def __post_init__(self):
        """
        - c < 1 strictly and c <= c_max (convergence degrades as c -> 1)
        - precision >= 64 bits
        - explicit cut strictly inside (0, 1)
        """
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c >= 1:
            raise ValueError(f"c must be < 1, got {self.c}")
        if self.c > self.c_max:
            raise ValueError(f"c = {self.c} exceeds the supported maximum {self.c_max}")
        if self.precision < 64:
            raise ValueError(f"precision must be >= 64 bits, got {self.precision}")
        if self.cut != FIXED_CUT:
            cut = Fraction(self.cut)
            if not 0 < cut < 1:
                raise ValueError(f"cut must lie in (0, 1), got {cut}")
            object.__setattr__(self, "cut", cut)
        if self.guard_bits < 0:
            raise ValueError("guard_bits must be >= 0")

    @property
    def uses_fixed_point(self) -> bool:
        return self.cut == FIXED_CUT

    @property
    def working_precision(self) -> int:
        """Bits used internally: target + guard + rounding headroom"""
        return self.precision + self.guard_bits + 24

    def with_c(self, c: Fraction) -> "EvalConfig":
        return replace(self, c=Fraction(c))

    def with_cut(self, cut: CutSpec) -> "EvalConfig":
        return replace(self, cut=cut)

    @classmethod
    def from_digits(cls, c, digits: int, **kwargs) -> "EvalConfig":
        """
        Args:
            c: Parameter (exact rational)
            digits: Requested decimal digits

        Returns:
            EvalConfig with precision = ceil(digits·log2(10)) bits
        """
        return cls(c=Fraction(c), precision=max(64, digits_to_bits(digits)), **kwargs)
