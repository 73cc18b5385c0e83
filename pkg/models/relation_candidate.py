"""
RelationCandidate Model
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Dict, List, Tuple

from mpmath import mpf

from models.index import Index


@dataclass(frozen=True)
class RelationCandidate:
    """Integer relation Σ vᵢ Z_c(idxᵢ) ≈ 0 found (or checked) numerically"""
    weight: int
    basis: Tuple[Index, ...]
    coeffs: Tuple[int, ...]
    residuals: Dict[Fraction, mpf] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        """
        - same length for basis and coefficients
        - not the zero vector
        - gcd(coeffs) = 1 (vectors are stored primitive)
        """
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "coeffs", tuple(int(v) for v in self.coeffs))
        if len(self.basis) != len(self.coeffs):
            raise ValueError("basis and coeffs must have the same length")
        if not any(self.coeffs):
            raise ValueError("The zero vector is not a relation")
        if reduce(math.gcd, (abs(v) for v in self.coeffs)) != 1:
            raise ValueError("Relation coefficients must be primitive (gcd 1)")

    @classmethod
    def primitive(cls, weight: int, basis, coeffs, residuals=None) -> "RelationCandidate":
        """Build from any nonzero vector: divide by the gcd, first nonzero entry positive"""
        coeffs = [int(v) for v in coeffs]
        g = reduce(math.gcd, (abs(v) for v in coeffs), 0)
        if g == 0:
            raise ValueError("The zero vector is not a relation")
        first = next(v for v in coeffs if v)
        if first < 0:
            g = -g
        return cls(weight, tuple(basis), tuple(v // g for v in coeffs), dict(residuals or {}))

    @property
    def height(self) -> int:
        return max(abs(v) for v in self.coeffs)

    def as_mapping(self) -> Dict[Index, int]:
        return {idx: v for idx, v in zip(self.basis, self.coeffs) if v}

    def terms(self) -> List[Tuple[int, Index]]:
        return [(v, idx) for idx, v in zip(self.basis, self.coeffs) if v]

    def __str__(self) -> str:
        pieces = []
        for v, idx in self.terms():
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            body = idx.label() if mag == 1 else f"{mag}*{idx.label()}"
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text + " = 0"


@dataclass(frozen=True)
class RelationCheck:
    """Residuals of one relation at fresh parameter values"""
    relation: RelationCandidate
    residuals: Dict[Fraction, mpf]
    threshold: mpf

    @property
    def passed(self) -> bool:
        return all(r < self.threshold for r in self.residuals.values())

    @property
    def max_residual(self) -> mpf:
        return max(self.residuals.values(), default=mpf(0))
