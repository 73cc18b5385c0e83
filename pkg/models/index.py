"""
Index Model
"""

import re
from dataclasses import dataclass
from typing import Tuple

_WRAPPED = re.compile(r"^\s*Z(?:_c)?\s*\((.*)\)\s*$")


@dataclass(frozen=True)
class Index:
    """Composition (k₁,…,k_r) used as the argument of Z_c"""
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(k) for k in self.parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def depth(self) -> int:
        return len(self.parts)

    def is_admissible(self) -> bool:
        """r >= 1, every k_i >= 1 and k_r >= 2"""
        return (
            len(self.parts) >= 1
            and all(k >= 1 for k in self.parts)
            and self.parts[-1] >= 2
        )

    def __str__(self) -> str:
        return ",".join(str(k) for k in self.parts)

    def label(self) -> str:
        """Text used in formulas, e.g. Z(1,4)"""
        return f"Z({self})"

    @classmethod
    def parse(cls, text: str) -> "Index":
        """
        Parse index text.

        Accepts "1,1,3" as well as the wrapped form "Z(1,1,3)".

        Args:
            text: Comma separated positive integers

        Returns:
            Index (admissibility is not checked here)
        """
        match = _WRAPPED.match(text)
        body = match.group(1) if match else text
        pieces = [p.strip() for p in body.split(",") if p.strip()]
        if not pieces:
            raise ValueError(f"Empty index text: {text!r}")
        try:
            parts = tuple(int(p) for p in pieces)
        except ValueError:
            raise ValueError(f"Index parts must be integers: {text!r}") from None
        return cls(parts)
