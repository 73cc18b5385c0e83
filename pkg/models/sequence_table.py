"""
SequenceTable Model
"""

from dataclasses import dataclass
from typing import List, Optional


@dataclass(frozen=True)
class SequenceTable:
    """
    Rows A, B, B-A and A♯B, all indexed from n = 0.

    B_n = A_{n-1} + A_{n-2} and A♯B = A·B columnwise are only defined for
    n >= 2; lower entries are None, as in the printed table.
    """
    A: List[int]
    B: List[Optional[int]]
    BmA: List[Optional[int]]
    AsB: List[Optional[int]]

    def __len__(self) -> int:
        return len(self.A)

    def rows(self):
        return {"A": self.A, "B": self.B, "B-A": self.BmA, "A#B": self.AsB}


@dataclass
class ConsistencyReport:
    """
    Result of checking B - A against A♯B with one 0 inserted between terms.

    first_failure is the first n where the identity breaks, or None.
    """
    table: SequenceTable
    checked_upto: int
    first_failure: Optional[int] = None
    expected: Optional[int] = None
    found: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.first_failure is None
