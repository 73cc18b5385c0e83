"""
RationalMatrix Model - incremental sparse echelon form over Q
"""

import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Hashable, List, Mapping, Optional, Sequence

SparseRow = Dict[int, int]


def _primitive(row: SparseRow) -> SparseRow:
    """Divide by the content and make the leading entry positive"""
    if not row:
        return row
    g = reduce(math.gcd, (abs(v) for v in row.values()))
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g == 1:
        return row
    return {k: v // g for k, v in row.items()}


def _to_integer_row(row: Mapping[int, Fraction]) -> SparseRow:
    denominators = [Fraction(v).denominator for v in row.values() if v != 0]
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), denominators, 1)
    out = {}
    for k, v in row.items():
        v = Fraction(v) * lcm
        if v != 0:
            out[k] = int(v)
    return out


class RationalMatrix:
    """
    Row space of rational vectors over a fixed ordered basis.

    Rows are cleared of denominators and kept primitive (content 1), and the
    elimination is fraction-free: a new row r is combined with the pivot row p
    of its leading column as p[lead]·r - r[lead]·p. The leading (smallest)
    column of each stored row is its pivot, so rank never depends on row order.
    """

    def __init__(self, columns: Sequence[Hashable]):
        self.columns: List[Hashable] = list(columns)
        self.column_index: Dict[Hashable, int] = {c: i for i, c in enumerate(self.columns)}
        if len(self.column_index) != len(self.columns):
            raise ValueError("Duplicate column labels")
        self._pivots: Dict[int, SparseRow] = {}

    @property
    def ncols(self) -> int:
        return len(self.columns)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def pivot_columns(self) -> List[Hashable]:
        return [self.columns[i] for i in sorted(self._pivots)]

    def free_columns(self) -> List[Hashable]:
        """Columns without a pivot; they span a complement of the row space"""
        return [c for i, c in enumerate(self.columns) if i not in self._pivots]

    def _reduce_integer(self, row: SparseRow) -> SparseRow:
        row = _primitive(row)
        while row:
            lead = min(row)
            pivot = self._pivots.get(lead)
            if pivot is None:
                return row
            a, b = pivot[lead], row[lead]
            combined = {k: a * v for k, v in row.items()}
            for k, v in pivot.items():
                value = combined.get(k, 0) - b * v
                if value:
                    combined[k] = value
                else:
                    combined.pop(k, None)
            row = _primitive(combined)
        return row

    def add_row(self, row: Mapping[Hashable, Fraction]) -> bool:
        """
        Insert a row given as {column label: coefficient}.

        Args:
            row: Sparse rational vector

        Returns:
            True if the row increased the rank
        """
        indexed = {self.column_index[c]: v for c, v in row.items() if v != 0}
        reduced = self._reduce_integer(_to_integer_row(indexed))
        if not reduced:
            return False
        self._pivots[min(reduced)] = reduced
        return True

    def add_rows(self, rows: Sequence[Mapping[Hashable, Fraction]], sort_by_sparsity: bool = True) -> int:
        """Insert many rows (sparsest first); returns how many raised the rank"""
        ordered = sorted(rows, key=len) if sort_by_sparsity else rows
        return sum(1 for row in ordered if self.add_row(row))

    def contains(self, row: Mapping[Hashable, Fraction]) -> bool:
        """Is the vector in the current row space?"""
        indexed = {self.column_index[c]: v for c, v in row.items() if v != 0}
        return not self._reduce_integer(_to_integer_row(indexed))

    def normal_form(self, row: Mapping[Hashable, Fraction]) -> Dict[Hashable, Fraction]:
        """
        Reduce a vector modulo the row space.

        Columns are eliminated in increasing order, so the result is supported on
        free columns only and does not depend on how the space was built.

        Returns:
            {free column label: coefficient}
        """
        vec: Dict[int, Fraction] = {
            self.column_index[c]: Fraction(v) for c, v in row.items() if v != 0
        }
        for col in sorted(self._pivots):
            value = vec.get(col)
            if not value:
                continue
            pivot = self._pivots[col]
            factor = value / pivot[col]
            for k, v in pivot.items():
                updated = vec.get(k, Fraction(0)) - factor * v
                if updated:
                    vec[k] = updated
                else:
                    vec.pop(k, None)
        return {self.columns[k]: v for k, v in sorted(vec.items())}

    def rows(self) -> List[Dict[Hashable, int]]:
        return [
            {self.columns[k]: v for k, v in sorted(self._pivots[p].items())}
            for p in sorted(self._pivots)
        ]

    def copy(self) -> "RationalMatrix":
        clone = RationalMatrix(self.columns)
        clone._pivots = {k: dict(v) for k, v in self._pivots.items()}
        return clone


def rank_of(rows: Sequence[Mapping[Hashable, Fraction]], columns: Optional[Sequence[Hashable]] = None) -> int:
    """Rank of a list of sparse rows (columns inferred when omitted)"""
    if columns is None:
        columns = sorted({c for row in rows for c in row}, key=repr)
    matrix = RationalMatrix(columns)
    return matrix.add_rows(rows)
