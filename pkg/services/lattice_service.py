"""
Lattice Service - LLL reduction of integer bases
"""

import logging
from fractions import Fraction
from typing import List, Sequence

from sympy import ZZ, QQ
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

try:
    import fpylll
except ImportError:  # optional accelerator
    fpylll = None

DEFAULT_DELTA = Fraction(99, 100)


class LatticeService:
    """
    Service for lattice reduction.

    fpylll is used when it is importable; otherwise the exact LLL of sympy's
    DomainMatrix over ZZ. Both are deterministic for a given input.
    """

    @staticmethod
    def backend() -> str:
        return "fpylll" if fpylll is not None else "sympy"

    @staticmethod
    def reduce(rows: Sequence[Sequence[int]], delta: Fraction = DEFAULT_DELTA) -> List[List[int]]:
        """
        LLL-reduce a basis given as integer rows.

        Args:
            rows: Linearly independent integer vectors
            delta: Lovász parameter in (1/4, 1]

        Returns:
            Reduced basis, shortest vectors first
        """
        matrix = [[int(v) for v in row] for row in rows]
        if not matrix:
            return []
        n, m = len(matrix), len(matrix[0])
        logger.debug("LLL on %d x %d lattice with %s", n, m, LatticeService.backend())

        if fpylll is not None:
            basis = fpylll.IntegerMatrix.from_matrix(matrix)
            fpylll.LLL.reduction(basis, delta=float(delta))
            out = [[0] * basis.ncols for _ in range(basis.nrows)]
            basis.to_matrix(out)
            return [[int(v) for v in row] for row in out]

        dm = DomainMatrix([[ZZ(v) for v in row] for row in matrix], (n, m), ZZ)
        reduced = dm.lll(delta=QQ(delta.numerator, delta.denominator))
        return [[int(v) for v in row] for row in reduced.to_Matrix().tolist()]
