"""
MTV Guess Service - the B - A = A♯B sequence procedure
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from models.errors import SequenceError
from models.sequence_table import ConsistencyReport, SequenceTable

logger = logging.getLogger(__name__)

MIN_SEED = 4
MIN_CHECK_LENGTH = 6


class MtvGuessService:
    """
    Service for the guessed dimensions of the algebra of multiple T-values.

    With B₀ = B₁ = 0 and Bₙ = Aₙ₋₁ + Aₙ₋₂ (n >= 2), the printed table satisfies
        (B - A)_{2k} = 0,    (B - A)_{2k+1} = A_k · B_k,
    so every further term follows from
        A_{2k} = B_{2k},     A_{2k+1} = B_{2k+1} - A_k · B_k.
    """

    @staticmethod
    def b_value(A: Sequence[int], n: int) -> int:
        """Bₙ, taken as 0 for n < 2"""
        if n < 2:
            return 0
        return A[n - 1] + A[n - 2]

    @staticmethod
    def predicted(A: Sequence[int], n: int) -> int:
        """Aₙ as forced by the identity from A₀…Aₙ₋₁"""
        b = MtvGuessService.b_value(A, n)
        if n % 2 == 0:
            return b
        k = (n - 1) // 2
        return b - A[k] * MtvGuessService.b_value(A, k)

    @staticmethod
    def build_table(A: Sequence[int]) -> SequenceTable:
        """Rows A, B, B-A and A♯B as printed (entries below n = 2 left empty)"""
        A = [int(a) for a in A]
        B: List[Optional[int]] = [None, None][: len(A)]
        for n in range(2, len(A)):
            B.append(A[n - 1] + A[n - 2])
        BmA = [None if b is None else b - a for a, b in zip(A, B)]
        AsB = [None if b is None else a * b for a, b in zip(A, B)]
        return SequenceTable(A=A, B=B, BmA=BmA, AsB=AsB)

    @staticmethod
    def check_consistency(A: Sequence[int]) -> ConsistencyReport:
        """
        Check (B-A)_{2k} = 0 and (B-A)_{2k+1} = (A♯B)_k for every n in range.

        Args:
            A: At least six terms

        Returns:
            ConsistencyReport with the first failing n, if any
        """
        A = [int(a) for a in A]
        if len(A) < MIN_CHECK_LENGTH:
            raise SequenceError(f"Need at least {MIN_CHECK_LENGTH} terms, got {len(A)}", index=len(A))
        table = MtvGuessService.build_table(A)
        for n in range(2, len(A)):
            expected = 0 if n % 2 == 0 else A[(n - 1) // 2] * MtvGuessService.b_value(A, (n - 1) // 2)
            found = table.BmA[n]
            if found != expected:
                logger.debug("Identity fails at n = %d: B-A = %d, expected %d", n, found, expected)
                return ConsistencyReport(table, checked_upto=n, first_failure=n, expected=expected, found=found)
        return ConsistencyReport(table, checked_upto=len(A) - 1)

    @staticmethod
    def extend_sequence(seed: Sequence[int], n_terms: int) -> List[int]:
        """
        Extend A by assuming the identity at every order.

        Args:
            seed: Prefix A₀…A_{s-1}, s >= 4, itself satisfying the identity
            n_terms: Length of the result

        Returns:
            A₀…A_{n_terms-1}
        """
        A = [int(a) for a in seed]
        if len(A) < MIN_SEED:
            raise SequenceError(f"Seed needs at least {MIN_SEED} terms, got {len(A)}", index=len(A))
        for n in range(2, len(A)):
            if MtvGuessService.predicted(A, n) != A[n]:
                raise SequenceError(
                    f"Seed violates the identity at n = {n}: "
                    f"expected {MtvGuessService.predicted(A, n)}, got {A[n]}",
                    index=n,
                )
        if n_terms <= len(A):
            return A[:n_terms]
        while len(A) < n_terms:
            A.append(MtvGuessService.predicted(A, len(A)))
        logger.debug("Extended sequence to %d terms, last %d", len(A), A[-1])
        return A

    @staticmethod
    def padovan_dimensions(n_terms: int) -> List[int]:
        """Conjectural MZV dimensions dₙ = dₙ₋₂ + dₙ₋₃ with d = 1, 0, 1, …"""
        d = [1, 0, 1]
        while len(d) < n_terms:
            d.append(d[-2] + d[-3])
        return d[:n_terms]

    @staticmethod
    def generating_series_check(A: Sequence[int]) -> Tuple[bool, Optional[int]]:
        """
        Compare both generating series forms on the computed prefix:
            B = (t + t²)A - t    and    B = A - 1 + t·Diag(A, B),
        where Diag keeps the terms A_k B_k t^{2k} of the product AB.

        Returns:
            (passed, first n where the two forms disagree)
        """
        a = np.array([int(v) for v in A], dtype=object)
        n = len(a)
        shift = np.array([0, 1, 1], dtype=object)
        b = np.convolve(a, shift)[:n]
        b[1] -= 1

        diag = np.zeros(n, dtype=object)
        for k in range((n - 1) // 2 + 1):
            if 2 * k + 1 < n:
                diag[2 * k + 1] = a[k] * b[k]
        other = a + diag
        other[0] -= 1

        mismatch = np.nonzero(b != other)[0]
        if mismatch.size:
            return False, int(mismatch[0])
        return True, None
