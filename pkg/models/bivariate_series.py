"""
BivariateSeries Model
"""

from typing import Dict, Iterator, Optional, Tuple

from mpmath import mp, mpf

Key = Tuple[int, int]


class BivariateSeries:
    """
    Power series in X, Y truncated at total degree `order`.

    Coefficients live in a dict (i, j) -> mpf; everything with i + j > order
    is dropped on construction so sums and products truncate consistently.
    """

    __slots__ = ("order", "_coeffs")

    def __init__(self, order: int, coeffs: Optional[Dict[Key, mpf]] = None):
        if order < 0:
            raise ValueError("order must be >= 0")
        self.order = order
        self._coeffs: Dict[Key, mpf] = {
            (i, j): mpf(v)
            for (i, j), v in (coeffs or {}).items()
            if i >= 0 and j >= 0 and i + j <= order
        }

    @classmethod
    def constant(cls, order: int, value) -> "BivariateSeries":
        return cls(order, {(0, 0): mpf(value)})

    @classmethod
    def linear(cls, order: int, const, x_coeff, y_coeff) -> "BivariateSeries":
        """const + x_coeff·X + y_coeff·Y"""
        return cls(order, {(0, 0): mpf(const), (1, 0): mpf(x_coeff), (0, 1): mpf(y_coeff)})

    def coefficient(self, i: int, j: int) -> mpf:
        return self._coeffs.get((i, j), mp.zero)

    def keys(self) -> Iterator[Key]:
        """All (i, j) with i + j <= order, graded then lexicographic"""
        for total in range(self.order + 1):
            for i in range(total, -1, -1):
                yield (i, total - i)

    def max_abs(self) -> mpf:
        return max((abs(v) for v in self._coeffs.values()), default=mp.zero)

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        out = dict(self._coeffs)
        for key, value in other._coeffs.items():
            out[key] = out.get(key, mp.zero) + value
        return BivariateSeries(order, out)

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries(self.order, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        return self + (-other)

    def scale(self, factor) -> "BivariateSeries":
        factor = mpf(factor)
        return BivariateSeries(self.order, {k: v * factor for k, v in self._coeffs.items()})

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        out: Dict[Key, mpf] = {}
        for (i1, j1), a in self._coeffs.items():
            for (i2, j2), b in other._coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j <= order:
                    out[(i, j)] = out.get((i, j), mp.zero) + a * b
        return BivariateSeries(order, out)

    def exp(self) -> "BivariateSeries":
        """
        exp of a series without constant term, by the truncated exponential sum.

        Returns:
            Σ_{k <= order} S^k / k!
        """
        if self.coefficient(0, 0) != 0:
            raise ValueError("exp() expects a series with zero constant term")
        result = BivariateSeries.constant(self.order, 1)
        term = BivariateSeries.constant(self.order, 1)
        for k in range(1, self.order + 1):
            term = (term * self).scale(mpf(1) / k)
            result = result + term
        return result

    def swap(self) -> "BivariateSeries":
        """Exchange the roles of X and Y"""
        return BivariateSeries(self.order, {(j, i): v for (i, j), v in self._coeffs.items()})

    def __repr__(self) -> str:
        body = ", ".join(
            f"{k}: {mp.nstr(self.coefficient(*k), 12)}" for k in self.keys() if k in self._coeffs
        )
        return f"BivariateSeries(order={self.order}, {{{body}}})"
