"""Exact arithmetic primitives: big integers, rationals, truncated power series.

Every coefficient is a :class:`fractions.Fraction`, so all operations below
are exact; there is no floating point anywhere in this package's
mathematical core.  A :class:`TruncatedSeries` carries a fixed truncation
order: binary operations truncate to the smaller operand order, and reading
a coefficient beyond the order raises :class:`OrderExceeded` instead of
silently returning zero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

__all__ = [
    "OrderExceeded",
    "TruncatedSeries",
    "ZeroConstantTerm",
    "binomial",
    "coeff",
    "factorial",
    "series_inverse",
    "series_mul",
    "series_pow",
]

RationalLike = Union[Fraction, int]


class ZeroConstantTerm(ZeroDivisionError):
    """Inverting a series whose constant term vanishes."""


class OrderExceeded(IndexError):
    """Reading a coefficient beyond the truncation order."""


def factorial(n: int) -> int:
    """n! as an exact integer."""
    if n < 0:
        raise ValueError(f"factorial needs n >= 0, got {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k); zero when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class TruncatedSeries:
    """A power series in one variable, truncated at a fixed order.

    sum_{p=0}^{K} a_p x^p is stored densely as (a_0, ..., a_K).  Instances
    are immutable; every operation returns a fresh series.  Products are
    plain quadratic Cauchy products, which is all the tiny orders used here
    ever need.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[RationalLike]):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a truncated series needs at least a constant term")
        self._coeffs = coeffs

    @classmethod
    def of(cls, coefficients: Iterable[RationalLike], order: int) -> "TruncatedSeries":
        """Series with the given low-order coefficients, zero-padded to `order`."""
        coeffs = list(coefficients)
        if order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients do not fit in order {order}")
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        return cls(coeffs)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.of([1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, k: int) -> Fraction:
        """The x^k coefficient; loud error past the truncation order."""
        if k < 0:
            raise ValueError(f"coefficient index must be non-negative, got {k}")
        if k > self.order:
            raise OrderExceeded(f"x^{k} of a series truncated at order {self.order}")
        return self._coeffs[k]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise OrderExceeded(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse to the same order.

        b_0 = 1/a_0 and b_k = -(1/a_0) sum_{j=1}^{k} a_j b_{k-j}.
        """
        a = self._coeffs
        if a[0] == 0:
            raise ZeroConstantTerm("series with zero constant term has no inverse")
        lead = 1 / a[0]
        b = [lead]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += a[j] * b[k - j]
            b.append(-lead * acc)
        return TruncatedSeries(b)

    def __mul__(self, other: "TruncatedSeries | RationalLike") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            k_max = min(self.order, other.order)
            a, b = self._coeffs, other._coeffs
            out = [Fraction(0)] * (k_max + 1)
            for i in range(k_max + 1):
                ai = a[i]
                if ai == 0:
                    continue
                for j in range(k_max - i + 1):
                    out[i + j] += ai * b[j]
            return TruncatedSeries(out)
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        k_max = min(self.order, other.order)
        return TruncatedSeries(
            self._coeffs[i] + other._coeffs[i] for i in range(k_max + 1)
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self._coeffs)

    def __pow__(self, exponent: int) -> "TruncatedSeries":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"series exponent must be a non-negative integer, got {exponent}")
        result = TruncatedSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"TruncatedSeries([{body}])"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to min(order(a), order(b))."""
    return a * b


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Inverse series b with a*b = 1 up to the order of a."""
    return a.inverse()


def series_pow(a: TruncatedSeries, exponent: int) -> TruncatedSeries:
    """a raised to a non-negative integer power, exactly."""
    return a**exponent


def coeff(a: TruncatedSeries, k: int) -> Fraction:
    """The x^k coefficient of a; raises OrderExceeded when k > order(a)."""
    return a.coeff(k)
