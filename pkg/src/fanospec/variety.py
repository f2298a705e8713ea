"""Fano complete intersections in projective space and their classical invariants.

An N-dimensional smooth complete intersection X of hypersurfaces of degrees
(d_1, ..., d_r) in P^{N+r} is Fano exactly when its index

    rho = N + r + 1 - (d_1 + ... + d_r)

is positive; by adjunction c_1(X) = rho*H for the hyperplane class H.  The
invariants computed here are classical: the total Chern class expanded in
powers of H, the topological Euler characteristic, and the dimension of the
primitive part of the even cohomology.  Everything is exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Iterator

from .exactmath import TruncatedSeries, factorial

__all__ = [
    "CompleteIntersection",
    "DelPezzoDimension",
    "InvalidVariety",
    "NegativePrimitiveDim",
    "NonIntegerEuler",
    "NotFano",
    "VarietyInvariants",
    "chern_coefficients",
    "enumerate_fano_cis",
    "euler_characteristic",
    "fano_index",
    "invariants",
    "primitive_dimension",
]


class InvalidVariety(ValueError):
    """Input outside the admitted family of Fano complete intersections."""


class DelPezzoDimension(InvalidVariety):
    """Dimension-2 inputs (del Pezzo surfaces) are outside this family."""


class NotFano(InvalidVariety):
    """The index rho is not positive, so the anticanonical class is not ample."""


class NonIntegerEuler(ArithmeticError):
    """(prod d_i) * c_N failed to be an integer; signals an arithmetic bug."""


class NegativePrimitiveDim(ArithmeticError):
    """chi - (N+1) came out negative for even N; signals an arithmetic bug."""


@dataclass(frozen=True)
class CompleteIntersection:
    """The input datum: dimension N >= 3 and hypersurface degrees, all >= 2.

    Degrees are stored sorted ascending, so two instances are equal exactly
    when their degree multisets agree.
    """

    dim: int
    degrees: tuple[int, ...]

    def __init__(self, dim: int, degrees: Iterable[int]):
        object.__setattr__(self, "dim", int(dim))
        object.__setattr__(self, "degrees", tuple(sorted(int(d) for d in degrees)))
        if self.dim == 2:
            raise DelPezzoDimension("dimension 2 is a del Pezzo surface; need dim >= 3")
        if self.dim < 3:
            raise InvalidVariety(f"dimension must be at least 3, got {self.dim}")
        if not self.degrees:
            raise InvalidVariety("at least one hypersurface degree is required")
        if any(d < 2 for d in self.degrees):
            raise InvalidVariety("every degree must be at least 2 (degree 1 is a linear section)")
        if self.fano_index < 1:
            raise NotFano(f"not Fano: rho = {self.fano_index}")

    @property
    def r(self) -> int:
        """Number of hypersurfaces cutting out X."""
        return len(self.degrees)

    @property
    def fano_index(self) -> int:
        return self.dim + self.r + 1 - sum(self.degrees)

    @property
    def degree_product(self) -> int:
        """d_1 * ... * d_r, the degree of X in P^{N+r} (= integral of H^N)."""
        return math.prod(self.degrees)

    def __str__(self) -> str:
        return f"X_{self.dim}({','.join(str(d) for d in self.degrees)})"


@dataclass(frozen=True)
class VarietyInvariants:
    """Derived integer invariants of one complete intersection.

    big_d = prod d_i^{d_i} and big_f = prod d_i! are the two integers that
    control the whole quantum spectrum.
    """

    rho: int
    big_d: int
    big_f: int
    chern: tuple[Fraction, ...]
    euler: int
    primitive_dim: int


def fano_index(ci: CompleteIntersection) -> int:
    """rho = N + r + 1 - sum(d_i)."""
    return ci.fano_index


@cache
def chern_coefficients(ci: CompleteIntersection) -> tuple[Fraction, ...]:
    """Coefficients (c_0, ..., c_N) of the total Chern class c(X) = sum c_p H^p.

    Adjunction along X in P^{N+r} gives

        sum_p c_p x^p = (1+x)^{N+r+1} / prod_i (1 + d_i x) + O(x^{N+1}),

    and every c_p is an integer (returned as integer-valued fractions).
    """
    n = ci.dim
    numerator = TruncatedSeries.of([1, 1], n) ** (n + ci.r + 1)
    denominator = TruncatedSeries.one(n)
    for d in ci.degrees:
        denominator = denominator * TruncatedSeries.of([1, d], n)
    return (numerator * denominator.inverse()).coefficients


def euler_characteristic(ci: CompleteIntersection) -> int:
    """chi_top(X) = (d_1 ... d_r) * c_N, as an exact integer."""
    value = ci.degree_product * chern_coefficients(ci)[ci.dim]
    if value.denominator != 1:
        raise NonIntegerEuler(f"(prod d_i) * c_N = {value} is not an integer for {ci}")
    return int(value)


def primitive_dimension(ci: CompleteIntersection) -> int:
    """Dimension of the primitive part of the even cohomology.

    For odd N the even primitive part vanishes.  For even N the cohomology
    is all even, so dim H(X) = chi_top(X) and the primitive part has
    dimension chi_top(X) - (N+1).
    """
    if ci.dim % 2 == 1:
        return 0
    value = euler_characteristic(ci) - (ci.dim + 1)
    if value < 0:
        raise NegativePrimitiveDim(f"chi - (N+1) = {value} < 0 for {ci}")
    return value


@cache
def invariants(ci: CompleteIntersection) -> VarietyInvariants:
    """All derived invariants of one instance, computed once."""
    return VarietyInvariants(
        rho=ci.fano_index,
        big_d=math.prod(d**d for d in ci.degrees),
        big_f=math.prod(factorial(d) for d in ci.degrees),
        chern=chern_coefficients(ci),
        euler=euler_characteristic(ci),
        primitive_dim=primitive_dimension(ci),
    )


def enumerate_fano_cis(max_dim: int, max_r: int) -> Iterator[CompleteIntersection]:
    """Every Fano complete intersection with 3 <= dim <= max_dim and r <= max_r.

    Yields in lexicographic (dim, r, degrees) order, degrees sorted
    ascending, no duplicates.  The Fano cutoff sum(d_i) <= dim + r bounds
    each degree by dim - r + 2 once the others take the minimum value 2.
    """
    if max_dim < 3:
        raise ValueError(f"max_dim must be at least 3, got {max_dim}")
    if max_r < 1:
        raise ValueError(f"max_r must be at least 1, got {max_r}")
    for dim in range(3, max_dim + 1):
        for r in range(1, max_r + 1):
            top = dim - r + 2
            if top < 2:
                break
            for degrees in itertools.combinations_with_replacement(range(2, top + 1), r):
                if sum(degrees) <= dim + r:
                    yield CompleteIntersection(dim, degrees)
