"""Degree-one Gromov-Witten invariants with ambient insertions.

The single quantum input is Givental's mirror formula for the one-point
genus-zero descendant series in curve degree one.  Every other quantity in
this module is a finite exact combination of those one-point values: the
two-point reductions follow the Lee-Pandharipande divisor relations, and
the genus-one value comes from the standard obstruction-bundle evaluation
over a point times the genus-one moduli curve.

Only ambient-insertion quantities are exposed.  Invariants with primitive
insertions are never computed directly here; downstream code determines the
single primitive scalar from these ambient values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .exactmath import TruncatedSeries, binomial, factorial
from .variety import CompleteIntersection, chern_coefficients

__all__ = [
    "IndexRange",
    "MirrorCoefficients",
    "MirrorNormalization",
    "chern_descendant_combination",
    "genus_one_one_point_H",
    "mirror_coefficients",
    "one_point_descendant",
    "two_point_pure",
]


class MirrorNormalization(ArithmeticError):
    """I_0 came out nonzero; signals an arithmetic bug."""


class IndexRange(IndexError):
    """Descendant index outside the range where the mirror identification holds."""


@dataclass(frozen=True)
class MirrorCoefficients:
    """The one-point series (I_0, ..., I_N), with I_0 = 0."""

    values: tuple[Fraction, ...]


@cache
def mirror_coefficients(ci: CompleteIntersection) -> MirrorCoefficients:
    """Expand the degree-one one-point generating function to order N.

    The coefficients I_a are defined by

        (d_1...d_r)(d_1!...d_r!) * [ prod_i prod_{m=1}^{d_i} (1 + (d_i/m) x)
                                     / (1+x)^{N+r+1}  -  1 ]  =  sum_a I_a x^a,

    and by the mirror formula I_a = <tau_{a-1}(H^{N-a})>_{0,1} for
    0 <= a <= N.  The bracket kills the constant term, so I_0 = 0.
    """
    n = ci.dim
    numerator = TruncatedSeries.one(n)
    for d in ci.degrees:
        for m in range(1, d + 1):
            numerator = numerator * TruncatedSeries.of([1, Fraction(d, m)], n)
    denominator = TruncatedSeries.of([1, 1], n) ** (n + ci.r + 1)
    bracket = numerator * denominator.inverse() - TruncatedSeries.one(n)
    scale = ci.degree_product * math.prod(factorial(d) for d in ci.degrees)
    values = tuple(scale * c for c in bracket.coefficients)
    if values[0] != 0:
        raise MirrorNormalization(f"I_0 = {values[0]} for {ci}, expected 0")
    return MirrorCoefficients(values)


def one_point_descendant(ci: CompleteIntersection, a: int) -> Fraction:
    """I_a = <tau_{a-1}(H^{N-a})>_{0,1}, valid only for 0 <= a <= N."""
    if a < 0 or a > ci.dim:
        raise IndexRange(f"one-point index {a} outside [0, {ci.dim}]")
    return mirror_coefficients(ci).values[a]


def two_point_pure(ci: CompleteIntersection, i: int, a: int) -> Fraction:
    """The two-point invariant <tau_0(H^i) tau_a(H^{N-i-a})>_{0,1}.

    Repeated application of the divisor relations collapses it to

        sum_{p=0}^{i} C(i, p) * I_{a+p}.
    """
    if i < 0 or a < 0 or i + a > ci.dim:
        raise IndexRange(f"two-point indices (i={i}, a={a}) outside 0 <= i+a <= {ci.dim}")
    values = mirror_coefficients(ci).values
    return sum((binomial(i, p) * values[a + p] for p in range(i + 1)), Fraction(0))


def chern_descendant_combination(ci: CompleteIntersection, p: int) -> Fraction:
    """<tau_p(c_{N-2-p}(X)) tau_1(H)>_{0,1} + <tau_p(c_{N-2-p}(X) cup H)>_{0,1}.

    One divisor-relation step plus the divisor axiom turn the pair into
    -<tau_{p+1}(c_{N-2-p}(X))>_{0,1}; since c_{N-2-p}(X) is c_{N-2-p} times
    H^{N-2-p}, the value is the exact product -c_{N-2-p} * I_{p+2}.
    """
    if p < 0 or p > ci.dim - 2:
        raise IndexRange(f"chern two-point index {p} outside [0, {ci.dim - 2}]")
    c = chern_coefficients(ci)[ci.dim - 2 - p]
    return -c * one_point_descendant(ci, p + 2)


def genus_one_one_point_H(ci: CompleteIntersection) -> Fraction:
    """The degree-zero genus-one invariant <H>_{1,0} = -(1/24) int_X H cup c_{N-1}(X).

    With int_X H^N = d_1...d_r this evaluates to -(1/24)(d_1...d_r) c_{N-1},
    an exact rational with denominator dividing 24.
    """
    c = chern_coefficients(ci)[ci.dim - 1]
    return -Fraction(1, 24) * ci.degree_product * c
