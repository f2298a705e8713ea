"""The exact spectrum of quantum multiplication by the first Chern class.

On the ambient subalgebra the spectrum follows from the quantum hyperplane
relation: with D = prod d_i^{d_i} and F = prod d_i!,

    rho > 1:   H^{*(N+1)} = D * H^{*(N+1-rho)},
    rho = 1:   (H+F)^{*(N+1)} = D * (H+F)^{*N}.

Eigenvalues are kept symbolic (integers or scaled roots of unity), and all
modulus comparisons are exact integer comparisons of cross powers.  On the
primitive part, (c_1 *_0) acts by 0 when rho > 1 and by a single scalar
when rho = 1 and N is even; that scalar is computed by three independent
routes and cross-checked against the closed form -F.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .exactmath import TruncatedSeries, binomial, factorial
from .gw import (
    chern_descendant_combination,
    genus_one_one_point_H,
    mirror_coefficients,
    one_point_descendant,
    two_point_pure,
)
from .variety import (
    CompleteIntersection,
    chern_coefficients,
    invariants,
    primitive_dimension,
)

__all__ = [
    "Eigenvalue",
    "ExactInteger",
    "IntegerModulus",
    "LambdaMismatch",
    "Modulus",
    "NotCaseThree",
    "RootModulus",
    "RootScaled",
    "SpectrumReport",
    "ZeroPrimitiveDim",
    "ambient_spectrum",
    "characteristic_polynomial",
    "companion_matrix",
    "compare_moduli",
    "compare_modulus_to_rational",
    "eigenvalue_modulus",
    "equals_positive_real",
    "full_spectrum",
    "lambda_closed_form",
    "lambda_via_series",
    "lambda_via_sum",
    "lambda_via_twopoint",
    "spectral_radius",
]


class NotCaseThree(ValueError):
    """A primitive-scalar route was called outside the even-N, rho = 1 case."""


class ZeroPrimitiveDim(ArithmeticError):
    """Primitive dimension vanished where a primitive scalar was requested."""


class LambdaMismatch(ArithmeticError):
    """The independent primitive-scalar routes disagree; signals a bug."""


@dataclass(frozen=True)
class ExactInteger:
    """An eigenvalue that is an exact integer."""

    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class RootScaled:
    """The eigenvalue root_order * radicand^(1/root_order) * e^(2*pi*i*phase/root_order)."""

    root_order: int
    radicand: int
    phase: int

    def __post_init__(self):
        if self.root_order < 2:
            raise ValueError("root_order must be at least 2")
        if self.radicand <= 0:
            raise ValueError("radicand must be positive")
        object.__setattr__(self, "phase", self.phase % self.root_order)

    def __str__(self) -> str:
        base = f"{self.root_order}*{self.radicand}^(1/{self.root_order})"
        if self.phase == 0:
            return base
        return f"{base}*zeta{self.root_order}^{self.phase}"


Eigenvalue = Union[ExactInteger, RootScaled]


@dataclass(frozen=True)
class IntegerModulus:
    """An eigenvalue modulus that is an exact non-negative integer."""

    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class RootModulus:
    """The positive real root_order * radicand^(1/root_order) (not an integer)."""

    root_order: int
    radicand: int

    def __str__(self) -> str:
        return f"{self.root_order}*{self.radicand}^(1/{self.root_order})"


Modulus = Union[IntegerModulus, RootModulus]


def _floor_nth_root(value: int, k: int) -> int:
    """Largest integer x with x^k <= value, by Newton iteration on integers."""
    if value < 0 or k < 1:
        raise ValueError("need value >= 0 and k >= 1")
    if value == 0:
        return 0
    x = 1 << (-(-value.bit_length() // k))
    while True:
        y = ((k - 1) * x + value // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _modulus_key(m: Modulus) -> tuple[int, int]:
    """(order, power) with modulus^order = power; the basis for exact comparison."""
    if isinstance(m, IntegerModulus):
        return 1, m.value
    return m.root_order, m.root_order**m.root_order * m.radicand


def eigenvalue_modulus(eig: Eigenvalue) -> Modulus:
    """Exact modulus of an eigenvalue, normalized to an integer when it is one."""
    if isinstance(eig, ExactInteger):
        return IntegerModulus(abs(eig.value))
    power = eig.root_order**eig.root_order * eig.radicand
    root = _floor_nth_root(power, eig.root_order)
    if root**eig.root_order == power:
        return IntegerModulus(root)
    return RootModulus(eig.root_order, eig.radicand)


def compare_moduli(a: Modulus, b: Modulus) -> int:
    """Sign of a - b, decided by comparing cross powers exactly."""
    order_a, power_a = _modulus_key(a)
    order_b, power_b = _modulus_key(b)
    lhs = power_a**order_b
    rhs = power_b**order_a
    return (lhs > rhs) - (lhs < rhs)


def compare_modulus_to_rational(m: Modulus, q: Fraction | int) -> int:
    """Sign of m - q for a rational q, via m^order vs q^order."""
    q = Fraction(q)
    if q < 0:
        return 1
    order, power = _modulus_key(m)
    rhs = q**order
    return (power > rhs) - (power < rhs)


def equals_positive_real(eig: Eigenvalue, m: Modulus) -> bool:
    """Whether the eigenvalue equals the positive real number of modulus m."""
    if isinstance(eig, ExactInteger):
        return eig.value > 0 and compare_moduli(IntegerModulus(eig.value), m) == 0
    return eig.phase == 0 and compare_moduli(eigenvalue_modulus(eig), m) == 0


@dataclass(frozen=True)
class SpectrumReport:
    """The assembled exact spectrum of (c_1(X) *_0) on H(X)."""

    instance: CompleteIntersection
    ambient: tuple[tuple[Eigenvalue, int], ...]
    primitive: tuple[Eigenvalue, int] | None
    radius: Modulus
    lambda_value: int | None
    assumptions: tuple[str, ...] = ()

    @property
    def entries(self) -> tuple[tuple[Eigenvalue, int], ...]:
        if self.primitive is None:
            return self.ambient
        return self.ambient + (self.primitive,)

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.entries)


PRIMITIVE_BLOCK_ASSUMPTION = (
    "primitive block of (c1 *_0) treated as the scalar lambda times the identity; "
    "off-diagonal two-point vanishing is an input, not re-verified here"
)


def ambient_spectrum(ci: CompleteIntersection) -> tuple[tuple[Eigenvalue, int], ...]:
    """Eigenvalues of (c_1 *_0) on the ambient part, with multiplicities.

    The quantum hyperplane relation makes the ambient part a cyclic algebra,
    so multiplicities are those of the companion-matrix characteristic
    polynomial: u^{N+1-rho} (u^rho - rho^rho D) for rho > 1, and
    (u+F)^N (u - (D-F)) for rho = 1.
    """
    inv = invariants(ci)
    n = ci.dim
    if inv.rho > 1:
        eigs: list[tuple[Eigenvalue, int]] = [(ExactInteger(0), n + 1 - inv.rho)]
        eigs.extend(
            (RootScaled(inv.rho, inv.big_d, k), 1) for k in range(inv.rho)
        )
        return tuple(eigs)
    return (
        (ExactInteger(-inv.big_f), n),
        (ExactInteger(inv.big_d - inv.big_f), 1),
    )


def companion_matrix(ci: CompleteIntersection) -> tuple[tuple[int, ...], ...]:
    """Exact integer matrix of (c_1(X) *_0) on the ambient part.

    For rho > 1 the basis is the quantum powers H^{*0}, ..., H^{*N}, where
    multiplication by H is the companion matrix of t^{N+1} - D t^{N+1-rho},
    and c_1 = rho*H scales it by rho.  For rho = 1 the basis is the quantum
    powers of H + F, where multiplication by H + F is the companion matrix
    of s^{N+1} - D s^N and c_1 = H acts as that matrix minus F times the
    identity.
    """
    inv = invariants(ci)
    size = ci.dim + 1
    rows = [[0] * size for _ in range(size)]
    for i in range(size - 1):
        rows[i + 1][i] = 1
    if inv.rho > 1:
        rows[size - inv.rho][size - 1] = inv.big_d
        rows = [[inv.rho * entry for entry in row] for row in rows]
    else:
        rows[size - 1][size - 1] = inv.big_d
        for i in range(size):
            rows[i][i] -= inv.big_f
    return tuple(tuple(row) for row in rows)


def characteristic_polynomial(matrix: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Coefficients, ascending, of det(u*I - M) for a square integer matrix.

    Faddeev-LeVerrier recurrence; every division is exact and checked.
    """
    n = len(matrix)
    rows = [list(row) for row in matrix]
    if any(len(row) != n for row in rows):
        raise ValueError("matrix must be square")
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        product = [
            [sum(rows[i][t] * work[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        trace = sum(product[i][i] for i in range(n))
        quotient, remainder = divmod(-trace, k)
        if remainder:
            raise ArithmeticError("non-integer characteristic coefficient")
        coeffs[n - k] = quotient
        for i in range(n):
            product[i][i] += quotient
        work = product
    return tuple(coeffs)


def _require_case_three(ci: CompleteIntersection) -> None:
    if ci.dim % 2 == 1 or ci.fano_index != 1:
        raise NotCaseThree(
            f"{ci} has dim {ci.dim} and rho {ci.fano_index}; the primitive "
            "scalar routes need even dimension and rho = 1"
        )


def lambda_closed_form(ci: CompleteIntersection) -> int:
    """The primitive scalar in closed form: -(d_1! ... d_r!)."""
    _require_case_three(ci)
    return -invariants(ci).big_f


def lambda_via_sum(ci: CompleteIntersection) -> Fraction:
    """Primitive scalar from the collapsed one-point sum.

    N' * lambda = sum_{p=0}^{N} [ c_{N-p} - C(N+1, p+1)/(d_1...d_r) ] * I_p,
    where the binomial weight is the hockey-stick collapse of the double sum
    of two-point terms (I_0 = 0 absorbs the boundary).
    """
    _require_case_three(ci)
    n = ci.dim
    n_prime = primitive_dimension(ci)
    if n_prime == 0:
        raise ZeroPrimitiveDim(f"primitive dimension is 0 for {ci}")
    chern = chern_coefficients(ci)
    values = mirror_coefficients(ci).values
    prod_d = ci.degree_product
    total = sum(
        ((chern[n - p] - Fraction(binomial(n + 1, p + 1), prod_d)) * values[p] for p in range(n + 1)),
        Fraction(0),
    )
    return total / n_prime


def _hyperplane_bracket_series(ci: CompleteIntersection, order: int) -> TruncatedSeries:
    """(1+x)^{N+r+1} / prod_i (1 + d_i x)  -  (1+x)^{N+1} / (d_1...d_r), truncated."""
    one_plus_x = TruncatedSeries.of([1, 1], order)
    denominator = TruncatedSeries.one(order)
    for d in ci.degrees:
        denominator = denominator * TruncatedSeries.of([1, d], order)
    left = one_plus_x ** (ci.dim + ci.r + 1) * denominator.inverse()
    right = one_plus_x ** (ci.dim + 1) * Fraction(1, ci.degree_product)
    return left - right


def _mirror_bracket_series(ci: CompleteIntersection, order: int) -> TruncatedSeries:
    """(d_1...d_r)(d_1!...d_r!) [ prod_{i,m} (1 + (d_i/m) x) / (1+x)^{N+r+1} - 1 ], truncated."""
    numerator = TruncatedSeries.one(order)
    scale = ci.degree_product
    for d in ci.degrees:
        scale *= factorial(d)
        for m in range(1, d + 1):
            numerator = numerator * TruncatedSeries.of([1, Fraction(d, m)], order)
    denominator = TruncatedSeries.of([1, 1], order) ** (ci.dim + ci.r + 1)
    bracket = numerator * denominator.inverse() - TruncatedSeries.one(order)
    return bracket * scale


def lambda_via_series(ci: CompleteIntersection) -> Fraction:
    """Primitive scalar from the raw product of the two bracket series.

    N' * lambda is the x^N coefficient of

        [ (1+x)^{N+r+1}/prod(1+d_i x) - (1+x)^{N+1}/(d_1...d_r) ]
        * (d_1...d_r)(d_1!...d_r!) [ prod_{i,m}(1 + (d_i/m) x)/(1+x)^{N+r+1} - 1 ],

    multiplied out as truncated series with no algebraic simplification.
    """
    _require_case_three(ci)
    n = ci.dim
    n_prime = primitive_dimension(ci)
    if n_prime == 0:
        raise ZeroPrimitiveDim(f"primitive dimension is 0 for {ci}")
    product = _hyperplane_bracket_series(ci, n) * _mirror_bracket_series(ci, n)
    return product.coeff(n) / n_prime


def lambda_via_twopoint(ci: CompleteIntersection) -> Fraction:
    """Primitive scalar from the genus-one reduction, term by term.

    N' * lambda = - sum_{p=0}^{N-2} [ <tau_p(c_{N-2-p}) tau_1(H)> + <tau_p(c_{N-2-p} cup H)> ]
                  + (1/(d_1...d_r)) <H^{N-1}>_{0,1} * int_X H cup c_{N-1}(X)
                  - (1/(d_1...d_r)) sum_{i=0}^{N} <H^i, H^{N-i}>_{0,1},

    with every bracket evaluated through the two-point reductions and the
    cup integral recovered from the genus-one one-point value.
    """
    _require_case_three(ci)
    n = ci.dim
    n_prime = primitive_dimension(ci)
    if n_prime == 0:
        raise ZeroPrimitiveDim(f"primitive dimension is 0 for {ci}")
    prod_d = Fraction(ci.degree_product)
    paired = -sum((chern_descendant_combination(ci, p) for p in range(n - 1)), Fraction(0))
    cup_integral = -24 * genus_one_one_point_H(ci)
    middle = one_point_descendant(ci, 1) * cup_integral / prod_d
    diagonal = -sum((two_point_pure(ci, i, 0) for i in range(n + 1)), Fraction(0)) / prod_d
    return (paired + middle + diagonal) / n_prime


def _max_modulus(entries: Sequence[tuple[Eigenvalue, int]]) -> Modulus:
    best = eigenvalue_modulus(entries[0][0])
    for eig, _ in entries[1:]:
        candidate = eigenvalue_modulus(eig)
        if compare_moduli(candidate, best) > 0:
            best = candidate
    return best


def full_spectrum(ci: CompleteIntersection) -> SpectrumReport:
    """Exact spectrum of (c_1(X) *_0) on all of H(X).

    The primitive part contributes 0 with multiplicity N' when rho > 1 and
    N is even, and the scalar lambda with multiplicity N' when rho = 1 and
    N is even.  In the latter case all three lambda routes are run and must
    agree with the closed form -F, else LambdaMismatch is raised.
    """
    inv = invariants(ci)
    ambient = ambient_spectrum(ci)
    primitive: tuple[Eigenvalue, int] | None = None
    lambda_value: int | None = None
    assumptions: tuple[str, ...] = ()
    if ci.dim % 2 == 0 and inv.primitive_dim > 0:
        if inv.rho > 1:
            primitive = (ExactInteger(0), inv.primitive_dim)
        else:
            closed = lambda_closed_form(ci)
            routes = {
                "sum": lambda_via_sum(ci),
                "series": lambda_via_series(ci),
                "two-point": lambda_via_twopoint(ci),
            }
            mismatched = {name: value for name, value in routes.items() if value != closed}
            if mismatched:
                detail = ", ".join(f"{name} route gives {value}" for name, value in mismatched.items())
                raise LambdaMismatch(f"{ci}: closed form gives {closed} but {detail}")
            primitive = (ExactInteger(closed), inv.primitive_dim)
            lambda_value = closed
            assumptions = (PRIMITIVE_BLOCK_ASSUMPTION,)
    entries = list(ambient)
    if primitive is not None:
        entries.append(primitive)
    return SpectrumReport(
        instance=ci,
        ambient=ambient,
        primitive=primitive,
        radius=_max_modulus(entries),
        lambda_value=lambda_value,
        assumptions=assumptions,
    )


def spectral_radius(report: SpectrumReport) -> Modulus:
    """T(X): the largest eigenvalue modulus in the report, as an exact descriptor."""
    return _max_modulus(report.entries)
