"""Exact verdicts on a spectrum: Conjecture O and Galkin's lower bound.

Conjecture O (Galkin-Golyshev-Iritani) for a Fano manifold of index rho
says that the spectral radius T of (c_1 *_0) is an eigenvalue of
multiplicity one, and that every eigenvalue on the circle |u| = T is T
times a rho-th root of unity.  Galkin's conjecture bounds T below by
dim + 1.  Every check here is an exact integer comparison, and every
verdict carries an exact witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .spectrum import (
    Eigenvalue,
    ExactInteger,
    LambdaMismatch,
    RootScaled,
    SpectrumReport,
    compare_moduli,
    eigenvalue_modulus,
    equals_positive_real,
    full_spectrum,
)
from .variety import CompleteIntersection, invariants

__all__ = [
    "ConjectureOWitness",
    "ConjectureReport",
    "check_conjecture_o",
    "check_galkin",
    "verify_instance",
]


@dataclass(frozen=True)
class ConjectureOWitness:
    """Exact evidence behind the two Conjecture O verdicts.

    radius_multiplicity counts eigenvalues equal to T (with multiplicity);
    maximal lists every eigenvalue of modulus T together with its
    multiplicity, phases included.
    """

    radius_multiplicity: int
    maximal: tuple[tuple[Eigenvalue, int], ...]


def check_conjecture_o(report: SpectrumReport) -> tuple[bool, bool, ConjectureOWitness]:
    """Both Conjecture O clauses for one spectrum, decided structurally.

    Clause (1): the eigenvalue T itself has total multiplicity one.
    Clause (2): each eigenvalue of modulus T, divided by T, is a rho-th
    root of unity; for a scaled root of unity this reads
    rho * phase = 0 mod root_order, and for an exact integer u = +-T the
    value -T is admitted only when rho is even.
    """
    rho = report.instance.fano_index
    radius = report.radius
    count = 0
    maximal: list[tuple[Eigenvalue, int]] = []
    for eig, mult in report.entries:
        if equals_positive_real(eig, radius):
            count += mult
        if compare_moduli(eigenvalue_modulus(eig), radius) == 0:
            maximal.append((eig, mult))
    clause_two = True
    for eig, _ in maximal:
        if isinstance(eig, RootScaled):
            if (rho * eig.phase) % eig.root_order != 0:
                clause_two = False
        elif isinstance(eig, ExactInteger):
            if eig.value < 0 and rho % 2 != 0:
                clause_two = False
    return count == 1, clause_two, ConjectureOWitness(count, tuple(maximal))


def check_galkin(report: SpectrumReport) -> tuple[bool, tuple[int, int]]:
    """Strict Galkin bound T(X) > N + 1, as an exact integer comparison.

    For rho > 1 the inequality rho * D^(1/rho) > N+1 is cross-multiplied to
    rho^rho * D > (N+1)^rho; for rho = 1 it reads D - F > N+1 directly.
    Returns the verdict and both sides as witnesses.
    """
    ci = report.instance
    inv = invariants(ci)
    if inv.rho > 1:
        lhs = inv.rho**inv.rho * inv.big_d
        rhs = (ci.dim + 1) ** inv.rho
    else:
        lhs = inv.big_d - inv.big_f
        rhs = ci.dim + 1
    return lhs > rhs, (lhs, rhs)


@dataclass(frozen=True)
class ConjectureReport:
    """All verdicts for one instance, with exact witnesses.

    A failed pipeline (a route mismatch or an arithmetic error) becomes a
    report with all verdicts false and the diagnostic in `error`; genuine
    instances always produce error = None.
    """

    instance: CompleteIntersection
    spectrum: SpectrumReport | None
    conj_o_multiplicity_one: bool
    radius_multiplicity: int
    conj_o_roots_of_unity: bool
    maximal_eigenvalues: tuple[tuple[Eigenvalue, int], ...]
    galkin_strict: bool
    galkin_lhs: int
    galkin_rhs: int
    lambda_consistent: bool
    error: str | None = None

    @property
    def passed(self) -> bool:
        return (
            self.error is None
            and self.conj_o_multiplicity_one
            and self.conj_o_roots_of_unity
            and self.galkin_strict
            and self.lambda_consistent
        )


def verify_instance(ci: CompleteIntersection) -> ConjectureReport:
    """Run the full pipeline on one instance; failures become diagnostics."""
    try:
        report = full_spectrum(ci)
    except (LambdaMismatch, ArithmeticError) as exc:
        return ConjectureReport(
            instance=ci,
            spectrum=None,
            conj_o_multiplicity_one=False,
            radius_multiplicity=0,
            conj_o_roots_of_unity=False,
            maximal_eigenvalues=(),
            galkin_strict=False,
            galkin_lhs=0,
            galkin_rhs=0,
            lambda_consistent=False,
            error=str(exc),
        )
    clause_one, clause_two, witness = check_conjecture_o(report)
    galkin_ok, (lhs, rhs) = check_galkin(report)
    return ConjectureReport(
        instance=ci,
        spectrum=report,
        conj_o_multiplicity_one=clause_one,
        radius_multiplicity=witness.radius_multiplicity,
        conj_o_roots_of_unity=clause_two,
        maximal_eigenvalues=witness.maximal,
        galkin_strict=galkin_ok,
        galkin_lhs=lhs,
        galkin_rhs=rhs,
        lambda_consistent=True,
        error=None,
    )
