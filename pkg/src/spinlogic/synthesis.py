"""Solve for 2-local penalty coefficients enforcing a Boolean relation.

Given a relation over n logical variables and a mediator budget m, find a
degree <= 2 pseudo-Boolean polynomial over n+m variables whose minimum over
the mediators is 0 on every satisfying row and at least the gap on every
violating row -- or certify that no such polynomial exists.

The min-over-mediators requirement is disjunctive: each satisfying row needs
at least one zero-energy mediator completion.  The solver branches over
which completion is pinned per row (lexicographic order, first feasible
branch wins) and hands each branch to the exact rational simplex.  Feasible
results are never trusted alone; callers re-verify by enumeration through
`gadgets.verify_gadget`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from . import lp
from .gadgets import (Gadget, GadgetReport, ROLE_INPUT, ROLE_MEDIATOR,
                      ROLE_OUTPUT, verify_gadget)
from .poly import BooleanPoly, Term

MAX_TOTAL_VARS = 6


def feasibility_basis(n: int) -> list[Term]:
    """All monomials of degree <= 2 over n variables: 1 + n + n(n-1)/2 of them."""
    if n > MAX_TOTAL_VARS:
        raise ValueError(f"n={n} exceeds the exhaustive-regime cap {MAX_TOTAL_VARS}")
    return [()] + [(i,) for i in range(n)] + list(combinations(range(n), 2))


@dataclass(frozen=True)
class SynthesisProblem:
    relation: frozenset[tuple[int, ...]]  # satisfying rows over n logical variables
    num_logical: int
    mediators: int = 0
    gap: Fraction = Fraction(1)
    output_slots: tuple[int, ...] = ()    # logical slots to tag as outputs

    def __post_init__(self):
        if self.num_logical + self.mediators > MAX_TOTAL_VARS:
            raise ValueError("n + m exceeds the exhaustive-regime cap "
                             f"{MAX_TOTAL_VARS}")
        if self.gap <= 0:
            raise ValueError("gap must be positive")
        for row in self.relation:
            if len(row) != self.num_logical:
                raise ValueError(f"relation row {row} has wrong arity")


@dataclass(frozen=True)
class BranchRecord:
    """One mediator-pinning choice and the outcome of its linear program."""

    pinned: tuple[tuple[int, ...], ...]  # chosen zero completion per satisfying row
    status: str


@dataclass(frozen=True)
class SynthesisResult:
    feasible: bool
    gadget: Gadget | None = None
    verification: GadgetReport | None = None
    branches: tuple[BranchRecord, ...] = field(default_factory=tuple)

    @property
    def certificate(self) -> tuple[BranchRecord, ...]:
        """The exhaustion record: every branch with its failing status."""
        return self.branches


def _coefficient_row(bits: Sequence[int], basis: Sequence[Term],
                     extra: int = 0) -> list[Fraction]:
    row = [Fraction(1) if all(bits[i] for i in t) else Fraction(0) for t in basis]
    return row + [Fraction(0)] * extra


def synthesize(problem: SynthesisProblem) -> SynthesisResult:
    """Find a verified 2-local gadget for the relation, or an infeasibility record."""
    n, m = problem.num_logical, problem.mediators
    total = n + m
    basis = feasibility_basis(total)
    nb = len(basis)
    sat_rows = sorted(problem.relation)
    all_logical = list(product((0, 1), repeat=n))
    viol_rows = [r for r in all_logical if r not in problem.relation]
    completions = list(product((0, 1), repeat=m))

    # constraints common to every branch
    common_ineqs: list[tuple[list[Fraction], Fraction]] = []
    for row in sat_rows:
        for comp in completions:
            common_ineqs.append((_coefficient_row(row + comp, basis, 1), Fraction(0)))
    for row in viol_rows:
        for comp in completions:
            common_ineqs.append((_coefficient_row(row + comp, basis, 1), problem.gap))
    # L-infinity bound variable t (last column): -t <= a_j <= t
    for j in range(nb):
        lo = [Fraction(0)] * (nb + 1)
        lo[j], lo[nb] = Fraction(-1), Fraction(1)
        hi = [Fraction(0)] * (nb + 1)
        hi[j], hi[nb] = Fraction(1), Fraction(1)
        common_ineqs.append((lo, Fraction(0)))
        common_ineqs.append((hi, Fraction(0)))
    objective = [Fraction(0)] * nb + [Fraction(1)]

    branches: list[BranchRecord] = []
    for choice in product(completions, repeat=len(sat_rows)):
        eqs = [(_coefficient_row(row + comp, basis, 1), Fraction(0))
               for row, comp in zip(sat_rows, choice)]
        res = lp.solve_lp(nb + 1, objective, eqs, common_ineqs)
        branches.append(BranchRecord(pinned=choice, status=res.status))
        if res.status == lp.OPTIMAL:
            assert res.x is not None
            terms = {t: res.x[j] for j, t in enumerate(basis) if res.x[j] != 0}
            penalty = BooleanPoly(total, terms)
            roles = tuple(
                ROLE_OUTPUT if i in problem.output_slots else ROLE_INPUT
                for i in range(n)) + (ROLE_MEDIATOR,) * m
            gadget = Gadget("synthesized", penalty, roles, problem.gap,
                            problem.relation)
            report = verify_gadget(gadget)
            if not report.passed:
                raise AssertionError(
                    "synthesis produced an LP-feasible gadget that fails "
                    f"exhaustive verification: {report.failures}")
            return SynthesisResult(True, gadget, report, tuple(branches))
    return SynthesisResult(False, branches=tuple(branches))


def synthesize_function(truth_table: Sequence[int], mediators: int = 0,
                        gap: Fraction = Fraction(1)) -> SynthesisResult:
    """Synthesize a gadget for z = f(inputs) given f's truth vector.

    The relation variables are the inputs followed by the output z.
    """
    size = len(truth_table)
    k = size.bit_length() - 1
    if size != 1 << k:
        raise ValueError("truth table length must be a power of two")
    relation = frozenset(
        tuple((idx >> (k - 1 - i)) & 1 for i in range(k)) + (int(truth_table[idx]),)
        for idx in range(size))
    problem = SynthesisProblem(relation, k + 1, mediators, Fraction(gap),
                               output_slots=(k,))
    return synthesize(problem)
