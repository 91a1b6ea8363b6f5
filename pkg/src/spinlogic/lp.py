"""Exact rational linear programming via two-phase dense simplex.

Small, deterministic, and exact: Fraction arithmetic throughout and
Bland's anti-cycling pivot rule.  Problem sizes here are tiny (tens of
variables, around a hundred constraints), so a dense tableau is fine.

Free variables are handled by the standard positive/negative split.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Row = list[Fraction]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpResult:
    status: str
    x: list[Fraction] | None = None
    objective: Fraction | None = None


def _pivot(tableau: list[Row], basis: list[int], row: int, col: int) -> None:
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for r, line in enumerate(tableau):
        if r != row and line[col] != 0:
            factor = line[col]
            tableau[r] = [a - factor * b for a, b in zip(line, tableau[row])]
    basis[row] = col


def _simplex(tableau: list[Row], basis: list[int]) -> str:
    """Minimize cost over the tableau in place; returns OPTIMAL or UNBOUNDED.

    The last tableau row is the reduced-cost row (objective row), already
    priced out for the current basis.
    """
    m = len(basis)
    ncols = len(tableau[0]) - 1
    while True:
        obj = tableau[m]
        col = next((j for j in range(ncols) if obj[j] < 0), None)  # Bland
        if col is None:
            return OPTIMAL
        best_row, best_ratio = None, None
        for r in range(m):
            if tableau[r][col] > 0:
                ratio = tableau[r][-1] / tableau[r][col]
                if best_ratio is None or ratio < best_ratio or (
                        ratio == best_ratio and basis[r] < basis[best_row]):
                    best_row, best_ratio = r, ratio
        if best_row is None:
            return UNBOUNDED
        _pivot(tableau, basis, best_row, col)


def solve_standard(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction],
                   c: Sequence[Fraction]) -> LpResult:
    """Minimize c.x subject to A x = b, x >= 0."""
    m, n = len(a), len(c)
    rows: list[Row] = []
    for i in range(m):
        line = [Fraction(v) for v in a[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            line = [-v for v in line]
            rhs = -rhs
        rows.append(line + [rhs])

    # phase 1: artificials, one per row
    tableau = [rows[i][:-1] + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
               + [rows[i][-1]] for i in range(m)]
    basis = [n + i for i in range(m)]
    obj = [Fraction(0)] * (n + m + 1)
    for r in range(m):
        obj = [o - v for o, v in zip(obj, tableau[r])]
    for i in range(m):
        obj[n + i] += 1  # price out the unit cost of each basic artificial
    tableau.append(obj)
    _simplex(tableau, basis)  # phase 1 is bounded below by zero
    if tableau[m][-1] != 0:
        return LpResult(INFEASIBLE)
    # drive remaining artificials out of the basis where possible
    for r in range(m):
        if basis[r] >= n:
            col = next((j for j in range(n) if tableau[r][j] != 0), None)
            if col is not None:
                _pivot(tableau, basis, r, col)
    # rebuild phase-2 tableau without artificial columns
    keep = list(range(n)) + [n + m]
    tableau = [[line[j] for j in keep] for line in tableau[:m]]
    obj = [Fraction(c[j]) for j in range(n)] + [Fraction(0)]
    for r in range(m):
        if basis[r] < n and obj[basis[r]] != 0:
            factor = obj[basis[r]]
            obj = [o - factor * v for o, v in zip(obj, tableau[r])]
    tableau.append(obj)
    status = _simplex(tableau, basis)
    if status != OPTIMAL:
        return LpResult(UNBOUNDED)
    x = [Fraction(0)] * n
    for r in range(m):
        if basis[r] < n:
            x[basis[r]] = tableau[r][-1]
    value = sum(Fraction(c[j]) * x[j] for j in range(n))
    return LpResult(OPTIMAL, x, value)


def solve_lp(num_vars: int,
             objective: Sequence[Fraction],
             equalities: Sequence[tuple[Sequence[Fraction], Fraction]] = (),
             inequalities: Sequence[tuple[Sequence[Fraction], Fraction]] = ()) -> LpResult:
    """Minimize objective.x over free variables x.

    equalities:   rows (a, rhs) meaning a.x == rhs
    inequalities: rows (a, rhs) meaning a.x >= rhs
    """
    # free x -> u - v with u, v >= 0; surplus s >= 0 per inequality
    n_ineq = len(inequalities)
    width = 2 * num_vars + n_ineq

    def expand(coeffs: Sequence[Fraction], surplus_idx: int | None) -> Row:
        line = [Fraction(0)] * width
        for j, v in enumerate(coeffs):
            line[2 * j] = Fraction(v)
            line[2 * j + 1] = -Fraction(v)
        if surplus_idx is not None:
            line[2 * num_vars + surplus_idx] = Fraction(-1)
        return line

    a_rows: list[Row] = []
    b_vals: list[Fraction] = []
    for coeffs, rhs in equalities:
        a_rows.append(expand(coeffs, None))
        b_vals.append(Fraction(rhs))
    for k, (coeffs, rhs) in enumerate(inequalities):
        a_rows.append(expand(coeffs, k))
        b_vals.append(Fraction(rhs))
    cost = expand(objective, None)
    res = solve_standard(a_rows, b_vals, cost)
    if res.status != OPTIMAL:
        return res
    assert res.x is not None
    x = [res.x[2 * j] - res.x[2 * j + 1] for j in range(num_vars)]
    return LpResult(OPTIMAL, x, res.objective)
