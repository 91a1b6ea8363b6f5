from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from spinlogic.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp, solve_standard


def test_basic_minimization():
    # min x + y  s.t.  x + y >= 2, x >= 0 via x free split
    res = solve_lp(2, [F(1), F(1)],
                   inequalities=[([F(1), F(1)], F(2)),
                                 ([F(1), F(0)], F(0)),
                                 ([F(0), F(1)], F(0))])
    assert res.status == OPTIMAL
    assert res.objective == 2


def test_equality_constraints_respected():
    # min y  s.t.  x + y == 3, x - y == 1  ->  x=2, y=1
    res = solve_lp(2, [F(0), F(1)],
                   equalities=[([F(1), F(1)], F(3)), ([F(1), F(-1)], F(1))])
    assert res.status == OPTIMAL
    assert res.x == [F(2), F(1)]


def test_infeasible_detected():
    res = solve_lp(1, [F(1)],
                   equalities=[([F(1)], F(0))],
                   inequalities=[([F(1)], F(1))])
    assert res.status == INFEASIBLE


def test_infeasible_contradictory_equalities():
    res = solve_lp(1, [F(0)],
                   equalities=[([F(1)], F(1)), ([F(1)], F(2))])
    assert res.status == INFEASIBLE


def test_unbounded_detected():
    res = solve_lp(1, [F(-1)], inequalities=[([F(1)], F(0))])
    assert res.status == UNBOUNDED


def test_exact_rational_optimum():
    # min x  s.t.  3x >= 1  ->  x = 1/3 exactly
    res = solve_lp(1, [F(1)], inequalities=[([F(3)], F(1))])
    assert res.status == OPTIMAL
    assert res.x == [F(1, 3)] and res.objective == F(1, 3)


def test_negative_rhs_rows_handled():
    # min x  s.t.  -x >= -5, x >= 2
    res = solve_lp(1, [F(1)],
                   inequalities=[([F(-1)], F(-5)), ([F(1)], F(2))])
    assert res.status == OPTIMAL and res.x == [F(2)]


def test_standard_form_solver_direct():
    # min x1 + x2  s.t.  x1 + 2 x2 = 4, x >= 0  ->  x = (0, 2)
    res = solve_standard([[F(1), F(2)]], [F(4)], [F(1), F(1)])
    assert res.status == OPTIMAL
    assert res.objective == 2


def test_redundant_rows_do_not_break_phase_two():
    res = solve_lp(2, [F(1), F(0)],
                   equalities=[([F(1), F(1)], F(2)),
                               ([F(2), F(2)], F(4))],
                   inequalities=[([F(1), F(0)], F(0)),
                                 ([F(0), F(1)], F(0))])
    assert res.status == OPTIMAL
    assert res.objective == 0


@given(st.lists(st.builds(F, st.integers(-5, 5), st.integers(1, 3)),
                min_size=3, max_size=3),
       st.builds(F, st.integers(-4, 4), st.integers(1, 3)))
@settings(max_examples=60, deadline=None)
def test_solutions_always_satisfy_constraints(coeffs, rhs):
    # min sum x  s.t.  coeffs.x >= rhs and box -10 <= x_i <= 10
    ineqs = [(list(coeffs), rhs)]
    for i in range(3):
        row_lo = [F(0)] * 3
        row_lo[i] = F(1)
        ineqs.append((row_lo, F(-10)))
        row_hi = [F(0)] * 3
        row_hi[i] = F(-1)
        ineqs.append((row_hi, F(-10)))
    res = solve_lp(3, [F(1)] * 3, inequalities=ineqs)
    assert res.status == OPTIMAL
    x = res.x
    assert sum(c * v for c, v in zip(coeffs, x)) >= rhs
    assert all(-10 <= v <= 10 for v in x)
    assert res.objective == sum(x)
