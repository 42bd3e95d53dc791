import itertools
import random
from fractions import Fraction as F

from syncpaths.ratlp import solve_feasibility


def _holds(x, ge, eq):
    return all(sum(c * v for c, v in zip(cs, x)) >= b for cs, b in ge) and all(
        sum(c * v for c, v in zip(cs, x)) == b for cs, b in eq
    )


def test_simple_feasible():
    x = solve_feasibility(2, ge_rows=[([F(1), F(-1)], F(1)), ([F(0), F(1)], F(3))])
    assert x is not None and _holds(x, [([F(1), F(-1)], F(1)), ([F(0), F(1)], F(3))], [])


def test_simple_infeasible():
    assert solve_feasibility(1, ge_rows=[([F(1)], F(1)), ([F(-1)], F(0))]) is None


def test_equality_rows():
    ge = [([F(1), F(-1)], F(1))]
    eq = [([F(1), F(1)], F(4))]
    x = solve_feasibility(2, ge_rows=ge, eq_rows=eq)
    assert x is not None and _holds(x, ge, eq)


def test_infeasible_equality():
    assert (
        solve_feasibility(1, ge_rows=[([F(1)], F(3))], eq_rows=[([F(1)], F(1))]) is None
    )


def test_no_rows():
    assert solve_feasibility(3) == [0, 0, 0]


def test_fractional_data():
    ge = [([F(1, 3), F(-1, 7)], F(2, 5))]
    x = solve_feasibility(2, ge_rows=ge)
    assert x is not None and _holds(x, ge, [])


def test_against_grid_bruteforce():
    rng = random.Random(12)
    grid = [F(k, 2) for k in range(0, 17)]
    for _ in range(250):
        nv = rng.randint(1, 3)
        ge = [
            ([F(rng.randint(-3, 3)) for _ in range(nv)], F(rng.randint(-4, 4)))
            for _ in range(rng.randint(0, 4))
        ]
        eq = [
            ([F(rng.randint(-2, 2)) for _ in range(nv)], F(rng.randint(-2, 2)))
            for _ in range(rng.randint(0, 1))
        ]
        got = solve_feasibility(nv, ge, eq)
        if got is not None:
            assert all(v >= 0 for v in got)
            assert _holds(got, ge, eq)
        else:
            # no grid point may satisfy the system
            for pt in itertools.product(grid, repeat=nv):
                assert not _holds(pt, ge, eq)
