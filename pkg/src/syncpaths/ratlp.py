"""Exact rational linear feasibility (phase-1 simplex over Fractions).

Decides whether {x >= 0 : A x >= b, C x = d} is nonempty and returns a
rational point when it is.  Bland's rule guarantees termination.  Problems
here are tiny (tens of rows/columns), so a dense tableau is fine; all
arithmetic is exact, there is no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = tuple[Sequence[Fraction], Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def solve_feasibility(
    num_vars: int,
    ge_rows: Sequence[Row] = (),
    eq_rows: Sequence[Row] = (),
) -> list[Fraction] | None:
    """A point of {x >= 0 : ge rows hold with >=, eq rows with =}, or None."""
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    kinds: list[str] = []
    for coeffs, b in ge_rows:
        rows.append([Fraction(c) for c in coeffs])
        rhs.append(Fraction(b))
        kinds.append("ge")
    for coeffs, b in eq_rows:
        rows.append([Fraction(c) for c in coeffs])
        rhs.append(Fraction(b))
        kinds.append("eq")
    m = len(rows)
    if m == 0:
        return [_ZERO] * num_vars

    # Normalize to equalities with nonnegative rhs. A 'ge' row gains a
    # surplus column (-1); rows are flipped first when rhs < 0, which turns
    # the surplus into a usable +1 slack.
    surplus_col: list[int | None] = [None] * m
    ncols = num_vars
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-c for c in rows[i]]
            rhs[i] = -rhs[i]
            if kinds[i] == "ge":
                kinds[i] = "le"
    for i in range(m):
        if kinds[i] == "ge":
            surplus_col[i] = ncols
            ncols += 1
        elif kinds[i] == "le":
            surplus_col[i] = ncols
            ncols += 1

    # Basis: slack (+1) columns where available, artificials elsewhere.
    basis: list[int] = [-1] * m
    art_cols: list[int] = []
    for i in range(m):
        if kinds[i] == "le":
            basis[i] = surplus_col[i]
        else:
            basis[i] = ncols
            art_cols.append(ncols)
            ncols += 1

    tab = [[_ZERO] * (ncols + 1) for _ in range(m)]
    for i in range(m):
        for j, c in enumerate(rows[i]):
            tab[i][j] = c
        if kinds[i] == "ge":
            tab[i][surplus_col[i]] = -_ONE
        elif kinds[i] == "le":
            tab[i][surplus_col[i]] = _ONE
        if basis[i] >= num_vars and basis[i] not in (surplus_col[i],):
            tab[i][basis[i]] = _ONE
        tab[i][ncols] = rhs[i]

    artificial = [c in art_cols for c in range(ncols)]

    # Objective: minimize the sum of artificial variables. Reduced costs are
    # kept in obj[]; obj[ncols] is the negated objective value.
    obj = [_ZERO] * (ncols + 1)
    for i in range(m):
        if artificial[basis[i]]:
            for j in range(ncols + 1):
                obj[j] -= tab[i][j]
    for c in art_cols:
        obj[c] = _ZERO

    while True:
        enter = -1
        for j in range(ncols):
            if not artificial[j] and obj[j] < 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best: Fraction | None = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][ncols] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            # Unbounded in phase 1 cannot happen (objective bounded below by 0);
            # defensive guard.
            raise RuntimeError("phase-1 simplex unbounded")
        _pivot(tab, obj, m, ncols, leave, enter)
        basis[leave] = enter

    if -obj[ncols] != 0:
        return None

    # Drive any zero-valued artificials out of the basis when possible.
    x = [_ZERO] * num_vars
    for i in range(m):
        if artificial[basis[i]]:
            pivoted = False
            for j in range(ncols):
                if not artificial[j] and tab[i][j] != 0:
                    _pivot(tab, obj, m, ncols, i, j)
                    basis[i] = j
                    pivoted = True
                    break
            if not pivoted:
                continue  # redundant row
        if basis[i] < num_vars:
            x[basis[i]] = tab[i][ncols]
    for i in range(m):
        if basis[i] < num_vars:
            x[basis[i]] = tab[i][ncols]
    return x


def _pivot(tab, obj, m: int, ncols: int, leave: int, enter: int) -> None:
    piv = tab[leave][enter]
    prow = tab[leave]
    if piv != 1:
        inv = _ONE / piv
        for j in range(ncols + 1):
            if prow[j]:
                prow[j] *= inv
    for i in range(m):
        if i == leave:
            continue
        f = tab[i][enter]
        if f:
            row = tab[i]
            for j in range(ncols + 1):
                if prow[j]:
                    row[j] -= f * prow[j]
    f = obj[enter]
    if f:
        for j in range(ncols + 1):
            if prow[j]:
                obj[j] -= f * prow[j]
