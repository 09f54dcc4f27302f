"""Exact rational simplex solver (two phases, Bland's anti-cycling rule).

Solves maximize c.x subject to Ax = b, x >= 0, entirely in Fraction
arithmetic.  Problem sizes here are tiny (tens of variables), so the
tableau is recomputed column by column without any factorization tricks.
"""
from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    for i, r in enumerate(tableau):
        if i != row and r[col]:
            f = r[col]
            tableau[i] = [a - f * b for a, b in zip(r, tableau[row])]
    basis[row] = col


def _optimize(tableau, basis, cost):
    """Run Bland-rule simplex to optimality; returns objective or None if unbounded."""
    ncols = len(cost)
    while True:
        in_basis = set(basis)
        enter = -1
        for j in range(ncols):
            if j in in_basis:
                continue
            reduced = cost[j] - sum(cost[basis[i]] * tableau[i][j] for i in range(len(tableau)))
            if reduced > 0:
                enter = j  # Bland: smallest improving index
                break
        if enter < 0:
            return sum(cost[basis[i]] * tableau[i][-1] for i in range(len(tableau)))
        leave = -1
        best = None
        for i in range(len(tableau)):
            if tableau[i][enter] > 0:
                ratio = tableau[i][-1] / tableau[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            return None
        _pivot(tableau, basis, leave, enter)


def solve_lp(rows, rhs, objective):
    """Maximize objective.x subject to rows.x = rhs, x >= 0.

    Returns ``(status, x, value)``; x and value are None unless optimal.
    """
    m = len(rows)
    n = len(objective)
    rows = [[Fraction(v) for v in r] for r in rows]
    rhs = [Fraction(v) for v in rhs]
    objective = [Fraction(v) for v in objective]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    tableau = [
        rows[i] + [Fraction(1 if j == i else 0) for j in range(m)] + [rhs[i]]
        for i in range(m)
    ]
    basis = [n + i for i in range(m)]

    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    value = _optimize(tableau, basis, phase1)
    if value < 0:
        return INFEASIBLE, None, None

    # Drive leftover artificials out of the basis; drop redundant rows.
    redundant = []
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if tableau[i][j]:
                    _pivot(tableau, basis, i, j)
                    break
            else:
                redundant.append(i)
    for i in reversed(redundant):
        del tableau[i]
        del basis[i]
    for r in tableau:
        del r[n:-1]

    value = _optimize(tableau, basis, objective)
    if value is None:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i, b in enumerate(basis):
        x[b] = tableau[i][-1]
    return OPTIMAL, x, value
