"""Exact linear programming over the rationals for tiny dense systems.

``A x = b, x >= 0``: phase I finds a feasible basis, an optional phase II
minimises a linear objective.  Bland's rule throughout so degenerate pivots
cannot cycle.  Systems here have a handful of rows (rank <= 3 plus one
normalisation row) and a few dozen columns, so a dense ``Fraction`` tableau
is the simplest thing that works.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence


def feasible_point(
    A: Sequence[Sequence[int]],
    b: Sequence[int],
    minimize: Optional[Sequence[int]] = None,
) -> Optional[list[Fraction]]:
    """Return ``x >= 0`` with ``A x = b`` (optimal for ``minimize`` if given),
    or ``None`` when the system is infeasible.

    The objective must be bounded below on the feasible set.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n

    T = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append([Fraction(sign * a) for a in A[i]] + art + [Fraction(sign * b[i])])
    basis = list(range(n, n + m))

    # phase I: minimise the sum of artificials
    cost = [Fraction(0)] * (n + m + 1)
    for row in T:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    _run(T, cost, basis, n + m)
    if cost[-1] != 0:
        return None

    # drive zero-level artificials out of the basis; drop redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, None, i, j)
            basis[i] = j
        i += 1
    for row in T:
        del row[n:n + m]

    if minimize is not None:
        cost = [Fraction(c) for c in minimize] + [Fraction(0)]
        for i, j in enumerate(basis):
            if cost[j] != 0:
                f = cost[j]
                cost = [v - f * w for v, w in zip(cost, T[i])]
        _run(T, cost, basis, n)

    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return x


def _run(T, cost, basis, width):
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            return
        leaving = None
        best = None
        for i, row in enumerate(T):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best, leaving = ratio, i
        if leaving is None:
            raise ArithmeticError("objective unbounded below")
        _pivot(T, cost, leaving, entering)
        basis[leaving] = entering


def _pivot(T, cost, r, c):
    p = T[r][c]
    T[r] = [v / p for v in T[r]]
    pivot_row = T[r]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [v - f * w for v, w in zip(row, pivot_row)]
    if cost is not None and cost[c] != 0:
        f = cost[c]
        cost[:] = [v - f * w for v, w in zip(cost, pivot_row)]
