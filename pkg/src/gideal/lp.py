"""Small dense simplex over exact rationals.

Solves max sum(lam) subject to sum_j lam_j * col_j <= rhs, lam >= 0, with
Fraction arithmetic throughout.  The all-slack basis is feasible because the
right-hand side is non-negative, so no phase-1 is needed; Bland's rule
guarantees termination.
"""

from __future__ import annotations

from fractions import Fraction


def max_convex_cover(
    columns: list[tuple[int, ...]], rhs: tuple[int, ...]
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Return (optimum, dual vector y).

    At the optimum y >= 0, y.rhs == optimum, and y.col >= 1 for every
    column, so when the optimum is below 1 the dual vector is an exact
    separating certificate: no convex combination of the columns is
    dominated by rhs.
    """
    m = len(columns)
    n = len(rhs)
    if m == 0:
        raise ValueError("need at least one column")
    if any(sum(c) == 0 for c in columns):
        raise ValueError("zero column makes the program unbounded")
    width = m + n + 1
    tab = []
    for i in range(n):
        row = [Fraction(columns[j][i]) for j in range(m)]
        row += [Fraction(1 if k == i else 0) for k in range(n)]
        row.append(Fraction(rhs[i]))
        tab.append(row)
    cost = [Fraction(1)] * m + [Fraction(0)] * n
    basis = list(range(m, m + n))

    while True:
        # reduced costs r_j = c_j - c_B . tab[:, j]
        entering = -1
        for j in range(m + n):
            r = cost[j]
            for i in range(n):
                cb = cost[basis[i]]
                if cb:
                    r -= cb * tab[i][j]
            if r > 0:
                entering = j
                break  # Bland: first improving column
        if entering < 0:
            break
        leaving = -1
        best = None
        for i in range(n):
            a = tab[i][entering]
            if a > 0:
                ratio = tab[i][width - 1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leaving]
                ):
                    best = ratio
                    leaving = i
        if leaving < 0:
            raise ArithmeticError("unbounded program")
        piv = tab[leaving][entering]
        tab[leaving] = [v / piv for v in tab[leaving]]
        for i in range(n):
            if i != leaving and tab[i][entering]:
                f = tab[i][entering]
                row = tab[i]
                prow = tab[leaving]
                tab[i] = [row[k] - f * prow[k] for k in range(width)]
        basis[leaving] = entering

    opt = Fraction(0)
    for i in range(n):
        cb = cost[basis[i]]
        if cb:
            opt += cb * tab[i][width - 1]
    dual = []
    for k in range(n):
        r = Fraction(0)
        for i in range(n):
            cb = cost[basis[i]]
            if cb:
                r += cb * tab[i][m + k]
        dual.append(r)
    return opt, tuple(dual)
