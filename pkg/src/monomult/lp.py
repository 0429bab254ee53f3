"""Exact rational linear programming (two-phase simplex, Bland's rule).

Small dense problems only: all arithmetic is done on Fractions, so results
are exact, and Bland's anti-cycling rule guarantees termination.
"""

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["LPResult", "linprog"]


@dataclass(frozen=True)
class LPResult:
    status: str                 # "optimal" | "infeasible" | "unbounded"
    x: tuple = ()
    value: Fraction = None


class _Tableau:
    # rows: list of coefficient lists, last entry is the rhs; basis[i] is the
    # column basic in row i
    def __init__(self, rows, basis):
        self.rows = rows
        self.basis = basis

    def pivot(self, r, col):
        row = self.rows[r]
        p = row[col]
        if p != 1:
            row = [v / p for v in row]
            self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[col]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = col

    def reduced_costs(self, cost, ncols):
        red = list(cost[:ncols]) + [Fraction(0)]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(ncols + 1):
                    if row[j]:
                        red[j] -= cb * row[j]
        return red

    def optimize(self, cost, allowed):
        """Minimise cost·x over the current basis; `allowed` are enterable columns."""
        ncols = len(self.rows[0]) - 1 if self.rows else 0
        while True:
            red = self.reduced_costs(cost, ncols)
            entering = next((j for j in allowed if red[j] < 0), None)
            if entering is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=(), free=()):
    """Minimise c·x subject to A_ub x <= b_ub, A_eq x = b_eq.

    Variables are non-negative except those whose index is in `free`.
    Inputs may be ints or Fractions.
    """
    nvar = len(c)
    free = set(free)
    # column map: original variable -> (plus column, minus column or None)
    cols = []
    ncol = 0
    for j in range(nvar):
        if j in free:
            cols.append((ncol, ncol + 1))
            ncol += 2
        else:
            cols.append((ncol, None))
            ncol += 1
    n_struct = ncol
    n_slack = len(A_ub)
    width = n_struct + n_slack

    def expand(coeffs):
        out = [Fraction(0)] * width
        for j, v in enumerate(coeffs):
            if v:
                p, m = cols[j]
                out[p] = Fraction(v)
                if m is not None:
                    out[m] = -Fraction(v)
        return out

    rows = []
    for i, (a, b) in enumerate(zip(A_ub, b_ub)):
        r = expand(a)
        r[n_struct + i] = Fraction(1)
        rows.append(r + [Fraction(b)])
    for a, b in zip(A_eq, b_eq):
        rows.append(expand(a) + [Fraction(b)])
    for r in rows:
        if r[-1] < 0:
            for j in range(len(r)):
                r[j] = -r[j]

    cost = [Fraction(0)] * width
    for j, v in enumerate(c):
        p, m = cols[j]
        cost[p] = Fraction(v)
        if m is not None:
            cost[m] = -Fraction(v)

    if not rows:
        if any(v < 0 for v in cost) or any(cost[m] for _, m in cols if m is not None):
            return LPResult("unbounded")
        return LPResult("optimal", tuple(Fraction(0) for _ in range(nvar)), Fraction(0))

    # phase 1 with one artificial per row
    m_rows = len(rows)
    total = width + m_rows
    full = []
    for i, r in enumerate(rows):
        art = [Fraction(0)] * m_rows
        art[i] = Fraction(1)
        full.append(r[:-1] + art + [r[-1]])
    tab = _Tableau(full, [width + i for i in range(m_rows)])
    phase1_cost = [Fraction(0)] * width + [Fraction(1)] * m_rows
    tab.optimize(phase1_cost, range(total))
    infeas = sum(tab.rows[i][-1] for i, b in enumerate(tab.basis) if b >= width)
    if infeas > 0:
        return LPResult("infeasible")

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= width:
            col = next((j for j in range(width) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i]
                del tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1
    tab.rows = [r[:width] + [r[-1]] for r in tab.rows]

    status = tab.optimize(cost, range(width))
    if status == "unbounded":
        return LPResult("unbounded")
    sol = [Fraction(0)] * width
    for i, b in enumerate(tab.basis):
        sol[b] = tab.rows[i][-1]
    x = []
    for p, m in cols:
        x.append(sol[p] - (sol[m] if m is not None else 0))
    value = sum((Fraction(cj) * xj for cj, xj in zip(c, x)), Fraction(0))
    return LPResult("optimal", tuple(x), value)
