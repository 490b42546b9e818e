"""Brute-force recomputation of delta by enumerating right-hand sides of the
lattice pairings and solving an exact Chebyshev (l-infinity) projection for
each, as a rational linear program.

This is a test fixture for small n, independent of the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import IntMat
from .lattice import LatticeBasis

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class AffineSystem:
    """Constraints L.xi = M around a center c."""

    L: IntMat
    M: tuple[int, ...]
    c: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.M) != self.L.nrows:
            raise ValueError("one right-hand side per row of L")
        if len(self.c) != self.L.ncols:
            raise ValueError("center has the wrong dimension")


@dataclass(frozen=True)
class LpResult:
    feasible: bool
    value: Fraction | None = None
    argmin: tuple[Fraction, ...] | None = None


class _Tableau:
    """Dense tableau for min cost.x, A x = b, x >= 0 with Bland's rule.

    ``rows[i]`` holds the coefficients of row i followed by its right-hand
    side; ``basis[i]`` is the basic variable of row i.
    """

    def __init__(self, rows, basis):
        self.rows = rows
        self.basis = basis

    def pivot(self, r, col):
        row = self.rows[r]
        pv = row[col]
        if pv != 1:
            row = [a / pv for a in row]
            self.rows[r] = row
        for i, other in enumerate(self.rows):
            if i != r:
                f = other[col]
                if f:
                    self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = col

    def reduced_costs(self, cost, allowed):
        # cost_j - c_B^T B^-1 A_j, read off the current tableau
        nvar = len(self.rows[0]) - 1
        red = list(cost[:nvar])
        for i, bv in enumerate(self.basis):
            cb = cost[bv]
            if cb:
                row = self.rows[i]
                for j in range(nvar):
                    if row[j]:
                        red[j] -= cb * row[j]
        return [red[j] if allowed[j] else Fraction(0) for j in range(nvar)]

    def solve(self, cost, allowed):
        while True:
            red = self.reduced_costs(cost, allowed)
            col = next((j for j, v in enumerate(red) if v < 0), None)
            if col is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[col]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False  # unbounded
            self.pivot(best[1], col)


def chebyshev_min_linf(sys: AffineSystem) -> LpResult:
    """min t subject to L.xi = M and |xi_i - c_i| <= t, solved exactly.

    With xi = c - t*1 + w and slack s, the variables t, w, s are all
    nonnegative and the rows read

        L w - (L 1) t = M - L c
        w_i + s_i - 2 t = 0.
    """
    L, n = sys.L, sys.L.ncols
    if any(not any(r) for r in L.rows):
        raise ValueError("L must not have zero rows")
    c = [Fraction(a) for a in sys.c]
    R = L.nrows
    # columns: t | w_0..w_{n-1} | s_0..s_{n-1} | a_0..a_{R-1}
    nvar = 1 + 2 * n + R
    t_col, w0, s0, a0 = 0, 1, 1 + n, 1 + 2 * n
    rows = []
    for g, l in enumerate(L.rows):
        rhs = sys.M[g] - sum((a * b for a, b in zip(l, c)), Fraction(0))
        row = [Fraction(0)] * (nvar + 1)
        row[t_col] = Fraction(-sum(l))
        for i, a in enumerate(l):
            row[w0 + i] = Fraction(a)
        row[-1] = rhs
        if rhs < 0:
            row = [-a for a in row]
        row[a0 + g] = Fraction(1)
        rows.append(row)
    for i in range(n):
        row = [Fraction(0)] * (nvar + 1)
        row[t_col] = Fraction(-2)
        row[w0 + i] = Fraction(1)
        row[s0 + i] = Fraction(1)
        rows.append(row)
    basis = [a0 + g for g in range(R)] + [s0 + i for i in range(n)]
    tab = _Tableau(rows, basis)

    everything = [True] * nvar
    phase1 = [Fraction(0)] * a0 + [Fraction(1)] * R
    tab.solve(phase1, everything)
    infeas = sum((tab.rows[i][-1] for i, b in enumerate(tab.basis) if b >= a0), Fraction(0))
    if infeas > 0:
        return LpResult(False)

    # drive artificials out of the basis; rows that cannot pivot are redundant
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= a0:
            col = next((j for j in range(a0) if tab.rows[i][j] != 0), None)
            if col is None:
                del tab.rows[i]
                del tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1

    allowed = [True] * a0 + [False] * R
    phase2 = [Fraction(1)] + [Fraction(0)] * (nvar - 1)
    if not tab.solve(phase2, allowed):
        raise AssertionError("Chebyshev LP cannot be unbounded")
    x = [Fraction(0)] * nvar
    for i, b in enumerate(tab.basis):
        x[b] = tab.rows[i][-1]
    t = x[t_col]
    xi = tuple(c[i] - t + x[w0 + i] for i in range(n))
    return LpResult(True, t, xi)


def _search(rows, norms, lcs, center, bound, inclusive):
    """Depth-first search over right-hand sides M with per-row pruning by
    the hyperplane distance |M_g - l_g.c| / ||l_g||_1."""
    best: list = [None, None]  # value, argmin

    def admissible(lb):
        limit = best[0] if best[0] is not None else bound
        if best[0] is None and inclusive:
            return lb <= limit
        return lb < limit

    def candidates(g):
        lc, nrm = lcs[g], norms[g]
        limit = best[0] if best[0] is not None else bound
        span = limit * nrm
        lo, hi = math.ceil(lc - span), math.floor(lc + span)
        ms = sorted(range(lo, hi + 1), key=lambda M: (abs(M - lc), M))
        return [M for M in ms if admissible(abs(M - lc) / nrm)]

    def rec(g, chosen):
        if g == len(rows):
            res = chebyshev_min_linf(AffineSystem(IntMat(tuple(rows), len(center)), tuple(chosen), center))
            if res.feasible and admissible(res.value):
                best[0], best[1] = res.value, res.argmin
            return
        for M in candidates(g):
            # the limit may have tightened since candidates() was built
            if admissible(abs(M - lcs[g]) / norms[g]):
                rec(g + 1, chosen + [M])

    rec(0, [])
    return best[0], best[1]


def delta_oracle(basis: LatticeBasis, c: Sequence[Fraction] | None = None,
                 upper: Fraction = HALF) -> Fraction:
    """Exact l-infinity distance from ``c`` to {xi : l.xi in Z for l in basis}.

    ``upper`` must bound the answer from above; it only limits the search box
    and is doubled if no point is found within it.
    """
    return delta_oracle_point(basis, c, upper)[0]


def delta_oracle_point(basis: LatticeBasis, c: Sequence[Fraction] | None = None,
                       upper: Fraction = HALF) -> tuple[Fraction, tuple[Fraction, ...] | None]:
    upper = Fraction(upper)
    if upper < 0:
        raise ValueError("upper must be nonnegative")
    n = basis.n
    center = tuple(Fraction(a) for a in c) if c is not None else (HALF,) * n
    if len(center) != n:
        raise ValueError("center has the wrong dimension")
    if basis.rank == 0:
        return Fraction(0), center
    rows = list(basis.rows)
    norms = [sum(abs(a) for a in l) for l in rows]
    lcs = [sum((a * b for a, b in zip(l, center)), Fraction(0)) for l in rows]
    while True:
        value, point = _search(rows, norms, lcs, center, upper, inclusive=True)
        if value is not None:
            return value, point
        if upper >= HALF:
            # Z^n lies in E, so some point is always within 1/2
            raise AssertionError("no point of E within 1/2 of the center")
        upper = min(HALF, 2 * upper) if upper else Fraction(1, 64)
