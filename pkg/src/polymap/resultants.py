"""Determinants of polynomial matrices and Sylvester resultants.

Determinants use division-free Laplace expansion memoized over column
subsets, which is exact and fast at the matrix sizes that occur here
(Sylvester matrices and Jacobians of desk-scale maps).
"""

from __future__ import annotations

from .errors import UnknownVariableError
from .poly import Poly, VarContext


def poly_matrix_det(rows: list[list[Poly]], ctx: VarContext) -> Poly:
    """Determinant of a square matrix of polynomials over ``ctx``."""
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return Poly.one(ctx)

    memo: dict[tuple[int, ...], Poly] = {}

    def minor(cols: tuple[int, ...]) -> Poly:
        # Expand along row n - len(cols), over the still-available columns.
        if not cols:
            return Poly.one(ctx)
        got = memo.get(cols)
        if got is not None:
            return got
        i = n - len(cols)
        total = Poly.zero(ctx)
        for pos, j in enumerate(cols):
            entry = rows[i][j]
            if entry.is_zero():
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            contribution = entry * sub
            total = total + contribution if pos % 2 == 0 else total - contribution
        memo[cols] = total
        return total

    return minor(tuple(range(n)))


def sylvester_matrix(f: Poly, g: Poly, var: str) -> list[list[Poly]]:
    """Sylvester matrix of ``f`` and ``g`` viewed as univariate in ``var``."""
    ctx = f.ctx
    fc = f.coefficients_in(var)
    gc = g.coefficients_in(var)
    m = max(fc) if fc else 0
    n = max(gc) if gc else 0
    zero = Poly.zero(ctx)
    size = m + n
    rows: list[list[Poly]] = []
    frow = [fc.get(m - j, zero) for j in range(m + 1)]
    grow = [gc.get(n - j, zero) for j in range(n + 1)]
    for shift in range(n):
        rows.append([zero] * shift + frow + [zero] * (size - m - 1 - shift))
    for shift in range(m):
        rows.append([zero] * shift + grow + [zero] * (size - n - 1 - shift))
    return rows


def resultant(f: Poly, g: Poly, var: str) -> Poly:
    """Resultant of ``f`` and ``g`` with respect to ``var``.

    The result is the Sylvester determinant, a polynomial free of ``var``.
    It vanishes identically exactly when the two inputs share a
    nonconstant common factor as univariates over the fraction field of
    the remaining variables.  Degenerate cases follow the classical
    conventions Res(f, c) = c^deg(f) and Res(c, c') = 1; two zero inputs
    are rejected.
    """
    if f.ctx != g.ctx:
        raise UnknownVariableError("resultant arguments must share a context")
    if var not in f.ctx:
        raise UnknownVariableError(f"unknown variable {var!r}")
    if f.is_zero() and g.is_zero():
        raise ValueError("resultant of two zero polynomials is undefined")
    deg_f = max(f.degree_in(var), 0)
    deg_g = max(g.degree_in(var), 0)
    if deg_f == 0 and deg_g == 0:
        return Poly.one(f.ctx)
    if deg_f == 0:
        return f ** deg_g
    if deg_g == 0:
        return g ** deg_f
    return poly_matrix_det(sylvester_matrix(f, g, var), f.ctx)
