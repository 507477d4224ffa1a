"""Exact integer and rational matrix arithmetic.

Matrices are plain nested sequences (lists, tuples or numpy object arrays)
of ``int`` or ``fractions.Fraction``. Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import NamedTuple, Sequence

from .errors import DimensionMismatch, NonSquare

Number = int | Fraction


def _rows(m) -> list[list]:
    rows = [list(r) for r in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionMismatch("ragged matrix")
    return rows


def _integerize(rows: list[list]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns (int rows, product of the row scales)."""
    scale = 1
    out = []
    for r in rows:
        den = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        scale *= den
        out.append([int(Fraction(x) * den) for x in r])
    return out, scale


def det(m: Sequence[Sequence[Number]]) -> Number:
    """Exact determinant by Bareiss fraction-free elimination.

    Integer input returns an ``int``; any ``Fraction`` entry makes the result a
    ``Fraction`` (rows are cleared of denominators first).
    """
    rows = _rows(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NonSquare(f"{n}x{len(rows[0]) if rows else 0} matrix has no determinant")
    if n == 0:
        return 1
    rational = any(isinstance(x, Fraction) and x.denominator != 1 for r in rows for x in r)
    a, scale = _integerize(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0) if rational else 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * piv - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    value = sign * a[n - 1][n - 1]
    if rational or scale != 1:
        return Fraction(value, scale)
    return value


def rank(m: Sequence[Sequence[Number]]) -> int:
    """Exact rank via fraction-free elimination with full pivoting."""
    a, _ = _integerize(_rows(m))
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    r = 0
    while r < min(nrows, ncols):
        pivot = None
        for i in range(r, nrows):
            for j in range(r, ncols):
                if a[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        a[r], a[pi] = a[pi], a[r]
        if pj != r:
            for row in a:
                row[r], row[pj] = row[pj], row[r]
        piv = a[r][r]
        for i in range(r + 1, nrows):
            air = a[i][r]
            for j in range(r + 1, ncols):
                a[i][j] = (a[i][j] * piv - air * a[r][j]) // prev
            a[i][r] = 0
        prev = piv
        r += 1
    return r


def rref(m: Sequence[Sequence[Number]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and its pivot columns."""
    a = [[Fraction(x) for x in r] for r in _rows(m)]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace(m: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    """Basis of the right nullspace, one vector per free column."""
    rows = _rows(m)
    ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


class Solution(NamedTuple):
    """A particular solution plus a nullspace basis (empty when unique)."""

    x: list[Fraction]
    nullspace: list[list[Fraction]]

    @property
    def unique(self) -> bool:
        return not self.nullspace


def solve_linear(a: Sequence[Sequence[Number]], b: Sequence[Number]) -> Solution | None:
    """Solve ``a x = b`` exactly; ``None`` when the system is inconsistent."""
    rows = _rows(a)
    if len(rows) != len(b):
        raise DimensionMismatch(f"{len(rows)} equations but {len(b)} right-hand sides")
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [rhs] for r, rhs in zip(rows, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = red[i][ncols]
    return Solution(x, nullspace(rows))


def transpose(m: Sequence[Sequence[Number]]) -> list[list[Number]]:
    return [list(c) for c in zip(*m)]
