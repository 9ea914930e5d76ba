"""Dense exact linear algebra over Q (Fraction) or K (KScalar).

Matrices are lists of rows. Entries only need +, -, *, / and truthiness.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple


def rref(rows: Sequence[Sequence], zero) -> Tuple[List[list], List[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], zero) -> int:
    return len(rref(rows, zero)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, zero, one) -> List[list]:
    """Basis of {x : rows @ x = 0}, one vector per free column, in column order."""
    red, piv = rref(rows, zero) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, pc in zip(red, piv):
            if row[f]:
                v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(a_rows: Sequence[Sequence], b_cols: Sequence[Sequence], zero):
    """Solve A X = B for square invertible A; B is given as a list of columns.

    Returns the solution as a list of columns, or None if A is singular.
    """
    n = len(a_rows)
    k = len(b_cols)
    aug = [list(a_rows[i]) + [b_cols[j][i] for j in range(k)] for i in range(n)]
    red, piv = rref(aug, zero)
    if piv[:n] != list(range(n)) or len(piv) < n:
        return None
    return [[red[i][n + j] for i in range(n)] for j in range(k)]


def in_span(vectors: Sequence[Sequence], target: Sequence, zero) -> bool:
    if not vectors:
        return not any(target)
    return rank(list(vectors) + [list(target)], zero) == rank(vectors, zero)
