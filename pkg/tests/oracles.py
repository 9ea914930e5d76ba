"""Independent reference data: root systems and stems in orthonormal coordinates.

Nothing here imports the library. Simple roots are given as vectors in e_i
coordinates; full root sets are listed directly from their standard
descriptions, and stems are reference lists written in the same
coordinates.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

Vec = Tuple[Fraction, ...]
H = Fraction(1, 2)


def _e(n: int, *terms) -> Vec:
    """Vector of length n from (position, coefficient) pairs, positions 0-based."""
    v = [Fraction(0)] * n
    for i, c in terms:
        v[i] += Fraction(c)
    return tuple(v)


# ---------------------------------------------------------------- simple roots

def simple_roots(family: str, n: int) -> List[Vec]:
    if family == "A":          # e_0 .. e_n  -> positions 0..n
        return [_e(n + 1, (i - 1, 1), (i, -1)) for i in range(1, n + 1)]
    if family in "BCD":        # e_1 .. e_n  -> positions 0..n-1
        out = [_e(n, (i - 1, 1), (i, -1)) for i in range(1, n)]
        if family == "B":
            out.append(_e(n, (n - 1, 1)))
        elif family == "C":
            out.append(_e(n, (n - 1, 2)))
        else:
            out[-1:] = [out[-1], _e(n, (n - 2, 1), (n - 1, 1))]
        return out
    if family == "E":          # e_1 .. e_8 -> positions 0..7
        a1 = tuple([H] + [-H] * 6 + [H])
        a2 = _e(8, (0, 1), (1, 1))
        rest = [_e(8, (i - 1, 1), (i - 2, -1)) for i in range(2, 8)]  # e2-e1 .. e7-e6
        return [a1, a2] + rest[:n - 2]
    if family == "F":
        return [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
                (H, -H, -H, -H)]
    if family == "G":          # alpha short, beta long, in the plane x+y+z = 0
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    raise ValueError(family)


def all_roots(family: str, n: int) -> List[Vec]:
    """Every root, from the standard coordinate description."""
    out = set()
    if family == "A":
        for i in range(n + 1):
            for j in range(n + 1):
                if i != j:
                    out.add(_e(n + 1, (i, 1), (j, -1)))
        return sorted(out)
    if family in "BCDF" or family == "E":
        m = 8 if family == "E" else n
        for i, j in combinations(range(m), 2):
            for s, t in product((1, -1), repeat=2):
                out.add(_e(m, (i, s), (j, t)))
        if family in "BF":
            for i in range(m):
                out |= {_e(m, (i, 1)), _e(m, (i, -1))}
        if family == "C":
            for i in range(m):
                out |= {_e(m, (i, 2)), _e(m, (i, -2))}
        if family == "F":
            for signs in product((H, -H), repeat=4):
                out.add(tuple(signs))
        if family == "E":
            for signs in product((H, -H), repeat=8):
                if sum(1 for x in signs if x < 0) % 2 == 0:
                    out.add(tuple(signs))
            if n < 8:
                out = _restrict_e(out, n)
        return sorted(out)
    if family == "G":
        for i, j in product(range(3), repeat=2):
            if i != j:
                out.add(_e(3, (i, 1), (j, -1)))
        for i in range(3):
            rest = [x for x in range(3) if x != i]
            out.add(_e(3, (i, 2), (rest[0], -1), (rest[1], -1)))
            out.add(_e(3, (i, -2), (rest[0], 1), (rest[1], 1)))
        return sorted(out)
    raise ValueError(family)


def _restrict_e(roots, n):
    """Roots of E_n (n = 6, 7) inside E_8: those in the span of the first n simple roots."""
    simple = simple_roots("E", n)
    return {r for r in roots if to_simple_coords(simple, r) is not None}


# ---------------------------------------------------------------- coordinate changes

def to_simple_coords(simple: Sequence[Vec], v: Vec) -> Optional[Tuple[int, ...]]:
    """Integer coordinates of v in the given simple roots, or None if v is outside their span."""
    n = len(simple)
    dim = len(v)
    # exact Gaussian elimination on [S^T | v]
    rows = [[simple[j][i] for j in range(n)] + [v[i]] for i in range(dim)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, dim) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(dim):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][n] != 0 for i in range(r, dim)):
        return None
    sol = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][n]
    if any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def to_e(simple: Sequence[Vec], coords: Sequence[int]) -> Vec:
    dim = len(simple[0])
    return tuple(sum((Fraction(c) * s[i] for c, s in zip(coords, simple)), Fraction(0))
                 for i in range(dim))


# ---------------------------------------------------------------- reference stems

def e6_as_printed() -> List[Vec]:
    """The E6 stem entries gamma_2..gamma_4 literally as f_1 - f_6, f_2 - f_5, f_3 - f_4."""
    f = [tuple([H] * 7 + [-H])] + [_e(8, (i - 1, 1)) for i in range(1, 6)]
    return [tuple(x - y for x, y in zip(f[k], f[5 - k])) for k in range(3)]


def golden_stem(family: str, n: int) -> List[Vec]:
    """Stem in e-coordinates, in the reference order."""
    if family == "A":
        return [_e(n + 1, (k - 1, 1), (n - k + 1, -1)) for k in range(1, (n + 1) // 2 + 1)]
    if family in "BD":
        out = []
        for k in range(1, n // 2 + 1):
            out += [_e(n, (2 * k - 2, 1), (2 * k - 1, 1)), _e(n, (2 * k - 2, 1), (2 * k - 1, -1))]
        if family == "B" and n % 2:
            out.append(_e(n, (n - 1, 1)))
        return out
    if family == "C":
        return [_e(n, (k - 1, 2)) for k in range(1, n + 1)]
    if family == "E":
        def e(*terms):
            return _e(8, *[(i - 1, c) for i, c in terms])
        if n == 8:
            return [e((7, 1), (8, 1)), e((8, 1), (7, -1)), e((6, 1), (5, 1)), e((6, 1), (5, -1)),
                    e((4, 1), (3, 1)), e((4, 1), (3, -1)), e((2, 1), (1, 1)), e((2, 1), (1, -1))]
        if n == 7:
            return [e((8, 1), (7, -1)), e((6, 1), (5, 1)), e((6, 1), (5, -1)),
                    e((4, 1), (3, 1)), e((4, 1), (3, -1)), e((2, 1), (1, 1)), e((2, 1), (1, -1))]
        if n == 6:
            # the A5 step is written as f_i - f_j with i < j; under the positive
            # system e_i - e_j (i > j) used there, the positive roots are f_j - f_i
            g1 = tuple([H] * 5 + [-H, -H, H])
            f = [tuple([H] * 7 + [-H])] + [e((i, 1)) for i in range(1, 6)]
            return [g1] + [tuple(x - y for x, y in zip(f[5 - k], f[k])) for k in range(3)]
    if family == "F":
        return [_e(4, (0, 1), (1, 1)), _e(4, (0, 1), (1, -1)),
                _e(4, (2, 1), (3, 1)), _e(4, (2, 1), (3, -1))]
    if family == "G":
        a, b = simple_roots("G", 2)
        return [tuple(3 * x + 2 * y for x, y in zip(a, b)), a]
    raise ValueError(family)


def reference_d(family: str, n: int) -> int:
    return {"A": (n + 1) // 2, "B": n, "C": n, "D": 2 * (n // 2),
            "E": {6: 4, 7: 7, 8: 8}.get(n), "F": 4, "G": 2}[family]


# types with rank <= 8 that the library accepts
IRREDUCIBLE: List[Tuple[str, int]] = (
    [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)] + [("D", n) for n in range(3, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)

# families with a golden stem
GOLDEN: List[Tuple[str, int]] = (
    [("A", n) for n in range(1, 9)] + [("B", n) for n in range(2, 5)]
    + [("C", n) for n in range(2, 5)] + [("D", n) for n in range(3, 6)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)

ROOT_COUNTS: Dict[str, callable] = {
    "A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n, "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1), "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48, "G": lambda n: 12,
}
