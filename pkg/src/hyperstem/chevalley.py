"""Integer structure constants of a Chevalley basis.

Signs are fixed by extraspecial pairs: for every non-simple positive root xi
take the pair (a, xi - a) with a smallest in the canonical root order and set
its constant to +(r + 1), where r is the largest integer with
(xi - a) - r*a a root. Every other constant follows from the standard
relations between constants of roots summing to zero.

Semisimple basis order: E_a for every root a in canonical order, then the
simple coroots H_1..H_l.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import HyperstemError
from .report import Report
from .roots import RootSystem, negate, sub

NOT_ROOT = -1
ZERO_SUM = -2

Term = Tuple[int, int]  # (basis index, integer coefficient)


class StructureConstants:
    """Dense tables of N_{a,b}, root sums and basis brackets for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        R = len(rs.roots)
        self.n_roots = R
        self.dim = R + rs.rank
        idx = rs.index
        roots = rs.roots
        zero = tuple([0] * rs.rank)
        self.sum = [[NOT_ROOT] * R for _ in range(R)]
        for a in range(R):
            ra = roots[a]
            row = self.sum[a]
            for b in range(R):
                s = tuple(x + y for x, y in zip(ra, roots[b]))
                if s == zero:
                    row[b] = ZERO_SUM
                else:
                    row[b] = idx.get(s, NOT_ROOT)
        self.extraspecial: Dict[int, Tuple[int, int]] = {}
        self._npos: Dict[Tuple[int, int], int] = {}
        self._build()
        self.N = [[self._n(a, b) if self.sum[a][b] >= 0 else 0 for b in range(R)]
                  for a in range(R)]
        self.coroot = [self._coroot(a) for a in range(R)]
        self._table = self._basis_table()

    # construction
    def _pos(self, a: int) -> bool:
        return sum(self.rs.roots[a]) > 0

    def _n2(self, a: int) -> Fraction:
        return self.rs.norm2(self.rs.roots[a])

    def _build(self):
        rs = self.rs
        pos = rs.positive  # already in canonical order
        simple = set(rs.simple)
        for xi in pos:
            if xi in simple:
                continue
            pairs = [(a, self.sum[xi][rs.neg[a]]) for a in pos]
            pairs = [(a, b) for a, b in pairs if b >= 0 and self._pos(b)]
            a1, b1 = min(pairs)
            self.extraspecial[xi] = (a1, b1)
            r = 0
            while True:
                t = tuple(y - (r + 1) * x for x, y in zip(rs.roots[a1], rs.roots[b1]))
                if t not in rs.index:
                    break
                r += 1
            self._npos[(a1, b1)] = r + 1
            self._npos[(b1, a1)] = -(r + 1)
            for a, b in pairs:
                if (a, b) not in self._npos:
                    v = self._formula(a, b, xi, a1, b1)
                    self._npos[(a, b)] = v
                    self._npos[(b, a)] = -v

    def _formula(self, z, e, xi, a1, b1) -> int:
        na1, nb1 = self.rs.neg[a1], self.rs.neg[b1]
        t = Fraction(0)
        s = self.sum[e][na1]
        if s >= 0:
            t += Fraction(self._n(e, na1) * self._n(z, nb1)) / self._n2(s)
        s = self.sum[z][na1]
        if s >= 0:
            t += Fraction(self._n(na1, z) * self._n(e, nb1)) / self._n2(s)
        v = t * self._n2(xi) / self._npos[(a1, b1)]
        if v.denominator != 1:
            raise HyperstemError("non-integral structure constant")
        return int(v)

    def _n(self, a: int, b: int) -> int:
        """N_{a,b} from the positive table and the zero-sum relations."""
        s = self.sum[a][b]
        if s < 0:
            return 0
        neg = self.rs.neg
        pa, pb = self._pos(a), self._pos(b)
        if pa and pb:
            return self._npos[(a, b)]
        if not pa and not pb:
            return -self._npos[(neg[a], neg[b])]
        if not pa:
            return -self._n(b, a)
        c = neg[s]  # a + b + c = 0, a positive, b negative
        if self._pos(c):
            v = self._n2(c) / self._n2(b) * self._npos[(c, a)]
        else:
            v = self._n2(c) / self._n2(a) * -self._npos[(neg[b], neg[c])]
        assert v.denominator == 1
        return int(v)

    def _coroot(self, a: int) -> Tuple[int, ...]:
        """Coefficients of H_a over the simple coroots."""
        rs = self.rs
        ra = rs.roots[a]
        n2 = rs.norm2(ra)
        out = []
        for i, x in enumerate(ra):
            v = x * rs.gram[i][i] / n2
            assert v.denominator == 1
            out.append(int(v))
        return tuple(out)

    def _basis_table(self) -> List[List[Tuple[Term, ...]]]:
        R, l = self.n_roots, self.rs.rank
        cart = [[self.rs.cartan_integer(self.rs.roots[a], self.rs.roots[s])
                 for s in self.rs.simple] for a in range(R)]
        self.root_eval = cart  # a(H_i) = C(a, alpha_i)
        t = [[() for _ in range(self.dim)] for _ in range(self.dim)]
        for a in range(R):
            for b in range(R):
                s = self.sum[a][b]
                if s >= 0:
                    t[a][b] = ((s, self.N[a][b]),)
                elif s == ZERO_SUM:
                    t[a][b] = tuple((R + i, m) for i, m in enumerate(self.coroot[a]) if m)
            for i in range(l):
                c = cart[a][i]
                if c:
                    t[R + i][a] = ((a, c),)
                    t[a][R + i] = ((a, -c),)
        return t

    # queries
    def n(self, a: Sequence[int], b: Sequence[int]) -> int:
        """N_{a,b} for root coordinate tuples (0 if a + b is not a root)."""
        ia, ib = self.rs.index.get(tuple(a)), self.rs.index.get(tuple(b))
        if ia is None or ib is None:
            return 0
        return self.N[ia][ib]

    def bracket_idx(self, i: int, j: int) -> Tuple[Term, ...]:
        return self._table[i][j]

    def labels(self) -> List[str]:
        return [root_label(r) for r in self.rs.roots] + \
            [f"H{i + 1}" for i in range(self.rs.rank)]

    def label_index(self, label: str) -> int:
        try:
            return self._label_map[label]
        except AttributeError:
            self._label_map = {s: k for k, s in enumerate(self.labels())}
            return self.label_index(label)
        except KeyError:
            raise HyperstemError(f"unknown basis label {label!r}") from None

    def nonzero_triples(self) -> List[Tuple[int, int, int]]:
        R = self.n_roots
        return [(a, b, self.N[a][b]) for a in range(R) for b in range(R) if self.N[a][b]]


def root_label(r: Sequence[int]) -> str:
    return "E[" + ",".join(str(x) for x in r) + "]"


_SC_CACHE: Dict[str, StructureConstants] = {}


def compute_structure_constants(rs: RootSystem) -> StructureConstants:
    key = str(rs.spec)
    sc = _SC_CACHE.get(key)
    if sc is None or sc.rs is not rs:
        sc = StructureConstants(rs)
        _SC_CACHE[key] = sc
    return sc


def bracket_pair(sc: StructureConstants, x: str, y: str) -> Dict[str, int]:
    """Bracket of two basis labels as a label -> integer combination."""
    labels = sc.labels()
    return {labels[k]: c for k, c in sc.bracket_idx(sc.label_index(x), sc.label_index(y))}


def contragredience_theta(sc: StructureConstants, x: str) -> Dict[str, int]:
    """theta(E_a) = -E_{-a}, theta(H) = -H."""
    i = sc.label_index(x)
    if i < sc.n_roots:
        return {root_label(negate(sc.rs.roots[i])): -1}
    return {x: -1}


def theta_idx(sc: StructureConstants, i: int) -> Term:
    if i < sc.n_roots:
        return (sc.rs.neg[i], -1)
    return (i, -1)


def _apply(sc, terms, k, acc, sign):
    tab = sc._table
    for m, c in terms:
        for n, c2 in tab[m][k]:
            acc[n] = acc.get(n, 0) + sign * c * c2


def jacobi_sweep(sc: StructureConstants, limit: Optional[int] = None) -> Report:
    """Exhaustive Jacobi identity and antisymmetry over all basis triples i<j<k.

    The identity is alternating, so triples with repeated entries follow from
    antisymmetry, which is checked on all pairs.
    """
    rep = Report()
    tab = sc._table
    dim = sc.dim
    bad = None
    for i in range(dim):
        for j in range(dim):
            a = dict(tab[i][j])
            b = {k: -c for k, c in tab[j][i]}
            if a != b:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("antisymmetry", bad is None, "" if bad is None else f"basis pair {bad}")
    bad = None
    count = 0
    labels = sc.labels()
    for i in range(dim):
        if bad:
            break
        for j in range(i + 1, dim):
            tij = tab[i][j]
            rowi, rowj = tab[i], tab[j]
            for k in range(j + 1, dim):
                acc: Dict[int, int] = {}
                for m, c in tij:
                    for n, c2 in tab[m][k]:
                        acc[n] = acc.get(n, 0) + c * c2
                for m, c in rowj[k]:
                    for n, c2 in tab[m][i]:
                        acc[n] = acc.get(n, 0) + c * c2
                for m, c in tab[k][i]:
                    for n, c2 in tab[m][j]:
                        acc[n] = acc.get(n, 0) + c * c2
                count += 1
                if acc and any(acc.values()):
                    bad = (i, j, k)
                    break
            if bad:
                break
    rep.add("jacobi", bad is None,
            f"{count} triples" if bad is None else
            "fails at " + ", ".join(labels[x] for x in bad))
    return rep


def magnitude_check(sc: StructureConstants) -> Report:
    """|N_{a,b}| = r + 1 where b - r*a is the start of the a-string through b."""
    rs = sc.rs
    rep = Report()
    bad = None
    for a in range(sc.n_roots):
        for b in range(sc.n_roots):
            if sc.sum[a][b] < 0:
                continue
            r = 0
            while tuple(y - (r + 1) * x for x, y in zip(rs.roots[a], rs.roots[b])) in rs.index:
                r += 1
            if abs(sc.N[a][b]) != r + 1:
                bad = (a, b)
                break
        if bad:
            break
    rep.add("magnitude", bad is None, "" if bad is None else
            f"N{rs.roots[bad[0]]},{rs.roots[bad[1]]} = {sc.N[bad[0]][bad[1]]}")
    bad = None
    for a in range(sc.n_roots):
        for b in range(sc.n_roots):
            if sc.N[a][b] != -sc.N[b][a] or sc.N[a][b] != -sc.N[rs.neg[a]][rs.neg[b]]:
                bad = (a, b)
                break
        if bad:
            break
    rep.add("sign_symmetries", bad is None, "" if bad is None else f"pair {bad}")
    bad = None
    for a in range(sc.n_roots):
        for b in range(sc.n_roots):
            g = sc.sum[a][b]
            if g < 0:
                continue
            ng = rs.neg[g]
            x = Fraction(sc.N[a][b]) / rs.norm2(rs.roots[g])
            y = Fraction(sc.N[b][ng]) / rs.norm2(rs.roots[a])
            z = Fraction(sc.N[ng][a]) / rs.norm2(rs.roots[b])
            if not x == y == z:
                bad = (a, b)
                break
        if bad:
            break
    rep.add("ratio_identity", bad is None, "" if bad is None else f"pair {bad}")
    return rep


def theta_check(sc: StructureConstants) -> Report:
    """theta is an involutive automorphism on all basis pairs."""
    rep = Report()
    bad = None
    for i in range(sc.dim):
        ti, si = theta_idx(sc, i)
        for j in range(sc.dim):
            tj, sj = theta_idx(sc, j)
            lhs: Dict[int, int] = {}
            for m, c in sc.bracket_idx(i, j):
                tm, sm = theta_idx(sc, m)
                lhs[tm] = lhs.get(tm, 0) + c * sm
            rhs = {m: c * si * sj for m, c in sc.bracket_idx(ti, tj)}
            if {k: v for k, v in lhs.items() if v} != rhs:
                bad = (i, j)
                break
        if bad:
            break
    rep.add("theta_automorphism", bad is None, "" if bad is None else f"pair {bad}")
    ok = all(theta_idx(sc, theta_idx(sc, i)[0]) == (i, -1) for i in range(sc.dim))
    rep.add("theta_involution", ok)
    return rep


def stem_sign_check(sc: StructureConstants, stem) -> Report:
    """N_{g,-a} N_{g,-b} = -1 for every stem root g = a + b with a in its branch."""
    rs = sc.rs
    rep = Report()
    bad = None
    for g, br in zip(stem.gammas, stem.branches):
        for a in br:
            b = rs.index[sub(rs.roots[g], rs.roots[a])]
            p = sc.N[g][rs.neg[a]] * sc.N[g][rs.neg[b]]
            if p != -1:
                bad = (g, a)
                break
        if bad:
            break
    rep.add("stem_sign_product", bad is None,
            "" if bad is None else f"gamma {rs.roots[bad[0]]}, alpha {rs.roots[bad[1]]}")
    return rep
