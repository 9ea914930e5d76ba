"""The reductive Lie algebra g = g_s + c over K, its elements and linear maps.

Basis order: E_a for every root a (canonical order), then the simple coroots
H_1..H_l, then central elements C_1..C_r.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from .chevalley import StructureConstants, compute_structure_constants, root_label
from .errors import DimensionMismatchError, HyperstemError, InvalidRhoError
from .linalg import nullspace
from .report import Report
from .roots import RootSystem, generate_root_system, negate, sub
from .scalars import HALF, I, ONE, UNITS, ZERO, KScalar, k
from .stem import Stem


class Element:
    """Sparse vector: basis index -> nonzero KScalar."""

    __slots__ = ("dim", "c")

    def __init__(self, dim: int, coeffs: Optional[Mapping[int, object]] = None):
        self.dim = dim
        self.c: Dict[int, KScalar] = {}
        if coeffs:
            for i, v in coeffs.items():
                v = k(v)
                if v:
                    self.c[i] = v

    @classmethod
    def _wrap(cls, dim, d) -> "Element":
        e = cls.__new__(cls)
        e.dim = dim
        e.c = d
        return e

    def _check(self, other: "Element"):
        if not isinstance(other, Element):
            raise TypeError("expected Element")
        if other.dim != self.dim:
            raise DimensionMismatchError(f"dimensions {self.dim} and {other.dim}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        d = dict(self.c)
        for i, v in other.c.items():
            s = d.get(i)
            s = v if s is None else s + v
            if s:
                d[i] = s
            else:
                d.pop(i, None)
        return Element._wrap(self.dim, d)

    def __neg__(self) -> "Element":
        return Element._wrap(self.dim, {i: -v for i, v in self.c.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __mul__(self, s) -> "Element":
        s = k(s)
        if not s:
            return Element(self.dim)
        return Element._wrap(self.dim, {i: v * s for i, v in self.c.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.dim == other.dim and self.c == other.c

    def __bool__(self) -> bool:
        return bool(self.c)

    def is_zero(self) -> bool:
        return not self.c

    def __getitem__(self, i: int) -> KScalar:
        return self.c.get(i, ZERO)

    def support(self) -> List[int]:
        return sorted(self.c)

    def conj(self) -> "Element":
        return Element._wrap(self.dim, {i: v.conj() for i, v in self.c.items()})

    def dense(self) -> List[KScalar]:
        return [self.c.get(i, ZERO) for i in range(self.dim)]

    def __repr__(self):
        inner = ", ".join(f"{i}: {v}" for i, v in sorted(self.c.items()))
        return f"Element({{{inner}}})"


def combine(dim: int, terms: Iterable) -> Element:
    """Sum of scalar * Element pairs."""
    acc: Dict[int, KScalar] = {}
    for s, x in terms:
        s = k(s)
        if not s:
            continue
        for i, v in x.c.items():
            t = acc.get(i)
            acc[i] = v * s if t is None else t + v * s
    return Element._wrap(dim, {i: v for i, v in acc.items() if v})


class LinOp:
    """K-linear map of g given by sparse columns (column j = image of basis j)."""

    __slots__ = ("dim", "cols")

    def __init__(self, dim: int, cols: Sequence[Element]):
        if len(cols) != dim or any(c.dim != dim for c in cols):
            raise DimensionMismatchError("LinOp columns do not match dimension")
        self.dim = dim
        self.cols = list(cols)

    @classmethod
    def identity(cls, dim: int) -> "LinOp":
        return cls(dim, [Element._wrap(dim, {j: ONE}) for j in range(dim)])

    @classmethod
    def zero(cls, dim: int) -> "LinOp":
        return cls(dim, [Element(dim) for _ in range(dim)])

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence]) -> "LinOp":
        n = len(rows)
        return cls(n, [Element(n, {i: rows[i][j] for i in range(n)}) for j in range(n)])

    def apply(self, x: Element) -> Element:
        if x.dim != self.dim:
            raise DimensionMismatchError("operator and element dimensions differ")
        cols = self.cols
        acc: Dict[int, KScalar] = {}
        for j, s in x.c.items():
            for i, v in cols[j].c.items():
                t = acc.get(i)
                acc[i] = v * s if t is None else t + v * s
        return Element._wrap(self.dim, {i: v for i, v in acc.items() if v})

    __call__ = apply

    def __matmul__(self, other: "LinOp") -> "LinOp":
        return LinOp(self.dim, [self.apply(c) for c in other.cols])

    def __add__(self, other: "LinOp") -> "LinOp":
        return LinOp(self.dim, [a + b for a, b in zip(self.cols, other.cols)])

    def __sub__(self, other: "LinOp") -> "LinOp":
        return LinOp(self.dim, [a - b for a, b in zip(self.cols, other.cols)])

    def __neg__(self) -> "LinOp":
        return LinOp(self.dim, [-a for a in self.cols])

    def scale(self, s) -> "LinOp":
        return LinOp(self.dim, [a * s for a in self.cols])

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinOp):
            return NotImplemented
        return self.dim == other.dim and self.cols == other.cols

    def entry(self, i: int, j: int) -> KScalar:
        return self.cols[j][i]

    def is_zero(self) -> bool:
        return not any(self.cols)

    def dense_rows(self) -> List[List[KScalar]]:
        return [[self.cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def inverse(self) -> "LinOp":
        """Exact inverse by sparse Gauss-Jordan elimination."""
        n = self.dim
        rows: List[Dict[int, KScalar]] = [dict() for _ in range(n)]
        for j, col in enumerate(self.cols):
            for i, v in col.c.items():
                rows[i][j] = v
        aug: List[Dict[int, KScalar]] = [{i: ONE} for i in range(n)]
        used = [False] * n
        for col in range(n):
            piv = None
            for r in range(n):
                if not used[r] and col in rows[r]:
                    if piv is None or len(rows[r]) < len(rows[piv]):
                        piv = r
            if piv is None:
                raise HyperstemError("operator is singular")
            used[piv] = True
            inv = rows[piv][col].inv()
            rows[piv] = {c: v * inv for c, v in rows[piv].items()}
            aug[piv] = {c: v * inv for c, v in aug[piv].items()}
            for r in range(n):
                if r != piv and col in rows[r]:
                    f = rows[r][col]
                    for src, dst in ((rows[piv], rows[r]), (aug[piv], aug[r])):
                        for c, v in src.items():
                            t = dst.get(c, ZERO) - f * v
                            if t:
                                dst[c] = t
                            else:
                                dst.pop(c, None)
        # each used row now has a single 1 in some column
        out = [None] * n
        for r in range(n):
            (col, v), = rows[r].items()
            assert v == ONE
            out[col] = aug[r]
        # out[col] is the row of the inverse for index col
        cols = [dict() for _ in range(n)]
        for i, row in enumerate(out):
            for j, v in row.items():
                cols[j][i] = v
        return LinOp(n, [Element._wrap(n, c) for c in cols])

    @classmethod
    def from_images(cls, domain: Sequence[Element], images: Sequence[Element]) -> "LinOp":
        """The linear map sending each domain vector to its image."""
        n = domain[0].dim
        if len(domain) != n or len(images) != n:
            raise DimensionMismatchError("need one image per basis vector")
        m = LinOp(n, list(domain))
        return LinOp(n, list(images)) @ m.inverse()

    def __repr__(self):
        return f"LinOp(dim={self.dim}, nnz={sum(len(c.c) for c in self.cols)})"


class ReductiveAlgebra:
    """Chevalley basis of g_s plus r central elements."""

    def __init__(self, rs: RootSystem, sc: Optional[StructureConstants] = None):
        self.rs = rs
        self.sc = sc if sc is not None else compute_structure_constants(rs)
        self.n_roots = len(rs.roots)
        self.l = rs.rank
        self.r = rs.spec.center_rank
        self.dim = self.n_roots + self.l + self.r
        self.h_start = self.n_roots
        self.c_start = self.n_roots + self.l
        self.labels = [root_label(x) for x in rs.roots] + \
            [f"H{i + 1}" for i in range(self.l)] + [f"C{j + 1}" for j in range(self.r)]
        self.basis_index = {s: i for i, s in enumerate(self.labels)}

    @property
    def spec(self):
        return self.rs.spec

    @property
    def cartan_indices(self) -> range:
        return range(self.h_start, self.dim)

    # basis vectors
    def basis(self, i: int) -> Element:
        return Element._wrap(self.dim, {i: ONE})

    def E(self, root: Sequence[int]) -> Element:
        return self.basis(self.rs.idx(root))

    def H(self, i: int) -> Element:
        """Simple coroot H_{alpha_i}, 0-based i."""
        return self.basis(self.h_start + i)

    def C(self, j: int) -> Element:
        return self.basis(self.c_start + j)

    def H_root(self, root: Sequence[int]) -> Element:
        a = self.rs.idx(root)
        return Element(self.dim, {self.h_start + i: m
                                  for i, m in enumerate(self.sc.coroot[a]) if m})

    def zero(self) -> Element:
        return Element(self.dim)

    # structure
    def bracket(self, x: Element, y: Element) -> Element:
        if x.dim != self.dim or y.dim != self.dim:
            raise DimensionMismatchError("element from a different algebra")
        tab = self.sc._table
        cs = self.c_start
        acc: Dict[int, KScalar] = {}
        for i, a in x.c.items():
            if i >= cs:
                continue
            row = tab[i]
            for j, b in y.c.items():
                if j >= cs:
                    continue
                terms = row[j]
                if not terms:
                    continue
                ab = a * b
                for m, c in terms:
                    t = acc.get(m)
                    v = ab * c
                    acc[m] = v if t is None else t + v
        return Element._wrap(self.dim, {i: v for i, v in acc.items() if v})

    def tau(self, x: Element) -> Element:
        """Antilinear conjugation: E_a -> -E_{-a}, H -> -H, C -> -C."""
        neg = self.rs.neg
        R = self.n_roots
        return Element._wrap(self.dim, {(neg[i] if i < R else i): -v.conj()
                                        for i, v in x.c.items()})

    def eval_root(self, root: Sequence[int], h: Element) -> KScalar:
        a = self.rs.idx(root)
        return self.eval_root_idx(a, h)

    def eval_root_idx(self, a: int, h: Element) -> KScalar:
        ev = self.sc.root_eval[a]
        tot = ZERO
        for i, v in h.c.items():
            if i < self.h_start:
                raise HyperstemError("element is not in the Cartan subalgebra")
            if i < self.c_start:
                c = ev[i - self.h_start]
                if c:
                    tot = tot + v * c
        return tot

    def is_cartan(self, x: Element) -> bool:
        return all(i >= self.h_start for i in x.c)

    def ad(self, x: Element) -> LinOp:
        return LinOp(self.dim, [self.bracket(x, self.basis(j)) for j in range(self.dim)])

    def element_from_labels(self, coeffs: Mapping[str, object]) -> Element:
        try:
            return Element(self.dim, {self.basis_index[s]: v for s, v in coeffs.items()})
        except KeyError as e:
            raise HyperstemError(f"unknown basis label {e.args[0]!r}") from None

    def __repr__(self):
        return f"ReductiveAlgebra({self.spec}, dim={self.dim})"


_ALG_CACHE: Dict[str, ReductiveAlgebra] = {}


def algebra_for(spec) -> ReductiveAlgebra:
    rs = generate_root_system(spec)
    key = str(rs.spec)
    if key not in _ALG_CACHE:
        _ALG_CACHE[key] = ReductiveAlgebra(rs)
    return _ALG_CACHE[key]


def bracket(alg: ReductiveAlgebra, x: Element, y: Element) -> Element:
    return alg.bracket(x, y)


def tau(alg: ReductiveAlgebra, x: Element) -> Element:
    return alg.tau(x)


def eval_root(alg: ReductiveAlgebra, root: Sequence[int], h: Element) -> KScalar:
    return alg.eval_root(root, h)


def op_commutes_with_tau(alg: ReductiveAlgebra, op: LinOp) -> bool:
    for j in range(alg.dim):
        e = alg.basis(j)
        if op.apply(alg.tau(e)) != alg.tau(op.apply(e)):
            return False
    return True


@dataclass
class StemFrame:
    alg: ReductiveAlgebra
    stem: Stem
    rho: List[KScalar]
    E_plus: List[Element]
    E_minus: List[Element]
    H: List[Element]
    W: List[Element]
    X: List[Element]
    Y: List[Element]
    o_basis: List[Element]
    Vplus: List[List[int]]
    Vminus: List[List[int]]

    @property
    def d(self) -> int:
        return self.stem.d


def x_element(alg: ReductiveAlgebra, g: int, rho: KScalar) -> Element:
    """(rho E_g - conj(rho) E_{-g}) / 2."""
    return Element(alg.dim, {g: rho * HALF, alg.rs.neg[g]: -rho.conj() * HALF})


def stem_frame(alg: ReductiveAlgebra, stem: Stem,
               rho: Optional[Sequence] = None) -> StemFrame:
    d = stem.d
    if rho is None:
        rho = [ONE] * d
    if isinstance(rho, Mapping):
        rho = [rho.get(j, ONE) for j in range(d)]
    rho = [k(r) for r in rho]
    if len(rho) != d:
        raise InvalidRhoError(f"expected {d} rho values, got {len(rho)}")
    for r in rho:
        if r not in UNITS:
            raise InvalidRhoError(f"rho must be one of 1, i, -1, -i; got {r}")
    rs = alg.rs
    Ep, Em, Hs, W, X, Y = [], [], [], [], [], []
    for g, r in zip(stem.gammas, rho):
        Ep.append(alg.basis(g))
        Em.append(alg.basis(rs.neg[g]))
        h = alg.H_root(rs.roots[g])
        Hs.append(h)
        W.append(h * (I * HALF))
        X.append(x_element(alg, g, r))
        Y.append(x_element(alg, g, I * r))
    o_basis = o_basis_for(alg, stem)
    Vp = [list(b) for b in stem.branches]
    Vm = [[rs.neg[a] for a in b] for b in stem.branches]
    return StemFrame(alg, stem, rho, Ep, Em, Hs, W, X, Y, o_basis, Vp, Vm)


def o_basis_for(alg: ReductiveAlgebra, stem: Stem) -> List[Element]:
    """i times the reduced-echelon rational kernel of {gamma(H) = 0} on h."""
    n = alg.l + alg.r
    rows = []
    for g in stem.gammas:
        ev = alg.sc.root_eval[g]
        rows.append([Fraction(ev[i]) for i in range(alg.l)] + [Fraction(0)] * alg.r)
    ker = nullspace(rows, n, Fraction(0), Fraction(1))
    return [Element(alg.dim, {alg.h_start + i: I * v for i, v in enumerate(vec) if v})
            for vec in ker]


def heisenberg_check(alg: ReductiveAlgebra, stem: Stem) -> Report:
    rs = alg.rs
    sc = alg.sc
    rep = Report()
    pos = set(rs.positive)
    seen = []
    for g, br in zip(stem.gammas, stem.branches):
        seen.append(g)
        seen.extend(br)
    ok = sorted(seen) == sorted(pos)
    rep.add("nplus_decomposition", ok, "" if ok else "components do not tile n+")
    bad = None
    for k_, (g, br) in enumerate(zip(stem.gammas, stem.branches)):
        elems = [g] + list(br)
        # every bracket lands in g(gamma); only the mu-pairs are nonzero
        for a in elems:
            for b in elems:
                terms = sc.bracket_idx(a, b)
                want = ()
                if a != g and b != g and b == stem.mu_idx(a):
                    want = ((g, sc.N[a][b]),)
                if tuple(terms) != want or (want and want[0][1] == 0):
                    bad = ("bracket", g, a, b)
                    break
            if bad:
                break
        if bad:
            break
        # center: kernel of x -> [x, heis] computed over Q
        rows = []
        for b in elems:
            row = []
            for a in elems:
                terms = dict(sc.bracket_idx(a, b))
                row.append(Fraction(terms.get(g, 0)))
            rows.append(row)
        ker = nullspace(rows, len(elems), Fraction(0), Fraction(1))
        if len(ker) != 1 or any(ker[0][1:]) or not ker[0][0]:
            bad = ("center", g, None, None)
            break
    rep.add("heisenberg_components", bad is None,
            "" if bad is None else f"{bad[0]} failure at {rs.roots[bad[1]]}")
    return rep


def sl2_invariance_check(alg: ReductiveAlgebra, frame: StemFrame) -> Report:
    """span{E_a, E_{s_g a}} is ad sl_g(2)-invariant for a in the branch of g, and
    sl_d(2) kills V_g when g and d are incomparable."""
    rs = alg.rs
    stem = frame.stem
    rep = Report()
    bad = None
    for k_, (g, br) in enumerate(zip(stem.gammas, stem.branches)):
        sl = [frame.E_plus[k_], frame.E_minus[k_], frame.H[k_]]
        for a in br:
            pair = {a, rs.index[rs.reflect(rs.roots[g], rs.roots[a])]}
            for x in sl:
                for b in pair:
                    y = alg.bracket(x, alg.basis(b))
                    if not set(y.c) <= pair:
                        bad = (g, a)
        for j in range(stem.d):
            if j == k_ or stem.precedes_idx(k_, j) or stem.precedes_idx(j, k_):
                continue
            sl_j = [frame.E_plus[j], frame.E_minus[j], frame.H[j]]
            for a in br + [rs.neg[x] for x in br]:
                for x in sl_j:
                    if alg.bracket(x, alg.basis(a)):
                        bad = (g, a)
    rep.add("sl2_invariance", bad is None,
            "" if bad is None else f"gamma {rs.roots[bad[0]]}, root {rs.roots[bad[1]]}")
    return rep
