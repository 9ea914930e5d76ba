"""Complex structures I of Borel type, admissibility, the matching J, and checks.

I acts as +i on n+ and on a subspace h+ of the Cartan subalgebra, and as -i on
their conjugates. h+ is described by real pairs (u, v) of Cartan elements with
Iu = v, so that u - iv spans one direction of h+. A matching J anticommutes
with I and is integrable; it is built either from explicit formulas or by
conjugating I with the Cayley transform.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import (Element, LinOp, ReductiveAlgebra, StemFrame, algebra_for,
                      op_commutes_with_tau, stem_frame)
from .cayley import cayley_inverse, cayley_transform, opposition_involution
from .errors import (BadBMatrixError, NotAComplexStructureError, NotAdmissibleError,
                     NotMatchingError, ObstructionError, VerificationError)
from .linalg import nullspace, rank, solve
from .report import Report
from .roots import AlgebraSpec, generate_root_system, parse_spec
from .scalars import HALF, I as IU, ONE, ZERO, KScalar, k
from .stem import Stem, compute_stem

Matrix = List[List[KScalar]]


# ---------------------------------------------------------------- I

@dataclass
class ComplexStructureI:
    op: LinOp
    hplus_basis: List[Element]                  # U_1..U_m
    pairs: List[Tuple[Element, Element]]        # (u, Iu), real Cartan elements
    Z: Optional[List[Element]] = None           # Z_gamma = I W_gamma
    S: Optional[List[Element]] = None           # basis of j+

    @property
    def m(self) -> int:
        return len(self.hplus_basis)


def build_I(alg: ReductiveAlgebra, pairs: Sequence[Tuple[Element, Element]],
            Z: Optional[List[Element]] = None,
            S: Optional[List[Element]] = None) -> ComplexStructureI:
    """The Borel-type I with I u = v, I v = -u for each pair.

    The pairs must consist of tau-fixed Cartan elements and together form a
    basis of the Cartan subalgebra.
    """
    nh = alg.l + alg.r
    if len(pairs) * 2 != nh:
        raise NotAComplexStructureError(f"need {nh // 2} pairs for a Cartan of dim {nh}")
    flat = [x for p in pairs for x in p]
    for x in flat:
        if not alg.is_cartan(x) or alg.tau(x) != x:
            raise NotAComplexStructureError("pair vectors must be tau-fixed Cartan elements")
    rs = alg.rs
    pos = set(rs.positive)
    domain, images = [], []
    for a in range(alg.n_roots):
        e = alg.basis(a)
        domain.append(e)
        images.append(e * (IU if a in pos else -IU))
    for u, v in pairs:
        domain += [u, v]
        images += [v, -u]
    try:
        op = LinOp.from_images(domain, images)
    except Exception as e:  # singular domain
        raise NotAComplexStructureError("pair vectors do not span the Cartan subalgebra") from e
    hplus = [u - v * IU for u, v in pairs]
    return ComplexStructureI(op, hplus, [tuple(p) for p in pairs], Z, S)


def _obstruction(rank: int, d: int) -> Optional[str]:
    if rank < 2 * d:
        return "rank < 2d"
    if (rank - 2 * d) % 4:
        return "rank - 2d is not divisible by 4"
    return None


def build_I_canonical(alg: ReductiveAlgebra, stem: Stem, frame: StemFrame) -> ComplexStructureI:
    """I with Z_gamma the leading o-vectors and the rest paired consecutively."""
    d = stem.d
    rank = alg.l + alg.r
    why = _obstruction(rank, d)
    if why:
        raise ObstructionError(f"{alg.spec}: rank {rank}, d = {d}: {why}; "
                               "no hypercomplex structure exists")
    o = frame.o_basis
    Z, rest = o[:d], o[d:]
    pairs = [(frame.W[s], Z[s]) for s in range(d)]
    pairs += [(rest[2 * t], rest[2 * t + 1]) for t in range(len(rest) // 2)]
    S = [rest[2 * t] - rest[2 * t + 1] * IU for t in range(len(rest) // 2)]
    return build_I(alg, pairs, Z=list(Z), S=S)


@dataclass(frozen=True)
class Admissibility:
    ok: bool
    witness: Optional[Tuple[int, int]] = None   # stem slots (gamma, delta)
    reason: str = ""

    def __bool__(self):
        return self.ok


def _w(alg: ReductiveAlgebra, g: int) -> Element:
    return alg.H_root(alg.rs.roots[g]) * (IU * HALF)


def check_admissible(alg: ReductiveAlgebra, stem: Stem, I: ComplexStructureI) -> Admissibility:
    """dim u divisible by 4 and gamma(I W_delta) = 0 for all stem roots."""
    if alg.dim % 4:
        return Admissibility(False, None, f"dim {alg.dim} is not divisible by 4")
    for t, dl in enumerate(stem.gammas):
        iw = I.op.apply(_w(alg, dl))
        if not alg.is_cartan(iw):
            return Admissibility(False, None, "I does not preserve the Cartan subalgebra")
        for s, g in enumerate(stem.gammas):
            if alg.eval_root_idx(g, iw):
                return Admissibility(False, (s, t),
                                     f"gamma{s + 1}(I W_gamma{t + 1}) != 0")
    return Admissibility(True)


# ---------------------------------------------------------------- b

def default_b(p: int) -> Matrix:
    b = [[ZERO] * p for _ in range(p)]
    for t in range(0, p - 1, 2):
        b[t + 1][t] = ONE
        b[t][t + 1] = -ONE
    return b


def mat_mul(a: Matrix, b: Matrix, ncols: Optional[int] = None) -> Matrix:
    n = len(a)
    m = ncols if ncols is not None else (len(b[0]) if b else 0)
    inner = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = ZERO
            for t in range(inner):
                x = a[i][t]
                if x:
                    y = b[t][j]
                    if y:
                        s = s + x * y
            row.append(s)
        out.append(row)
    return out


def mat_conj(a: Matrix) -> Matrix:
    return [[x.conj() for x in row] for row in a]


def mat_identity(n: int, s=ONE) -> Matrix:
    return [[s if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(list(x) == list(y) for x, y in zip(a, b))


def b_condition_holds(b: Matrix) -> bool:
    p = len(b)
    return mat_eq(mat_mul(mat_conj(b), b), mat_identity(p, -ONE))


def validate_b(b, p: int) -> Matrix:
    if b is None:
        return default_b(p)
    b = [[k(x) for x in row] for row in b]
    if len(b) != p or any(len(row) != p for row in b):
        raise BadBMatrixError(f"b must be {p}x{p}")
    if not b_condition_holds(b):
        raise BadBMatrixError("b does not satisfy conj(b) b = -Id")
    return b


# ---------------------------------------------------------------- J

@dataclass
class HyperStructure:
    alg: ReductiveAlgebra
    frame: StemFrame
    istruct: ComplexStructureI
    J: LinOp
    K: LinOp
    b: Matrix
    S: List[Element]
    T: List[Element]
    provenance: str
    report: Report = field(default_factory=Report)

    @property
    def I(self) -> LinOp:
        return self.istruct.op

    @property
    def rho(self) -> List[KScalar]:
        return self.frame.rho

    @property
    def p(self) -> int:
        return len(self.S)


def _span_intersection(alg: ReductiveAlgebra, A: List[Element], B: List[Element]) -> List[Element]:
    """Basis of span(A) & span(B) for Cartan elements, as combinations of A."""
    idx = list(alg.cartan_indices)
    rows = [[x[i] for x in A] + [-y[i] for y in B] for i in idx]
    ker = nullspace(rows, len(A) + len(B), ZERO, ONE)
    out = []
    for v in ker:
        e = alg.zero()
        for c, x in zip(v[:len(A)], A):
            if c:
                e = e + x * c
        if e:
            out.append(e)
    return out


def _stem_data(alg: ReductiveAlgebra, frame: StemFrame, I: ComplexStructureI):
    Z = I.Z if I.Z is not None else [I.op.apply(w) for w in frame.W]
    P = [w - z * IU for w, z in zip(frame.W, Z)]
    Q = [w + z * IU for w, z in zip(frame.W, Z)]
    if I.S is not None:
        S = list(I.S)
    else:
        S = _span_intersection(alg, I.hplus_basis, frame.o_basis)
    T = [alg.tau(s) for s in S]
    return Z, P, Q, S, T


def _prepare(alg, stem, frame, I, b):
    if stem.gammas != frame.stem.gammas:
        raise NotAdmissibleError("frame was built for a different stem")
    adm = check_admissible(alg, stem, I)
    if not adm:
        raise NotAdmissibleError(f"I is not admissible: {adm.reason}")
    Z, P, Q, S, T = _stem_data(alg, frame, I)
    p = (alg.l + alg.r) // 2 - stem.d
    if len(S) != p:
        raise NotAdmissibleError(f"j+ has dimension {len(S)}, expected {p}")
    return Z, P, Q, S, T, validate_b(b, p)


def _j_on_j(S, T, b):
    dom, img = [], []
    p = len(S)
    for q in range(p):
        dom.append(S[q])
        img.append(_lin(T, [b[t][q] for t in range(p)], S[q].dim))
    for q in range(p):
        dom.append(T[q])
        img.append(_lin(S, [b[t][q].conj() for t in range(p)], S[q].dim))
    return dom, img


def _lin(vecs, coefs, dim) -> Element:
    out = Element(dim)
    for c, v in zip(coefs, vecs):
        if c:
            out = out + v * c
    return out


def build_J_direct(alg: ReductiveAlgebra, stem: Stem, frame: StemFrame,
                   I: ComplexStructureI, b=None, verify: bool = True) -> HyperStructure:
    """J from explicit images of the root vectors and of h."""
    Z, P, Q, S, T, b = _prepare(alg, stem, frame, I, b)
    rs = alg.rs
    sc = alg.sc
    dom, img = [], []
    for s, g in enumerate(stem.gammas):
        r = frame.rho[s]
        rb = r.conj()
        ng = rs.neg[g]
        dom += [alg.basis(g), alg.basis(ng), P[s], Q[s]]
        img += [Q[s] * rb, P[s] * (-r), alg.basis(ng) * rb, alg.basis(g) * (-r)]
        for a in stem.branches[s]:
            n = sc.N[g][rs.neg[a]]
            t = rs.index[rs.reflect(rs.roots[g], rs.roots[a])]   # alpha - gamma
            dom += [alg.basis(a), alg.basis(rs.neg[a])]
            img += [alg.basis(t) * (IU * rb * n), alg.basis(rs.neg[t]) * (-IU * r * n)]
    d2, i2 = _j_on_j(S, T, b)
    J = LinOp.from_images(dom + d2, img + i2)
    hs = HyperStructure(alg, frame, I, J, I.op @ J, b, S, T, "direct")
    return _finish(hs, verify)


def build_J_cayley(alg: ReductiveAlgebra, stem: Stem, frame: StemFrame,
                   I: ComplexStructureI, b=None, verify: bool = True) -> HyperStructure:
    """J = c I c^-1 away from j, and the b-matrix on j."""
    Z, P, Q, S, T, b = _prepare(alg, stem, frame, I, b)
    c = cayley_transform(alg, stem, frame)
    ci = cayley_inverse(alg, stem, frame)
    cic = c @ I.op @ ci
    dom = [alg.basis(a) for a in range(alg.n_roots)] + P + Q
    img = [cic.apply(x) for x in dom]
    d2, i2 = _j_on_j(S, T, b)
    J = LinOp.from_images(dom + d2, img + i2)
    hs = HyperStructure(alg, frame, I, J, I.op @ J, b, S, T, "cayley")
    return _finish(hs, verify)


def _finish(hs: HyperStructure, verify: bool) -> HyperStructure:
    if verify:
        hs.report = verify_hypercomplex(hs.alg, hs)
        if not hs.report.all_passed:
            raise VerificationError("failed checks: " + ", ".join(hs.report.failures()))
    return hs


# ---------------------------------------------------------------- integrability

def nijenhuis(alg: ReductiveAlgebra, op: LinOp, x: Element, y: Element) -> Element:
    """[op x, op y] - op[op x, y] - op[x, op y] - [x, y]."""
    ox, oy = op.apply(x), op.apply(y)
    br = alg.bracket
    return br(ox, oy) - op.apply(br(ox, y)) - op.apply(br(x, oy)) - br(x, y)


@dataclass
class NijenhuisReport:
    operator: str
    worst_pair: Optional[Tuple[str, str]]
    residual: Optional[Element]
    pairs_checked: int
    subalgebra_ok: bool

    @property
    def passed(self) -> bool:
        return self.worst_pair is None


def _require_complex(alg: ReductiveAlgebra, op: LinOp, name: str):
    minus = LinOp.identity(alg.dim).scale(-ONE)
    if op @ op != minus:
        raise NotAComplexStructureError(f"{name}^2 != -1")
    if not op_commutes_with_tau(alg, op):
        raise NotAComplexStructureError(f"{name} does not commute with tau")


def plus_eigenspace(alg: ReductiveAlgebra, op: LinOp) -> List[Element]:
    rows = op.dense_rows()
    for i in range(alg.dim):
        rows[i][i] = rows[i][i] - IU
    return [Element(alg.dim, dict(enumerate(v))) for v in nullspace(rows, alg.dim, ZERO, ONE)]


def is_integrable(alg: ReductiveAlgebra, op: LinOp, name: str = "I") -> Tuple[bool, NijenhuisReport]:
    """Integrability by two routes: m+ closed under brackets, and N == 0."""
    _require_complex(alg, op, name)
    mplus = plus_eigenspace(alg, op)
    sub_ok = True
    for a, u in enumerate(mplus):
        for v in mplus[a + 1:]:
            z = alg.bracket(u, v)
            if op.apply(z) != z * IU:
                sub_ok = False
                break
        if not sub_ok:
            break
    worst, resid, count = None, None, 0
    for i in range(alg.dim):
        x = alg.basis(i)
        for j in range(i + 1, alg.dim):
            count += 1
            n = nijenhuis(alg, op, x, alg.basis(j))
            if n:
                worst, resid = (alg.labels[i], alg.labels[j]), n
                break
        if worst:
            break
    rep = NijenhuisReport(name, worst, resid, count, sub_ok)
    if sub_ok != rep.passed:
        raise VerificationError("subalgebra and Nijenhuis criteria disagree")
    return rep.passed, rep


# ---------------------------------------------------------------- blocks

@dataclass
class MatchingBlocks:
    a: Matrix        # n x n, rows beta, columns alpha (positive roots)
    b: Matrix        # m x m
    xi: Matrix       # m x n
    eta: Matrix      # n x m
    positive: List[int]
    report: Report


def _cartan_coords(alg: ReductiveAlgebra, basis: List[Element], x: Element):
    idx = list(alg.cartan_indices)
    rows = [[v[i] for v in basis] for i in idx]
    sol = solve(rows, [[x[i] for i in idx]], ZERO)
    if sol is None:
        raise NotMatchingError("h+ and h- do not span the Cartan subalgebra")
    back = alg.zero()
    for c, v in zip(sol[0], basis):
        if c:
            back = back + v * c
    if back != Element(alg.dim, {i: x[i] for i in idx}):
        raise NotMatchingError("Cartan component outside the Cartan subalgebra")
    return sol[0]


def extract_matching_blocks(alg: ReductiveAlgebra, stem: Stem, I: ComplexStructureI,
                            J: LinOp) -> MatchingBlocks:
    """Blocks a, b, xi, eta of J in the bases E_{+-alpha}, U_q, V_q = tau U_q."""
    minus = LinOp.identity(alg.dim).scale(-ONE)
    if J @ J != minus or I.op @ J != -(J @ I.op):
        raise NotMatchingError("J is not a complex structure anticommuting with I")
    rs = alg.rs
    pos = list(rs.positive)
    n, m = len(pos), I.m
    U = I.hplus_basis
    V = [alg.tau(u) for u in U]
    UV = U + V

    def split(x: Element):
        if any(i < alg.n_roots and i in set(pos) for i in x.c):
            raise NotMatchingError("J maps m+ outside m-")
        col_e = [x[rs.neg[b]] for b in pos]
        coords = _cartan_coords(alg, UV, x)
        if any(coords[:m]):
            raise NotMatchingError("J maps m+ outside m-")
        return col_e, coords[m:]

    a = [[ZERO] * n for _ in range(n)]
    xi = [[ZERO] * n for _ in range(m)]
    eta = [[ZERO] * m for _ in range(n)]
    b = [[ZERO] * m for _ in range(m)]
    for j, al in enumerate(pos):
        ce, cv = split(J.cols[al])
        for i in range(n):
            a[i][j] = ce[i]
        for t in range(m):
            xi[t][j] = cv[t]
    for q, u in enumerate(U):
        ce, cv = split(J.apply(u))
        for i in range(n):
            eta[i][q] = ce[i]
        for t in range(m):
            b[t][q] = cv[t]

    rep = Report()
    ca, cb, cx, ce_ = mat_conj(a), mat_conj(b), mat_conj(xi), mat_conj(eta)
    r1 = _msub(mat_mul(ce_, xi, n), mat_mul(ca, a, n))
    r2 = _msub(mat_mul(cb, xi, n), mat_mul(cx, a, n))
    r3 = _msub(mat_mul(ca, eta, m), mat_mul(ce_, b, m))
    r4 = _msub(mat_mul(cx, eta, m), mat_mul(cb, b, m))
    rep.add("block_relation_1", mat_eq(r1, mat_identity(n)))
    rep.add("block_relation_2", mat_eq(r2, [[ZERO] * n for _ in range(m)]))
    rep.add("block_relation_3", mat_eq(r3, [[ZERO] * m for _ in range(n)]))
    rep.add("block_relation_4", mat_eq(r4, mat_identity(m)))
    rep.add("a_antisymmetric", all(a[i][j] == -a[j][i] for i in range(n) for j in range(n)))

    where = {r: i for i, r in enumerate(pos)}
    want = set()
    for br in stem.branches:
        for al in br:
            want.add((where[stem.mu_idx(al)], where[al]))
    have = {(i, j) for i in range(n) for j in range(n) if a[i][j]}
    diff = sorted(have ^ want)
    rep.add("a_support", not diff,
            "" if not diff else f"entry ({rs.roots[pos[diff[0][0]]]}, {rs.roots[pos[diff[0][1]]]})")

    # stem roots: J E_gamma lies in h-, and the dual relations with P, Q
    Z, P, Q, S, T = _stem_data(alg, stem_frame_like(alg, stem), I)
    ok_h = ok_cross = ok_u = ok_ih = ok_pq = True
    for s, g in enumerate(stem.gammas):
        jg = J.cols[g]
        if not alg.is_cartan(jg) or I.op.apply(jg) != jg * (-IU):
            ok_h = False
            continue
        for t, dl in enumerate(stem.gammas):
            if t != s and alg.eval_root_idx(dl, jg):
                ok_cross = False
        ug = J.cols[rs.neg[g]]
        if not alg.is_cartan(ug) or alg.eval_root_idx(g, ug).norm() != 1:
            ok_u = False
        ih = I.op.apply(alg.H_root(rs.roots[g]))
        if alg.eval_root_idx(g, ih):
            ok_ih = False
        for t, dl in enumerate(stem.gammas):
            want_v = IU if s == t else ZERO
            if alg.eval_root_idx(dl, P[s]) != want_v or alg.eval_root_idx(dl, Q[s]) != want_v:
                ok_pq = False
    rep.add("J_stem_in_hminus", ok_h)
    rep.add("stem_cross_vanishing", ok_cross)
    rep.add("unit_gamma_U", ok_u)
    rep.add("gamma_I_H_gamma_zero", ok_ih)
    rep.add("gamma_P_Q_delta", ok_pq)
    ok_j = True
    for sv in S:
        js = J.apply(sv)
        if not alg.is_cartan(js) or not _in_span(alg, T, js):
            ok_j = False
    rep.add("J_jplus_in_jminus", ok_j)
    rep.add("h_splitting", len(P) == stem.d and len(S) == m - stem.d,
            f"dim v+ = {len(P)}, dim j+ = {len(S)}")
    return MatchingBlocks(a, b, xi, eta, pos, rep)


def stem_frame_like(alg: ReductiveAlgebra, stem: Stem) -> StemFrame:
    # only W and o_basis are used, and neither depends on rho
    return stem_frame(alg, stem)


def _msub(x: Matrix, y: Matrix) -> Matrix:
    return [[p - q for p, q in zip(r, s)] for r, s in zip(x, y)]


def _in_span(alg: ReductiveAlgebra, vecs: List[Element], x: Element) -> bool:
    if not x:
        return True
    idx = list(alg.cartan_indices)
    rows = [[v[i] for v in vecs] + [x[i]] for i in idx]
    base = [[v[i] for v in vecs] for i in idx]
    return rank(rows, ZERO) == (rank(base, ZERO) if vecs else 0)


# ---------------------------------------------------------------- classification

@dataclass(frozen=True)
class Classification:
    spec: str
    rank: int
    dim: int
    d: int
    complex_ok: bool
    hyper_ok: bool
    p: Optional[int]
    reason: str
    notes: Tuple[str, ...]

    def to_json(self) -> dict:
        return {"spec": self.spec, "rank": self.rank, "dim": self.dim, "d": self.d,
                "complex_ok": self.complex_ok, "hyper_ok": self.hyper_ok, "p": self.p,
                "reason": self.reason, "notes": list(self.notes)}


def classify_algebra(spec) -> Classification:
    if not isinstance(spec, AlgebraSpec):
        spec = parse_spec(spec)
    rank = spec.rank
    if spec.components:
        rs = generate_root_system(spec)
        d = compute_stem(rs).d
        dim = len(rs.roots) + rank
    else:
        d, dim = 0, spec.center_rank
    why = _obstruction(rank, d)
    notes = []
    if not why:
        comps = spec.components
        if len(comps) == 1 and comps[0].family == "A" and comps[0].rank % 2 == 0 \
                and not spec.center_rank:
            notes.append(f"equivalence classes: Z2\\GL({d},R)")
        if len(comps) == 1 and comps[0].family == "C" and spec.center_rank == comps[0].rank:
            notes.append(f"equivalence classes: GL_{d}(Z)\\GL_{d}(R)")
    return Classification(str(spec), rank, dim, d, rank % 2 == 0, why is None,
                          None if why else (rank - 2 * d) // 2, why or "", tuple(notes))


# ---------------------------------------------------------------- verification

def _safe_integrable(alg, op, name):
    try:
        ok, rep = is_integrable(alg, op, name)
        return ok, "" if ok else f"N({rep.worst_pair[0]}, {rep.worst_pair[1]}) != 0"
    except NotAComplexStructureError as e:
        return False, str(e)


def verify_hypercomplex(alg: ReductiveAlgebra, hs: HyperStructure,
                        stem: Optional[Stem] = None) -> Report:
    rep = Report()
    Iop, J, K = hs.I, hs.J, hs.K
    ident = LinOp.identity(alg.dim)
    minus = ident.scale(-ONE)
    for name, op in (("I", Iop), ("J", J), ("K", K)):
        rep.add(f"{name}_squared", op @ op == minus)
    IJ, JI = Iop @ J, J @ Iop
    rep.add("IJ_anticommute", IJ == -JI)
    rep.add("K_equals_IJ", K == IJ)
    JK, KJ = J @ K, K @ J
    rep.add("JK_equals_I", JK == Iop and KJ == -Iop)
    for name, op in (("I", Iop), ("J", J), ("K", K)):
        rep.add(f"{name}_tau", op_commutes_with_tau(alg, op))

    rs = alg.rs
    bad = next((a for a in rs.positive if Iop.cols[a] != alg.basis(a) * IU), None)
    if bad is None:
        bad_h = next((u for u in hs.istruct.hplus_basis
                      if not alg.is_cartan(u) or Iop.apply(u) != u * IU), None)
        ok = bad_h is None and len(hs.istruct.hplus_basis) * 2 == alg.l + alg.r
        rep.add("I_borel", ok, "" if ok else "h+ basis is not an i-eigenspace of I")
    else:
        rep.add("I_borel", False, f"I E{list(rs.roots[bad])}")
    rep.add("T_is_tau_S", len(hs.T) == len(hs.S) and
            all(alg.tau(s) == t for s, t in zip(hs.S, hs.T)))
    frame = hs.frame
    stem = stem or frame.stem
    adm = check_admissible(alg, stem, hs.istruct)
    rep.add("I_admissible", adm.ok, adm.reason)
    rep.add("b_condition", b_condition_holds(hs.b), "" if b_condition_holds(hs.b) else
            "conj(b) b != -Id")
    ok_b = True
    for q, sv in enumerate(hs.S):
        want = _lin(hs.T, [hs.b[t][q] for t in range(len(hs.S))], alg.dim)
        if J.apply(sv) != want:
            ok_b = False
    rep.add("J_on_j_is_b", ok_b)

    for name, op in (("I", Iop), ("J", J), ("K", K)):
        ok, detail = _safe_integrable(alg, op, name)
        rep.add(f"{name}_integrable", ok, detail)

    if hs.p == 0 and stem.d:
        phi = opposition_involution(alg, stem, frame)
        mplus = [alg.basis(a) for a in rs.positive] + list(hs.istruct.hplus_basis)
        rep.add("phi_swaps_m", all(Iop.apply(phi.apply(x)) == phi.apply(x) * (-IU)
                                   for x in mplus))
        rep.add("phi_swaps_h", all(Iop.apply(phi.apply(x)) == phi.apply(x) * (-IU)
                                   for x in hs.istruct.hplus_basis))
        rep.add("phi_anticommutes_I", phi @ Iop == -(Iop @ phi))
    return rep


def build_hyperstructure(spec, rho=None, b=None, route: str = "direct",
                         verify: bool = True) -> HyperStructure:
    """Canonical I and a matching J for a spec string."""
    alg = algebra_for(spec)
    stem = compute_stem(alg.rs)
    frame = stem_frame(alg, stem, rho)
    I = build_I_canonical(alg, stem, frame)
    if route == "direct":
        return build_J_direct(alg, stem, frame, I, b, verify)
    if route == "cayley":
        return build_J_cayley(alg, stem, frame, I, b, verify)
    raise ValueError(f"unknown route {route!r}")
