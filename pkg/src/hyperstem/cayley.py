"""Exact exponentials of ad X_gamma: the Cayley transform and the opposition involution.

For X = sum of X_gamma over a set of stem roots, ad X is diagonalizable with
eigenvalues i*m/2, where m runs over the integers sum_gamma C(alpha, gamma)
(alpha a root) together with 0. exp(k*pi/2 ad X) is therefore the Newton
interpolation polynomial of lambda -> exp(k*pi/2 lambda) at those nodes,
evaluated at ad X. Every node value is a power of the primitive eighth root of
unity, so the whole computation stays inside K.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Sequence

from .algebra import (Element, LinOp, ReductiveAlgebra, StemFrame,
                      op_commutes_with_tau)
from .errors import HyperstemError
from .report import Report
from .scalars import HALF, I, ONE, SQRT2, ZERO, KScalar, zeta8_power
from .stem import Stem


def _ad_x(alg: ReductiveAlgebra, frame: StemFrame, slots: Sequence[int]) -> LinOp:
    x = alg.zero()
    for s in slots:
        x = x + frame.X[s]
    return alg.ad(x)


def _eigen_m(alg: ReductiveAlgebra, frame: StemFrame, slots: Sequence[int]) -> List[int]:
    rs = alg.rs
    gam = [rs.roots[frame.stem.gammas[s]] for s in slots]
    ms = {0}
    for r in rs.roots:
        ms.add(sum(rs.cartan_integer(r, g) for g in gam))
    return sorted(ms)


def _divided_differences(xs: List[KScalar], ys: List[KScalar]) -> List[KScalar]:
    coef = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    return coef


def exp_ad(alg: ReductiveAlgebra, frame: StemFrame, slots: Sequence[int], k: int,
           check: bool = True) -> LinOp:
    """exp(k*pi/2 ad X) with X = sum of X_gamma for the given stem slots."""
    A = _ad_x(alg, frame, slots)
    ms = _eigen_m(alg, frame, slots)
    nodes = [I * KScalar(m) * HALF for m in ms]
    vals = [zeta8_power(k * m) for m in ms]
    n = alg.dim
    ident = LinOp.identity(n)
    shifted = [A - ident.scale(lam) for lam in nodes]
    if check:
        prod = ident
        for s in shifted:
            prod = s @ prod
        if not prod.is_zero():
            raise HyperstemError("ad X has an eigenvalue outside the expected set")
    coef = _divided_differences(nodes, vals)
    out = ident.scale(coef[-1])
    for j in range(len(nodes) - 2, -1, -1):
        out = shifted[j] @ out + ident.scale(coef[j])
    return out


def _cache(frame: StemFrame) -> Dict:
    c = frame.__dict__.get("_auto")
    if c is None:
        c = frame.__dict__["_auto"] = {}
    return c


def cayley_factor(alg: ReductiveAlgebra, frame: StemFrame, slot: int, k: int = 1) -> LinOp:
    """exp(k*pi/2 ad X_gamma) for a single stem root."""
    key = ("factor", slot, k)
    cache = _cache(frame)
    if key not in cache:
        cache[key] = exp_ad(alg, frame, [slot], k)
    return cache[key]


def _product(alg: ReductiveAlgebra, frame: StemFrame, k: int) -> LinOp:
    # the X_gamma commute, so the factors may be multiplied in any order
    key = ("full", k)
    cache = _cache(frame)
    if key not in cache:
        out = LinOp.identity(alg.dim)
        for s in range(frame.d):
            out = cayley_factor(alg, frame, s, k) @ out
        cache[key] = out
    return cache[key]


def cayley_transform(alg: ReductiveAlgebra, stem: Stem, frame: StemFrame) -> LinOp:
    """c = exp(pi/2 ad X_Gamma(rho))."""
    _same_stem(stem, frame)
    return _product(alg, frame, 1)


def cayley_inverse(alg: ReductiveAlgebra, stem: Stem, frame: StemFrame) -> LinOp:
    _same_stem(stem, frame)
    return _product(alg, frame, -1)


def opposition_involution(alg: ReductiveAlgebra, stem: Stem, frame: StemFrame) -> LinOp:
    """phi = exp(pi ad X_Gamma(rho)), computed independently of c."""
    _same_stem(stem, frame)
    return _product(alg, frame, 2)


def _same_stem(stem: Stem, frame: StemFrame):
    if stem.gammas != frame.stem.gammas:
        raise HyperstemError("frame was built for a different stem")


def automorphism_witness(alg: ReductiveAlgebra, op: LinOp,
                         basis: Optional[Iterable[int]] = None):
    """First basis pair (i, j) with op[x, y] != [op x, op y], or None."""
    idx = list(range(alg.dim)) if basis is None else list(basis)
    imgs = {i: op.cols[i] for i in idx}
    for a, i in enumerate(idx):
        ei = alg.basis(i)
        for j in idx[a + 1:]:
            lhs = op.apply(alg.bracket(ei, alg.basis(j)))
            if lhs != alg.bracket(imgs[i], imgs[j]):
                return (i, j)
    return None


def is_automorphism(alg: ReductiveAlgebra, op: LinOp) -> bool:
    return automorphism_witness(alg, op) is None


def _sw(pair, alg):
    return "" if pair is None else f"{alg.labels[pair[0]]}, {alg.labels[pair[1]]}"


def automorphism_report(alg: ReductiveAlgebra, stem: Stem, frame: StemFrame,
                        brackets: bool = True) -> Report:
    """Identities of c, c^-1 and phi that hold for every stem and rho."""
    rs = alg.rs
    sc = alg.sc
    rep = Report()
    c = cayley_transform(alg, stem, frame)
    ci = cayley_inverse(alg, stem, frame)
    phi = opposition_involution(alg, stem, frame)
    ident = LinOp.identity(alg.dim)
    rep.add("c_inverse", c @ ci == ident)
    rep.add("c_squared_is_phi", c @ c == phi)

    # phi(Delta+) = Delta-: each positive root vector goes to one negative one
    bad = None
    for a in rs.positive:
        img = phi.cols[a]
        sup = img.support()
        if len(sup) != 1 or sup[0] >= alg.n_roots or sup[0] not in set(rs.negative):
            bad = a
            break
    rep.add("phi_reverses_positive", bad is None,
            "" if bad is None else f"root {rs.roots[bad]}")

    if brackets:
        for name, op in (("c", c), ("phi", phi)):
            w = automorphism_witness(alg, op)
            rep.add(f"{name}_preserves_brackets", w is None, _sw(w, alg))
    rep.add("c_commutes_with_tau", op_commutes_with_tau(alg, c))
    rep.add("phi_commutes_with_tau", op_commutes_with_tau(alg, phi))

    bad = next((h for h in frame.o_basis if c.apply(h) != h or phi.apply(h) != h), None)
    rep.add("c_fixes_o", bad is None)

    # rotation identities on the stem sl2's
    bad = None
    for s in range(frame.d):
        X, Y, W = frame.X[s], frame.Y[s], frame.W[s]
        if c.apply(X) != X or c.apply(Y) != W or c.apply(W) != -Y:
            bad = s
            break
    rep.add("c_rotates_W_Y", bad is None, "" if bad is None else f"slot {bad + 1}")

    # c(E_gamma) = E_gamma - i rho_bar (W - Y); phi(E_gamma) = -rho_bar^2 E_-gamma
    bad = None
    for s, g in enumerate(stem.gammas):
        rb = frame.rho[s].conj()
        want_c = frame.E_plus[s] - (I * rb) * (frame.W[s] - frame.Y[s])
        want_phi = frame.E_minus[s] * (-(rb * rb))
        if c.apply(frame.E_plus[s]) != want_c or phi.apply(frame.E_plus[s]) != want_phi:
            bad = s
            break
    rep.add("stem_root_images", bad is None, "" if bad is None else f"slot {bad + 1}")

    # c on h: H + i sum gamma(H)(W + Y); c^-1: H + i sum gamma(H)(W - Y);
    # phi on h: H - sum gamma(H) H_gamma
    bad = None
    for i in alg.cartan_indices:
        h = alg.basis(i)
        ev = [alg.eval_root_idx(g, h) for g in stem.gammas]
        wc = h + sum_elems(alg, ((I * e, frame.W[s] + frame.Y[s]) for s, e in enumerate(ev)))
        wi = h + sum_elems(alg, ((I * e, frame.W[s] - frame.Y[s]) for s, e in enumerate(ev)))
        wp = h - sum_elems(alg, ((e, frame.H[s]) for s, e in enumerate(ev)))
        if c.apply(h) != wc or ci.apply(h) != wi or phi.apply(h) != wp:
            bad = i
            break
    rep.add("cartan_images", bad is None, "" if bad is None else alg.labels[bad])

    # single factors on branches: c_g(E_a) = (sqrt2/2)(E_a + N rho_bar E_{s_g a}),
    # phi_g(E_a) = rho_bar N E_{s_g a}, with N = N_{g,-a}
    half_sqrt2 = SQRT2 * HALF
    bad = None
    for s, g in enumerate(stem.gammas):
        cg = cayley_factor(alg, frame, s, 1)
        pg = cayley_factor(alg, frame, s, 2)
        rb = frame.rho[s].conj()
        for a in stem.branches[s]:
            t = rs.index[rs.reflect(rs.roots[g], rs.roots[a])]
            n = sc.N[g][rs.neg[a]]
            ea, et = alg.basis(a), alg.basis(t)
            if cg.apply(ea) != (ea + et * (rb * n)) * half_sqrt2 or \
                    pg.apply(ea) != et * (rb * n):
                bad = (s, a)
                break
        if bad:
            break
    rep.add("branch_factor_images", bad is None,
            "" if bad is None else f"slot {bad[0] + 1}, root {rs.roots[bad[1]]}")
    return rep


def sum_elems(alg: ReductiveAlgebra, terms) -> Element:
    out = alg.zero()
    for s, x in terms:
        if s:
            out = out + x * s
    return out


def exp_closed_form_report(alg: ReductiveAlgebra, frame: StemFrame) -> Report:
    """Single-root exponentials at t = pi/2 and t = pi against their closed forms."""
    rep = Report()
    cos = {1: ZERO, 2: -ONE}
    sin = {1: ONE, 2: ZERO}
    bad = None
    for s, g in enumerate(frame.stem.gammas):
        for k in (1, 2):
            e = cayley_factor(alg, frame, s, k)
            W, Y = frame.W[s], frame.Y[s]
            if e.apply(W) != W * cos[k] - Y * sin[k] or e.apply(Y) != W * sin[k] + Y * cos[k]:
                bad = (s, k, "W/Y")
            for i in alg.cartan_indices:
                h = alg.basis(i)
                gh = alg.eval_root_idx(g, h)
                want = h + (Y * sin[k] + W * (ONE - cos[k])) * (I * gh)
                if e.apply(h) != want:
                    bad = (s, k, alg.labels[i])
            for o in frame.o_basis:
                if e.apply(o) != o:
                    bad = (s, k, "o")
            if bad:
                break
        if bad:
            break
    rep.add("exp_closed_forms", bad is None,
            "" if bad is None else f"slot {bad[0] + 1}, t = {bad[1]}pi/2, at {bad[2]}")
    return rep
