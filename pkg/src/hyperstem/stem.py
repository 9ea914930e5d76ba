"""The stem of a positive system: a strongly orthogonal chain of maximal roots.

Starting from all positive roots, repeatedly take the highest root of one
irreducible component and keep only the roots orthogonal to it. The chosen
roots form the stem; each comes with its branch, the positive roots whose
difference with it is again positive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

from .errors import (NotARootError, NotInStemError, NotPositiveError,
                     NotStronglyOrthogonalError)
from .report import Report
from .roots import (Root, RootSystem, add, highest_root, irreducible_components,
                    sub)


@dataclass
class Stem:
    rs: RootSystem
    gammas: List[int]                 # root indices, in stem order
    branches: List[List[int]]         # positive root indices, canonical order
    theta: List[List[int]]            # positive roots of the component of each gamma
    chain: List[List[int]]            # positive roots of the nested subsystems
    branch_of: Dict[int, int] = field(default_factory=dict)  # root -> stem slot

    @property
    def d(self) -> int:
        return len(self.gammas)

    @property
    def gamma_roots(self) -> List[Root]:
        return [self.rs.roots[g] for g in self.gammas]

    def slot(self, gamma: Sequence[int]) -> int:
        """Position of a stem root in the stem order."""
        try:
            return self.gammas.index(self.rs.idx(gamma))
        except (ValueError, NotARootError):
            raise NotInStemError(f"{tuple(gamma)} is not in the stem") from None

    def precedes_idx(self, k: int, j: int) -> bool:
        return self.gammas[j] in self._theta_sets[k]

    @property
    def _theta_sets(self):
        ts = self.__dict__.get("_ts")
        if ts is None:
            ts = [set(t) for t in self.theta]
            self.__dict__["_ts"] = ts
        return ts

    def order_pairs(self) -> List[Tuple[int, int]]:
        """Strict relations gamma_k < gamma_j as 0-based slot pairs."""
        return [(k, j) for k in range(self.d) for j in range(self.d)
                if k != j and self.precedes_idx(k, j)]

    def mu_idx(self, a: int) -> int:
        k = self.branch_of.get(a)
        if k is None:
            if a in self.gammas:
                return a
            raise NotPositiveError(f"{self.rs.roots[a]} is not positive")
        return self.rs.index[sub(self.rs.roots[self.gammas[k]], self.rs.roots[a])]


def _branch(rs: RootSystem, g: int, pos_set) -> List[int]:
    groot = rs.roots[g]
    out = []
    for a in rs.positive:
        b = rs.index.get(sub(groot, rs.roots[a]))
        if b is not None and b in pos_set:
            out.append(a)
    return out


def _finish(rs: RootSystem, gammas, theta, chain) -> Stem:
    pos_set = set(rs.positive)
    branches = [_branch(rs, g, pos_set) for g in gammas]
    branch_of = {}
    for k, br in enumerate(branches):
        for a in br:
            branch_of.setdefault(a, k)
    return Stem(rs, list(gammas), branches, theta, chain, branch_of)


def _orth(rs: RootSystem, roots: Sequence[int], g: int) -> List[int]:
    gr = rs.roots[g]
    return [a for a in roots if rs.inner6(rs.roots[a], gr) == 0]


Chooser = Callable[[List[List[int]]], int]


def compute_stem(rs: RootSystem, choose: Optional[Chooser] = None) -> Stem:
    """The stem of the positive roots of rs.

    `choose` picks one of the irreducible components (sorted by their smallest
    simple root) at each step; the default takes the first.
    """
    current = list(rs.positive)
    gammas, theta, chain = [], [], []
    while current:
        comps = irreducible_components(rs, current)
        c = comps[choose(comps) if choose else 0]
        g = highest_root(rs, c)
        gammas.append(g)
        theta.append(sorted(c))
        chain.append(current)
        current = _orth(rs, current, g)
    return _finish(rs, gammas, theta, chain)


def stem_from_gammas(rs: RootSystem, gammas: Sequence[Sequence[int]]) -> Stem:
    """A Stem-shaped object for an arbitrary list of positive roots.

    Branches follow the definition; the chain is cut by orthogonality. Used to
    test the axiom checker on candidates that are not stems.
    """
    idx = [rs.idx(g) for g in gammas]
    current = list(rs.positive)
    theta, chain = [], []
    for g in idx:
        chain.append(current)
        comp = next((c for c in irreducible_components(rs, current) if g in c), [])
        theta.append(sorted(comp))
        current = _orth(rs, current, g)
    return _finish(rs, idx, theta, chain)


def all_stem_sets(rs: RootSystem) -> Set[FrozenSet[int]]:
    """Stems reachable under every tie-break choice, as sets of root indices."""
    memo: Dict[FrozenSet[int], Set[FrozenSet[int]]] = {}

    def rec(current: FrozenSet[int]) -> Set[FrozenSet[int]]:
        if not current:
            return {frozenset()}
        if current in memo:
            return memo[current]
        out = set()
        for comp in irreducible_components(rs, current):
            g = highest_root(rs, comp)
            for rest in rec(frozenset(_orth(rs, current, g))):
                out.add(rest | {g})
        memo[current] = out
        return out

    return rec(frozenset(rs.positive))


def mu_involution(stem: Stem, alpha: Sequence[int]) -> Root:
    """gamma - alpha on the branch of gamma, identity on the stem."""
    rs = stem.rs
    a = rs.index.get(tuple(alpha))
    if a is None or a not in set(rs.positive):
        raise NotPositiveError(f"{tuple(alpha)} is not a positive root")
    return rs.roots[stem.mu_idx(a)]


def precedes(stem: Stem, gamma: Sequence[int], delta: Sequence[int]) -> bool:
    """True iff delta lies in the irreducible component in which gamma was chosen."""
    return stem.precedes_idx(stem.slot(gamma), stem.slot(delta))


@dataclass(frozen=True)
class StarInvolution:
    simple_perm: Tuple[int, ...]   # i -> j on simple-root positions
    orbit_count: int


def star_involution(rs: RootSystem, stem: Stem) -> StarInvolution:
    """Minus the product of the stem reflections, restricted to the simple roots."""
    perm = []
    for i in range(rs.rank):
        r = rs.roots[rs.simple[i]]
        for g in stem.gammas:
            r = rs.reflect(rs.roots[g], r)
        r = tuple(-x for x in r)
        if sum(r) != 1:
            raise AssertionError("star does not preserve the simple roots")
        perm.append(r.index(1))
    for i, j in enumerate(perm):
        assert perm[j] == i
        for a in range(rs.rank):
            assert rs.cartan[i][a] == rs.cartan[j][perm[a]]
    orbits = len({frozenset((i, j)) for i, j in enumerate(perm)})
    return StarInvolution(tuple(perm), orbits)


def is_strongly_orthogonal(rs: RootSystem, a: Sequence[int], b: Sequence[int]) -> bool:
    return not rs.is_root(add(a, b)) and not rs.is_root(sub(a, b))


def reconstruct_positive(rs: RootSystem, gammas: Sequence[Sequence[int]]) -> Set[Root]:
    """Roots whose first nonzero Cartan number against the ordered list is positive."""
    gs = [tuple(g) for g in gammas]
    for a, b in combinations(gs, 2):
        if a == b or not is_strongly_orthogonal(rs, a, b):
            raise NotStronglyOrthogonalError(f"{a} and {b} are not strongly orthogonal")
    out = set()
    for r in rs.roots:
        for g in gs:
            c = rs.cartan_integer(r, g)
            if c:
                if c > 0:
                    out.add(r)
                break
    return out


def verify_stem_axioms(rs: RootSystem, stem: Stem) -> Report:
    rep = Report()
    roots = rs.roots
    pos = set(rs.positive)
    gset = set(stem.gammas)

    # disjoint decomposition of the positive roots
    seen: Dict[int, int] = {}
    bad = None
    for g in stem.gammas:
        if g in seen and bad is None:
            bad = g
        seen[g] = seen.get(g, 0) + 1
    for br in stem.branches:
        for a in br:
            if a in seen and bad is None:
                bad = a
            seen[a] = seen.get(a, 0) + 1
    missing = sorted(pos - set(seen))
    if bad is None and missing:
        bad = missing[0]
    rep.add("disjoint_decomposition", bad is None,
            "" if bad is None else f"root {roots[bad]}")

    bad = next(((a, b) for a, b in combinations(stem.gammas, 2)
                if not is_strongly_orthogonal(rs, roots[a], roots[b])), None)
    rep.add("strong_orthogonality", bad is None,
            "" if bad is None else f"{roots[bad[0]]}, {roots[bad[1]]}")

    bad = next((a for a in rs.positive if a not in gset and
                all(is_strongly_orthogonal(rs, roots[a], roots[g]) for g in stem.gammas)),
               None)
    rep.add("maximality", bad is None,
            "" if bad is None else f"{roots[bad]} is strongly orthogonal to the stem")

    bad = next(((a, g) for g, br in zip(stem.gammas, stem.branches) for a in br
                if rs.cartan_integer(roots[a], roots[g]) != 1), None)
    rep.add("branch_cartan_one", bad is None,
            "" if bad is None else f"C({roots[bad[0]]}, {roots[bad[1]]}) != 1")

    bad = next((g for g, br in zip(stem.gammas, stem.branches) if len(br) % 2), None)
    rep.add("even_branches", bad is None,
            "" if bad is None else f"odd branch at {roots[bad]}")

    # closure laws along the chain
    bad_a = bad_b = bad_c = None
    for k, (g, br) in enumerate(zip(stem.gammas, stem.branches)):
        brs = set(br)
        for a, b in combinations(br, 2):
            s = rs.add(a, b)
            if s is not None and s != g and bad_a is None:
                bad_a = (a, b)
        nxt = set(stem.chain[k + 1]) if k + 1 < len(stem.chain) else set()
        nxt_all = nxt | {rs.neg[x] for x in nxt}
        for a in br:
            for b in nxt_all:
                s = rs.add(a, b)
                if s is not None and s not in brs and bad_b is None:
                    bad_b = (a, b)
    for ch in stem.chain:
        full = set(ch) | {rs.neg[x] for x in ch}
        for a in ch:
            for b in full:
                s = rs.add(a, b)
                if s is not None and s not in full and bad_c is None:
                    bad_c = (a, b)
    for name, bad in (("closure_branch_sums", bad_a), ("closure_branch_shift", bad_b),
                      ("closure_chain", bad_c)):
        rep.add(name, bad is None,
                "" if bad is None else f"{roots[bad[0]]} + {roots[bad[1]]}")

    bad = next(((k, j) for k, j in stem.order_pairs() if not k < j), None)
    rep.add("indexation_compatible", bad is None,
            "" if bad is None else f"slots {bad}")

    try:
        rec = reconstruct_positive(rs, stem.gamma_roots)
        target = {roots[a] for a in rs.positive}
        diff = sorted(rec ^ target)
        rep.add("positive_reconstruction", not diff,
                "" if not diff else f"mismatch at {diff[0]}")
    except NotStronglyOrthogonalError as e:
        rep.add("positive_reconstruction", False, str(e))
    return rep


def max_strongly_orthogonal_size(rs: RootSystem) -> int:
    """Largest strongly orthogonal subset of the positive roots, by exhaustive search."""
    pos = list(rs.positive)
    n = len(pos)
    ok = [[is_strongly_orthogonal(rs, rs.roots[pos[i]], rs.roots[pos[j]]) and i != j
           for j in range(n)] for i in range(n)]
    best = 0

    def rec(start, cand, size):
        nonlocal best
        best = max(best, size)
        if size + len(cand) <= best:
            return
        for t, i in enumerate(cand):
            rec(i, [j for j in cand[t + 1:] if ok[i][j]], size + 1)

    rec(0, list(range(n)), 0)
    return best


def simple_in_branch(stem: Stem, k: int) -> List[int]:
    """Simple-root positions lying in the branch of the k-th stem root."""
    simple_pos = {s: i for i, s in enumerate(stem.rs.simple)}
    return sorted(simple_pos[a] for a in stem.branches[k] if a in simple_pos)
