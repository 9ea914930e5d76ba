"""Root systems generated from Cartan data.

Roots are integer coordinate tuples in the basis of simple roots. Simple roots
follow Bourbaki numbering inside each component, components are concatenated
in the order given in the spec string. The canonical order of roots is by
height, then lexicographically by coordinates, so negative roots come first.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import NotARootError, NonCartanError, SpecError

Root = Tuple[int, ...]

# minimal rank for each family; E, F, G only allow listed ranks
_FAMILY_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class SimpleComponentSpec:
    family: str
    rank: int

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class AlgebraSpec:
    components: Tuple[SimpleComponentSpec, ...]
    center_rank: int = 0

    @property
    def semisimple_rank(self) -> int:
        return sum(c.rank for c in self.components)

    @property
    def rank(self) -> int:
        return self.semisimple_rank + self.center_rank

    def __str__(self):
        s = "+".join(str(c) for c in self.components)
        if self.center_rank:
            s += f"#{self.center_rank}"
        return s


_COMP_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_spec(text: str) -> AlgebraSpec:
    """Parse strings such as 'A4', 'A2+A2+D5', 'A2#4' or '#4'."""
    if not isinstance(text, str):
        raise SpecError("spec must be a string")
    s = text.replace(" ", "")
    if not s:
        raise SpecError("empty spec")
    center = 0
    if "#" in s:
        s, _, tail = s.partition("#")
        if not tail.isdigit() or int(tail) < 1:
            raise SpecError(f"bad center rank in {text!r}")
        center = int(tail)
    comps = []
    if s:
        for part in s.split("+"):
            m = _COMP_RE.match(part)
            if not m:
                raise SpecError(f"cannot parse component {part!r} in {text!r}")
            fam, n = m.group(1).upper(), int(m.group(2))
            if fam not in _FAMILY_RANKS:
                raise SpecError(f"unknown family {fam!r}")
            if not _FAMILY_RANKS[fam](n):
                raise SpecError(f"invalid rank {n} for family {fam}")
            comps.append(SimpleComponentSpec(fam, n))
    if not comps and not center:
        raise SpecError(f"empty spec {text!r}")
    return AlgebraSpec(tuple(comps), center)


def _dynkin(family: str, n: int):
    """Edges and squared lengths of simple roots (long roots have length^2 2)."""
    edges = [(i, i + 1) for i in range(n - 1)]
    lengths = [Fraction(2)] * n
    if family == "B":
        lengths[n - 1] = Fraction(1)
    elif family == "C":
        lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
    elif family == "D":
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif family == "E":
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    elif family == "F":
        lengths = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
    elif family == "G":
        lengths = [Fraction(2, 3), Fraction(2)]
    return edges, lengths


def gram_matrix(family: str, n: int) -> List[List[Fraction]]:
    """Inner products of simple roots for one irreducible component."""
    edges, lengths = _dynkin(family, n)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = lengths[i]
    for i, j in edges:
        v = -max(lengths[i], lengths[j]) / 2
        g[i][j] = g[j][i] = v
    return g


class RootSystem:
    """All roots of a reduced root system together with its simple system."""

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        blocks = []
        self.component_slices: List[Tuple[SimpleComponentSpec, int]] = []
        off = 0
        for c in spec.components:
            blocks.append(gram_matrix(c.family, c.rank))
            self.component_slices.append((c, off))
            off += c.rank
        l = off
        self.rank = l
        g = [[Fraction(0)] * l for _ in range(l)]
        off = 0
        for b in blocks:
            for i, row in enumerate(b):
                for j, v in enumerate(row):
                    g[off + i][off + j] = v
            off += len(b)
        self.gram = g
        # inner products scaled by 6 are integers for every family
        self._g6 = [[int(v * 6) for v in row] for row in g]
        self.cartan = [[self._cart_simple(i, j) for j in range(l)] for i in range(l)]
        self.roots: List[Root] = self._generate()
        self.index: Dict[Root, int] = {r: k for k, r in enumerate(self.roots)}
        self.positive = [k for k, r in enumerate(self.roots) if height(r) > 0]
        self.negative = [k for k, r in enumerate(self.roots) if height(r) < 0]
        self.simple = [self.index[_unit(l, i)] for i in range(l)]
        self.neg = [self.index[negate(r)] for r in self.roots]

    def _cart_simple(self, i, j) -> int:
        q, rem = divmod(2 * self._g6[i][j], self._g6[j][j])
        assert rem == 0
        return q

    def _generate(self) -> List[Root]:
        l = self.rank
        seen = set()
        frontier = [_unit(l, i) for i in range(l)]
        seen.update(frontier)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(l):
                    s = self.reflect_simple(i, r)
                    if s not in seen:
                        seen.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(seen, key=lambda r: (height(r), r))

    # geometry
    def inner6(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Six times the inner product."""
        g = self._g6
        tot = 0
        for i, x in enumerate(a):
            if x:
                row = g[i]
                for j, y in enumerate(b):
                    if y:
                        tot += x * y * row[j]
        return tot

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        return Fraction(self.inner6(a, b), 6)

    def norm2(self, a: Sequence[int]) -> Fraction:
        return self.inner(a, a)

    def cartan_integer(self, beta: Sequence[int], alpha: Sequence[int]) -> int:
        """C(beta, alpha) = 2<beta, alpha>/<alpha, alpha>."""
        q, rem = divmod(2 * self.inner6(beta, alpha), self.inner6(alpha, alpha))
        if rem:
            raise NotARootError("non-integral Cartan number")
        return q

    def reflect_simple(self, i: int, beta: Sequence[int]) -> Root:
        c = sum(beta[j] * self.cartan[j][i] for j in range(self.rank))
        out = list(beta)
        out[i] -= c
        return tuple(out)

    def reflect(self, alpha: Sequence[int], beta: Sequence[int]) -> Root:
        """s_alpha(beta)."""
        c = self.cartan_integer(beta, alpha)
        return tuple(b - c * a for a, b in zip(alpha, beta))

    def is_root(self, r: Sequence[int]) -> bool:
        return tuple(r) in self.index

    def idx(self, r: Sequence[int]) -> int:
        try:
            return self.index[tuple(r)]
        except KeyError:
            raise NotARootError(f"{tuple(r)} is not a root") from None

    def is_long(self, r: Sequence[int]) -> bool:
        comp = self.component_of(r)
        return self.norm2(r) == 2 or comp.family in ("A", "D", "E")

    def component_of(self, r: Sequence[int]) -> SimpleComponentSpec:
        for c, off in self.component_slices:
            if any(r[off:off + c.rank]):
                return c
        raise NotARootError("zero vector")

    def add(self, i: int, j: int):
        """Index of roots[i] + roots[j] if it is a root, else None."""
        return self.index.get(add(self.roots[i], self.roots[j]))

    def __repr__(self):
        return f"RootSystem({self.spec})"


def _unit(l: int, i: int) -> Root:
    v = [0] * l
    v[i] = 1
    return tuple(v)


def height(r: Sequence[int]) -> int:
    return sum(r)


def negate(r: Sequence[int]) -> Root:
    return tuple(-x for x in r)


def add(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def is_positive(r: Sequence[int]) -> bool:
    return height(r) > 0 and all(x >= 0 for x in r)


_CACHE: Dict[str, RootSystem] = {}


def generate_root_system(spec) -> RootSystem:
    """Root system of a spec (string or AlgebraSpec); results are cached."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    key = str(spec)
    if key not in _CACHE:
        _CACHE[key] = RootSystem(spec)
    return _CACHE[key]


def cartan_integer(rs: RootSystem, beta, alpha) -> int:
    return rs.cartan_integer(beta, alpha)


def reflect(rs: RootSystem, alpha, beta) -> Root:
    return rs.reflect(alpha, beta)


def highest_root(rs: RootSystem, component: Sequence[int]) -> int:
    """Index of the highest root among the given positive root indices.

    The component must be irreducible with simple system inside the simple
    roots of rs; the result dominates every other root of the component.
    """
    comp = list(component)
    best = max(comp, key=lambda k: (height(rs.roots[k]), rs.roots[k]))
    top = rs.roots[best]
    for k in comp:
        if any(x < y for x, y in zip(top, rs.roots[k])):
            raise NonCartanError("component has no dominating root")
    return best


def irreducible_components(rs: RootSystem, subset: Sequence[int]) -> List[List[int]]:
    """Split a set of positive root indices into irreducible components.

    Components are sorted by the smallest simple-root index they contain.
    """
    items = sorted(subset)
    if not items:
        return []
    pos = {k: n for n, k in enumerate(items)}
    parent = list(range(len(items)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(len(items)):
        ra = rs.roots[items[a]]
        for b in range(a + 1, len(items)):
            if rs.inner6(ra, rs.roots[items[b]]) != 0:
                x, y = find(a), find(b)
                if x != y:
                    parent[x] = y
    groups: Dict[int, List[int]] = {}
    for k in items:
        groups.setdefault(find(pos[k]), []).append(k)
    simple_pos = {s: i for i, s in enumerate(rs.simple)}

    def key(g):
        simples = [simple_pos[k] for k in g if k in simple_pos]
        if not simples:
            raise NonCartanError("component without simple roots")
        return min(simples)

    return sorted(groups.values(), key=key)


def simple_system_check(rs: RootSystem, candidate: Sequence[Sequence[int]]) -> None:
    """Raise NonCartanError unless candidate is a basis of rs (every root an
    integral combination with coefficients of one sign)."""
    from .linalg import solve

    cand = [tuple(c) for c in candidate]
    l = rs.rank
    if len(cand) != l or any(not rs.is_root(c) for c in cand):
        raise NonCartanError("wrong size or not roots")
    rows = [[Fraction(cand[j][i]) for j in range(l)] for i in range(l)]
    cols = [[Fraction(x) for x in r] for r in rs.roots]
    sol = solve(rows, cols, Fraction(0))
    if sol is None:
        raise NonCartanError("candidate roots are linearly dependent")
    for v in sol:
        if any(x.denominator != 1 for x in v):
            raise NonCartanError("non-integral coordinates")
        if any(x > 0 for x in v) and any(x < 0 for x in v):
            raise NonCartanError("mixed-sign coordinates")
