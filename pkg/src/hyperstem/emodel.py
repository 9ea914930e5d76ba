"""Orthonormal-vector (e_i) descriptions of roots of classical components."""
from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .roots import RootSystem


def _simple_vectors(family: str, n: int) -> Optional[List[Dict[int, int]]]:
    """Simple roots as sparse e-vectors; None for exceptional families."""
    if family == "A":
        # e_0 .. e_n
        return [{i: 1, i + 1: -1} for i in range(n)]
    chain = [{i + 1: 1, i + 2: -1} for i in range(n - 1)]
    if family == "B":
        return chain + [{n: 1}]
    if family == "C":
        return chain + [{n: 2}]
    if family == "D":
        return chain[:n - 1] + [{n - 1: 1, n: 1}]
    return None


def e_vector(rs: RootSystem, root: Sequence[int]) -> Optional[Dict[int, Fraction]]:
    """Coordinates of a root in the e-model of its (classical) component."""
    comp = rs.component_of(root)
    off = next(o for c, o in rs.component_slices if c is comp)
    simple = _simple_vectors(comp.family, comp.rank)
    if simple is None:
        return None
    out: Dict[int, Fraction] = {}
    for i, m in enumerate(root[off:off + comp.rank]):
        if m:
            for e, c in simple[i].items():
                out[e] = out.get(e, 0) + m * c
    return {e: Fraction(c) for e, c in sorted(out.items()) if c}


def format_e(vec: Dict[int, Fraction]) -> str:
    parts = []
    for e, c in sorted(vec.items()):
        if c == 1:
            parts.append(f"+e{e}")
        elif c == -1:
            parts.append(f"-e{e}")
        else:
            parts.append(f"{'+' if c > 0 else '-'}{abs(c)}e{e}")
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def e_model_string(rs: RootSystem, root: Sequence[int]) -> Optional[str]:
    v = e_vector(rs, root)
    return None if v is None else format_e(v)
