"""JSON forms of elements, operators and hypercomplex structures.

Matrices are stored column-major over the canonical basis order, each entry a
KScalar object {"a", "b", "c", "d"} of rational strings.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from . import __version__
from .algebra import Element, LinOp, ReductiveAlgebra, algebra_for, stem_frame
from .errors import DimensionMismatchError, HyperstemError, InvalidRhoError
from .hypercomplex import ComplexStructureI, HyperStructure, Matrix
from .scalars import UNITS, KScalar, k
from .stem import compute_stem

RHO_NAMES = {"1": UNITS[0], "i": UNITS[1], "-1": UNITS[2], "-i": UNITS[3]}


def rho_name(r: KScalar) -> str:
    for name, v in RHO_NAMES.items():
        if v == r:
            return name
    raise InvalidRhoError(f"rho {r} is not a fourth root of unity")


def parse_scalar(obj) -> KScalar:
    """KScalar from a JSON object, an integer, or a short string like '-i' or '1/2'."""
    if isinstance(obj, dict):
        try:
            return KScalar.from_json(obj)
        except (KeyError, ValueError, ZeroDivisionError) as e:
            raise HyperstemError(f"bad scalar {obj!r}") from e
    if isinstance(obj, bool):
        raise HyperstemError(f"bad scalar {obj!r}")
    if isinstance(obj, int):
        return k(obj)
    if isinstance(obj, str):
        s = obj.replace(" ", "")
        if s in RHO_NAMES:
            return RHO_NAMES[s]
        if s.endswith("i"):
            head = s[:-1].rstrip("*")
            coef = {"": 1, "+": 1, "-": -1}.get(head)
            try:
                return KScalar(0, Fraction(head) if coef is None else coef)
            except (ValueError, ZeroDivisionError):
                pass
        try:
            return k(Fraction(s))
        except (ValueError, ZeroDivisionError):
            pass
    raise HyperstemError(f"bad scalar {obj!r}")


def element_to_json(alg: ReductiveAlgebra, x: Element) -> dict:
    return {"coeffs": {alg.labels[i]: x.c[i].to_json() for i in sorted(x.c)}}


def element_from_json(alg: ReductiveAlgebra, obj: dict) -> Element:
    try:
        coeffs = obj["coeffs"]
    except (KeyError, TypeError):
        raise HyperstemError("element JSON needs a 'coeffs' object") from None
    return alg.element_from_labels({lab: parse_scalar(v) for lab, v in coeffs.items()})


def op_to_json(op: LinOp) -> List[List[dict]]:
    return [[v.to_json() for v in col.dense()] for col in op.cols]


def op_from_json(obj, dim: int) -> LinOp:
    if not isinstance(obj, list) or len(obj) != dim:
        raise DimensionMismatchError(f"expected {dim} columns")
    cols = []
    for col in obj:
        if not isinstance(col, list) or len(col) != dim:
            raise DimensionMismatchError(f"expected columns of length {dim}")
        cols.append(Element(dim, {i: parse_scalar(v) for i, v in enumerate(col)}))
    return LinOp(dim, cols)


def matrix_to_json(m: Matrix) -> List[List[dict]]:
    return [[v.to_json() for v in row] for row in m]


def matrix_from_json(obj) -> Matrix:
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise HyperstemError("matrix must be a list of rows")
    return [[parse_scalar(v) for v in row] for row in obj]


def hyperstructure_to_json(hs: HyperStructure, report: bool = True) -> Dict[str, Any]:
    alg = hs.alg
    out = {
        "spec": str(alg.spec),
        "version": __version__,
        "basis": list(alg.labels),
        "rho": {f"g{s + 1}": rho_name(r) for s, r in enumerate(hs.rho)},
        "I": op_to_json(hs.I),
        "J": op_to_json(hs.J),
        "K": op_to_json(hs.K),
        "b": matrix_to_json(hs.b),
        "hplus": [element_to_json(alg, u) for u in hs.istruct.hplus_basis],
        "S": [element_to_json(alg, s) for s in hs.S],
        "T": [element_to_json(alg, t) for t in hs.T],
        "provenance": hs.provenance,
    }
    if report:
        out["report"] = hs.report.to_json()
    return out


def hyperstructure_from_json(obj: Dict[str, Any]) -> HyperStructure:
    """Rebuild a HyperStructure without re-deriving anything from the spec
    except the stem frame needed by the checks."""
    if not isinstance(obj, dict):
        raise HyperstemError("structure JSON must be an object")
    for key in ("spec", "rho", "I", "J", "K", "b", "hplus", "S", "T"):
        if key not in obj:
            raise HyperstemError(f"missing key {key!r}")
    alg = algebra_for(obj["spec"])
    stem = compute_stem(alg.rs)
    rho_obj = obj["rho"]
    if not isinstance(rho_obj, dict) or len(rho_obj) != stem.d:
        raise DimensionMismatchError(f"expected {stem.d} rho values")
    try:
        rho = [RHO_NAMES[str(rho_obj[f"g{s + 1}"])] for s in range(stem.d)]
    except KeyError as e:
        raise InvalidRhoError(f"bad rho entry {e.args[0]!r}") from None
    frame = stem_frame(alg, stem, rho)
    dim = alg.dim
    Iop = op_from_json(obj["I"], dim)
    hplus = [element_from_json(alg, u) for u in obj["hplus"]]
    S = [element_from_json(alg, s) for s in obj["S"]]
    T = [element_from_json(alg, t) for t in obj["T"]]
    b = matrix_from_json(obj["b"])
    if len(b) != len(S) or any(len(row) != len(S) for row in b):
        raise DimensionMismatchError("b does not match the size of the j+ basis")
    istruct = ComplexStructureI(Iop, hplus, [], None, S)
    return HyperStructure(alg, frame, istruct, op_from_json(obj["J"], dim),
                          op_from_json(obj["K"], dim), b, S, T,
                          str(obj.get("provenance", "file")))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
