"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 no structure exists for the
spec, 3 a verification check failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .algebra import algebra_for, stem_frame
from .chevalley import jacobi_sweep, magnitude_check, root_label, stem_sign_check
from .emodel import e_model_string
from .errors import (BadBMatrixError, DimensionMismatchError, HyperstemError,
                     InvalidRhoError, ObstructionError, SpecError)
from .hypercomplex import (build_I_canonical, build_J_cayley, build_J_direct,
                           classify_algebra, default_b, extract_matching_blocks,
                           verify_hypercomplex)
from .report import Report
from .roots import generate_root_system, parse_spec
from .serialize import (RHO_NAMES, dumps, hyperstructure_from_json,
                        hyperstructure_to_json, matrix_from_json)
from .stem import compute_stem, star_involution, verify_stem_axioms

EXIT_OK, EXIT_USAGE, EXIT_OBSTRUCTED, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hyperstem", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hyperstem {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", help="write the JSON result to this path")

    for verb, helptext in (("roots", "list the roots"),
                           ("stem", "compute the stem and check its axioms"),
                           ("constants", "structure constants and their checks"),
                           ("classify", "decide whether a hypercomplex structure exists")):
        sp = sub.add_parser(verb, help=helptext)
        sp.add_argument("spec")
        common(sp)
    sp = sub.add_parser("build", help="construct I, J, K and certify them")
    sp.add_argument("spec")
    sp.add_argument("--rho", action="append", default=[], metavar="g<k>=<1|i|-1|-i>")
    sp.add_argument("--b", default="default", metavar="<path|default>")
    common(sp)
    sp = sub.add_parser("verify", help="re-check a structure written by build")
    sp.add_argument("path")
    common(sp)
    return p


# ---------------------------------------------------------------- helpers

def _parse_rho(items: List[str], d: int) -> List:
    rho = [RHO_NAMES["1"]] * d
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or not key.startswith("g") or not key[1:].isdigit():
            raise UsageError(f"bad --rho {item!r}; expected g<k>=<1|i|-1|-i>")
        slot = int(key[1:])
        if not 1 <= slot <= d:
            raise UsageError(f"--rho {item!r}: stem has {d} roots")
        if val not in RHO_NAMES:
            raise InvalidRhoError(f"--rho {item!r}: value must be 1, i, -1 or -i")
        rho[slot - 1] = RHO_NAMES[val]
    return rho


def _load_b(src: str, p: int):
    if src == "default":
        return default_b(p)
    try:
        with open(src) as f:
            obj = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read b-matrix {src!r}: {e}")
    if isinstance(obj, dict) and "b" in obj:
        obj = obj["b"]
    return matrix_from_json(obj)


def _emit(args, payload: dict, text_lines: List[str]):
    if args.out:
        with open(args.out, "w") as f:
            f.write(dumps(payload) + "\n")
    if args.format == "json":
        if not args.out:
            print(dumps(payload))
        else:
            print(dumps(payload.get("certificate", payload)))
    else:
        print("\n".join(text_lines))


def _certificate(spec: str, command: str, sections: dict, status: int) -> dict:
    return {"spec": spec, "tool": "hyperstem", "version": __version__,
            "command": command, "sections": sections, "status": status}


def _report_lines(title: str, rep: Report) -> List[str]:
    return [f"[{title}]"] + ["  " + line for line in rep.lines()]


# ---------------------------------------------------------------- verbs

def cmd_roots(args) -> int:
    rs = generate_root_system(args.spec)
    pos = set(rs.positive)
    roots = [{"coords": list(r), "label": root_label(r), "positive": i in pos,
              "norm2": str(rs.norm2(r))} for i, r in enumerate(rs.roots)]
    payload = {"spec": str(rs.spec), "rank": rs.rank, "count": len(rs.roots),
               "cartan": rs.cartan, "roots": roots}
    lines = [f"{rs.spec}: rank {rs.rank}, {len(rs.roots)} roots, "
             f"{len(rs.positive)} positive"]
    lines += [f"  {root_label(rs.roots[a])}" for a in rs.positive]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_stem(args) -> int:
    rs = generate_root_system(args.spec)
    stem = compute_stem(rs)
    rep = verify_stem_axioms(rs, stem)
    gammas = [list(g) for g in stem.gamma_roots]
    branches = {str(k + 1): [list(rs.roots[a]) for a in br]
                for k, br in enumerate(stem.branches)}
    star = star_involution(rs, stem) if stem.d else None
    payload = {"spec": str(rs.spec), "d": stem.d, "gammas": gammas, "branches": branches,
               "order": [[k + 1, j + 1] for k, j in stem.order_pairs()],
               "star": list(star.simple_perm) if star else [],
               "report": rep.to_json()}
    lines = [f"{rs.spec}: d = {stem.d}"]
    for k, g in enumerate(stem.gamma_roots):
        e = e_model_string(rs, g)
        lines.append(f"  g{k + 1} = {root_label(g)}" + (f"  ({e})" if e else "")
                     + f", branch size {len(stem.branches[k])}")
    if payload["order"]:
        lines.append("  order: " + ", ".join(f"g{k} < g{j}" for k, j in payload["order"]))
    lines += _report_lines("stem axioms", rep)
    _emit(args, payload, lines)
    return EXIT_OK if rep.all_passed else EXIT_FAILED


def cmd_constants(args) -> int:
    rs = generate_root_system(args.spec)
    alg = algebra_for(rs.spec)
    sc = alg.sc
    rep = Report()
    rep.update(jacobi_sweep(sc))
    rep.update(magnitude_check(sc))
    stem = compute_stem(rs)
    rep.update(stem_sign_check(sc, stem))
    entries = [{"alpha": list(rs.roots[a]), "beta": list(rs.roots[b]), "N": n}
               for a, b, n in sc.nonzero_triples() if a < b]
    payload = {"spec": str(rs.spec),
               "extraspecial": [{"root": list(rs.roots[x]),
                                 "pair": [list(rs.roots[y]) for y in sc.extraspecial[x]]}
                                for x in sorted(sc.extraspecial)],
               "constants": entries, "report": rep.to_json()}
    lines = [f"{rs.spec}: {len(entries)} nonzero N(alpha, beta) with alpha before beta"]
    lines += _report_lines("structure constants", rep)
    _emit(args, payload, lines)
    return EXIT_OK if rep.all_passed else EXIT_FAILED


def cmd_classify(args) -> int:
    c = classify_algebra(parse_spec(args.spec))
    payload = c.to_json()
    lines = [f"{c.spec}: rank {c.rank}, dim {c.dim}, d = {c.d}",
             f"  complex structure: {'yes' if c.complex_ok else 'no'}",
             f"  hypercomplex structure: {'yes' if c.hyper_ok else 'no'}"
             + (f" (p = {c.p})" if c.hyper_ok else f" ({c.reason})")]
    lines += [f"  note: {n}" for n in c.notes]
    _emit(args, payload, lines)
    return EXIT_OK if c.hyper_ok else EXIT_OBSTRUCTED


def cmd_build(args) -> int:
    alg = algebra_for(args.spec)
    stem = compute_stem(alg.rs)
    c = classify_algebra(alg.spec)
    if not c.hyper_ok:
        raise ObstructionError(f"{c.spec}: rank {c.rank}, d = {c.d}: {c.reason}; "
                               "no hypercomplex structure exists")
    rho = _parse_rho(args.rho, stem.d)
    b = _load_b(args.b, c.p)
    frame = stem_frame(alg, stem, rho)
    I = build_I_canonical(alg, stem, frame)
    hd = build_J_direct(alg, stem, frame, I, b, verify=False)
    hc = build_J_cayley(alg, stem, frame, I, b, verify=False)
    rep = verify_hypercomplex(alg, hd)
    rep.add("direct_equals_cayley", hd.J == hc.J)
    blocks = extract_matching_blocks(alg, stem, I, hd.J)
    rep.update(blocks.report)
    hd.report = rep
    status = EXIT_OK if rep.all_passed else EXIT_FAILED
    cert = _certificate(str(alg.spec), "build", {"verification": rep.to_json()}, status)
    payload = hyperstructure_to_json(hd)
    payload["certificate"] = cert
    rho_text = ", ".join(f"{g}={v}" for g, v in payload["rho"].items()) or "none"
    lines = [f"{alg.spec}: dim {alg.dim}, d = {stem.d}, p = {c.p}, rho: {rho_text}"]
    lines += _report_lines("verification", rep)
    lines.append("status: " + ("PASS" if status == 0 else "FAIL"))
    _emit(args, payload, lines)
    return status


def cmd_verify(args) -> int:
    try:
        with open(args.path) as f:
            obj = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {args.path!r}: {e}")
    hs = hyperstructure_from_json(obj)
    rep = verify_hypercomplex(hs.alg, hs)
    status = EXIT_OK if rep.all_passed else EXIT_FAILED
    cert = _certificate(str(hs.alg.spec), "verify", {"verification": rep.to_json()}, status)
    lines = [f"{hs.alg.spec}: re-verified {args.path}"] + _report_lines("verification", rep)
    lines.append("status: " + ("PASS" if status == 0 else "FAIL"))
    _emit(args, {"certificate": cert}, lines)
    return status


VERBS = {"roots": cmd_roots, "stem": cmd_stem, "constants": cmd_constants,
         "classify": cmd_classify, "build": cmd_build, "verify": cmd_verify}


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = _parser().parse_args(argv)
        return VERBS[args.verb](args)
    except UsageError as e:
        print(f"hyperstem: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ObstructionError as e:
        print(f"hyperstem: obstruction: {e}", file=sys.stderr)
        return EXIT_OBSTRUCTED
    except (SpecError, InvalidRhoError, BadBMatrixError, DimensionMismatchError) as e:
        print(f"hyperstem: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except HyperstemError as e:
        print(f"hyperstem: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
