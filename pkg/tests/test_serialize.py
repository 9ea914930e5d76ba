import json

import pytest

from hyperstem.algebra import algebra_for
from hyperstem.emodel import e_model_string
from hyperstem.errors import DimensionMismatchError, HyperstemError, InvalidRhoError
from hyperstem.hypercomplex import build_hyperstructure, verify_hypercomplex
from hyperstem.roots import generate_root_system
from hyperstem.scalars import HALF, I, ONE, KScalar
from hyperstem.serialize import (dumps, element_from_json, element_to_json,
                                 hyperstructure_from_json, hyperstructure_to_json,
                                 op_from_json, op_to_json, parse_scalar, rho_name)
from hyperstem.stem import compute_stem


@pytest.mark.parametrize("text,value", [
    (3, KScalar(3)), ("i", I), ("-i", -I), ("2i", KScalar(0, 2)), ("-1/2", -HALF),
    ("1/2i", KScalar(0, HALF.a)), ({"a": "1", "b": "0", "c": "1/2", "d": "0"}, KScalar(1, 0, HALF.a)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", [True, 1.5, "x", "1/0", {"a": "1"}, None, [1]])
def test_parse_scalar_rejects(bad):
    with pytest.raises(HyperstemError):
        parse_scalar(bad)


def test_rho_names():
    assert rho_name(-I) == "-i"
    with pytest.raises(InvalidRhoError):
        rho_name(KScalar(2))


def test_element_round_trip():
    alg = algebra_for("B2#1")
    x = alg.E((1, 2)) * KScalar(1, 2, 3, 4) + alg.C(0) * I
    obj = element_to_json(alg, x)
    assert set(obj["coeffs"]) == {"E[1,2]", "C1"}
    assert element_from_json(alg, json.loads(json.dumps(obj))) == x
    with pytest.raises(HyperstemError):
        element_from_json(alg, {"nope": 1})


def test_operator_dimension_checks():
    alg = algebra_for("A1")
    op = alg.ad(alg.E((1,)))
    assert op_from_json(op_to_json(op), alg.dim) == op
    with pytest.raises(DimensionMismatchError):
        op_from_json(op_to_json(op), alg.dim + 1)
    with pytest.raises(DimensionMismatchError):
        op_from_json([[0] * 2] * 3, 3)


@pytest.mark.parametrize("spec,rho", [("A2", None), ("A4", [ONE, I]), ("A2#4", None)])
def test_structure_round_trip(spec, rho):
    hs = build_hyperstructure(spec, rho=rho)
    text = dumps(hyperstructure_to_json(hs))
    back = hyperstructure_from_json(json.loads(text))
    assert back.I == hs.I and back.J == hs.J and back.K == hs.K
    assert back.rho == hs.rho and back.b == hs.b
    assert verify_hypercomplex(back.alg, back).all_passed
    assert dumps(hyperstructure_to_json(back, report=False)) == \
        dumps(hyperstructure_to_json(hs, report=False))


def test_structure_json_errors():
    obj = hyperstructure_to_json(build_hyperstructure("A2"))
    for key in ("J", "rho"):
        broken = dict(obj)
        del broken[key]
        with pytest.raises(HyperstemError):
            hyperstructure_from_json(broken)
    broken = dict(obj, rho={"g1": "2"})
    with pytest.raises(InvalidRhoError):
        hyperstructure_from_json(broken)
    broken = dict(obj, rho={})
    with pytest.raises(DimensionMismatchError):
        hyperstructure_from_json(broken)
    with pytest.raises(HyperstemError):
        hyperstructure_from_json([])


def test_e_model_strings():
    rs = generate_root_system("D5")
    assert [e_model_string(rs, g) for g in compute_stem(rs).gamma_roots] == \
        ["e1+e2", "e1-e2", "e3+e4", "e3-e4"]
    rs = generate_root_system("C3")
    assert [e_model_string(rs, g) for g in compute_stem(rs).gamma_roots] == \
        ["2e1", "2e2", "2e3"]
    rs = generate_root_system("A2")
    assert e_model_string(rs, (1, 1)) == "e0-e2"
    assert e_model_string(generate_root_system("G2"), (1, 0)) is None
