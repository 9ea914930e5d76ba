import pytest

import oracles
from hyperstem.algebra import algebra_for
from hyperstem.chevalley import (StructureConstants, bracket_pair, compute_structure_constants,
                                 contragredience_theta, jacobi_sweep, magnitude_check,
                                 stem_sign_check, theta_check)
from hyperstem.errors import HyperstemError
from hyperstem.roots import generate_root_system
from hyperstem.stem import compute_stem

SMALL = [f"{f}{n}" for f, n in oracles.IRREDUCIBLE if n <= 5] + ["A2+G2"]


@pytest.mark.parametrize("spec", SMALL)
def test_jacobi_and_magnitude(spec):
    sc = algebra_for(spec).sc
    for rep in (jacobi_sweep(sc), magnitude_check(sc), theta_check(sc)):
        assert rep.all_passed, rep.failures()


@pytest.mark.parametrize("fam,n", oracles.IRREDUCIBLE)
def test_stem_sign_product(fam, n):
    alg = algebra_for(f"{fam}{n}")
    assert stem_sign_check(alg.sc, compute_stem(alg.rs)).all_passed


@pytest.mark.parametrize("spec", ["B4", "F4", "E6", "G2"])
def test_extraspecial_pairs_positive(spec):
    sc = algebra_for(spec).sc
    rs = sc.rs
    assert set(sc.extraspecial) == set(rs.positive) - set(rs.simple)
    for xi, (a, b) in sc.extraspecial.items():
        assert sc.sum[a][b] == xi
        assert sc.N[a][b] > 0


def test_g2_values():
    sc = algebra_for("G2").sc
    # alpha-string through 2a+b is (0,1), (1,1), (2,1), (3,1): r = 2
    assert abs(sc.n((1, 0), (2, 1))) == 3
    assert abs(sc.n((1, 0), (0, 1))) == 1
    assert abs(sc.n((1, 0), (1, 1))) == 2
    assert sc.n((1, 0), (3, 2)) == 0
    assert sc.n((1, 0), (9, 9)) == 0


def test_bracket_examples():
    sc = algebra_for("B2").sc
    # e1 is short: its coroot 2e1 = 2(e1 - e2) + 2e2
    assert bracket_pair(sc, "E[1,1]", "E[-1,-1]") == {"H1": 2, "H2": 1}
    assert bracket_pair(sc, "E[1,0]", "E[-1,0]") == {"H1": 1}
    assert bracket_pair(sc, "H1", "H2") == {}
    assert bracket_pair(sc, "E[1,0]", "E[1,0]") == {}
    assert bracket_pair(sc, "H1", "E[1,0]") == {"E[1,0]": 2}
    assert contragredience_theta(sc, "E[1,1]") == {"E[-1,-1]": -1}
    assert contragredience_theta(sc, "H2") == {"H2": -1}
    with pytest.raises(HyperstemError):
        bracket_pair(sc, "E[5,5]", "H1")


def test_cache_is_per_root_system():
    rs = generate_root_system("A3")
    assert compute_structure_constants(rs) is compute_structure_constants(rs)
    other = generate_root_system("A3")
    assert compute_structure_constants(other).rs is other


def test_tampered_constant_breaks_jacobi():
    sc = StructureConstants(generate_root_system("A3"))
    rs = sc.rs
    a, b = rs.index[(1, 0, 0)], rs.index[(0, 1, 0)]
    sc.N[a][b] = -sc.N[a][b]
    sc._table = sc._basis_table()
    assert not jacobi_sweep(sc)["jacobi"].passed
    assert not magnitude_check(sc)["sign_symmetries"].passed


def test_doubled_constant_breaks_magnitude():
    sc = StructureConstants(generate_root_system("B2"))
    rs = sc.rs
    a, b = rs.index[(1, 0)], rs.index[(0, 1)]
    sc.N[a][b] *= 2
    assert not magnitude_check(sc)["magnitude"].passed


def test_nonzero_triples_are_consistent():
    sc = algebra_for("C3").sc
    for a, b, n in sc.nonzero_triples():
        assert n == sc.N[a][b] != 0
        assert sc.sum[a][b] >= 0
