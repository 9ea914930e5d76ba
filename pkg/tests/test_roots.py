import pytest

import oracles
from hyperstem.errors import NonCartanError, NotARootError, SpecError
from hyperstem.roots import (cartan_integer, generate_root_system, height, highest_root,
                             irreducible_components, parse_spec, reflect)
from hyperstem.stem import compute_stem


@pytest.mark.parametrize("fam,n", oracles.IRREDUCIBLE)
def test_roots_match_coordinate_description(fam, n):
    rs = generate_root_system(f"{fam}{n}")
    simple = oracles.simple_roots(fam, n)
    expected = {oracles.to_simple_coords(simple, v) for v in oracles.all_roots(fam, n)}
    assert None not in expected
    assert set(rs.roots) == expected
    assert len(rs.roots) == oracles.ROOT_COUNTS[fam](n)


@pytest.mark.parametrize("fam,n", oracles.IRREDUCIBLE)
def test_cartan_matrix_from_inner_products(fam, n):
    rs = generate_root_system(f"{fam}{n}")
    simple = oracles.simple_roots(fam, n)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))
    for i in range(n):
        for j in range(n):
            assert rs.cartan[i][j] == 2 * dot(simple[i], simple[j]) / dot(simple[j], simple[j])


def test_g2_positive_roots():
    rs = generate_root_system("G2")
    # alpha = (1, 0) short, beta = (0, 1) long
    assert {rs.roots[a] for a in rs.positive} == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert len(rs.roots) == 12
    assert cartan_integer(rs, (0, 1), (1, 0)) == -3
    assert cartan_integer(rs, (1, 0), (0, 1)) == -1


def test_small_cases():
    assert generate_root_system("A1").roots == [(-1,), (1,)]
    assert len(generate_root_system("E8").roots) == 240
    rs = generate_root_system("A2")
    assert cartan_integer(rs, (1, 0), (1, 0)) == 2
    assert reflect(rs, (1, 0), (1, 0)) == (-1, 0)
    assert reflect(rs, (1, 0), (0, 1)) == (1, 1)


@pytest.mark.parametrize("spec,top", [("A2", (1, 1)), ("G2", (3, 2)), ("F4", (2, 3, 4, 2)),
                                      ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
                                      ("E6", (1, 2, 2, 3, 2, 1)), ("B3", (1, 2, 2))])
def test_highest_root(spec, top):
    rs = generate_root_system(spec)
    assert rs.roots[highest_root(rs, rs.positive)] == top


def test_e8_highest_root_is_e7_plus_e8():
    rs = generate_root_system("E8")
    h = rs.roots[highest_root(rs, rs.positive)]
    simple = oracles.simple_roots("E", 8)
    assert oracles.to_e(simple, h) == (0,) * 6 + (1, 1)


def test_components():
    rs = generate_root_system("A1+A1")
    assert len(irreducible_components(rs, rs.positive)) == 2
    rs = generate_root_system("E6")
    assert len(irreducible_components(rs, rs.positive)) == 1
    # D4 minus the roots not orthogonal to the highest root: three A1's
    rs = generate_root_system("D4")
    g = highest_root(rs, rs.positive)
    rest = [a for a in rs.positive if rs.inner(rs.roots[a], rs.roots[g]) == 0]
    comps = irreducible_components(rs, rest)
    assert sorted(len(c) for c in comps) == [1, 1, 1]


def test_highest_root_rejects_reducible_sets():
    rs = generate_root_system("A1+A1")
    with pytest.raises(NonCartanError):
        highest_root(rs, rs.positive)


def test_height_and_order():
    rs = generate_root_system("B3")
    heights = [height(r) for r in rs.roots]
    assert heights == sorted(heights)
    assert all(height(rs.roots[a]) < 0 for a in rs.negative)
    assert all(rs.roots[rs.neg[a]] == tuple(-x for x in rs.roots[a]) for a in range(len(rs.roots)))


@pytest.mark.parametrize("text,comps,center", [
    ("A4", ["A4"], 0), ("A2+A2", ["A2", "A2"], 0), ("A2#4", ["A2"], 4), ("#4", [], 4),
    (" c3 #3", ["C3"], 3), ("A2+B3+G2", ["A2", "B3", "G2"], 0)])
def test_parse_spec(text, comps, center):
    spec = parse_spec(text)
    assert [str(c) for c in spec.components] == comps
    assert spec.center_rank == center
    assert parse_spec(str(spec)) == spec


@pytest.mark.parametrize("text", ["", "A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3",
                                  "A2#0", "A2#x", "A2++A2", "#", 7])
def test_parse_spec_rejects(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_unknown_root():
    rs = generate_root_system("A2")
    with pytest.raises(NotARootError):
        rs.idx((2, 0))


def test_mixed_spec_concatenates_components():
    rs = generate_root_system("A2+G2")
    assert rs.rank == 4
    assert len(rs.roots) == 6 + 12
    assert compute_stem(rs).d == 1 + 2
