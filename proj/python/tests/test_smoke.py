import json
from fractions import Fraction

import pytest

import htype


def test_k1_heisenberg():
    rep = htype.extract_irreducible(1)
    assert rep.dim == 2
    A = htype.structure_constants(rep)
    assert (A.m, A.n) == (1, 2)
    assert A.triples() == [(0, 0, 1, 1), (0, 1, 0, -1)]
    assert A.bracket([1, 0], [0, 1]) == [Fraction(1)]


def test_dims_match_table():
    rows = htype.dims(8)
    assert [r[1] for r in rows] == [2, 4, 4, 8, 8, 8, 8, 16]
    assert [r[2] for r in rows] == [2, 4, 8, 8, 16, 16, 16, 16]
    assert "a=2" in rows[1][3]


@pytest.mark.parametrize("k", range(1, 13))
def test_clifford_and_htype(k):
    for variant in htype.admissible_variants(k):
        rep = htype.extract_irreducible(k, variant)
        htype.verify_clifford(rep.gens, k)
        htype.verify_htype(htype.structure_constants(rep))


def test_dense_matrices_anticommute():
    rep = htype.extract_irreducible(3, "plus")
    mats = [g.matrix() for g in rep.gens]
    n = rep.dim

    def mul(a, b):
        return [[sum(a[i][t] * b[t][j] for t in range(n)) for j in range(n)] for i in range(n)]

    for i, a in enumerate(mats):
        for j, b in enumerate(mats):
            ab, ba = mul(a, b), mul(b, a)
            want = -2 if i == j else 0
            for r in range(n):
                for c in range(n):
                    assert ab[r][c] + ba[r][c] == (want if r == c else 0)


def test_omega_and_variants():
    plus = htype.extract_irreducible(7, "plus")
    minus = htype.extract_irreducible(7, "minus")
    assert htype.omega(plus) == htype.SignedPerm.identity(8)
    assert htype.omega(minus) == -htype.SignedPerm.identity(8)
    assert all(m == -p for p, m in zip(plus.gens, minus.gens))
    assert htype.plus_minus_iso(7)
    with pytest.raises(ValueError):
        htype.extract_irreducible(4, "plus")


def test_errors():
    with pytest.raises(ValueError):
        htype.build_graded(0)
    with pytest.raises(htype.CapExceeded):
        htype.build_graded(30)
    with pytest.raises(ValueError):
        htype.SignedPerm([0, 0], [1, 1])


def test_json_round_trip_and_corruption():
    rep = htype.extract_irreducible(3)
    text = htype.to_json(rep)
    htype.verify_json(text)
    rec = json.loads(text)
    assert rec["format"] == 1 and rec["n"] == 4
    rec["triples"][0][3] *= -1
    with pytest.raises(ValueError, match="violated"):
        htype.verify_json(json.dumps(rec))


def test_group_law_and_reduce():
    A = htype.structure_constants(htype.extract_irreducible(1))
    u, v = htype.group_commutator(A, [0], [1, 0], [0], [0, 1])
    assert u == [1] and v == [0, 0]
    u, v = htype.group_mul(A, [0], [1, 0], [0], [0, 1])
    assert u == [Fraction(1, 2)]
    assert htype.group_inverse(u, v) == ([Fraction(-1, 2)], [-1, -1])
    lattice, reduced = htype.reduce(A, ["3/4"], ["5/4", Fraction(-7, 8)])
    assert reduced == ([Fraction(7, 16)], [Fraction(1, 4), Fraction(1, 8)])
    lu, lv = lattice
    assert htype.group_mul(A, ["3/4"], ["5/4", "-7/8"], lu, lv) == reduced


def test_growth():
    A = htype.structure_constants(htype.extract_irreducible(1))
    g, truncated = htype.ball_count(A, 6)
    assert not truncated
    assert g[:2] == [1, 7]
    assert all(a <= b for a, b in zip(g, g[1:]))
    assert htype.growth_degree(A.m, A.n) == 4
    assert htype.subgroup_index(A) == 1
    assert htype.subgroup_index(A, "integer") == 2
    g, _ = htype.ball_count(A, 15)
    assert 3.5 <= htype.loglog_slope(g, 8, 15) <= 4.5
    _, truncated = htype.ball_count(A, 15, element_cap=1000)
    assert truncated
