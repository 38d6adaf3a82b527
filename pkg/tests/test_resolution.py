import random
from math import comb

import pytest

from sareg import (BettiTable, HomogeneousIdeal, Ring, arrangement_ideal, irrelevant_ideal, minimal_resolution,
                   random_arrangement, regularity, resolve, schreyer_resolution, schreyer_syzygies)
from sareg.ideal import hilbert_function
from sareg.resolution import FreeModuleSpec, GradedMatrix, betti_regularity, hyperplane_regularity
from oracles import koszul_betti
from strategies import random_poly

P = 32003


def sample_ideals():
    R3, R4 = Ring(3), Ring(4)
    yield HomogeneousIdeal.parse(R4, "x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2")
    yield HomogeneousIdeal.parse(R3, "x0^2", "x0*x1^5", "x0*x2^5")
    yield HomogeneousIdeal.parse(R3, "x0^3", "x1^3", "x2^3", "x0*x1*x2")
    rng = random.Random(11)
    for _ in range(3):
        yield HomogeneousIdeal(R3, [random_poly(R3, rng, 2, 4) for _ in range(3)])
    for seed in range(3):
        yield arrangement_ideal(random_arrangement(3, 3, [2, 2, 3], seed))


def _check_resolution(I):
    res = resolve(I, minimize=False)
    mres = resolve(I)
    for r in (res, mres):
        for i in range(1, len(r.maps)):
            assert r.maps[i - 1].compose(r.maps[i]).is_zero()
    # minimality: no constant entries
    for M in mres.maps[1:]:
        assert not M.unit_entries()
    table = mres.betti_table()
    assert table.length <= I.ring.nvars - 1
    # row 0 of F_0 counts minimal generators
    gens = I.groebner.generators
    ngens = sum(1 for k, g in enumerate(gens)
                if not HomogeneousIdeal(I.ring, gens[:k] + gens[k + 1:]).contains(g))
    assert sum(table.totals()[:1]) == ngens
    # graded Euler characteristic reproduces the Hilbert function
    n = I.ring.nvars
    for j in range(10):
        alt = sum((-1) ** i * b * comb(j - k + n - 1, n - 1) for (i, k), b in table.entries if k <= j)
        assert alt == hilbert_function(I, j)
    return table


@pytest.mark.parametrize("I", list(sample_ideals()), ids=lambda I: str(I)[:40])
def test_resolution_invariants(I):
    table = _check_resolution(I)
    top = max(j for (_, j), _ in table.entries) + 1
    assert table.as_dict() == koszul_betti(I.groebner.generators, I.ring.nvars, P, top)


@pytest.mark.parametrize("v", [2, 3, 4, 5])
def test_koszul(v):
    table = minimal_resolution(irrelevant_ideal(Ring(v)))
    assert table.as_dict() == {(i, i + 1): comb(v, i + 1) for i in range(v)}
    assert betti_regularity(table) == 1


def test_skew_lines_table(skew_lines):
    table = minimal_resolution(skew_lines)
    assert table.as_dict() == {(0, 2): 4, (1, 3): 4, (2, 4): 1}
    assert table.render() == "       0 1 2\ntotal: 4 4 1\n    2: 4 4 1\n"
    assert regularity(skew_lines, "both").value == 2


def test_schreyer_syzygies_of_basis(skew_lines):
    gb = skew_lines.groebner
    syz = schreyer_syzygies(gb)
    row = GradedMatrix(gb.ring, FreeModuleSpec(tuple(g.degree() for g in gb)), FreeModuleSpec((0,)),
                       [{0: g} for g in gb])
    assert row.compose(syz).is_zero()
    assert syz.source.rank >= 4


def test_graded_matrix_degree_check():
    R = Ring(2)
    with pytest.raises(ValueError):
        GradedMatrix(R, FreeModuleSpec((2,)), FreeModuleSpec((0,)), [{0: R.var(0)}])


def test_strategies_agree():
    R = Ring(3)
    rng = random.Random(12)
    for _ in range(4):
        I = HomogeneousIdeal(R, [random_poly(R, rng, rng.choice((2, 3)), 3) for _ in range(3)])
        assert betti_regularity(minimal_resolution(I)) == hyperplane_regularity(I, seed=1)


def test_betti_table_render_and_errors():
    t = BettiTable.from_counts({(0, 2): 3, (1, 3): 2, (1, 4): 1, (2, 5): 1})
    assert t.render().splitlines() == [
        "       0 1 2",
        "total: 3 3 1",
        "    2: 3 2 .",
        "    3: . 1 1",
    ]
    with pytest.raises(ValueError):
        regularity(HomogeneousIdeal(Ring(2)), "betti")
    with pytest.raises(ValueError):
        regularity(irrelevant_ideal(Ring(2)), "magic")


def test_nonminimal_frame_is_larger(skew_lines):
    assert sum(schreyer_resolution(skew_lines).ranks()) >= sum(resolve(skew_lines).ranks())
