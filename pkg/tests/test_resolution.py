import copy
import random

import pytest

from nilcoxeter import fp, koszul, presentations, resolution, zring
from nilcoxeter.resolution import Resolution


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_squares_and_degrees(n):
    res = Resolution(n)
    assert resolution.check_squares(res, 5) == []
    assert resolution.check_internal_degree(res, 5) == []


@pytest.mark.parametrize("n", [2, 3, 4])
def test_homotopy_exhaustive(n):
    res = Resolution(n)
    mons = [m for d in range(6) for m in res.monomials(d)]
    assert resolution.check_homotopy(res, mons) == []
    assert resolution.check_minimality(res, 6) == []


def test_homotopy_sampled_n5():
    res = Resolution(5)
    rng = random.Random(7)
    elems = res.group.elements()
    pool = [t for d in range(6) for t in res.cells(d)]
    mons = [(rng.choice(elems), rng.choice(pool)) for _ in range(300)]
    assert resolution.check_homotopy(res, mons) == []


@pytest.mark.parametrize("n", [3, 4])
def test_cube_conditions(n):
    res = Resolution(n)
    mons = [m for d in range(5) for m in res.monomials(d)]
    assert resolution.check_cubes(res, mons) == []


def test_cell_counts_are_binomial():
    for n in range(2, 6):
        res = Resolution(n)
        for d in range(7):
            assert len(list(res.cells(d))) == zring.rank_formula(n, d)


def test_unsigned_differentials_do_not_anticommute(monkeypatch):
    # negative control: dropping the Koszul signs must break d^2 = 0
    monkeypatch.setattr(Resolution, "d_sign", lambda self, t, k: 1)
    res = Resolution(3)
    bad = resolution.check_squares(res, 3)
    assert any(b[0] == "anticommute" for b in bad)


def test_broken_homotopy_is_caught(monkeypatch):
    orig = Resolution.homotopy_monomial

    def skewed(self, w, t):
        return orig(self, w, t).scale(2)

    monkeypatch.setattr(Resolution, "homotopy_monomial", skewed)
    res = Resolution(3)
    mons = [m for d in range(3) for m in res.monomials(d)]
    assert resolution.check_homotopy(res, mons)


@pytest.mark.parametrize("tag,n", [("A2", 3), ("A3", 4)])
@pytest.mark.parametrize("p", [3, 5])
def test_presentations_from_yoneda(tag, n, p):
    pres = presentations.TABLE[tag]
    rep = presentations.check_relations(pres, resolution.presentation_products(pres, n), p)
    assert rep["holds"] and rep["complete"]
    assert set(rep["signs"].values()) == {1}


def test_wrong_presentation_is_rejected():
    pres = copy.deepcopy(presentations.TABLE["A3"])
    pres["relations"] = [r if r != "uz=zw" else "uz+zw=0" for r in pres["relations"]]
    rep = presentations.check_relations(pres, resolution.presentation_products(pres, 4), 5)
    assert not rep["holds"]


def test_z_relations_against_yoneda_n5():
    # z_a z_b corresponds to the Yoneda product of b and a; the relation
    # space of Z must be exactly the kernel of the pair map
    n = 5
    Y = resolution.yoneda_structure_constants(n)
    Zr = koszul.z_relation_space(n)
    cells = sorted({c for f in Y.values() for c in f})
    index = {c: k for k, c in enumerate(cells)}
    M = [[0] * len(Zr.pairs) for _ in cells]
    for k, (a, b) in enumerate(Zr.pairs):
        for c, v in Y[(b, a)].items():
            M[index[c]][k] = v
    rank = fp.rational_rank(M)
    assert rank == 40
    assert Zr.dim() == len(Zr.pairs) - rank == 60
    for r in Zr.relations:
        for row in M:
            assert sum(row[Zr.index[ab]] * c for ab, c in r.items()) == 0
