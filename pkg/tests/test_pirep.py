import numpy as np
import pytest

from nilcoxeter import pirep, zring


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_relations_hold(n):
    rep = pirep.rep_symmetric(n, [2, 3, 5, 7, 11][:n - 1])
    assert rep.size == 2 ** (n - 2)
    rep_report = pirep.verify_homomorphism(rep)
    assert rep_report["ok"], rep_report["failures"]
    assert pirep.check_dagger_identity(rep) == []


def test_three_point_rep_is_the_doubling():
    a = pirep.rep_a2(2, 3)
    b = pirep.rep_doubling(pirep.rep_base(2), 3)
    for g in a.generators():
        assert np.array_equal(a[g], b[g])


@pytest.mark.parametrize("g", [(1, 2), (2, 3), (1, 3), (2, 4)])
def test_corrupted_sign_is_caught(g):
    rep = pirep.rep_symmetric(4, [2, 3, 5])
    assert not pirep.verify_homomorphism(pirep.corrupt(rep, g))["ok"]


@pytest.mark.parametrize("n,p", [(3, 2), (3, 5), (4, 2), (4, 3), (5, 2), (5, 5)])
def test_surjective(n, p):
    rep = pirep.rep_symmetric(n)
    assert pirep.image_dimension(rep, p) == rep.size ** 2


def test_degenerate_parameter_loses_surjectivity():
    # t_1 = 0 kills every diagonal generator block
    rep = pirep.rep_symmetric(4, [0, 1, 1])
    assert pirep.image_dimension(rep, 3) < 16


@pytest.mark.parametrize("n", [4, 5, 6])
def test_blocks_have_distinct_kernels(n):
    assert pirep.distinct_kernels(pirep.rep_symmetric(n))


def test_rep_on_monomials_is_multiplicative():
    n = 5
    rep = pirep.rep_symmetric(n, [2, 3, 5, 7])
    R = zring.ZRing(n)
    mons = [m for d in range(4) for m in zring.enumerate_canonical(n, d)]
    for a in mons[::7]:
        for b in mons[::5]:
            lhs = rep.of_monomial(a) @ rep.of_monomial(b)
            assert np.array_equal(lhs, rep.of_element(R.monomial(a) * R.monomial(b)))


def test_vxy_quotient():
    rep = pirep.rep_vxy_quotient(2, 3, 5)
    assert pirep.verify_homomorphism(rep)["ok"]
    # without the sign on u the relation zu = wz fails
    flipped = pirep.corrupt(rep, (1, 2))
    bad = pirep.verify_homomorphism(flipped)["failures"]
    assert ((1, 4), (1, 2)) in bad


@pytest.mark.parametrize("degrees,split", [((1, 1), 1), ((1, 2, 1), 2), ((1, 1, 1, 2), 2)])
def test_graded_tensor_embedding(degrees, split):
    words = pirep.all_words(len(degrees), 4)
    assert pirep.check_graded_embedding(degrees, split, [2, 3, 5, 7][:len(degrees)], words) == []


def test_graded_tensor_sort_sign():
    words = pirep.sample_words(2, 5, 200, seed=1)
    # both odd variables on the left: they commute
    assert pirep.check_graded_embedding((1, 1), 2, [2, 3], words) == []
    srt, s = pirep.graded_tensor_sort((2, 1), (1, 1), 1)
    assert srt == (1, 2) and s == -1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_detection_is_injective(n):
    for d in range(6):
        count, rank = pirep.detection_rank(n, d)
        assert count == rank


def test_window_image_rejects_straddling():
    assert pirep.window_image(((1, 3),), 4, 2) is None
    s, left, right = pirep.window_image(((1, 2), (3, 4)), 4, 2)
    assert left == ((1, 2),) and right == ((3, 4),) and s == 1
