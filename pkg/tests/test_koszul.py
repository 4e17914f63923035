import pytest

from nilcoxeter import koszul


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("p", [None, 2, 3, 5])
def test_duality(n, p):
    rep = koszul.duality_report(n, p)
    assert rep["equal"]
    assert rep["dim_Z"] + rep["dim_X"] == rep["pairs"]


@pytest.mark.parametrize("n", [4, 5])
def test_literal_orientation_fails(n):
    for conv in koszul.CONVENTIONS:
        assert not koszul.duality_report(n, None, conv, "literal")["equal"]


def test_only_the_suspended_pairing_works():
    for n in (3, 4, 5):
        ok = {c for c in koszul.CONVENTIONS if koszul.duality_report(n, None, c)["equal"]}
        assert ok == {"suspended"}


def test_small_case_is_ambiguous():
    # at n = 3 the literal orientation still works with the other pairings
    assert koszul.duality_report(3, None, "plain", "literal")["equal"]


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("p", [None, 2, 3, 5])
def test_ranks_two_routes(n, p):
    nf = koszul.ranks_by_normal_form(n, 4, char2=(p == 2))
    la = koszul.ranks_by_linear_algebra(n, 4, p)
    assert nf == la


def test_known_ranks():
    got = koszul.x_graded_ranks(4, 4)
    assert [a for a, _ in got.values()] == [1, 6, 20, 55, 145]
    assert [b for _, b in got.values()] == [1, 6, 20, 55, 145]
    assert [a for a, _ in koszul.x_graded_ranks(3, 4).values()] == [1, 3, 4, 4, 4]


@pytest.mark.parametrize("n,cap", [(3, 6), (4, 6), (5, 5)])
def test_hilbert_series_identity(n, cap):
    assert koszul.koszul_series_check(n, cap) == []


def test_hilbert_series_identity_detects_wrong_ranks():
    ranks = koszul.ranks_by_normal_form(4, 4)
    key = max(k for k in ranks if k[0] == 3)
    ranks[key] += 1
    assert koszul.koszul_series_check(4, 4, ranks)


def test_no_quadratic_normal_forms():
    # completion adds cubic rules at n = 4 and cubic to quintic ones at n = 5
    assert koszul.Rewriting(3, 5).obstructions() == {}
    assert koszul.Rewriting(4, 6).obstructions() == {3: 1}
    assert koszul.Rewriting(5, 5).obstructions() == {3: 6, 4: 2, 5: 3}


def test_naive_normal_words_overcount():
    # ignoring the cubic rule counts one word too many in length 3
    rw = koszul.Rewriting(4, 4)
    quadratic = {w for w in rw.rules if len(w) == 2}
    gens = koszul.generators(4)
    naive = [(a, b, c) for a in gens for b in gens for c in gens
             if (a, b) not in quadratic and (b, c) not in quadratic]
    assert len(naive) == len(rw.normal_words(3)) + 1 == 56


def test_normal_words_are_reduced():
    rw = koszul.Rewriting(4, 4)
    for w in rw.normal_words(3):
        assert rw.is_normal(w)
