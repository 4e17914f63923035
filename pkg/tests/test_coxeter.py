import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from nilcoxeter.coxeter import CoxeterDiagram, CoxeterError, SymmetricGroup

ORDERS = {"A:1": 2, "A:2": 6, "A:3": 24, "A:4": 120, "B:2": 8, "B:3": 48,
          "D:4": 192, "H:3": 120, "G:2": 12, "I2:5": 10, "I2:7": 14}
TOP = {"A:3": 6, "B:3": 9, "D:4": 12, "H:3": 15, "G:2": 6, "I2:7": 7}


@pytest.mark.parametrize("spec,order", sorted(ORDERS.items()))
def test_orders(spec, order):
    G = CoxeterDiagram.parse(spec).group
    assert G.order() == order
    assert sum(len(x) for x in G.elements_by_length()) == order


@pytest.mark.parametrize("spec,top", sorted(TOP.items()))
def test_longest_element(spec, top):
    G = CoxeterDiagram.parse(spec).group
    w0 = G.longest_element
    assert G.length(w0) == top
    layers = [len(x) for x in G.elements_by_length()]
    assert layers == layers[::-1]
    # w0 is an involution and psi is too
    assert G.multiply(w0, w0) == G.multiply(w0, G.inverse(w0))
    for w in G.elements():
        assert G.psi(G.psi(w)) == w
        assert G.length(G.psi(w)) == G.length(w)


def test_length_is_inversions():
    S = SymmetricGroup(5)
    for w in S.elements():
        inv = sum(1 for a, b in itertools.combinations(w, 2) if a > b)
        assert S.length(w) == inv


def test_reduced_words_roundtrip():
    G = CoxeterDiagram.parse("H:3").group
    for w in G.elements():
        word = G.reduced_word(w)
        assert len(word) == G.length(w)
        assert G.from_word(word) == w


@pytest.mark.parametrize("bad", ["Q:3", "A:0", "A", "E:9", "matrix:[[1,7],[3,1]]",
                                 "matrix:[[1,3,3],[3,1,3],[3,3,1]]"])
def test_bad_diagrams(bad):
    with pytest.raises(CoxeterError):
        CoxeterDiagram.parse(bad)


def test_matrix_diagram_matches_named():
    G = CoxeterDiagram.parse("matrix:[[1,4],[4,1]]").group
    assert G.order() == 8
    assert [len(x) for x in G.elements_by_length()] == [1, 2, 2, 2, 1]


perm = st.integers(3, 6).flatmap(lambda n: st.permutations(range(1, n + 1)))


@given(perm, st.data())
@settings(max_examples=60, deadline=None)
def test_lengths_add_is_reducedness(w, data):
    S = SymmetricGroup(len(w))
    v = tuple(data.draw(st.permutations(range(1, len(w) + 1))))
    w = tuple(w)
    uv = S.multiply(w, v)
    adds = S.length(uv) == S.length(w) + S.length(v)
    assert adds == S.lengths_add(w, v)
    assert S.length(uv) <= S.length(w) + S.length(v)


def test_mahonian_product_formula():
    # the generating function of lengths is prod (1 + x + ... + x^i)
    for n in range(2, 7):
        S = SymmetricGroup(n)
        layers = [len(x) for x in S.elements_by_length()]
        assert sum(layers) == math.factorial(n)
        assert len(layers) == n * (n - 1) // 2 + 1
