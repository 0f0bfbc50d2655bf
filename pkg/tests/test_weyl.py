import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from chevalier import golden
from chevalier.cartan import cartan_from_type
from chevalier.roots import generate
from chevalier.weyl import BadGeneratorIndex, WeylGroup, stabilizer_chain_order


def weyl(name):
    return WeylGroup.of(generate(cartan_from_type(name)))


@pytest.mark.parametrize("name", ["a1", "a4", "b3", "c4", "d4", "d5", "g2", "f4", "e6"])
def test_order_matches_sympy(name):
    W = weyl(name)
    sym = PermutationGroup([Permutation([j - 1 for j in g]) for g in W.gens()])
    assert W.order() == sym.order()


@pytest.mark.parametrize("name, order", sorted(golden.EXCEPTIONAL_WEYL_ORDERS.items()))
def test_exceptional_orders(name, order):
    assert weyl(name).order() == order


@pytest.mark.parametrize("name", ["a5", "b5", "c5", "d6"])
def test_classical_orders(name):
    assert weyl(name).order() == golden.classical_weyl_order(name[0], int(name[1:]))


def test_chain_on_trivial_and_symmetric_groups():
    assert stabilizer_chain_order([(0, 1, 2)], [0]) == 1
    assert stabilizer_chain_order([(1, 0, 2, 3, 4), (1, 2, 3, 4, 0)], [0]) == 120


@pytest.mark.parametrize("name", ["g2", "b3", "a3", "f4"])
def test_longest_element(name):
    W = weyl(name)
    w0 = W.longest_element()
    assert W.length(w0) == W.N
    assert len(W.permword(w0)) == W.N
    assert W.element_order(w0) == 2


@pytest.mark.parametrize("name", ["g2", "b3", "f4", "e6"])
def test_braid_orders(name):
    W = weyl(name)
    a = W.rs.cartan
    for i in range(1, W.rank + 1):
        assert W.element_order(W.gen(i)) == 2
        for j in range(i + 1, W.rank + 1):
            expected = {0: 2, 1: 3, 2: 4, 3: 6}[a.a(i, j) * a.a(j, i)]
            assert W.braid_order(i, j) == expected


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), max_size=30))
def test_word_roundtrip_f4(word):
    W = _F4
    w = W.wordperm(word)
    reduced = W.permword(w)
    assert W.wordperm(reduced) == w
    assert len(reduced) == W.length(w) <= len(word)


_F4 = weyl("f4")


def test_apply_and_inverse():
    W = weyl("g2")
    w = W.wordperm([1, 2, 1])
    winv = W.inverse(w)
    assert W.mul(w, winv) == W.identity()
    for k in range(1, 13):
        assert W.apply(winv, W.apply(w, k)) == k
    # s1 sends alpha1 to -alpha1
    assert W.apply(W.gen(1), 1) == 7


def test_allwords_levels_g2():
    W = weyl("g2")
    levels = W.allwords()
    assert [len(l) for l in levels] == [1, 2, 2, 2, 2, 2, 1]
    assert levels[1] == [[1], [2]]
    assert levels[2] == [[1, 2], [2, 1]]
    elements = {W.wordperm(w) for lvl in levels for w in lvl}
    assert len(elements) == 12


def test_allwords_truncated():
    assert len(weyl("b3").allwords(2)) == 3


def test_bad_generator():
    with pytest.raises(BadGeneratorIndex):
        weyl("g2").gen(3)
    with pytest.raises(BadGeneratorIndex):
        weyl("g2").braid_order(1, 1)
