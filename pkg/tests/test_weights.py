import json

import pytest
import sympy
from sympy.combinatorics import Permutation, PermutationGroup

from chevalier import golden
from chevalier.canbasis import build
from chevalier.cartan import cartan_from_type
from chevalier.exactnum import ZZ, SparseMat
from chevalier.roots import generate
from chevalier.weights import (NotAdmissible, NotMinuscule, WeightMismatch, adjoint_module,
                               check_admissible, direct_sum, dominant_rep, fundamental_weight,
                               lattice_index, load_module, minuscule_weights,
                               module_from_generators, rep_minuscule, s_i_on_weight,
                               sl2_irrep, weight_height, weightorbit)
from chevalier.weyl import WeylGroup


def parabolic_index(name, lam):
    """|W| / |W_lam| with both orders from sympy on root permutations."""
    rs = generate(cartan_from_type(name))
    W = WeylGroup.of(rs)
    perms = [Permutation([j - 1 for j in g]) for g in W.gens()]
    full = PermutationGroup(perms).order()
    fixed = [p for p, m in zip(perms, lam) if m == 0]
    sub = PermutationGroup(fixed).order() if fixed else 1
    return full // sub


@pytest.mark.parametrize("name, i", [("a4", 2), ("b3", 1), ("b3", 3), ("c3", 1), ("d4", 2),
                                     ("d5", 5), ("g2", 1), ("f4", 4), ("e6", 1)])
def test_orbit_size_is_parabolic_index(name, i):
    a = cartan_from_type(name)
    lam = fundamental_weight(a.rank, i)
    orbit = weightorbit(a, lam)
    assert len(orbit) == len(set(orbit)) == parabolic_index(name, lam)


def test_orbit_is_closed_and_starts_with_seed():
    a = cartan_from_type("b3")
    orbit = weightorbit(a, (0, 0, 1))
    assert orbit[0] == (0, 0, 1)
    for mu in orbit:
        for i in (1, 2, 3):
            assert s_i_on_weight(a, i, mu) in orbit


def test_e6_first_orbit_verbatim():
    assert weightorbit(cartan_from_type("e6"), (1, 0, 0, 0, 0, 0)) == golden.E6_ORBIT_OMEGA1


@pytest.mark.parametrize("name", ["a3", "b4", "c4", "d5", "e6", "e7", "e8", "f4", "g2"])
def test_minuscule_indices(name):
    got = minuscule_weights(cartan_from_type(name))
    assert got == golden.minuscule_indices(name[0], int(name[1:]))


def test_dominant_rep_reaches_the_dominant_chamber():
    a = cartan_from_type("f4")
    lam, word = dominant_rep(a, (-1, 2, -3, 1))
    assert all(m >= 0 for m in lam)
    mu = lam
    for i in reversed(word):
        mu = s_i_on_weight(a, i, mu)
    assert mu == (-1, 2, -3, 1)


def test_weight_height_of_highest_root():
    a = cartan_from_type("g2")
    rs = generate(a)
    assert weight_height(a, rs.weight_of_root(rs.highest_root())) == 5


@pytest.mark.parametrize("make", [
    lambda: sl2_irrep(4),
    lambda: adjoint_module(build(cartan_from_type("g2"))),
    lambda: adjoint_module(build(cartan_from_type("b3"))),
    lambda: rep_minuscule(cartan_from_type("c2"), [2]),
    lambda: rep_minuscule(cartan_from_type("e6"), [1, 6]),
    lambda: load_module(golden.g2_seven_json()),
])
def test_modules_are_admissible(make):
    mod = make()
    rep = check_admissible(mod)
    assert rep.ok, rep.problems
    for k in range(1, 2 * mod.rs.N + 1):
        m = mod.rhoE(k)
        # divided powers multiply back to the plain powers
        p = mod.divided_power(k, 1)
        assert p == m
        assert mod.divided_power(k, mod.nilpotency(k)).is_zero()


def test_sl2_irrep_divided_powers():
    mod = sl2_irrep(4)
    assert mod.dim == 5 and mod.nilpotency(1) == 5
    e = mod.rhoE(1).to_dense()
    assert [e[i][i + 1] for i in range(4)] == [4, 3, 2, 1]
    assert mod.divided_power(1, 4).to_dense()[0][4] == 1


def test_corrupted_generator_is_rejected():
    doc = golden.g2_seven_json()
    doc["e"][0] = [[2 * x for x in row] for row in doc["e"][0]]
    try:
        mod = load_module(doc)
    except NotAdmissible:
        return
    assert not check_admissible(mod).ok


def test_g2_seven_keeps_its_basis_order():
    mod = load_module(golden.g2_seven_json())
    assert mod.order == tuple(range(7))
    assert mod.weights[0] == tuple(golden.G2_SEVEN["weights"][0])


def test_load_module_from_text_and_path(tmp_path):
    doc = golden.g2_seven_json()
    text = json.dumps(doc)
    p = tmp_path / "g2.json"
    p.write_text(text)
    a, b = load_module(text), load_module(str(p))
    assert a.rhoE_list == b.rhoE_list
    again = load_module(a.to_json())
    assert again.rhoE_list == a.rhoE_list


def test_load_sorts_by_height():
    mod = sl2_irrep(2)
    doc = mod.to_json()
    rev = list(reversed(range(3)))
    doc["weights"] = [doc["weights"][k] for k in rev]
    for key in ("e", "f"):
        dense = [SparseMat.from_json(m, ZZ).to_dense() for m in doc[key]]
        doc[key] = [[[m[rev[r]][rev[c]] for c in range(3)] for r in range(3)] for m in dense]
    again = load_module(doc)
    assert again.order == (2, 1, 0)
    assert again.weights == mod.weights and again.rhoE_list == mod.rhoE_list


def test_bad_inputs():
    a = cartan_from_type("g2")
    with pytest.raises(NotMinuscule):
        rep_minuscule(a, [1])
    with pytest.raises(NotMinuscule):
        rep_minuscule(cartan_from_type("a2"), [(0, 0)])
    e = SparseMat.zero(2)
    with pytest.raises(WeightMismatch):
        module_from_generators([[2]], [(1, 0), (-1, 0)], [e], [e])
    with pytest.raises(NotAdmissible):
        module_from_generators([[2]], [(1,), (-1,)], [e, e], [e])
    with pytest.raises(WeightMismatch):
        direct_sum([sl2_irrep(1), rep_minuscule(cartan_from_type("a2"), [1])])


def test_direct_sum():
    s = direct_sum([sl2_irrep(1), sl2_irrep(2)])
    assert s.dim == 5 and check_admissible(s).ok
    assert sorted(s.weights, reverse=True) == list(s.weights)


@pytest.mark.parametrize("name", ["a3", "b3", "d4", "e6", "e7", "g2"])
def test_lattice_index_of_roots_is_the_determinant(name):
    a = cartan_from_type(name)
    rs = generate(a)
    _, idx = lattice_index(a, [rs.weight_of_root(k) for k in range(1, rs.N + 1)])
    assert idx == abs(sympy.Matrix(a.rows()).det())


@pytest.mark.parametrize("name, i", [("a3", 1), ("e6", 1), ("e7", 7), ("d5", 1)])
def test_minuscule_orbits_span_the_weight_lattice(name, i):
    a = cartan_from_type(name)
    orbit = weightorbit(a, fundamental_weight(a.rank, i))
    assert lattice_index(a, orbit)[1] == 1


def test_lattice_index_of_low_rank_span():
    assert lattice_index(cartan_from_type("a2"), [(1, 0)])[1] == 0
    assert lattice_index(cartan_from_type("a2"), [])[1] == 0
