import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chevalier.cartan import (AsymmetricZero, DecomposableInput, DiagonalNotTwo, IllegalRank,
                              NotFiniteType, NotSquare, PositiveOffDiagonal, cartan_from_type,
                              classify, classify_all, components, dynkin_types, epsilon,
                              fundamental_group, inverse_positive, parse_type, recognize,
                              standard_matrix, validate)

FINITE = [f"a{n}" for n in range(1, 9)] + [f"b{n}" for n in range(2, 9)] + \
         [f"c{n}" for n in range(2, 9)] + [f"d{n}" for n in range(4, 9)] + \
         ["e6", "e7", "e8", "f4", "g2"]


@pytest.mark.parametrize("bad, exc", [
    ([[2, -1], [-1]], NotSquare),
    ([[1, -1], [-1, 2]], DiagonalNotTwo),
    ([[2, 1], [-1, 2]], PositiveOffDiagonal),
    ([[2, 0], [-1, 2]], AsymmetricZero),
])
def test_validation_errors(bad, exc):
    with pytest.raises(exc):
        validate(bad)


def test_d3_is_accepted_and_recognised_as_a3():
    assert recognize(cartan_from_type("d3")).name == "A3"
    with pytest.raises(IllegalRank):
        parse_type("e9")


def test_product_types_split_into_components():
    a = cartan_from_type("a2xg2")
    assert components(a) == [[1, 2], [3, 4]]
    assert [t.name for _, t in dynkin_types(a)] == ["A2", "G2"]
    with pytest.raises(DecomposableInput):
        classify(a)


def leading_minors_positive(rows):
    n = len(rows)
    for k in range(1, n + 1):
        for sub in itertools.combinations(range(n), k):
            if sympy.Matrix([[rows[i][j] for j in sub] for i in sub]).det() <= 0:
                return False
    return True


@pytest.mark.parametrize("name", FINITE)
def test_finite_types_have_positive_principal_minors(name):
    rows = cartan_from_type(name).rows()
    assert classify(rows).kind == "FIN"
    assert leading_minors_positive(rows)
    assert inverse_positive(validate(rows))


@st.composite
def connected_gcm(draw):
    n = draw(st.integers(2, 4))
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    order = list(range(n))
    pairs = [(order[k], draw(st.sampled_from(order[:k]))) for k in range(1, n)]
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2))
    for i, j in pairs + [p for p in extra if p[0] != p[1]]:
        m[i][j] = -draw(st.integers(1, 3))
        m[j][i] = -draw(st.integers(1, 3))
    return m


@settings(max_examples=80, deadline=None)
@given(connected_gcm())
def test_classification_against_minor_criterion(m):
    """Finite iff every principal minor is positive; affine iff det = 0 and
    every proper principal minor is positive."""
    kind = classify(m).kind
    n = len(m)
    proper = all(sympy.Matrix([[m[i][j] for j in s] for i in s]).det() > 0
                 for k in range(1, n) for s in itertools.combinations(range(n), k))
    det = sympy.Matrix(m).det()
    if proper and det > 0:
        assert kind == "FIN"
    elif proper and det == 0:
        assert kind == "AFF"
        u = classify(m).null_vector
        assert all(x > 0 for x in u)
        assert all(sum(r * x for r, x in zip(row, u)) == 0 for row in m)
    else:
        assert kind == "IND"


def test_affine_null_vector_is_primitive():
    c = classify([[2, -1, 0], [-1, 2, -3], [0, -1, 2]])
    assert c.kind == "AFF" and c.null_vector == (1, 2, 1)


@pytest.mark.parametrize("name", FINITE)
def test_recognition_survives_relabelling(name):
    a = cartan_from_type(name)
    rng = random.Random(name)
    perm = list(range(a.rank))
    rng.shuffle(perm)
    shuffled = [[a.entries[perm[i]][perm[j]] for j in range(a.rank)] for i in range(a.rank)]
    t = recognize(shuffled)
    family = name[0].upper()
    if family in "BC" and a.rank == 2:
        assert t.family in "BC"
    else:
        assert t.family == family and t.rank == a.rank
    std = standard_matrix(t.family, t.rank)
    p = t.relabelling
    assert all(std.a(p[i], p[j]) == shuffled[i][j] for i in range(a.rank) for j in range(a.rank))


def test_identity_relabelling_is_preferred():
    t = recognize([[2, -3], [-1, 2]])
    assert t.name == "G2" and t.relabelling == (2, 1)
    assert recognize(standard_matrix("B", 3)).relabelling == (1, 2, 3)


@pytest.mark.parametrize("name", FINITE)
def test_epsilon_alternates_across_edges(name):
    a = cartan_from_type(name)
    eps = epsilon(a)
    assert eps[0] == 1
    for i in range(a.rank):
        for j in range(a.rank):
            if i != j and a.entries[i][j]:
                assert eps[i] == -eps[j]


def test_epsilon_of_e8():
    assert epsilon(cartan_from_type("e8")) == (1, -1, -1, 1, -1, 1, -1, 1)


@pytest.mark.parametrize("name", FINITE)
def test_fundamental_group_order_is_determinant(name):
    a = cartan_from_type(name)
    from sympy.matrices.normalforms import smith_normal_form
    snf = smith_normal_form(sympy.Matrix(a.rows()), domain=sympy.ZZ)
    want = sorted(abs(int(snf[i, i])) for i in range(a.rank) if abs(int(snf[i, i])) > 1)
    got = fundamental_group(a)
    assert sorted(got) == want
    order = 1
    for d in got:
        order *= d
    assert order == sympy.Matrix(a.rows()).det()


def test_fundamental_group_needs_finite_type():
    with pytest.raises(NotFiniteType):
        fundamental_group(validate([[2, -2], [-2, 2]]))


def test_classify_all_reports_each_block():
    a = validate([[2, -2, 0], [-2, 2, 0], [0, 0, 2]])
    kinds = [c.kind for _, c in classify_all(a)]
    assert kinds == ["AFF", "FIN"]
