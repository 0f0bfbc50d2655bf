from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from chevalier.exactnum import (GF, QQ, ZT, ZZ, DimensionMismatch, ExactError, IntPoly,
                                PrimeFieldElt, SparseMat, block_diagonal, commutator,
                                determinant, field_determinant, field_inverse,
                                inverse_rational, nullspace, primitive_integer_vector,
                                ring_from_name, smith_normal_form, solve_rational, specialize)

small = st.integers(-6, 6)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_determinant_agrees_with_sympy(rows):
    assert determinant(rows) == sympy.Matrix(rows).det()


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_smith_form_agrees_with_sympy(rows):
    from sympy.matrices.normalforms import smith_normal_form as snf
    ref = snf(sympy.Matrix(rows), domain=sympy.ZZ)
    want = sorted(abs(int(ref[i, i])) for i in range(len(rows)))
    got = list(smith_normal_form(rows))
    assert sorted(got) == want
    nz = [d for d in got if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_inverse_and_solve(rows):
    inv = inverse_rational(rows)
    if sympy.Matrix(rows).det() == 0:
        assert inv is None
        assert solve_rational(rows, [1] * len(rows)) is None
        return
    ref = sympy.Matrix(rows).inv()
    assert [[Fraction(str(ref[i, j])) for j in range(len(rows))] for i in range(len(rows))] == inv
    x = solve_rational(rows, [1] * len(rows))
    assert all(sum(r * v for r, v in zip(row, x)) == 1 for row in rows)


def test_nullspace_of_affine_a1():
    kernel = nullspace([[2, -2], [-2, 2]])
    assert len(kernel) == 1
    assert primitive_integer_vector(kernel[0]) in ((1, 1), (-1, -1))


def test_intpoly_arithmetic_matches_sympy():
    T = sympy.Symbol("T")
    p = IntPoly((1, -2, 3))
    q = IntPoly((0, 4))
    ps, qs = 1 - 2 * T + 3 * T ** 2, 4 * T
    for mine, theirs in ((p + q, ps + qs), (p * q, ps * qs), (p - q, ps - qs), (p ** 3, ps ** 3)):
        assert list(mine.coeffs) == [int(c) for c in reversed(sympy.Poly(theirs, T).all_coeffs())]


def test_intpoly_text_and_zero():
    assert str(IntPoly((0, 0, 6))) == "6T^2"
    assert str(IntPoly(())) == "0"
    assert IntPoly((1, 0, 0)) == IntPoly((1,))
    assert not IntPoly((0, 0))


def test_specialize_polynomial():
    p = IntPoly((1, 2, 1))
    assert specialize(p, ZZ, 3) == 16
    assert specialize(p, GF(5), 3) == 1
    assert specialize(p, QQ, Fraction(1, 2)) == Fraction(9, 4)


def test_prime_field():
    F = GF(7)
    assert all(F.normalize(x * F.inv(x)) == 1 for x in range(1, 7))
    assert F.pow(3, -1) == 5
    e = F.element(3)
    assert e / e == PrimeFieldElt(7, 1)
    assert e * 5 == F.element(1)
    with pytest.raises(ExactError):
        PrimeFieldElt(8, 1)
    with pytest.raises(ExactError):
        GF(9)


def test_ring_names():
    assert ring_from_name("GF(5)") == GF(5)
    assert ring_from_name("7") == GF(7)
    assert ring_from_name("q") is QQ
    assert ring_from_name("ZT") == ZT
    with pytest.raises(ExactError):
        ring_from_name("reals")


def test_rationals_store_integers_as_int():
    assert isinstance(QQ.coerce(Fraction(4, 2)), int)
    assert QQ.inv(2) == Fraction(1, 2)


def dense_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_sparse_product_matches_dense(pair):
    a, b = pair
    A, B = SparseMat.from_dense(a), SparseMat.from_dense(b)
    assert (A @ B).to_dense() == dense_mul(a, b)
    assert (A + B).to_dense() == [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]
    assert commutator(A, B) == A @ B - B @ A
    assert A.transpose().transpose() == A


def test_zero_entries_are_not_stored():
    m = SparseMat(2, 2, [(0, 0, 1), (0, 0, -1), (1, 1, 0)])
    assert m.nnz == 0 and m.is_zero()


def test_json_round_trip_each_ring():
    for ring, v in ((ZZ, -3), (QQ, Fraction(2, 3)), (ZT, IntPoly((0, 1, 2))), (GF(5), 4)):
        m = SparseMat(2, 3, [(0, 2, v)], ring)
        assert SparseMat.from_json(m.to_json()) == m


def test_exact_division():
    m = SparseMat.from_dense([[2, 4], [0, 6]])
    assert m.exact_div(2).to_dense() == [[1, 2], [0, 3]]
    with pytest.raises(ExactError):
        m.exact_div(4)


def test_shape_checks():
    with pytest.raises(DimensionMismatch):
        SparseMat.identity(2) @ SparseMat.identity(3)


def test_block_diagonal_and_field_inverse():
    m = block_diagonal([SparseMat.from_dense([[1, 1], [0, 1]], GF(3)),
                        SparseMat.from_dense([[2]], GF(3))])
    assert m.shape == (3, 3)
    assert field_determinant(m) == 2
    assert m @ field_inverse(m) == SparseMat.identity(3, GF(3))
    q = SparseMat.from_dense([[1, 2], [3, 4]], QQ)
    assert field_determinant(q) == -2
    with pytest.raises(ZeroDivisionError):
        field_inverse(SparseMat.from_dense([[1, 2], [2, 4]], QQ))


def test_specialize_matrix():
    m = SparseMat(2, 2, [(0, 1, IntPoly((0, 0, 1))), (0, 0, IntPoly((1,)))], ZT)
    assert m.specialize(GF(5), 3).to_dense() == [[1, 4], [0, 0]]
