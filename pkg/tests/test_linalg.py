from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from homlong.linalg import (Matrix, Tensor3, Vector, DimensionMismatch,
                            SingularMatrix, apply3, flat_index, unflat_index,
                            flip_matrix, kron, perm_matrix, scalar,
                            scalar_to_json, solve_exact)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=9)


def rand_matrix(r, c):
    return st.lists(st.lists(rationals, min_size=c, max_size=c),
                    min_size=r, max_size=r).map(Matrix)


def test_scalar_parsing():
    assert scalar(3) == Fraction(3)
    assert scalar("2/4") == Fraction(1, 2)
    assert scalar("-7/3") == Fraction(-7, 3)
    assert scalar_to_json(Fraction(4, 2)) == 2
    assert scalar_to_json(Fraction(-1, 3)) == "-1/3"
    with pytest.raises(TypeError):
        scalar(1.5)
    with pytest.raises(TypeError):
        scalar(True)


def test_scalar_arithmetic_exact():
    # (a/b) + (c/d) over arbitrary-precision integers, reduced
    big = Fraction(10 ** 40 + 1, 10 ** 40)
    assert big - 1 == Fraction(1, 10 ** 40)
    assert scalar("1/3") + scalar("1/6") == Fraction(1, 2)


def test_kron_identity():
    assert kron(Matrix.identity(2), Matrix.identity(3)) == Matrix.identity(6)


def test_kron_1x1():
    assert kron(Matrix([[2]]), Matrix([[3]])) == Matrix([[6]])


def test_kron_index_convention():
    # swap (x) id applied to e0 (x) e0 lands on index 2 = 1*2 + 0
    m = kron(Matrix([[0, 1], [1, 0]]), Matrix.identity(2))
    v = m.apply(Vector.basis(4, 0))
    assert v == Vector.basis(4, 2)


def test_kron_rectangular_shapes():
    a = Matrix([[1, 2, 3]])            # 1x3
    b = Matrix([[1], [2]])             # 2x1
    k = kron(a, b)
    assert (k.rows, k.cols) == (2, 3)
    assert k.data[1][2] == 6


def test_invert_examples():
    assert Matrix.identity(4).inv() == Matrix.identity(4)
    assert Matrix([[2]]).inv() == Matrix([["1/2"]])
    m = Matrix([[1, 1], [0, 1]])
    assert m.inv() == Matrix([[1, -1], [0, 1]])
    assert m * m.inv() == Matrix.identity(2)
    with pytest.raises(SingularMatrix):
        Matrix([[1, 2], [2, 4]]).inv()


def test_pow_negative():
    m = Matrix([[2, 0], [0, 3]])
    assert m ** -2 == Matrix([["1/4", 0], [0, "1/9"]])
    assert m ** 0 == Matrix.identity(2)


@settings(max_examples=60, deadline=None)
@given(rand_matrix(3, 3))
def test_invert_involution(m):
    try:
        inv = m.inv()
    except SingularMatrix:
        assert m.det() == 0
        return
    assert inv.inv() == m
    assert m * inv == Matrix.identity(3)


@settings(max_examples=40, deadline=None)
@given(rand_matrix(2, 3), rand_matrix(2, 2), rand_matrix(3, 2), rand_matrix(2, 3))
def test_kron_mixed_product(a, b, c, d):
    assert kron(a, b) * kron(c, d) == kron(a * c, b * d)


@settings(max_examples=40, deadline=None)
@given(rand_matrix(3, 3))
def test_det_multiplicative(m):
    n = Matrix([[1, 2, 0], [0, 1, 5], [1, 0, 1]])
    assert (m * n).det() == m.det() * n.det()


def test_perm_matrix_and_flat_index():
    dims = [2, 3, 2]
    p = perm_matrix(dims, [2, 0, 1])
    src = flat_index((1, 2, 0), dims)
    dst = flat_index((0, 1, 2), [2, 2, 3])
    assert p.data[dst][src] == 1
    assert unflat_index(src, dims) == (1, 2, 0)
    assert flip_matrix(2, 2) * flip_matrix(2, 2) == Matrix.identity(4)


def test_lazy_leg_permutations_match_matrices():
    from homlong.linalg import permute_input_legs, permute_output_legs
    dims = [2, 3, 2]
    perm = [2, 0, 1]
    p = perm_matrix(dims, perm)
    m = Matrix.from_function(12, 5, lambda i, j: Fraction(3 * i - j, 2))
    assert permute_output_legs(m, dims, perm) == p * m
    mt = m.transpose()
    assert permute_input_legs(mt, dims, perm) == mt * p
    with pytest.raises(DimensionMismatch):
        permute_output_legs(Matrix.identity(5), dims, perm)


def test_solve_exact():
    a = Matrix([[1, 1], [1, -1], [2, 0]])
    b = Vector([3, 1, 4])
    x = solve_exact(a, b)
    assert x == Vector([2, 1])
    assert solve_exact(a, Vector([3, 1, 5])) is None


def test_tensor3_flatten_round_trip():
    t = Tensor3.from_function(2, 3, 2, lambda i, j, k: i + 10 * j + 100 * k)
    m = t.flatten_in2_out1()
    assert (m.rows, m.cols) == (2, 6)
    assert Tensor3.from_in2_out1(m, 2, 3) == t
    m2 = t.flatten_in1_out2()
    assert (m2.rows, m2.cols) == (6, 2)
    assert Tensor3.from_in1_out2(m2, 3, 2) == t


def test_apply3():
    t = Tensor3.from_function(2, 2, 2, lambda i, j, k: i + j + k)
    assert apply3(t, 0, Matrix.identity(2)) == t
    z = Tensor3.zeros(2, 2, 2)
    assert apply3(z, 1, Matrix([[1, 2], [3, 4]])) == z
    doubled = apply3(t, 2, Matrix.identity(2).scale(2))
    assert all(doubled[i, j, k] == 2 * t[i, j, k]
               for i in range(2) for j in range(2) for k in range(2))
    with pytest.raises(DimensionMismatch):
        apply3(t, 1, Matrix([[1, 2, 3]]))


def test_zero_dim_edge_cases():
    e = Matrix([], rows=0, cols=0)
    assert kron(e, Matrix.identity(2)) == Matrix([], rows=0, cols=0)
    v = Vector([])
    assert v.dim == 0 and v.is_zero()
    t = Tensor3.zeros(2, 0, 0)
    assert t.flatten_in2_out1().rows == 0


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix([[1]]) * Matrix([[1, 2], [3, 4]])
    with pytest.raises(DimensionMismatch):
        Matrix([[1, 2]]).det()
