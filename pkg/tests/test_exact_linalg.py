# -*- coding: utf-8 -*-
from fractions import Fraction

import pytest

from commands import golden
from core.errors import NoSolutionError, SingularMatrixError
from exact_linalg.matrices import (
    as_int_matrix,
    det,
    hnf,
    integral_vector,
    is_row_echelon,
    is_saturated,
    kernel_saturated,
    pivot_columns,
    primitive_vector,
    rank,
    rational_inverse,
    row_basis,
    row_lattice_equal,
    smith_invariants,
    solve_exact,
    to_tuples,
)


def _product(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


class TestConversion:
    def test_rejects_non_integer_entries(self):
        with pytest.raises(ValueError):
            as_int_matrix([[1, 0.5]])

    def test_accepts_integral_fractions(self):
        assert to_tuples(as_int_matrix([[Fraction(4, 2), 1]])) == ((2, 1),)

    def test_rejects_ragged_rows(self):
        with pytest.raises(ValueError):
            as_int_matrix([[1, 2], [3]])

    def test_rejects_booleans(self):
        with pytest.raises(ValueError):
            as_int_matrix([[True, 0]])


class TestHermite:
    def test_small_example(self):
        H, U = hnf([[2, 4], [1, 3]])
        assert to_tuples(H) == ((1, 1), (0, 2))
        assert _product(U.tolist(), [[2, 4], [1, 3]]) == [list(f) for f in to_tuples(H)]
        assert abs(det(U)) == 1

    def test_dependent_rows_go_last(self):
        H, _ = hnf([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        assert to_tuples(H)[-1] == (0, 0, 0)
        assert to_tuples(row_basis([[1, 2, 3], [2, 4, 6], [0, 1, 1]])) == ((1, 0, 1), (0, 1, 1))

    def test_row_lattice_equality(self):
        assert row_lattice_equal([[1, 1], [0, 2]], [[1, 3], [1, 1]])
        assert not row_lattice_equal([[1, 0], [0, 2]], [[1, 0], [0, 1]])

    def test_echelon_helpers(self):
        M = as_int_matrix([[1, 2, 0], [0, 0, 3]])
        assert pivot_columns(M) == [0, 2]
        assert is_row_echelon(M)
        assert not is_row_echelon(as_int_matrix([[0, 1], [1, 0]]))


class TestKernelAndSaturation:
    def test_rank(self):
        assert rank([[1, 2], [2, 4]]) == 1
        assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
        assert rank([]) == 0

    def test_kernel_of_fan_matrix_is_weight_lattice(self):
        K = kernel_saturated(golden.EX1_V)
        assert K.shape == (3, 6)
        assert row_lattice_equal(K, golden.EX1_Q)

    def test_kernel_is_saturated(self):
        K = kernel_saturated([[2, 4, 6]])
        assert is_saturated(K)
        for fila in to_tuples(K):
            assert 2 * fila[0] + 4 * fila[1] + 6 * fila[2] == 0

    def test_injective_matrix_has_trivial_kernel(self):
        assert kernel_saturated([[1, 0], [0, 1]]).shape == (0, 2)

    def test_smith_invariants(self):
        assert smith_invariants([[2, 0], [0, 3]]) == [1, 6]
        assert smith_invariants([[1, 0, -1], [0, 2, -2]]) == [1, 2]

    def test_saturation(self):
        assert is_saturated(golden.CEX4_Q)
        assert not is_saturated([[2, 0], [0, 1]])


class TestRationalAlgebra:
    def test_determinant(self):
        assert det([[2, 1], [1, 1]]) == 1
        assert det([[1, 2], [2, 4]]) == 0
        with pytest.raises(ValueError):
            det([[1, 2, 3]])

    def test_inverse(self):
        inversa = rational_inverse([[2, 1], [1, 1]])
        assert inversa.tolist() == [[1, -1], [-1, 2]]
        assert rational_inverse([[2]]).tolist() == [[Fraction(1, 2)]]

    def test_singular_inverse(self):
        with pytest.raises(SingularMatrixError):
            rational_inverse([[1, 2], [2, 4]])

    def test_solve(self):
        assert solve_exact([[1, 1], [1, -1]], [3, 1]) == [2, 1]
        assert solve_exact([[2]], [1]) == [Fraction(1, 2)]

    def test_solve_inconsistent(self):
        with pytest.raises(NoSolutionError):
            solve_exact([[1, 1], [2, 2]], [1, 3])

    def test_primitive_and_integral_vectors(self):
        assert primitive_vector((4, -6, 0)) == (2, -3, 0)
        assert primitive_vector((0, 0)) == (0, 0)
        assert integral_vector([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
        assert integral_vector([Fraction(-2, 4), 1]) == (-1, 2)
