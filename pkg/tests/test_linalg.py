import random
import unittest
from fractions import Fraction

import sympy

from models.matrix import ExactMatrix
from services.linalg import determinant, inverse, kernel_basis, rank, rref, solve_linear


class TestKernel(unittest.TestCase):
    def test_identity_has_trivial_kernel(self):
        self.assertEqual(kernel_basis(ExactMatrix.identity(2)), [])

    def test_rank_one_kernel_is_canonical(self):
        kernel = kernel_basis(ExactMatrix.from_rows([[1, 1, 0], [0, 0, 0]]))
        self.assertEqual(kernel, [(1, -1, 0), (0, 0, 1)])

    def test_proportional_rows(self):
        matrix = ExactMatrix.from_rows([[1, 2], [2, 4]])
        kernel = kernel_basis(matrix)
        self.assertEqual(len(kernel), 1)
        self.assertEqual(matrix.apply(kernel[0]), (0, 0))
        self.assertEqual(kernel[0][0], 1)

    def test_zero_row_matrix(self):
        self.assertEqual(len(kernel_basis(ExactMatrix.zeros(0, 3))), 3)

    def test_random_matrices(self):
        rng = random.Random(29)
        for _ in range(30):
            rows, cols = rng.randint(1, 6), rng.randint(1, 7)
            entries = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
            if rows > 1 and rng.random() < 0.5:
                entries[-1] = [a - 2 * b for a, b in zip(entries[0], entries[1 % rows])]
            matrix = ExactMatrix.from_rows(entries, cols)
            kernel = kernel_basis(matrix)
            self.assertEqual(rank(matrix) + len(kernel), cols)
            for vector in kernel:
                self.assertTrue(all(value == 0 for value in matrix.apply(vector)))
            if kernel:
                self.assertEqual(rank(ExactMatrix.from_rows(kernel, cols)), len(kernel))


class TestRankAndDeterminant(unittest.TestCase):
    def test_rank(self):
        self.assertEqual(rank(ExactMatrix.zeros(3, 3)), 0)
        self.assertEqual(rank(ExactMatrix.identity(4)), 4)
        self.assertEqual(rank(ExactMatrix.from_rows([[1, 2], [2, 4]])), 1)

    def test_rank_matches_sympy(self):
        rng = random.Random(11)
        for _ in range(20):
            rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
            rows[3] = [a + b for a, b in zip(rows[0], rows[1])] if rng.random() < 0.5 else rows[3]
            self.assertEqual(rank(ExactMatrix.from_rows(rows)), sympy.Matrix(rows).rank())

    def test_determinant(self):
        self.assertEqual(determinant(ExactMatrix.from_rows([[1, 2], [3, 4]])), -2)
        self.assertEqual(determinant(ExactMatrix.from_rows([[0, 1], [1, 0]])), -1)
        self.assertEqual(determinant(ExactMatrix.from_rows([["1/2", 1], [1, 3]])), Fraction(1, 2))
        self.assertEqual(determinant(ExactMatrix.from_rows([[1, 2], [2, 4]])), 0)

    def test_determinant_matches_sympy(self):
        rng = random.Random(5)
        for _ in range(10):
            rows = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
            self.assertEqual(determinant(ExactMatrix.from_rows(rows)), int(sympy.Matrix(rows).det()))

    def test_determinant_requires_square(self):
        with self.assertRaises(ValueError):
            determinant(ExactMatrix.zeros(2, 3))


class TestSolve(unittest.TestCase):
    def test_rref(self):
        reduced, pivots = rref([[2, 4, 2], [1, 3, 2]])
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(reduced, [[1, 0, -1], [0, 1, 1]])

    def test_solve(self):
        matrix = ExactMatrix.from_rows([[2, 1], [1, 3]])
        solution = solve_linear(matrix, [3, 5])
        self.assertEqual(matrix.apply(solution), (3, 5))

    def test_inconsistent_system(self):
        self.assertIsNone(solve_linear(ExactMatrix.from_rows([[1, 1], [1, 1]]), [1, 2]))

    def test_inverse(self):
        matrix = ExactMatrix.from_rows([[2, 1], [1, 1]])
        self.assertEqual(inverse(matrix), ExactMatrix.from_rows([[1, -1], [-1, 2]]))
        self.assertEqual(matrix @ inverse(matrix), ExactMatrix.identity(2))

    def test_singular_inverse(self):
        with self.assertRaises(ValueError):
            inverse(ExactMatrix.from_rows([[1, 2], [2, 4]]))


if __name__ == "__main__":
    unittest.main()
