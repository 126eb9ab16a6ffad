import random
import unittest
from fractions import Fraction

from models.errors import CurveAlgebraError, IrrationalNormalizationError, WrongSplittingError
from models.forms import BinaryForm
from models.matrix import ExactMatrix
from services.cubic_lift import (
    GENERAL_QUADRICS,
    apolar_functional,
    cubic_roots,
    explicit_cubic_lift,
    general_sigma,
)
from services.curve import ParamCurve, curve_from_matrix
from services.fixtures import CONIC, OCTIC, random_form, reparameterize
from services.linalg import rank


S = BinaryForm.linear(1, 0)
T = BinaryForm.linear(0, 1)

OCTIC_CENTERS = ((0, 1, -1, 0, 0), (0, 1, 0, 0, -1))


def curve_with_first_row(alpha, seed: int) -> ParamCurve:
    """Curve whose syzygy matrix has the given cubic row and a random quintic row"""
    rng = random.Random(seed)
    for _ in range(50):
        beta = [random_form(rng, 5) for _ in range(3)]
        try:
            curve = curve_from_matrix(alpha, beta)
        except (CurveAlgebraError, ValueError):
            continue
        if curve.d == 8 and curve.mu.k == 3:
            return curve
    raise AssertionError("No suitable quintic row found")


class TestNormalForm(unittest.TestCase):
    def test_octic_functional(self):
        self.assertEqual(apolar_functional(OCTIC.mu.p.components), (0, 1, -1, 0))

    def test_octic_roots(self):
        roots = cubic_roots(apolar_functional(OCTIC.mu.p.components))
        self.assertEqual(sorted(roots), [((0, 1), 1), ((1, 0), 1), ((1, 1), 1)])

    def test_octic_needs_no_reparameterization(self):
        roots = [r for r, _ in cubic_roots(apolar_functional(OCTIC.mu.p.components))]
        self.assertEqual(general_sigma(roots), (1, 0, 0, 1))

    def test_irrational_roots(self):
        with self.assertRaises(IrrationalNormalizationError):
            cubic_roots((Fraction(1), Fraction(0), Fraction(0), Fraction(-2)))


class TestExplicitLift(unittest.TestCase):
    def test_octic_general_branch(self):
        built = explicit_cubic_lift(OCTIC)
        self.assertEqual(built.branch, "general")
        self.assertEqual(len(built.coords), 5)
        self.assertTrue(all(f.degree == 8 for f in built.coords))
        self.assertEqual(built.quadrics, GENERAL_QUADRICS)
        for quadric in built.quadrics:
            self.assertTrue(quadric.substitute(built.coords).is_zero())
        self.assertIsNone(built.vertex)

    def test_octic_centers(self):
        built = explicit_cubic_lift(OCTIC)
        stacked = ExactMatrix.from_rows([list(c) for c in built.centers] + [list(c) for c in OCTIC_CENTERS])
        self.assertEqual(len(built.centers), 2)
        self.assertEqual(rank(stacked), 2)

    def test_reparameterized_octic(self):
        built = explicit_cubic_lift(reparameterize(OCTIC, 2, 1, 1, 1))
        self.assertEqual(built.branch, "general")
        self.assertNotEqual(built.reparameterization, (1, 0, 0, 1))

    def test_tangent_branch(self):
        curve = curve_with_first_row((S.power(3), S * S * T, T.power(3)), seed=3)
        built = explicit_cubic_lift(curve)
        self.assertEqual(built.branch, "tangent")
        for quadric in built.quadrics:
            self.assertTrue(quadric.substitute(built.coords).is_zero())

    def test_cone_branch(self):
        curve = curve_with_first_row((S.power(3), T.power(3), S.power(3) + T.power(3)), seed=5)
        built = explicit_cubic_lift(curve)
        self.assertEqual(built.branch, "cone")
        self.assertEqual(built.vertex, (0, 0, 0, 0, 1))
        for quadric in built.quadrics:
            self.assertTrue(quadric.substitute(built.coords).is_zero())

    def test_wrong_splitting(self):
        with self.assertRaises(WrongSplittingError):
            explicit_cubic_lift(CONIC)


if __name__ == "__main__":
    unittest.main()
