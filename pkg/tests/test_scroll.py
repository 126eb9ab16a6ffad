import unittest

from models.errors import CenterOnCurveError, ChartExhaustedError
from models.forms import BinaryForm, HomogeneousPoly, MovingLine
from services.curve import projectively_equal
from services.fixtures import CONIC, CUSP3, OCTIC, plant_multiplicity, random_curve
from services.scroll import (
    default_projection_rows,
    koszul_syzygies,
    lift,
    lift_basis,
    lift_diagnostics,
    project_from_points,
    quadrics_through,
    second_level,
)


S = BinaryForm.linear(1, 0)
T = BinaryForm.linear(0, 1)
ZERO0 = BinaryForm.zero(0)
ONE = BinaryForm.one()


class TestSecondLevel(unittest.TestCase):
    def test_conic_is_ascenzi(self):
        scroll = second_level(CONIC)
        self.assertEqual(scroll.gamma, MovingLine(ZERO0, ZERO0, ONE))
        self.assertEqual((scroll.h, scroll.e), (0, 1))
        self.assertTrue(scroll.ascenzi)
        self.assertTrue(scroll.alpha_dependent)

    def test_cusp_is_ascenzi(self):
        scroll = second_level(CUSP3)
        self.assertEqual(scroll.gamma, MovingLine(ONE, ZERO0, ZERO0))
        self.assertEqual(scroll.h, 0)

    def test_octic_is_not_ascenzi(self):
        scroll = second_level(OCTIC)
        self.assertEqual((scroll.h, scroll.e), (1, 1))
        self.assertFalse(scroll.ascenzi)
        self.assertFalse(scroll.alpha_dependent)
        self.assertEqual(scroll.gamma, MovingLine(T, T - S, -S))

    def test_octic_ledger(self):
        scroll = second_level(OCTIC)
        self.assertEqual(scroll.c0_self_intersection, -1)
        self.assertEqual(scroll.hyperplane_class, (1, 2))
        self.assertEqual(scroll.curve_class, (1, 7))
        self.assertEqual(scroll.scroll_degree, 3)
        self.assertIsNone(scroll.vertex_intersection)

    def test_cone_vertex_intersection(self):
        scroll = second_level(CUSP3)
        self.assertEqual(scroll.vertex_intersection, CUSP3.d - 1)
        self.assertEqual(scroll.scroll_degree, 1)


class TestLift(unittest.TestCase):
    def test_koszul_triples_are_syzygies(self):
        alpha = OCTIC.mu.p.components
        for line in koszul_syzygies(alpha):
            self.assertTrue(line.apply(*alpha).is_zero())

    def test_basis_size(self):
        basis = lift_basis(OCTIC.mu.p.components)
        self.assertEqual(len(basis), 5)
        self.assertEqual(basis[2:], koszul_syzygies(OCTIC.mu.p.components))

    def test_conic_falls_back_to_second_chart(self):
        lifted = lift(CONIC)
        self.assertEqual(lifted.chart, (0, 2))
        self.assertEqual(lifted.coords, (S * S, -(S * T), T * T))
        self.assertEqual(lifted.removed_gcd, S)

    def test_forced_degenerate_chart(self):
        with self.assertRaises(ChartExhaustedError):
            lift(CONIC, chart=(0, 1))

    def test_cusp_lift(self):
        lifted = lift(CUSP3)
        self.assertEqual(lifted.chart_label, "01")
        self.assertEqual(lifted.coords, (-S.power(3), S * T * T, -T.power(3)))

    def test_octic_lift_shape(self):
        lifted = lift(OCTIC)
        self.assertEqual(lifted.k, 3)
        self.assertEqual(len(lifted.coords), 5)
        self.assertEqual(lifted.d, 8)
        self.assertEqual(lifted.removed_gcd.degree, 3)

    def test_charts_agree(self):
        curve = random_curve(6, 8)
        lifts = [lift(curve, chart=chart) for chart in ((0, 1), (0, 2), (1, 2))]
        for other in lifts[1:]:
            self.assertTrue(projectively_equal(lifts[0].coords, other.coords))


class TestProjection(unittest.TestCase):
    def test_default_rows(self):
        self.assertEqual(default_projection_rows(3), [[0, 0, 1, 0, 0], [0, 0, 0, -1, 0], [0, 0, 0, 0, 1]])

    def test_round_trip(self):
        for curve in (CONIC, CUSP3, OCTIC, random_curve(7, 2), plant_multiplicity(8, 3, 5)):
            projected = project_from_points(lift(curve))
            self.assertTrue(projectively_equal(projected.forms, curve.forms))

    def test_random_projection_lowers_splitting(self):
        lifted = lift(OCTIC)
        projected = project_from_points(lifted, [[1, 2, 0, -1, 3], [0, 1, 5, 2, -2]])
        self.assertEqual(projected.d, lifted.d)
        self.assertEqual(projected.removed_factor.degree, 0)
        self.assertLessEqual(projected.mu.k, lifted.k)

    def test_center_count(self):
        with self.assertRaises(ValueError):
            project_from_points(lift(OCTIC), [[1, 0, 0, 0, 0]])

    def test_center_on_curve(self):
        lifted = lift(OCTIC)
        on_curve = [f.evaluate(1, 1) for f in lifted.coords]
        with self.assertRaises(CenterOnCurveError):
            project_from_points(lifted, [on_curve, [0, 1, 5, 2, -2]])


class TestQuadricsAndDiagnostics(unittest.TestCase):
    def test_quadric_counts(self):
        self.assertEqual(quadrics_through(lift(OCTIC)).dimension, 3)
        self.assertEqual(quadrics_through(lift(CUSP3)).dimension, 0)
        conic = quadrics_through(lift(CONIC))
        self.assertEqual(conic.dimension, 1)
        x0, x1, x2 = (HomogeneousPoly.variable(3, i) for i in range(3))
        self.assertEqual(conic.basis[0], x0 * x2 - x1 * x1)

    def test_octic_diagnostics(self):
        result = lift_diagnostics(lift(OCTIC), second_level(OCTIC))
        self.assertTrue(result.immersion_pass)
        self.assertEqual(result.injectivity_degree, 1)
        self.assertIsNone(result.vertex)
        self.assertTrue(result.passed)

    def test_conic_vertex(self):
        result = lift_diagnostics(lift(CONIC), second_level(CONIC))
        self.assertEqual(result.vertex, (0, 0, 1))
        self.assertEqual(result.vertex_preimage_degree, 1)
        self.assertTrue(result.passed)

    def test_cusp_vertex(self):
        result = lift_diagnostics(lift(CUSP3), second_level(CUSP3))
        self.assertEqual(result.vertex, (1, 0, 0))
        self.assertEqual(result.vertex_preimage_degree, 2)
        self.assertEqual(result.expected_vertex_degree, 2)
        self.assertIsNone(result.immersion_pass)


if __name__ == "__main__":
    unittest.main()
