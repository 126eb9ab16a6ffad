import unittest

from services.curve import ascenzi_interval, map_degree, multiplicity_at_point, splitting_type
from services.fixtures import (
    CUSP3,
    OCTIC,
    named_fixtures,
    plant_multiplicity,
    quadric_sextic,
    random_curve,
    reparameterize,
)
from services.scroll import second_level


class TestNamedFixtures(unittest.TestCase):
    def test_names_and_degrees(self):
        fixtures = dict(named_fixtures())
        self.assertEqual(sorted(fixtures), ["CONIC", "CUSP3", "OCTIC", "SQ4"])
        self.assertEqual({name: curve.d for name, curve in fixtures.items()},
                         {"CONIC": 2, "CUSP3": 3, "SQ4": 4, "OCTIC": 8})


class TestGenerators(unittest.TestCase):
    def test_random_curve_is_seeded(self):
        first = random_curve(6, 42)
        self.assertEqual(first, random_curve(6, 42))
        self.assertEqual(first.d, 6)
        self.assertEqual(map_degree(first), 1)

    def test_planted_point(self):
        for d, m in ((5, 2), (6, 3), (7, 6)):
            curve = plant_multiplicity(d, m, seed=d * 10 + m)
            self.assertEqual(curve.d, d)
            self.assertEqual(multiplicity_at_point(curve, (0, 0, 1)), m)
            lower, upper = ascenzi_interval(d, m)
            self.assertTrue(lower <= curve.mu.k <= upper)

    def test_planted_multiplicity_range(self):
        with self.assertRaises(ValueError):
            plant_multiplicity(5, 5, seed=1)

    def test_quadric_sextic(self):
        curve = quadric_sextic(7)
        splitting = splitting_type(curve)
        scroll = second_level(curve)
        self.assertEqual((splitting.a, splitting.b), (2, 4))
        self.assertEqual((scroll.h, scroll.e), (1, 0))

    def test_reparameterize_keeps_splitting(self):
        moved = reparameterize(OCTIC, 2, 1, 1, 1)
        self.assertEqual(moved.d, 8)
        self.assertEqual(moved.mu.k, 3)
        self.assertEqual(reparameterize(CUSP3, 0, 1, 1, 0).mu.k, 1)

    def test_singular_reparameterization(self):
        with self.assertRaises(ValueError):
            reparameterize(CUSP3, 1, 2, 2, 4)


if __name__ == "__main__":
    unittest.main()
