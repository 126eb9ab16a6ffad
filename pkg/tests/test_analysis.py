import unittest

from services.analysis import CurveAnalyzer
from services.fixtures import CONIC, CUSP3, OCTIC, SQ4, random_curve
from utils.formatting import parse_curve_text


class TestAnalyze(unittest.TestCase):
    def setUp(self):
        self.analyzer = CurveAnalyzer(seed=1)

    def test_trials_must_be_positive(self):
        with self.assertRaises(ValueError):
            CurveAnalyzer(trials=0)

    def test_conic_report(self):
        report = self.analyzer.analyze(CONIC)
        self.assertEqual((report.splitting.a, report.splitting.b), (1, 1))
        self.assertTrue(report.balanced)
        self.assertEqual(report.map_degree, 1)
        self.assertEqual(report.mu_basis.hilbert_burch_constant, "1")
        self.assertEqual(report.second_level.h, 0)
        self.assertIsNone(report.implicit)
        self.assertIsNone(report.lift)

    def test_ascenzi_table(self):
        report = self.analyzer.analyze(OCTIC)
        self.assertEqual([v.m for v in report.ascenzi_table], list(range(1, 8)))
        verdict = report.ascenzi_table[3]
        self.assertEqual(verdict.m, 4)
        self.assertFalse(verdict.consistent)

    def test_double_cover_is_flagged(self):
        report = self.analyzer.analyze(SQ4, include_implicit=True)
        self.assertEqual(report.implicit.equation, "x0*x2 - x1^2")
        self.assertEqual(report.implicit.map_degree, 2)
        self.assertTrue(any("2 times" in remark for remark in report.diagnostics))

    def test_removed_factor_is_reported(self):
        curve_input = parse_curve_text("[1,0,0,0];[0,1,0,0];[0,0,1,0]")
        curve = self.analyzer.build_curve(curve_input)
        report = self.analyzer.analyze(curve, raw_forms=curve_input.forms)
        self.assertEqual(report.removed_factor, ["1", "0"])
        self.assertEqual(report.degree, 2)
        self.assertEqual(len(report.input[0]), 4)

    def test_octic_lift_with_explicit_construction(self):
        report = self.analyzer.analyze(OCTIC, include_lift=True, explicit=True)
        self.assertEqual(report.lift.k, 3)
        self.assertEqual(report.lift.quadric_count, 3)
        self.assertEqual(len(report.lift.coords), 5)
        self.assertEqual(report.lift.explicit.branch, "general")
        self.assertTrue(report.lift.diagnostics.passed)

    def test_forced_chart(self):
        report = self.analyzer.analyze(CONIC, include_lift=True, chart=(1, 2))
        self.assertEqual(report.lift.chart, "12")

    def test_matrix_input(self):
        text = "matrix\n[1,0,0,0]\n[0,1,1,0]\n[0,0,0,1]\n[1,0,0,3,0,0]\n[0,0,3,0,0,1]\n[1,0,0,0,1,1]\n"
        curve = self.analyzer.build_curve(parse_curve_text(text))
        self.assertEqual(curve, OCTIC)


class TestVerify(unittest.TestCase):
    def test_fixtures_pass(self):
        analyzer = CurveAnalyzer(seed=2)
        for curve in (CONIC, CUSP3, OCTIC, random_curve(6, 17)):
            report = analyzer.verify(curve)
            failed = [c.name for c in report.checks if not c.passed]
            self.assertEqual(failed, [], msg=f"{curve}: {failed}")
            self.assertTrue(report.passed)

    def test_check_names(self):
        report = CurveAnalyzer().verify(CONIC)
        names = [c.name for c in report.checks]
        self.assertIn("hilbert_burch", names)
        self.assertIn("round_trip", names)
        self.assertIn("lift_diagnostics", names)

    def test_double_cover_reports_map_degree(self):
        analyzer = CurveAnalyzer()
        report = analyzer.verify(SQ4)
        checks = {c.name: c for c in report.checks}
        self.assertTrue(checks["implicit_equation"].passed)
        self.assertIn("r=2", checks["implicit_equation"].detail)
        # the lift of the squared conic is birational onto its image
        self.assertTrue(checks["lift_diagnostics"].passed)

        analysis = analyzer.analyze(SQ4)
        self.assertEqual(analysis.map_degree, 2)
        self.assertIn("parameterization covers its image 2 times", analysis.diagnostics)


if __name__ == "__main__":
    unittest.main()
