import unittest
from fractions import Fraction

from models.errors import CurveParseError
from models.forms import BinaryForm
from utils.formatting import (
    curve_to_text,
    form_to_text,
    parse_curve_text,
    parse_form,
    parse_scalar,
)


class TestParseForm(unittest.TestCase):
    def test_cubic(self):
        self.assertEqual(parse_form("[1,0,0,-2]"), BinaryForm(3, [1, 0, 0, -2]))

    def test_rationals_and_spaces(self):
        self.assertEqual(parse_form(" [1/2, -3/4] "), BinaryForm(1, [Fraction(1, 2), Fraction(-3, 4)]))

    def test_malformed(self):
        for text in ("1,0,0", "[]", "[1,x]", "[1/0]"):
            with self.assertRaises(CurveParseError):
                parse_form(text)

    def test_parse_error_is_a_value_error(self):
        with self.assertRaises(ValueError):
            parse_scalar("0.5.1")


class TestParseCurve(unittest.TestCase):
    def test_degree_block_with_comments(self):
        text = "# twisted cusp\ndegree 3\n[1,0,0,0]\n\n[0,0,1,0]\n[0,0,0,1]\n"
        parsed = parse_curve_text(text)
        self.assertEqual(parsed.kind, "forms")
        self.assertEqual(parsed.declared_degree, 3)
        self.assertEqual(parsed.forms[1], BinaryForm(3, [0, 0, 1, 0]))

    def test_inline(self):
        parsed = parse_curve_text("[1,0,0];[0,1,0];[0,0,1]")
        self.assertEqual(len(parsed.forms), 3)
        self.assertIsNone(parsed.declared_degree)

    def test_matrix_block(self):
        text = "matrix\n[1,0,0,0]\n[0,1,1,0]\n[0,0,0,1]\n[1,0,0,3,0,0]\n[0,0,3,0,0,1]\n[1,0,0,0,1,1]\n"
        parsed = parse_curve_text(text)
        self.assertEqual(parsed.kind, "matrix")
        self.assertEqual(parsed.alpha[1], BinaryForm(3, [0, 1, 1, 0]))
        self.assertEqual(parsed.beta[2].degree, 5)

    def test_errors(self):
        cases = (
            "",
            "[1,0];[0,1]",
            "[1,0,0];[0,1];[0,0,1]",
            "degree 4\n[1,0,0]\n[0,1,0]\n[0,0,1]",
            "matrix\n[1,0]\n[0,1]",
        )
        for text in cases:
            with self.assertRaises(CurveParseError):
                parse_curve_text(text)


class TestOutput(unittest.TestCase):
    def test_form_text(self):
        self.assertEqual(form_to_text(BinaryForm(2, [Fraction(1, 2), 0, -1])), "[1/2,0,-1]")

    def test_curve_file_reparses(self):
        forms = (BinaryForm(2, [1, 0, 0]), BinaryForm(2, [0, 1, 0]), BinaryForm(2, [0, 0, 1]))
        text = curve_to_text(forms)
        self.assertTrue(text.startswith("degree 2\n"))
        self.assertEqual(parse_curve_text(text).forms, forms)


if __name__ == "__main__":
    unittest.main()
