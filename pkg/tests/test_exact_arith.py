import random
import unittest

import sympy

from models.errors import BothZeroError, DivideByZeroError, NotDivisibleError, ZeroResultantError
from models.forms import BinaryForm, HomogeneousPoly, MovingLine
from services.curve import implicitize
from services.exact_arith import (
    bf_div_exact,
    bf_eval,
    bf_gcd,
    bf_gcd_many,
    cross_minors,
    minor_gcd,
    polynomial_determinant,
    resultant_moving_lines,
    sylvester_matrix,
)
from services.fixtures import SQ4, random_curve, random_form


S = BinaryForm.linear(1, 0)
T = BinaryForm.linear(0, 1)
ZERO1 = BinaryForm.zero(1)
X0, X1, X2 = (HomogeneousPoly.variable(3, i) for i in range(3))


class TestGcd(unittest.TestCase):
    def test_common_monomial_factor(self):
        self.assertEqual(bf_gcd(S.power(3), S * T * T), S)

    def test_gcd_with_zero_is_monic(self):
        form = BinaryForm(2, [2, 0, 4])
        self.assertEqual(bf_gcd(form, BinaryForm.zero(3)), BinaryForm(2, [1, 0, 2]))

    def test_coprime_forms(self):
        self.assertEqual(bf_gcd(S * S + T * T, S + T), BinaryForm.one())

    def test_shared_linear_factor(self):
        common = S - T.scale(2)
        self.assertEqual(bf_gcd(common * (S + T), common * (S * S + T * T)), common)

    def test_both_zero(self):
        with self.assertRaises(BothZeroError):
            bf_gcd(BinaryForm.zero(2), BinaryForm.zero(1))

    def test_gcd_many(self):
        self.assertEqual(bf_gcd_many([S.power(3), S * S * T, S * T * T]), S)
        self.assertEqual(bf_gcd_many([BinaryForm.zero(2), S * T]), S * T)


class TestDivision(unittest.TestCase):
    def test_difference_of_squares(self):
        self.assertEqual(bf_div_exact(S * S - T * T, S - T), S + T)

    def test_divide_by_one(self):
        form = BinaryForm(3, [1, -2, 0, 5])
        self.assertEqual(bf_div_exact(form, BinaryForm.one()), form)

    def test_monomial_division(self):
        dividend = S.power(3) * T * T + S * S * T.power(3)
        self.assertEqual(bf_div_exact(dividend, S * T), S * S * T + S * T * T)

    def test_remainder_is_reported(self):
        with self.assertRaises(NotDivisibleError):
            bf_div_exact(S * S + T * T, S + T)

    def test_divide_by_zero(self):
        with self.assertRaises(DivideByZeroError):
            bf_div_exact(S, ZERO1)


class TestEvaluation(unittest.TestCase):
    def test_values(self):
        self.assertEqual(bf_eval(S * S + S * T, 1, 1), 2)
        self.assertEqual(bf_eval(T.power(3), 1, 0), 0)
        self.assertEqual(bf_eval(BinaryForm(5, [1, 0, 0, 3, 0, 0]), 1, 1), 4)


class TestMinors(unittest.TestCase):
    def test_cross_minors_of_conic_basis(self):
        p = (T, -S, ZERO1)
        q = (ZERO1, T, -S)
        self.assertEqual(cross_minors(p, q), (S * S, S * T, T * T))

    def test_minor_gcd(self):
        self.assertEqual(minor_gcd([S * S, S * T], [S, T]), None)
        self.assertEqual(minor_gcd([S * S, S * T], [BinaryForm(0, [1]), BinaryForm(0, [0])]), S * T)


class TestResultant(unittest.TestCase):
    def test_conic(self):
        p = MovingLine(T, -S, ZERO1)
        q = MovingLine(ZERO1, T, -S)
        conic = X0 * X2 - X1 * X1
        self.assertIn(resultant_moving_lines(p, q), (conic, -conic))

    def test_equal_lines_have_zero_resultant(self):
        p = MovingLine(T, -S, ZERO1)
        with self.assertRaises(ZeroResultantError) as context:
            resultant_moving_lines(p, p)
        self.assertTrue(context.exception.resultant.is_zero())

    def test_cuspidal_cubic(self):
        zero2 = BinaryForm.zero(2)
        p = MovingLine(ZERO1, T, -S)
        q = MovingLine(T * T, -(S * S), zero2)
        result = resultant_moving_lines(p, q)
        cusp = X1.power(3) - X0 * X2 * X2
        self.assertEqual(result.degree, 3)
        self.assertIn(result, (cusp, -cusp))
        self.assertTrue(result.substitute([S.power(3), S * T * T, T.power(3)]).is_zero())

    def test_sylvester_shape(self):
        p = MovingLine(ZERO1, T, -S)
        q = MovingLine(T * T, -(S * S), BinaryForm.zero(2))
        rows = sylvester_matrix(p, q)
        self.assertEqual(len(rows), 3)
        self.assertTrue(all(len(row) == 3 for row in rows))
        self.assertEqual(rows[0][0], -X2)
        self.assertEqual(rows[0][2], HomogeneousPoly.zero(3, 1))

    def test_bareiss_agrees_with_cofactors(self):
        curve = random_curve(5, 3)
        basis = curve.mu
        matrix = sylvester_matrix(basis.p, basis.q)
        by_cofactors = polynomial_determinant(matrix, cofactor_max_size=len(matrix))
        by_elimination = polynomial_determinant(matrix, cofactor_max_size=0)
        self.assertEqual(by_cofactors, by_elimination)
        self.assertTrue(by_cofactors.substitute(curve.forms).is_zero())

    def test_degree_zero_lines_are_rejected(self):
        constant = MovingLine(BinaryForm.one(), BinaryForm.zero(0), BinaryForm.zero(0))
        with self.assertRaises(ValueError):
            resultant_moving_lines(constant, MovingLine(T, -S, ZERO1))


SYM_S, SYM_X = sympy.Symbol("s"), sympy.symbols("x0 x1 x2")


def rational(value):
    return sympy.Rational(value.numerator, value.denominator)


def sympy_line(line):
    """Moving line dehomogenized at t = 1"""
    total = 0
    for x, form in zip(SYM_X, line.components):
        total += x * sum(rational(c) * SYM_S ** (form.degree - i) for i, c in enumerate(form.coeffs))
    return sympy.expand(total)


def sympy_poly(poly):
    total = 0
    for exponent, coeff in poly.terms.items():
        term = rational(coeff)
        for x, power in zip(SYM_X, exponent):
            term *= x ** power
        total += term
    return sympy.expand(total)


class TestRandomForms(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(20240611)

    def test_gcd_of_multiples(self):
        for _ in range(25):
            a = random_form(self.rng, self.rng.randint(0, 4))
            b = random_form(self.rng, self.rng.randint(0, 4))
            c = random_form(self.rng, self.rng.randint(1, 3))
            self.assertEqual(bf_gcd(a * c, b * c), c.monic() * bf_gcd(a, b))

    def test_exact_division_of_products(self):
        for _ in range(25):
            a = random_form(self.rng, self.rng.randint(0, 5))
            b = random_form(self.rng, self.rng.randint(0, 4))
            self.assertEqual(bf_div_exact(a * b, b), a)

    def test_evaluation_is_a_ring_morphism(self):
        for _ in range(25):
            degree = self.rng.randint(0, 5)
            a = random_form(self.rng, degree)
            b = random_form(self.rng, degree)
            c = random_form(self.rng, self.rng.randint(0, 5))
            s0, t0 = self.rng.randint(-7, 7), self.rng.randint(-7, 7)
            self.assertEqual(bf_eval(a + b, s0, t0), bf_eval(a, s0, t0) + bf_eval(b, s0, t0))
            self.assertEqual(bf_eval(a * c, s0, t0), bf_eval(a, s0, t0) * bf_eval(c, s0, t0))


class TestResultantAgainstSympy(unittest.TestCase):
    def test_resultant_of_mu_basis(self):
        for d, seed in ((3, 1), (4, 2), (5, 3), (6, 4)):
            basis = random_curve(d, seed).mu
            ours = sympy_poly(resultant_moving_lines(basis.p, basis.q))
            theirs = sympy.resultant(sympy_line(basis.p), sympy_line(basis.q), SYM_S)
            ratio = sympy.cancel(theirs / ours)
            self.assertTrue(ratio.is_number and ratio != 0, msg=f"d={d}: {ratio}")

    def test_raw_resultant_factors_as_power_of_implicit_equation(self):
        for curve in (SQ4, random_curve(4, 7), random_curve(5, 8)):
            result = implicitize(curve)
            _, factors = sympy.factor_list(sympy_poly(result.resultant_raw))
            self.assertEqual(len(factors), 1)
            factor, multiplicity = factors[0]
            self.assertEqual(multiplicity, result.r)
            self.assertTrue(sympy.cancel(factor / sympy_poly(result.F)).is_number)


if __name__ == "__main__":
    unittest.main()
