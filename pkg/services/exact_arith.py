"""
Exact Arithmetic on Binary Forms

gcd, exact division and evaluation of binary forms, plus the moving-line
resultant: the Sylvester determinant of two moving lines whose coefficients
are linear forms in x0, x1, x2.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config.scroll_config import get_scroll_config
from models.errors import BothZeroError, DivideByZeroError, NotDivisibleError, ZeroResultantError
from models.forms import BinaryForm, HomogeneousPoly, MovingLine, ScalarLike


logger = logging.getLogger(__name__)

PolyMatrix = List[List[HomogeneousPoly]]


# ============================================
# gcd and division
# ============================================

def _strip(coeffs: List[Fraction]) -> List[Fraction]:
    index = 0
    while index < len(coeffs) and not coeffs[index]:
        index += 1
    return coeffs[index:]


def _univariate_rem(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    """Remainder of a by b, both highest-degree-first with b[0] != 0"""
    work = list(a)
    while len(work) >= len(b):
        if work[0]:
            factor = work[0] / b[0]
            for i, value in enumerate(b):
                work[i] -= factor * value
        work.pop(0)
    return _strip(work)


def _univariate_gcd(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    a, b = _strip(a), _strip(b)
    while b:
        a, b = b, _univariate_rem(a, b)
    return [c / a[0] for c in a]


def bf_gcd(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """
    Monic greatest common divisor of two binary forms

    Common powers of s and t are split off first; the remaining cores are
    dehomogenized at t = 1 and run through the monic Euclidean algorithm.

    Raises:
        BothZeroError: if both inputs are the zero form
    """
    if a.is_zero() and b.is_zero():
        raise BothZeroError("gcd of two zero forms is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    t_power = min(a.t_valuation(), b.t_valuation())
    s_power = min(a.s_valuation(), b.s_valuation())
    cores = []
    for form in (a, b):
        tv, sv = form.t_valuation(), form.s_valuation()
        cores.append(list(form.coeffs[tv:form.degree + 1 - sv]))
    core = _univariate_gcd(cores[0], cores[1])
    return BinaryForm.from_coeffs(core).times_monomial(s_power, t_power)


def bf_gcd_many(forms: Sequence[BinaryForm]) -> BinaryForm:
    """gcd of several forms, ignoring zero forms"""
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise BothZeroError("gcd of zero forms is undefined")
    result = nonzero[0].monic()
    for form in nonzero[1:]:
        if result.degree == 0:
            break
        result = bf_gcd(result, form)
    return result


def bf_div_exact(a: BinaryForm, b: BinaryForm) -> BinaryForm:
    """
    Exact quotient q with a = q * b

    Raises:
        DivideByZeroError: if b is the zero form
        NotDivisibleError: if b does not divide a
    """
    if b.is_zero():
        raise DivideByZeroError("Division by the zero form")
    degree = a.degree - b.degree
    if degree < 0:
        raise NotDivisibleError(f"Cannot divide a degree-{a.degree} form by a degree-{b.degree} form")
    start = b.leading_index()
    lead = b.coeffs[start]
    quotient: List[Fraction] = []
    for k in range(degree + 1):
        value = a.coeffs[k + start] if k + start <= a.degree else Fraction(0)
        for j in range(start + 1, b.degree + 1):
            index = k + start - j
            if index < 0:
                break
            value -= quotient[index] * b.coeffs[j]
        quotient.append(value / lead)
    result = BinaryForm(degree, quotient)
    if result * b != a:
        raise NotDivisibleError(f"{b.to_text()} does not divide {a.to_text()}")
    return result


def bf_eval(form: BinaryForm, s0: ScalarLike, t0: ScalarLike) -> Fraction:
    """Exact value of a form at (s0, t0)"""
    return form.evaluate(s0, t0)


def cross_minors(
    row0: Sequence[BinaryForm], row1: Sequence[BinaryForm]
) -> Tuple[BinaryForm, BinaryForm, BinaryForm]:
    """Signed 2x2 minors (r0[1]r1[2]-r0[2]r1[1], r0[2]r1[0]-r0[0]r1[2], r0[0]r1[1]-r0[1]r1[0])"""
    a0, a1, a2 = row0
    b0, b1, b2 = row1
    return (a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0)


def minor_gcd(row0: Sequence[BinaryForm], row1: Sequence[BinaryForm]) -> Optional[BinaryForm]:
    """
    gcd of all 2x2 minors of the 2 x n matrix (row0; row1)

    Returns None when every minor vanishes identically.
    """
    minors = []
    for i in range(len(row0)):
        for j in range(i + 1, len(row0)):
            minors.append(row0[i] * row1[j] - row0[j] * row1[i])
    if all(m.is_zero() for m in minors):
        return None
    return bf_gcd_many(minors)


# ============================================
# Moving-line resultant
# ============================================

def sylvester_matrix(p: MovingLine, q: MovingLine) -> PolyMatrix:
    """
    Sylvester matrix of two moving lines

    Rows are deg(q) shifts of p followed by deg(p) shifts of q; entries are
    linear forms in x0, x1, x2 (or zero).
    """
    k, l = p.degree, q.degree
    size = k + l
    zero = HomogeneousPoly.zero(3, 1)
    rows: PolyMatrix = []
    for line, shifts in ((p, l), (q, k)):
        coeffs = line.coefficient_forms()
        for shift in range(shifts):
            row = [zero] * size
            for i, c in enumerate(coeffs):
                row[i + shift] = c
            rows.append(row)
    return rows


def _cofactor_determinant(matrix: PolyMatrix) -> HomogeneousPoly:
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = HomogeneousPoly.zero(3, size)
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * _cofactor_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_determinant(matrix: PolyMatrix) -> HomogeneousPoly:
    size = len(matrix)
    work = [list(row) for row in matrix]
    previous = HomogeneousPoly(3, 0, {(0, 0, 0): 1})
    sign = 1
    for c in range(size - 1):
        pivot_row = next((i for i in range(c, size) if not work[i][c].is_zero()), None)
        if pivot_row is None:
            return HomogeneousPoly.zero(3, size)
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            sign = -sign
        pivot = work[c][c]
        for i in range(c + 1, size):
            lead = work[i][c]
            for j in range(c + 1, size):
                work[i][j] = (pivot * work[i][j] - lead * work[c][j]).div_exact(previous)
            work[i][c] = HomogeneousPoly.zero(3, c + 2)
        previous = pivot
    result = work[size - 1][size - 1]
    return result if sign > 0 else -result


def polynomial_determinant(matrix: PolyMatrix, cofactor_max_size: Optional[int] = None) -> HomogeneousPoly:
    """Determinant of a square matrix of linear forms"""
    if cofactor_max_size is None:
        cofactor_max_size = get_scroll_config().cofactor_max_size
    size = len(matrix)
    if size <= cofactor_max_size:
        logger.debug(f"Cofactor expansion for {size}x{size} Sylvester matrix")
        return _cofactor_determinant(matrix)
    logger.debug(f"Bareiss elimination for {size}x{size} Sylvester matrix")
    return _bareiss_determinant(matrix)


def resultant_moving_lines(
    p: MovingLine, q: MovingLine, cofactor_max_size: Optional[int] = None
) -> HomogeneousPoly:
    """
    Resultant in (s,t) of two moving lines

    Args:
        p: Moving line of degree k >= 1
        q: Moving line of degree d - k >= 1
        cofactor_max_size: Largest Sylvester size expanded by cofactors

    Returns:
        Homogeneous polynomial of degree d in x0, x1, x2

    Raises:
        ZeroResultantError: if the determinant vanishes identically
    """
    if p.degree < 1 or q.degree < 1:
        raise ValueError(f"Moving lines need positive degrees, got {p.degree} and {q.degree}")
    size = p.degree + q.degree
    result = polynomial_determinant(sylvester_matrix(p, q), cofactor_max_size)
    if result.is_zero():
        raise ZeroResultantError(
            "Moving lines share a common factor in (s,t)", resultant=HomogeneousPoly.zero(3, size)
        )
    return result
