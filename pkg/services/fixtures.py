"""
Curve Fixtures

Named curves used throughout the tests and the acceptance battery, plus
seeded generators for random curves, curves with a planted singular point
and the sextic projected from a curve on a smooth quadric.
"""

import logging
import random
from typing import List, Sequence, Tuple

from models.errors import CurveAlgebraError
from models.forms import BinaryForm, ScalarLike, to_scalar
from models.matrix import ExactMatrix
from services.curve import ParamCurve, apply_linear_map, curve_from_matrix, make_curve, map_degree
from services.exact_arith import bf_gcd, bf_gcd_many
from services.linalg import kernel_basis


logger = logging.getLogger(__name__)

COEFF_BOUND = 9
MAX_ATTEMPTS = 200


def _form(*coeffs: ScalarLike) -> BinaryForm:
    return BinaryForm.from_coeffs(list(coeffs))


# ============================================
# Named curves
# ============================================

# (s^2, st, t^2)
CONIC = make_curve(_form(1, 0, 0), _form(0, 1, 0), _form(0, 0, 1))

# (s^3, st^2, t^3), cusp at (1:0:0)
CUSP3 = make_curve(_form(1, 0, 0, 0), _form(0, 0, 1, 0), _form(0, 0, 0, 1))

# (s^4, s^2t^2, t^4), a conic covered twice
SQ4 = make_curve(_form(1, 0, 0, 0, 0), _form(0, 0, 1, 0, 0), _form(0, 0, 0, 0, 1))

OCTIC_ALPHA = (_form(1, 0, 0, 0), _form(0, 1, 1, 0), _form(0, 0, 0, 1))
OCTIC_BETA = (
    _form(1, 0, 0, 3, 0, 0),
    _form(0, 0, 3, 0, 0, 1),
    _form(1, 0, 0, 0, 1, 1),
)

# Degree 8, only double points, splitting type (3, 5)
OCTIC = curve_from_matrix(OCTIC_ALPHA, OCTIC_BETA)


def named_fixtures() -> List[Tuple[str, ParamCurve]]:
    return [("CONIC", CONIC), ("CUSP3", CUSP3), ("SQ4", SQ4), ("OCTIC", OCTIC)]


# ============================================
# Generators
# ============================================

def random_form(rng: random.Random, degree: int, bound: int = COEFF_BOUND) -> BinaryForm:
    while True:
        form = BinaryForm(degree, [rng.randint(-bound, bound) for _ in range(degree + 1)])
        if not form.is_zero():
            return form


def _usable(forms: Sequence[BinaryForm]) -> ParamCurve:
    """ParamCurve from forms that are already primitive, or raise"""
    if bf_gcd_many(forms).degree > 0:
        raise ValueError("Common factor")
    curve = make_curve(*forms)
    if map_degree(curve) != 1:
        raise ValueError("Not birational")
    return curve


def random_curve(d: int, seed: int, bound: int = COEFF_BOUND) -> ParamCurve:
    """Random birational degree-d curve"""
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        try:
            return _usable([random_form(rng, d, bound) for _ in range(3)])
        except (ValueError, CurveAlgebraError):
            continue
    raise RuntimeError(f"No usable random curve of degree {d} for seed {seed}")


def plant_multiplicity(d: int, m: int, seed: int) -> ParamCurve:
    """
    Birational degree-d curve with a point of multiplicity m at (0:0:1)

    f0 = g*u and f1 = g*v with deg g = m and gcd(u, v) = 1, so (0:0:1) has
    exactly m preimages counted with multiplicity.
    """
    if not 1 <= m <= d - 1:
        raise ValueError(f"Multiplicity {m} outside 1..{d - 1}")
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        g = random_form(rng, m)
        u = random_form(rng, d - m)
        v = random_form(rng, d - m)
        if bf_gcd(u, v).degree > 0:
            continue
        f0, f1 = g * u, g * v
        if bf_gcd(f0, f1).degree != m:
            continue
        try:
            return _usable([f0, f1, random_form(rng, d)])
        except (ValueError, CurveAlgebraError):
            continue
    raise RuntimeError(f"No planted curve for d={d}, m={m}, seed={seed}")


def quadric_sextic(seed: int) -> ParamCurve:
    """
    Plane sextic projected from a bidegree-(1,5) curve on a smooth quadric

    The space curve (s*B0, s*B1, t*B0, t*B1) lies on x0*x3 - x1*x2 = 0; it is
    projected from a random rational point off the quadric.
    """
    rng = random.Random(seed)
    for _ in range(MAX_ATTEMPTS):
        b0, b1 = random_form(rng, 5), random_form(rng, 5)
        if bf_gcd(b0, b1).degree > 0:
            continue
        s, t = BinaryForm.linear(1, 0), BinaryForm.linear(0, 1)
        space = [s * b0, s * b1, t * b0, t * b1]
        center = [rng.randint(-COEFF_BOUND, COEFF_BOUND) for _ in range(4)]
        if center[0] * center[3] - center[1] * center[2] == 0:
            continue
        rows = kernel_basis(ExactMatrix.from_rows([center]))
        try:
            curve = _usable(apply_linear_map(space, rows))
        except (ValueError, CurveAlgebraError):
            continue
        if curve.d == 6:
            return curve
    raise RuntimeError(f"No quadric sextic for seed {seed}")


def reparameterize(
    curve: ParamCurve, a: ScalarLike, b: ScalarLike, c: ScalarLike, e: ScalarLike
) -> ParamCurve:
    """Curve composed with s -> a*s + b*t, t -> c*s + e*t"""
    if to_scalar(a) * to_scalar(e) - to_scalar(b) * to_scalar(c) == 0:
        raise ValueError("Singular change of parameters")
    return make_curve(*(f.substitute_linear(a, b, c, e) for f in curve.forms))
