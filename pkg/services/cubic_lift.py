"""
Explicit Lift for Splitting Type (3, d-3)

Closed-form curve in P^4 on a cubic scroll, built from a normal form of
p = (alpha_0, alpha_1, alpha_2):

  general: alpha ~ (s^3, s^2 t + s t^2, t^3)   three rational cubes in <alpha>
  tangent: alpha ~ (s^3, s^2 t, t^3)           a double root of the apolar cubic
  cone:    alpha linearly dependent            D on the cone over the twisted cubic

The normal form is reached by a change of parameters sigma and a 3x3 matrix
P acting on the rows of the syzygy matrix. Every result is verified before it
is returned.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy

from models.errors import IrrationalNormalizationError, LiftVerificationError, WrongSplittingError
from models.forms import BinaryForm, HomogeneousPoly
from models.matrix import ExactMatrix, Vector
from services.curve import ParamCurve, apply_linear_map, preimage_form, projectively_equal
from services.linalg import kernel_basis, rank, solve_linear


logger = logging.getLogger(__name__)

Root = Tuple[Fraction, Fraction]

S = BinaryForm.linear(1, 0)
T = BinaryForm.linear(0, 1)

# Rows of the projection P^4 -> P^2 used by the general and tangent normal forms
NORMAL_PROJECTION = ((1, 0, 0, 0, 0), (0, 1, 1, 0, 1), (0, 0, 0, 1, 0))

# Swap of the first and last plane coordinates
SWAP = ExactMatrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]])


def _quadric(*terms: Tuple[int, int, int]) -> HomogeneousPoly:
    """Quadric in x0..x4 from (i, j, coeff) triples for coeff * xi * xj"""
    poly = {}
    for i, j, coeff in terms:
        exponent = [0] * 5
        exponent[i] += 1
        exponent[j] += 1
        poly[tuple(exponent)] = coeff
    return HomogeneousPoly(5, 2, poly)


# 2x2 minors of [[x0, -x2, x4], [-x1, x3, x3 - x1 - x4]]
GENERAL_QUADRICS = (
    _quadric((0, 3, 1), (1, 2, -1)),
    _quadric((2, 3, 1), (2, 4, -1), (3, 4, 1), (1, 2, -1)),
    _quadric((0, 1, 1), (0, 4, 1), (1, 4, -1), (0, 3, -1)),
)

# 2x2 minors of [[x0, -x2, -x1], [-x1, x3, -x1 - x4]]
TANGENT_QUADRICS = (
    _quadric((0, 3, 1), (1, 2, -1)),
    _quadric((1, 2, 1), (1, 3, 1), (2, 4, 1)),
    _quadric((0, 1, 1), (0, 4, 1), (1, 1, 1)),
)

# Cone over the twisted cubic in the first four coordinates
CONE_QUADRICS = (
    _quadric((0, 2, 1), (1, 1, -1)),
    _quadric((0, 3, 1), (1, 2, -1)),
    _quadric((1, 3, 1), (2, 2, -1)),
)


@dataclass(frozen=True)
class ExplicitCubicLift:
    """
    Explicit lift to P^4

    ``plane_transform`` maps the projection of ``coords`` back onto the
    curve's own coordinates; ``reparameterization`` is sigma as (a, b, c, e)
    with s = aS + bT, t = cS + eT.
    """
    branch: str
    coords: Tuple[BinaryForm, ...]
    quadrics: Tuple[HomogeneousPoly, ...]
    projection: ExactMatrix
    plane_transform: ExactMatrix
    centers: Tuple[Vector, ...]
    reparameterization: Tuple[Fraction, Fraction, Fraction, Fraction]
    vertex: Optional[Vector] = None


# ============================================
# Normal form
# ============================================

def apolar_functional(alpha: Sequence[BinaryForm]) -> Vector:
    """Functional on binary cubics vanishing on the span of alpha"""
    kernel = kernel_basis(ExactMatrix.from_rows([a.coeffs for a in alpha]))
    if len(kernel) != 1:
        raise LiftVerificationError(f"alpha spans a space of codimension {len(kernel)}")
    return kernel[0]


def cubic_roots(functional: Sequence[Fraction]) -> List[Tuple[Root, int]]:
    """
    Roots (u:v) with multiplicities of l0 u^3 + 3 l1 u^2 v + 3 l2 u v^2 + l3 v^3

    A root (u:v) means (u s + v t)^3 lies in the span of alpha.

    Raises:
        IrrationalNormalizationError: if the cubic has an irrational root
    """
    coeffs = [functional[0], 3 * functional[1], 3 * functional[2], functional[3]]
    roots: List[Tuple[Root, int]] = []
    leading = 0
    while not coeffs[leading]:
        leading += 1
    if leading:
        roots.append(((Fraction(1), Fraction(0)), leading))
    remaining = coeffs[leading:]
    if len(remaining) > 1:
        u = sympy.Symbol("u")
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in remaining], u, domain="QQ")
        for part, multiplicity in poly.factor_list()[1]:
            if part.degree() != 1:
                raise IrrationalNormalizationError(f"Apolar cubic has the irrational factor {part.as_expr()}")
            lead, constant = part.all_coeffs()
            value = -sympy.Rational(constant) / sympy.Rational(lead)
            roots.append(((Fraction(int(value.p), int(value.q)), Fraction(1)), int(multiplicity)))
    return roots


def _root_key(root: Root) -> Tuple[bool, Fraction]:
    u, v = root
    return u == 0, (v / u if u else Fraction(0))


def _normalized(sigma: Sequence[Fraction]) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    lead = next(c for c in sigma if c)
    return tuple(c / lead for c in sigma)


def general_sigma(roots: Sequence[Root]) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """sigma sending the three root cubes to S^3, (S+T)^3 and T^3"""
    first, second, third = sorted(roots, key=_root_key)
    (ua, va), (uc, vc), (ub, vb) = first, second, third
    mu = uc * vb - vc * ub
    nu = uc * va - vc * ua
    a, c = nu * vb, -nu * ub
    b, e = mu * va, -mu * ua
    return _normalized((a, b, c, e))


def tangent_sigma(double: Root, simple: Root) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    """sigma sending the double root to S and the simple root to T"""
    (ud, vd), (ue, ve) = double, simple
    return _normalized((ve, vd, -ue, -ud))


def _plane_matrix(alpha: Sequence[BinaryForm], targets: Sequence[BinaryForm]) -> ExactMatrix:
    """P with sum_i alpha_i P_ij = targets_j"""
    columns_matrix = ExactMatrix.from_rows([list(row) for row in zip(*(a.coeffs for a in alpha))], 3)
    columns = []
    for target in targets:
        solution = solve_linear(columns_matrix, target.coeffs)
        if solution is None:
            raise LiftVerificationError(f"{target.to_text()} is not in the span of alpha")
        columns.append(solution)
    return ExactMatrix.from_rows([list(row) for row in zip(*columns)], 3)


def _transform_row(row: Sequence[BinaryForm], matrix: ExactMatrix) -> Tuple[BinaryForm, ...]:
    """Row vector of forms times a 3x3 matrix"""
    degree = row[0].degree
    result = []
    for j in range(3):
        total = BinaryForm.zero(degree)
        for i in range(3):
            if matrix[i, j]:
                total = total + row[i].scale(matrix[i, j])
        result.append(total)
    return tuple(result)


# ============================================
# Branches
# ============================================

def _general_coords(beta: Sequence[BinaryForm]) -> Tuple[BinaryForm, ...]:
    b0, b1, b2 = beta
    phi0 = S * S * b1 - b0 * (S * T + T * T)
    phi1 = b2 * (S * S + S * T) - b1 * T * T
    phi = b1 * S * S * T - b0 * S * T * T + b2 * S * S * T - b1 * S * T * T
    return (S * phi0, -(T * phi0), -(S * phi1), T * phi1, phi)


def _tangent_coords(beta: Sequence[BinaryForm]) -> Tuple[BinaryForm, ...]:
    b0, b1, b2 = beta
    phi0 = S * (S * b1 - T * b0)
    phi1 = S * S * b2 - T * T * b1
    phi = T * (S - T) * (S * b1 - T * b0)
    return (S * phi0, -(T * phi0), -(S * phi1), T * phi1, phi)


def _cone_plane_matrix(alpha: Sequence[BinaryForm]) -> ExactMatrix:
    """P whose last column is the constant syzygy of alpha"""
    columns_matrix = ExactMatrix.from_rows([list(row) for row in zip(*(a.coeffs for a in alpha))], 3)
    gamma = kernel_basis(columns_matrix)[0]
    for i in range(3):
        for j in range(i + 1, 3):
            columns = [[Fraction(int(r == i)) for r in range(3)], [Fraction(int(r == j)) for r in range(3)], list(gamma)]
            candidate = ExactMatrix.from_rows([list(row) for row in zip(*columns)], 3)
            if rank(candidate) == 3:
                return candidate
    raise LiftVerificationError("Constant syzygy cannot be completed to a basis")


def _verify(curve: ParamCurve, lift: ExplicitCubicLift) -> None:
    for quadric in lift.quadrics:
        if not quadric.substitute(lift.coords).is_zero():
            raise LiftVerificationError(f"Quadric {quadric.to_text()} does not vanish on the lift")
    projected = apply_linear_map(lift.coords, lift.projection.to_rows())
    recovered = apply_linear_map(projected, lift.plane_transform.to_rows())
    if not projectively_equal(recovered, curve.forms):
        raise LiftVerificationError("Projection from the centers does not recover the curve")
    for center in lift.centers:
        common = preimage_form(lift.coords, center)
        if common is None or common.degree > 0:
            raise LiftVerificationError(f"Center {[str(v) for v in center]} lies on the lift")


def explicit_cubic_lift(curve: ParamCurve) -> ExplicitCubicLift:
    """
    Explicit curve in P^4 lifting a curve of splitting type (3, d-3)

    Raises:
        WrongSplittingError: if k != 3
        IrrationalNormalizationError: if the normal form needs irrational roots
        LiftVerificationError: if the quadrics or the projection check fail
    """
    basis = curve.mu
    if basis.k != 3:
        raise WrongSplittingError(f"Explicit lift needs k = 3, curve has k = {basis.k}")
    alpha = basis.p.components
    beta = basis.q.components
    identity = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))

    if rank(ExactMatrix.from_rows([a.coeffs for a in alpha])) < 3:
        plane = _cone_plane_matrix(alpha)
        a_new = _transform_row(alpha, plane)
        b_new = _transform_row(beta, plane)
        m2 = a_new[0] * b_new[1] - a_new[1] * b_new[0]
        cubes = [S.power(3 - i) * T.power(i) for i in range(4)]
        coords = tuple(b_new[2] * cube for cube in cubes) + (m2,)
        projection = ExactMatrix.from_rows([
            list(a_new[1].coeffs) + [0],
            [-c for c in a_new[0].coeffs] + [0],
            [0, 0, 0, 0, 1],
        ])
        vertex = tuple(Fraction(int(i == 4)) for i in range(5))
        result = ExplicitCubicLift(
            branch="cone", coords=coords, quadrics=CONE_QUADRICS, projection=projection,
            plane_transform=plane, centers=tuple(kernel_basis(projection)),
            reparameterization=identity, vertex=vertex,
        )
    else:
        roots = cubic_roots(apolar_functional(alpha))
        multiplicities = sorted(m for _, m in roots)
        if multiplicities == [1, 1, 1]:
            branch = "general"
            sigma = general_sigma([r for r, _ in roots])
            targets = (S.power(3), S * S * T + S * T * T, T.power(3))
            quadrics = GENERAL_QUADRICS
        elif multiplicities == [1, 2]:
            branch = "tangent"
            double = next(r for r, m in roots if m == 2)
            simple = next(r for r, m in roots if m == 1)
            sigma = tangent_sigma(double, simple)
            targets = (S.power(3), S * S * T, T.power(3))
            quadrics = TANGENT_QUADRICS
        else:
            raise LiftVerificationError("Apolar cubic has a triple root; alpha is not primitive")
        a, b, c, e = sigma
        alpha_sigma = [f.substitute_linear(a, b, c, e) for f in alpha]
        beta_sigma = [f.substitute_linear(a, b, c, e) for f in beta]
        plane = _plane_matrix(alpha_sigma, targets)
        b_new = _transform_row(beta_sigma, plane)
        normal = _general_coords(b_new) if branch == "general" else _tangent_coords(b_new)
        coords = tuple(f.substitute_linear(e, -b, -c, a) for f in normal)
        projection = ExactMatrix.from_rows(NORMAL_PROJECTION)
        result = ExplicitCubicLift(
            branch=branch, coords=coords, quadrics=quadrics, projection=projection,
            plane_transform=plane @ SWAP, centers=tuple(kernel_basis(projection)),
            reparameterization=sigma,
        )

    _verify(curve, result)
    logger.info(f"Explicit P^4 lift built on the {result.branch} branch")
    return result
