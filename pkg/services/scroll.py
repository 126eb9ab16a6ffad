"""
Scroll Lift

Second-level syzygies of p = (alpha_0, alpha_1, alpha_2), the lift of a
plane curve of splitting type (k, d-k) to a curve D on a rational normal
scroll in P^(k+1), projections of D back to the plane, quadrics through D
and smoothness / cone-vertex diagnostics.

Coordinates of D come from the degree-k syzygies of alpha. The three trivial
(Koszul) syzygies always fill the last three slots, so projecting to the last
three coordinates recovers the original curve.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

from models.errors import CenterOnCurveError, ChartExhaustedError, GcdDegreeMismatchError, LiftVerificationError
from models.forms import BinaryForm, HomogeneousPoly, MovingLine, ScalarLike, to_scalar
from models.matrix import ExactMatrix, Vector
from services.curve import ParamCurve, apply_linear_map, forms_map_degree, make_curve, preimage_form
from services.exact_arith import bf_div_exact, bf_gcd_many, minor_gcd
from services.linalg import echelon_basis, kernel_basis, rank, reduce_against
from services.syzygy import minimal_syzygies, syzygy_space


logger = logging.getLogger(__name__)

Chart = Tuple[int, int]
CHART_ORDER: Tuple[Chart, ...] = ((0, 1), (0, 2), (1, 2))

# Koszul coordinates equal a common factor times (f0, -f1, f2)
DEFAULT_PROJECTION_SIGNS = (1, -1, 1)


@dataclass(frozen=True)
class ScrollData:
    """Second-level splitting (h, k-h) and the integer ledger of the scroll"""
    d: int
    k: int
    h: int
    gamma: MovingLine
    delta: MovingLine
    alpha_dependent: bool

    @property
    def e(self) -> int:
        return self.k - 2 * self.h

    @property
    def ascenzi(self) -> bool:
        return self.h == 0

    @property
    def c0_self_intersection(self) -> int:
        return -self.e

    @property
    def hyperplane_class(self) -> Tuple[int, int]:
        """H ~ C0 + (k-h) f"""
        return 1, self.k - self.h

    @property
    def curve_class(self) -> Tuple[int, int]:
        """D ~ C0 + (d-h) f"""
        return 1, self.d - self.h

    @property
    def scroll_degree(self) -> int:
        """H^2 = C0^2 + 2(k-h)"""
        return self.c0_self_intersection + 2 * (self.k - self.h)

    @property
    def vertex_intersection(self) -> Optional[int]:
        """D.C0 = -e + d - h, which is d - k on a cone"""
        if self.h:
            return None
        return self.c0_self_intersection + self.d - self.h


@dataclass(frozen=True)
class LiftedCurve:
    """Curve D in P^(k+1) given by k+2 forms of degree d"""
    k: int
    coords: Tuple[BinaryForm, ...]
    chart: Chart
    removed_gcd: BinaryForm
    syzygy_basis: Tuple[MovingLine, ...]

    @property
    def d(self) -> int:
        return self.coords[0].degree

    @property
    def chart_label(self) -> str:
        return f"{self.chart[0]}{self.chart[1]}"


@dataclass(frozen=True)
class QuadricSpace:
    """Quadrics vanishing on a lifted curve"""
    dimension: int
    basis: Tuple[HomogeneousPoly, ...]


@dataclass(frozen=True)
class LiftDiagnostics:
    immersion_gcd_degree: Optional[int]
    immersion_pass: Optional[bool]
    injectivity_degree: int
    injectivity_pass: bool
    vertex: Optional[Vector] = None
    vertex_preimage_degree: Optional[int] = None
    expected_vertex_degree: Optional[int] = None
    vertex_pass: Optional[bool] = None

    @property
    def passed(self) -> bool:
        flags = [self.immersion_pass, self.injectivity_pass, self.vertex_pass]
        return all(flag for flag in flags if flag is not None)


# ============================================
# Second level
# ============================================

def second_level(curve: ParamCurve) -> ScrollData:
    """
    Syzygies (gamma, delta) of alpha, of degrees (h, k-h)

    A linearly dependent alpha gives a constant gamma and h = 0.
    """
    alpha = curve.mu.p.components
    basis = minimal_syzygies(alpha, start=0)
    dependent = rank(ExactMatrix.from_rows([a.coeffs for a in alpha])) < 3
    data = ScrollData(
        d=curve.d, k=curve.mu.k, h=basis.k,
        gamma=basis.p, delta=basis.q, alpha_dependent=dependent,
    )
    logger.info(f"Second-level splitting ({data.h},{data.k - data.h}), e={data.e}")
    return data


# ============================================
# Lift
# ============================================

def koszul_syzygies(alpha: Sequence[BinaryForm]) -> Tuple[MovingLine, MovingLine, MovingLine]:
    """(0, a2, -a1), (a2, 0, -a0), (a1, -a0, 0)"""
    a0, a1, a2 = alpha
    zero = BinaryForm.zero(a0.degree)
    return (
        MovingLine(zero, a2, -a1),
        MovingLine(a2, zero, -a0),
        MovingLine(a1, -a0, zero),
    )


def lift_basis(alpha: Sequence[BinaryForm]) -> Tuple[MovingLine, ...]:
    """
    Degree-k syzygies of alpha: canonical complement first, Koszul triples last
    """
    k = alpha[0].degree
    koszul = koszul_syzygies(alpha)
    koszul_span = echelon_basis([line.to_vector() for line in koszul])
    space = [line.to_vector() for line in syzygy_space(*alpha, k)]
    reduced = [v for v in reduce_against(space, koszul_span) if any(v)]
    complement = echelon_basis(reduced) if reduced else []
    if len(complement) + 3 != k + 2:
        raise LiftVerificationError(
            f"Degree-{k} syzygies of alpha have dimension {len(space)}, expected {k + 2}"
        )
    return tuple(MovingLine.from_vector(k, v) for v in complement) + koszul


def chart_forms(
    forms: Sequence[BinaryForm], basis: Sequence[MovingLine], chart: Chart
) -> List[BinaryForm]:
    """g_i = f_a * A_(b,i) - f_b * A_(a,i)"""
    a, b = chart
    return [forms[a] * line.components[b] - forms[b] * line.components[a] for line in basis]


def lift(curve: ParamCurve, chart: Optional[Chart] = None) -> LiftedCurve:
    """
    Lift of a plane curve to the scroll in P^(k+1)

    Args:
        curve: Curve of splitting type (k, d-k)
        chart: Force one minor pair instead of the fallback order

    Raises:
        ChartExhaustedError: if every tried chart vanishes identically
        GcdDegreeMismatchError: if the common factor of the chart forms is not of degree k
    """
    basis_pair = curve.mu
    k = basis_pair.k
    alpha = basis_pair.p.components
    basis = lift_basis(alpha)
    charts = (chart,) if chart is not None else CHART_ORDER
    for candidate in charts:
        if candidate not in CHART_ORDER:
            raise ValueError(f"Unknown chart {candidate}")
        g = chart_forms(curve.forms, basis, candidate)
        if all(form.is_zero() for form in g):
            logger.warning(f"Chart {candidate} vanishes identically")
            continue
        common = bf_gcd_many(g)
        if common.degree != k:
            raise GcdDegreeMismatchError(
                f"Chart {candidate} has common factor {common.to_text()} of degree {common.degree}, expected {k}"
            )
        coords = tuple(bf_div_exact(form, common) for form in g)
        logger.info(f"Lifted degree-{curve.d} curve to P^{k + 1} in chart {candidate}")
        return LiftedCurve(k=k, coords=coords, chart=candidate, removed_gcd=common, syzygy_basis=basis)
    raise ChartExhaustedError(f"All charts {charts} vanish identically")


def default_projection_rows(k: int) -> List[List[int]]:
    """Projection onto the Koszul coordinates with the sign identification"""
    rows = []
    for slot, sign in enumerate(DEFAULT_PROJECTION_SIGNS):
        row = [0] * (k + 2)
        row[k - 1 + slot] = sign
        rows.append(row)
    return rows


def projection_rows(k: int, centers: Sequence[Sequence[ScalarLike]]) -> List[Vector]:
    """Rows of the linear map P^(k+1) -> P^2 whose kernel is spanned by the centers"""
    if not centers:
        return [tuple(Fraction(int(i == j)) for j in range(k + 2)) for i in range(3)]
    matrix = ExactMatrix.from_rows([[to_scalar(v) for v in c] for c in centers], k + 2)
    if rank(matrix) != len(centers):
        raise ValueError("Projection centers are linearly dependent")
    return kernel_basis(matrix)


def project_from_points(
    lifted: LiftedCurve, centers: Optional[Sequence[Sequence[ScalarLike]]] = None
) -> ParamCurve:
    """
    Project D to the plane from k-1 centers

    With no centers the projection drops to the last three coordinates and
    recovers the original curve.

    Raises:
        CenterOnCurveError: if a center lies on D
    """
    if centers is None:
        rows = default_projection_rows(lifted.k)
    else:
        if len(centers) != lifted.k - 1:
            raise ValueError(f"Expected {lifted.k - 1} centers, got {len(centers)}")
        for center in centers:
            common = preimage_form(lifted.coords, center)
            if common is None or common.degree > 0:
                raise CenterOnCurveError(f"Center {[str(v) for v in center]} lies on the lifted curve")
        rows = projection_rows(lifted.k, centers)
    return make_curve(*apply_linear_map(lifted.coords, rows))


# ============================================
# Quadrics and diagnostics
# ============================================

def quadrics_through(lifted: LiftedCurve) -> QuadricSpace:
    """Quadrics Q in k+2 variables with Q(h_0, ..., h_(k+1)) = 0"""
    return quadrics_through_forms(lifted.coords)


def quadrics_through_forms(coords: Sequence[BinaryForm]) -> QuadricSpace:
    n = len(coords)
    pairs = list(combinations_with_replacement(range(n), 2))
    columns = [(coords[i] * coords[j]).coeffs for i, j in pairs]
    matrix = ExactMatrix.from_rows([list(row) for row in zip(*columns)], len(pairs))
    basis = []
    for vector in kernel_basis(matrix):
        terms = {}
        for (i, j), coeff in zip(pairs, vector):
            exponent = [0] * n
            exponent[i] += 1
            exponent[j] += 1
            terms[tuple(exponent)] = coeff
        basis.append(HomogeneousPoly(n, 2, terms))
    logger.debug(f"{len(basis)} quadrics through the lift in P^{n - 1}")
    return QuadricSpace(dimension=len(basis), basis=tuple(basis))


def _proportional_vector(forms: Sequence[BinaryForm]) -> Optional[Vector]:
    """Constant vector V with forms = V * w for one form w, first nonzero entry 1"""
    reference = next((f for f in forms if not f.is_zero()), None)
    if reference is None:
        return None
    index = reference.leading_index()
    vector = tuple(f.coeffs[index] / reference.coeffs[index] for f in forms)
    if any(f != reference.scale(c) for f, c in zip(forms, vector)):
        return None
    lead = next(c for c in vector if c)
    return tuple(c / lead for c in vector)


def cone_vertex(lifted: LiftedCurve, scroll: ScrollData) -> Optional[Vector]:
    """
    Vertex of the cone S_(0,k): image of the section given by the constant gamma
    """
    if scroll.h:
        return None
    gamma = [c.coeffs[0] for c in scroll.gamma.components]
    for a, b in CHART_ORDER:
        images = [
            line.components[b].scale(gamma[a]) - line.components[a].scale(gamma[b])
            for line in lifted.syzygy_basis
        ]
        if all(form.is_zero() for form in images):
            continue
        return _proportional_vector(images)
    return None


def lift_diagnostics(lifted: LiftedCurve, scroll: ScrollData) -> LiftDiagnostics:
    """
    Immersion, injectivity and (for cones) vertex checks of a lifted curve
    """
    partial_s = [h.derivative_s() for h in lifted.coords]
    partial_t = [h.derivative_t() for h in lifted.coords]
    jacobian_gcd = minor_gcd(partial_s, partial_t)
    immersion_degree = None if jacobian_gcd is None else jacobian_gcd.degree
    immersion_pass = None
    if scroll.h > 0:
        immersion_pass = immersion_degree == 0
    injectivity = forms_map_degree(lifted.coords)
    vertex = cone_vertex(lifted, scroll)
    vertex_degree = expected = vertex_pass = None
    if scroll.h == 0:
        expected = lifted.d - lifted.k
        if vertex is not None:
            common = preimage_form(lifted.coords, vertex)
            vertex_degree = 0 if common is None else common.degree
        vertex_pass = vertex_degree == expected
    diagnostics = LiftDiagnostics(
        immersion_gcd_degree=immersion_degree,
        immersion_pass=immersion_pass,
        injectivity_degree=injectivity,
        injectivity_pass=injectivity == 1,
        vertex=vertex,
        vertex_preimage_degree=vertex_degree,
        expected_vertex_degree=expected,
        vertex_pass=vertex_pass,
    )
    if not diagnostics.passed:
        logger.warning(f"Lift diagnostics failed: {diagnostics}")
    return diagnostics
