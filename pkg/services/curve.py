"""
Parameterized Plane Curves

ParamCurve construction and normalization, splitting type, map degree,
point multiplicity, the multiplicity bound check and implicitization through
the mu-basis resultant.
"""

import logging
import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from config.scroll_config import get_scroll_config
from models.errors import (
    DegenerateLineError,
    ImplicitCheckError,
    NotPrimitiveError,
    PowerExtractionFailedError,
    ZeroInputError,
)
from models.forms import BinaryForm, Exponent, HomogeneousPoly, ScalarLike, to_scalar
from models.matrix import ExactMatrix
from models.schemas import AscenziVerdict, SplittingType
from services.exact_arith import bf_div_exact, bf_gcd_many, cross_minors, minor_gcd, resultant_moving_lines
from services.linalg import rank
from services.syzygy import MuBasis, mu_basis


logger = logging.getLogger(__name__)


class ParamCurve:
    """
    Primitive, linearly independent triple of degree-d binary forms

    ``make_curve`` divides out a common factor first; the constructor itself
    rejects forms that are not primitive or not independent. The mu-basis is
    computed on first access, once, under a lock.

    Raises:
        ZeroInputError: if all three forms vanish
        NotPrimitiveError: if the forms share a factor of positive degree
        DegenerateLineError: if the forms are linearly dependent
    """

    def __init__(self, f0: BinaryForm, f1: BinaryForm, f2: BinaryForm, removed_factor: Optional[BinaryForm] = None):
        check_param_forms((f0, f1, f2))
        self._forms = (f0, f1, f2)
        self._removed = removed_factor if removed_factor is not None else BinaryForm.one()
        self._mu: Optional[MuBasis] = None
        self._lock = threading.Lock()

    @property
    def d(self) -> int:
        return self._forms[0].degree

    @property
    def forms(self) -> Tuple[BinaryForm, BinaryForm, BinaryForm]:
        return self._forms

    @property
    def f0(self) -> BinaryForm:
        return self._forms[0]

    @property
    def f1(self) -> BinaryForm:
        return self._forms[1]

    @property
    def f2(self) -> BinaryForm:
        return self._forms[2]

    @property
    def removed_factor(self) -> BinaryForm:
        return self._removed

    @property
    def mu(self) -> MuBasis:
        if self._mu is None:
            with self._lock:
                if self._mu is None:
                    self._mu = mu_basis(*self._forms)
        return self._mu

    def point_at(self, s0: ScalarLike, t0: ScalarLike) -> Tuple[Fraction, Fraction, Fraction]:
        return tuple(f.evaluate(s0, t0) for f in self._forms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParamCurve):
            return NotImplemented
        return self._forms == other._forms

    def __hash__(self) -> int:
        return hash(self._forms)

    def __repr__(self) -> str:
        return f"ParamCurve(d={self.d}, {'; '.join(f.to_text() for f in self._forms)})"


def check_param_forms(forms: Sequence[BinaryForm]) -> None:
    """Equal degrees, not all zero, no common factor, linearly independent"""
    if len({f.degree for f in forms}) != 1:
        raise ValueError(f"Forms have unequal degrees {[f.degree for f in forms]}")
    if all(f.is_zero() for f in forms):
        raise ZeroInputError("All three forms are zero")
    common = bf_gcd_many(forms)
    if common.degree > 0:
        raise NotPrimitiveError(f"Forms share the factor {common.to_text()}")
    d = forms[0].degree
    if rank(ExactMatrix.from_rows([f.coeffs for f in forms], d + 1)) < 3:
        raise DegenerateLineError("Forms are linearly dependent; the image is a line or a point")


@dataclass(frozen=True)
class ImplicitResult:
    """Implicit equation F with resultant_raw = const * F^r"""
    F: HomogeneousPoly
    r: int
    resultant_raw: HomogeneousPoly


# ============================================
# Construction
# ============================================

def make_curve(g0: BinaryForm, g1: BinaryForm, g2: BinaryForm) -> ParamCurve:
    """
    Normalize a triple of forms into a ParamCurve

    The common factor of the three forms is divided out and recorded as
    ``removed_factor``.

    Raises:
        ZeroInputError: if all three forms vanish
        DegenerateLineError: if the reduced forms are linearly dependent
    """
    forms = (g0, g1, g2)
    if len({f.degree for f in forms}) != 1:
        raise ValueError(f"Forms have unequal degrees {[f.degree for f in forms]}")
    if all(f.is_zero() for f in forms):
        raise ZeroInputError("All three forms are zero")
    common = bf_gcd_many(forms)
    if common.degree > 0:
        logger.info(f"Removing common factor {common.to_text()}")
        forms = tuple(bf_div_exact(f, common) for f in forms)
    return ParamCurve(*forms, removed_factor=common)


def curve_from_matrix(alpha: Sequence[BinaryForm], beta: Sequence[BinaryForm]) -> ParamCurve:
    """Curve parameterized by the signed 2x2 minors of the 2x3 matrix (alpha; beta)"""
    if len(alpha) != 3 or len(beta) != 3:
        raise ValueError("A syzygy matrix has two rows of three forms")
    return make_curve(*cross_minors(alpha, beta))


def apply_linear_map(forms: Sequence[BinaryForm], rows: Sequence[Sequence[ScalarLike]]) -> List[BinaryForm]:
    """Compose a parameterization with the linear map given by ``rows``"""
    degree = forms[0].degree
    images = []
    for row in rows:
        image = BinaryForm.zero(degree)
        for coeff, form in zip(row, forms):
            value = to_scalar(coeff)
            if value:
                image = image + form.scale(value)
        images.append(image)
    return images


def projectively_equal(first: Sequence[BinaryForm], second: Sequence[BinaryForm]) -> bool:
    """Whether two parameterizations differ by one global nonzero scalar"""
    if len(first) != len(second):
        return False
    if any(a.degree != b.degree for a, b in zip(first, second)):
        return False
    if all(a.is_zero() for a in first) or all(b.is_zero() for b in second):
        return False
    for i in range(len(first)):
        for j in range(i + 1, len(first)):
            if not (first[i] * second[j] - first[j] * second[i]).is_zero():
                return False
    return True


# ============================================
# Invariants
# ============================================

def splitting_type(curve: ParamCurve) -> SplittingType:
    """(k, d - k) from the mu-basis"""
    basis = curve.mu
    return SplittingType(a=basis.k, b=curve.d - basis.k)


def preimage_form(forms: Sequence[BinaryForm], point: Sequence[ScalarLike]) -> Optional[BinaryForm]:
    """
    gcd of the minors of (forms; point)

    Its roots are the parameters mapping to ``point``, with multiplicity.
    Returns None when the parameterization is constantly equal to the point.
    """
    values = [to_scalar(v) for v in point]
    if len(values) != len(forms):
        raise ValueError(f"Point has {len(values)} coordinates, expected {len(forms)}")
    if not any(values):
        raise ValueError("The zero vector is not a projective point")
    constants = [BinaryForm(0, [v]) for v in values]
    return minor_gcd(list(forms), constants)


def _random_parameter(rng: random.Random, bound: int) -> Tuple[int, int]:
    while True:
        s0 = rng.randint(-bound, bound)
        t0 = rng.randint(-bound, bound)
        if s0 or t0:
            return s0, t0


def forms_map_degree(
    forms: Sequence[BinaryForm], trials: Optional[int] = None, seed: Optional[int] = None
) -> int:
    """Generic preimage count of a parameterization with any number of coordinates"""
    config = get_scroll_config()
    trials = trials if trials is not None else config.map_degree_trials
    rng = random.Random(config.seed if seed is None else seed)
    best: Optional[int] = None
    for _ in range(trials):
        s0, t0 = _random_parameter(rng, config.sample_bound)
        point = [f.evaluate(s0, t0) for f in forms]
        if not any(point):
            continue
        common = preimage_form(forms, point)
        if common is None:
            continue
        if best is None or common.degree < best:
            best = common.degree
        if best == 1:
            break
    if best is None:
        raise DegenerateLineError("Parameterization is constant")
    return best


def map_degree(curve: ParamCurve, trials: Optional[int] = None, seed: Optional[int] = None) -> int:
    """
    Degree r of the map from P^1 onto the image curve

    Minimum over random image points of the preimage gcd degree.
    """
    r = forms_map_degree(curve.forms, trials=trials, seed=seed)
    logger.debug(f"Map degree {r} for degree-{curve.d} curve")
    return r


def multiplicity_at_point(curve: ParamCurve, point: Sequence[ScalarLike], r: Optional[int] = None) -> int:
    """
    Number of parameter preimages of ``point``, with multiplicity

    Equals the curve multiplicity at the point for birational parameterizations;
    0 means the point is off the curve.
    """
    common = preimage_form(curve.forms, point)
    if common is None:
        raise DegenerateLineError("Parameterization is constant")
    if r is None:
        r = map_degree(curve)
    if r > 1:
        logger.warning(f"Map degree is {r}; multiplicity {common.degree} counts raw preimages")
    return common.degree


def ascenzi_interval(d: int, m: int) -> Tuple[int, int]:
    if not 1 <= m <= d - 1:
        raise ValueError(f"Multiplicity {m} outside 1..{d - 1}")
    return min(m, d - m), min(d - m, d // 2)


def ascenzi_bounds_check(curve: ParamCurve, m: int) -> AscenziVerdict:
    """Check the splitting degree against a hypothetical point of multiplicity m"""
    d = curve.d
    lower, upper = ascenzi_interval(d, m)
    a = curve.mu.k
    return AscenziVerdict(
        d=d, m=m, a=a, lower=lower, upper=upper,
        consistent=lower <= a <= upper,
        forced=2 * m + 1 >= d,
    )


# ============================================
# Implicitization
# ============================================

def _monomial(exponent: Exponent, coeff: ScalarLike) -> HomogeneousPoly:
    return HomogeneousPoly(len(exponent), sum(exponent), {exponent: coeff})


def perfect_root(poly: HomogeneousPoly, r: int) -> HomogeneousPoly:
    """
    Monic F with poly = const * F^r

    Terms of F are found one at a time in decreasing lex order: the leading
    term of poly - F^r must equal r * LT(F)^(r-1) * (next term).

    Raises:
        PowerExtractionFailedError: if poly is not a constant times an r-th power
    """
    if r == 1:
        return poly.monic()
    if poly.is_zero() or poly.degree % r:
        raise PowerExtractionFailedError(f"Degree {poly.degree} is not divisible by {r}")
    target = poly.monic()
    lead_exp, _ = target.leading_term()
    if any(e % r for e in lead_exp):
        raise PowerExtractionFailedError("Leading monomial is not an r-th power")
    root_lead = tuple(e // r for e in lead_exp)
    root = _monomial(root_lead, 1)
    last = root_lead
    limit = len(poly.terms) + (poly.degree // r + 1) ** poly.nvars
    for _ in range(limit):
        remainder = target - root.power(r)
        if remainder.is_zero():
            return root
        exponent, coeff = remainder.leading_term()
        step = tuple(e - (r - 1) * c for e, c in zip(exponent, root_lead))
        if min(step) < 0 or step >= last:
            raise PowerExtractionFailedError(f"Resultant is not a perfect {r}-th power")
        root = root + _monomial(step, coeff / r)
        last = step
    raise PowerExtractionFailedError(f"Root extraction did not terminate for r={r}")


def _extract(raw: HomogeneousPoly, r: int) -> HomogeneousPoly:
    if r == 1:
        return raw.primitive()
    return perfect_root(raw, r).primitive()


def implicitize(curve: ParamCurve, seed: Optional[int] = None, trials: Optional[int] = None) -> ImplicitResult:
    """
    Implicit equation from the resultant of the mu-basis

    Raises:
        PowerExtractionFailedError: if the resultant is not a perfect r-th power
            even after recomputing r with more trials
        ImplicitCheckError: if F does not vanish on the parameterization
    """
    basis = curve.mu
    raw = resultant_moving_lines(basis.p, basis.q)
    r = map_degree(curve, trials=trials, seed=seed)
    try:
        F = _extract(raw, r)
    except PowerExtractionFailedError:
        config = get_scroll_config()
        retry_seed = (config.seed if seed is None else seed) + 1
        retried = map_degree(curve, trials=config.retry_trials, seed=retry_seed)
        logger.warning(f"Root extraction failed for r={r}; retrying with r={retried}")
        if retried == r:
            raise
        r = retried
        F = _extract(raw, r)
    if F.degree * r != curve.d:
        raise PowerExtractionFailedError(f"deg(F)={F.degree} times r={r} differs from d={curve.d}")
    if not F.substitute(curve.forms).is_zero():
        raise ImplicitCheckError(f"{F.to_text()} does not vanish on the parameterization")
    logger.info(f"Implicit equation of degree {F.degree} with map degree {r}")
    return ImplicitResult(F=F, r=r, resultant_raw=raw)
