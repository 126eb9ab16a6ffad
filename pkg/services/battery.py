"""
Acceptance Battery

Runs the acceptance criteria on the fixture corpus and reports a pass/fail
row per criterion with its wall time.
"""

import logging
import random
import time
from typing import Callable, List, Optional, Tuple

from config.scroll_config import ScrollConfig, get_scroll_config
from models.errors import CurveAlgebraError
from models.forms import HomogeneousPoly
from models.matrix import ExactMatrix
from models.schemas import BatteryReport, CriterionResult
from services.cubic_lift import explicit_cubic_lift
from services.curve import ParamCurve, implicitize, projectively_equal, splitting_type, ascenzi_interval
from services.fixtures import (
    CONIC,
    CUSP3,
    OCTIC,
    SQ4,
    named_fixtures,
    plant_multiplicity,
    quadric_sextic,
    random_curve,
)
from services.linalg import rank
from services.scroll import lift, project_from_points, quadrics_through, second_level
from services.syzygy import hilbert_burch_check, syzygy_space


logger = logging.getLogger(__name__)

CriterionBody = Callable[[], Tuple[bool, str]]

# Centers printed with the explicit construction for the (3, 5) octic
OCTIC_CENTERS = ((0, 1, -1, 0, 0), (0, 1, 0, 0, -1))


def _ternary(terms: dict) -> HomogeneousPoly:
    degree = sum(next(iter(terms)))
    return HomogeneousPoly(3, degree, terms)


CONIC_EQUATION = _ternary({(1, 0, 1): 1, (0, 2, 0): -1})
CUSP3_EQUATION = _ternary({(0, 3, 0): 1, (1, 0, 2): -1})


class AcceptanceBattery:
    """Service running the acceptance criteria"""

    def __init__(self, config: Optional[ScrollConfig] = None, seed: Optional[int] = None):
        self.config = config or get_scroll_config()
        self.seed = self.config.seed if seed is None else seed
        self._corpus: Optional[List[Tuple[str, ParamCurve]]] = None

    def corpus(self) -> List[Tuple[str, ParamCurve]]:
        """Named fixtures, planted-multiplicity curves and random curves of degree <= 10"""
        if self._corpus is None:
            curves = list(named_fixtures())
            for index, d in enumerate(range(3, 11)):
                m = 1 + index % (d - 1)
                curves.append((f"planted(d={d},m={m})", plant_multiplicity(d, m, self.seed + d)))
            for index in range(self.config.battery_random):
                d = 3 + index % 8
                curves.append((f"random(d={d})", random_curve(d, self.seed + 100 + index)))
            curves.append(("quadric_sextic", quadric_sextic(self.seed)))
            self._corpus = curves
        return self._corpus

    def run(self) -> BatteryReport:
        """
        Run every criterion

        Returns:
            Battery report; passed is True iff every criterion passed
        """
        criteria: List[Tuple[int, str, CriterionBody]] = [
            (1, "octic splitting type", self.octic_splitting),
            (2, "octic is not Ascenzi", self.octic_second_level),
            (3, "explicit P^4 quadrics", self.explicit_quadrics),
            (4, "lift round trip", self.round_trip),
            (5, "Hilbert-Burch and dimension formula", self.hilbert_burch),
            (6, "multiplicity bounds", self.multiplicity_bounds),
            (7, "implicitization", self.implicitization),
            (8, "quadric counts", self.quadric_counts),
            (9, "(2,4) witness on a quadric", self.quadric_witness),
            (10, "projection monotonicity", self.projection_monotonicity),
        ]
        results = [self._timed(number, name, body) for number, name, body in criteria]
        passed = all(r.passed for r in results)
        logger.info(f"Battery {'passed' if passed else 'failed'}: {sum(r.passed for r in results)}/{len(results)}")
        return BatteryReport(seed=self.seed, criteria=results, passed=passed)

    def _timed(self, number: int, name: str, body: CriterionBody) -> CriterionResult:
        start = time.perf_counter()
        try:
            passed, detail = body()
        except (CurveAlgebraError, ValueError, RuntimeError) as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        seconds = time.perf_counter() - start
        logger.info(f"Criterion {number} ({name}): {'pass' if passed else 'FAIL'} in {seconds:.2f}s")
        return CriterionResult(number=number, name=name, passed=passed, detail=detail, seconds=seconds)

    # ============================================
    # Criteria
    # ============================================

    def octic_splitting(self) -> Tuple[bool, str]:
        splitting = splitting_type(OCTIC)
        dims = [len(syzygy_space(*OCTIC.forms, n)) for n in range(4)]
        return (splitting.a, splitting.b) == (3, 5) and dims == [0, 0, 0, 1], (
            f"splitting=({splitting.a},{splitting.b}), dims={dims}"
        )

    def octic_second_level(self) -> Tuple[bool, str]:
        scroll = second_level(OCTIC)
        return (scroll.h, scroll.e) == (1, 1) and not scroll.ascenzi, f"h={scroll.h}, e={scroll.e}"

    def explicit_quadrics(self) -> Tuple[bool, str]:
        built = explicit_cubic_lift(OCTIC)
        on_quadrics = all(q.substitute(built.coords).is_zero() for q in built.quadrics)
        degree_ok = len(built.coords) == 5 and built.coords[0].degree == 8
        same_centers = rank(ExactMatrix.from_rows(list(built.centers) + [list(c) for c in OCTIC_CENTERS])) == 2
        return on_quadrics and degree_ok and same_centers, f"branch={built.branch}, centers agree={same_centers}"

    def round_trip(self) -> Tuple[bool, str]:
        failures = []
        corpus = self.corpus()
        for name, curve in corpus:
            lifted = lift(curve)
            projected = project_from_points(lifted)
            ok = (
                projectively_equal(projected.forms, curve.forms)
                and lifted.d == curve.d
                and lifted.removed_gcd.degree == lifted.k
                and len(lifted.coords) == lifted.k + 2
            )
            if not ok:
                failures.append(name)
        return not failures and len(corpus) >= 20, f"{len(corpus)} curves, failures={failures}"

    def hilbert_burch(self) -> Tuple[bool, str]:
        failures = []
        for name, curve in self.corpus():
            d, k = curve.d, curve.mu.k
            constant = hilbert_burch_check(*curve.forms, curve.mu)
            dims = [len(syzygy_space(*curve.forms, n)) for n in range(d + 3)]
            expected = [max(0, n - k + 1) + max(0, n - d + k + 1) for n in range(d + 3)]
            if constant == 0 or dims != expected:
                failures.append(name)
        return not failures, f"failures={failures}"

    def multiplicity_bounds(self) -> Tuple[bool, str]:
        rng = random.Random(self.seed)
        failures = []
        count = self.config.battery_planted
        for index in range(count):
            d = rng.randint(3, 10)
            m = rng.randint(1, d - 1)
            curve = plant_multiplicity(d, m, self.seed + 1000 + index)
            a = curve.mu.k
            lower, upper = ascenzi_interval(d, m)
            ok = lower <= a <= upper
            if 2 * m + 1 >= d:
                ok = ok and a == min(m, d - m)
            if not ok:
                failures.append(f"d={d},m={m},a={a}")
        return not failures and count >= 50, f"{count} curves, failures={failures}"

    def implicitization(self) -> Tuple[bool, str]:
        conic = implicitize(CONIC)
        cusp = implicitize(CUSP3)
        square = implicitize(SQ4)
        ok = conic.F == CONIC_EQUATION and conic.r == 1
        ok = ok and cusp.F in (CUSP3_EQUATION, -CUSP3_EQUATION) and cusp.r == 1
        ok = ok and square.F == CONIC_EQUATION and square.r == 2
        ok = ok and square.resultant_raw.monic() == CONIC_EQUATION.power(2).monic()
        for _, curve in named_fixtures():
            result = implicitize(curve)
            ok = ok and result.F.substitute(curve.forms).is_zero() and result.F.degree * result.r == curve.d
        return ok, f"conic={conic.F.to_text()}, cusp={cusp.F.to_text()}, square r={square.r}"

    def quadric_counts(self) -> Tuple[bool, str]:
        counts = [quadrics_through(lift(curve)).dimension for curve in (OCTIC, CONIC, CUSP3)]
        return counts == [3, 1, 0], f"octic, conic, cusp = {counts}"

    def quadric_witness(self) -> Tuple[bool, str]:
        curve = quadric_sextic(self.seed)
        splitting = splitting_type(curve)
        scroll = second_level(curve)
        ok = (splitting.a, splitting.b) == (2, 4) and (scroll.h, scroll.e) == (1, 0)
        return ok, f"splitting=({splitting.a},{splitting.b}), h={scroll.h}, e={scroll.e}"

    def projection_monotonicity(self) -> Tuple[bool, str]:
        rng = random.Random(self.seed)
        lifted = lift(OCTIC)
        splittings = []
        degrees = []
        attempts = 0
        while len(splittings) < self.config.battery_projections and attempts < 10 * self.config.battery_projections:
            attempts += 1
            centers = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(2)]
            try:
                projected = project_from_points(lifted, centers)
            except (CurveAlgebraError, ValueError):
                continue
            splittings.append(projected.mu.k)
            degrees.append(projected.d)
        ok = len(splittings) == self.config.battery_projections
        ok = ok and all(a <= lifted.k for a in splittings) and all(d == lifted.d for d in degrees)
        return ok, f"a'={splittings}, degrees={sorted(set(degrees))}"
