"""
Curve Analysis Service

Runs the syzygy, implicitization and scroll services on one curve and
assembles the pydantic reports emitted by the command line front end.
"""

import logging
from typing import Callable, List, Optional, Sequence, Tuple

from config.scroll_config import ScrollConfig, get_scroll_config
from models.errors import CurveAlgebraError
from models.forms import BinaryForm
from models.schemas import (
    AnalysisReport,
    ExplicitLiftReport,
    ImplicitReport,
    InvariantCheck,
    LiftDiagnosticsReport,
    LiftReport,
    MuBasisReport,
    SecondLevelReport,
    VerificationReport,
)
from services.cubic_lift import explicit_cubic_lift
from services.curve import (
    ParamCurve,
    ascenzi_bounds_check,
    curve_from_matrix,
    implicitize,
    make_curve,
    map_degree,
    projectively_equal,
    splitting_type,
)
from services.exact_arith import bf_gcd_many
from services.scroll import (
    CHART_ORDER,
    LiftedCurve,
    ScrollData,
    lift,
    lift_diagnostics,
    project_from_points,
    quadrics_through,
    second_level,
)
from services.syzygy import decompose_syzygy, hilbert_burch_check, syzygy_space
from utils.formatting import CurveInput, form_to_list, line_to_lists, vector_to_list


logger = logging.getLogger(__name__)


class CurveAnalyzer:
    """Service for analyzing parameterized plane curves"""

    def __init__(self, config: Optional[ScrollConfig] = None, seed: Optional[int] = None, trials: Optional[int] = None):
        self.config = config or get_scroll_config()
        self.seed = self.config.seed if seed is None else seed
        self.trials = self.config.map_degree_trials if trials is None else trials
        if self.trials < 1:
            raise ValueError(f"Map-degree trials must be at least 1, got {self.trials}")

    def build_curve(self, curve_input: CurveInput) -> ParamCurve:
        """Normalize parsed input into a ParamCurve"""
        if curve_input.kind == "matrix":
            return curve_from_matrix(curve_input.alpha, curve_input.beta)
        return make_curve(*curve_input.forms)

    # ============================================
    # Reports
    # ============================================

    def analyze(
        self,
        curve: ParamCurve,
        raw_forms: Optional[Sequence[BinaryForm]] = None,
        include_implicit: bool = False,
        include_lift: bool = False,
        chart: Optional[Tuple[int, int]] = None,
        explicit: bool = False,
    ) -> AnalysisReport:
        """
        Full analysis of one curve

        Args:
            curve: Normalized curve
            raw_forms: Forms as given by the user, echoed in the report
            include_implicit: Add the implicit equation
            include_lift: Add the scroll lift and its diagnostics
            chart: Force a lift chart
            explicit: Add the explicit P^4 construction (k = 3 only)

        Returns:
            Analysis report
        """
        logger.info(f"Analyzing degree-{curve.d} curve")
        basis = curve.mu
        splitting = splitting_type(curve)
        constant = hilbert_burch_check(*curve.forms, basis)
        r = map_degree(curve, trials=self.trials, seed=self.seed)
        scroll = second_level(curve)

        diagnostics: List[str] = []
        if curve.removed_factor.degree:
            diagnostics.append(f"removed common factor {curve.removed_factor.to_text()}")
        if r > 1:
            diagnostics.append(f"parameterization covers its image {r} times")
        if 2 * basis.k + 1 == curve.d:
            diagnostics.append("2k+1 = d: an Ascenzi point of multiplicity k is allowed by the bounds")

        report = AnalysisReport(
            input=[form_to_list(f) for f in (raw_forms or curve.forms)],
            removed_factor=form_to_list(curve.removed_factor),
            degree=curve.d,
            splitting=splitting,
            balanced=basis.balanced,
            mu_basis=MuBasisReport(
                k=basis.k,
                p=line_to_lists(basis.p),
                q=line_to_lists(basis.q),
                balanced=basis.balanced,
                hilbert_burch_constant=str(constant),
            ),
            map_degree=r,
            second_level=self.second_level_report(scroll),
            ascenzi_table=[ascenzi_bounds_check(curve, m) for m in range(1, curve.d)],
            implicit=self.implicit_report(curve) if include_implicit else None,
            lift=self.lift_report(curve, scroll, chart=chart, explicit=explicit) if include_lift else None,
            diagnostics=diagnostics,
        )
        return report

    def second_level_report(self, scroll: ScrollData) -> SecondLevelReport:
        return SecondLevelReport(
            h=scroll.h,
            e=scroll.e,
            ascenzi=scroll.ascenzi,
            alpha_dependent=scroll.alpha_dependent,
            gamma=line_to_lists(scroll.gamma),
            delta=line_to_lists(scroll.delta),
            c0_self_intersection=scroll.c0_self_intersection,
            scroll_degree=scroll.scroll_degree,
            hyperplane_class=list(scroll.hyperplane_class),
            curve_class=list(scroll.curve_class),
            vertex_intersection=scroll.vertex_intersection,
            borderline=2 * scroll.k + 1 == scroll.d,
        )

    def implicit_report(self, curve: ParamCurve) -> ImplicitReport:
        result = implicitize(curve, seed=self.seed, trials=self.trials)
        return ImplicitReport(
            equation=result.F.to_text(),
            degree=result.F.degree,
            map_degree=result.r,
            resultant_raw=result.resultant_raw.to_text(),
        )

    def lift_report(
        self,
        curve: ParamCurve,
        scroll: Optional[ScrollData] = None,
        chart: Optional[Tuple[int, int]] = None,
        explicit: bool = False,
    ) -> LiftReport:
        """
        Lift a curve and summarize the result

        Args:
            curve: Curve to lift
            scroll: Precomputed second-level data
            chart: Force a lift chart
            explicit: Add the explicit P^4 construction

        Returns:
            Lift report with quadrics and diagnostics
        """
        scroll = scroll or second_level(curve)
        lifted = lift(curve, chart=chart)
        quadrics = quadrics_through(lifted)
        checks = lift_diagnostics(lifted, scroll)
        explicit_report = None
        if explicit:
            built = explicit_cubic_lift(curve)
            explicit_report = ExplicitLiftReport(
                branch=built.branch,
                coords=[form_to_list(f) for f in built.coords],
                quadrics=[q.to_text() for q in built.quadrics],
                centers=[vector_to_list(c) for c in built.centers],
                vertex=vector_to_list(built.vertex) if built.vertex else None,
            )
        return LiftReport(
            degree=lifted.d,
            k=lifted.k,
            h=scroll.h,
            e=scroll.e,
            chart=lifted.chart_label,
            coords=[form_to_list(f) for f in lifted.coords],
            removed_gcd=form_to_list(lifted.removed_gcd),
            syzygy_basis=[line_to_lists(line) for line in lifted.syzygy_basis],
            quadric_count=quadrics.dimension,
            quadrics=[q.to_text() for q in quadrics.basis],
            diagnostics=LiftDiagnosticsReport(
                immersion_gcd_degree=checks.immersion_gcd_degree,
                immersion_pass=checks.immersion_pass,
                injectivity_degree=checks.injectivity_degree,
                injectivity_pass=checks.injectivity_pass,
                vertex=vector_to_list(checks.vertex) if checks.vertex else None,
                vertex_preimage_degree=checks.vertex_preimage_degree,
                expected_vertex_degree=checks.expected_vertex_degree,
                vertex_pass=checks.vertex_pass,
                passed=checks.passed,
            ),
            explicit=explicit_report,
        )

    # ============================================
    # Invariant suite
    # ============================================

    def verify(self, curve: ParamCurve) -> VerificationReport:
        """
        Run the invariant suite on one curve

        Args:
            curve: Curve to check

        Returns:
            Verification report with one entry per invariant
        """
        d = curve.d
        basis = curve.mu
        k = basis.k
        checks: List[InvariantCheck] = []

        def check(name: str, body: Callable[[], Tuple[bool, str]]) -> None:
            try:
                passed, detail = body()
            except (CurveAlgebraError, ValueError) as exc:
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            if not passed:
                logger.warning(f"Invariant {name} failed: {detail}")
            checks.append(InvariantCheck(name=name, passed=passed, detail=detail))

        def hilbert_burch() -> Tuple[bool, str]:
            constant = hilbert_burch_check(*curve.forms, basis)
            return constant != 0, f"lambda={constant}"

        def dimension_formula() -> Tuple[bool, str]:
            observed = [len(syzygy_space(*curve.forms, n)) for n in range(d + 3)]
            expected = [max(0, n - k + 1) + max(0, n - (d - k) + 1) for n in range(d + 3)]
            return observed == expected, f"dims={observed}"

        def minimality() -> Tuple[bool, str]:
            lower = syzygy_space(*curve.forms, k - 1)
            gcd = bf_gcd_many(basis.p.components)
            return not lower and gcd.degree == 0, f"dim(k-1)={len(lower)}, deg gcd(p)={gcd.degree}"

        def decomposition() -> Tuple[bool, str]:
            for n in sorted({k, d - k, d}):
                for syzygy in syzygy_space(*curve.forms, n):
                    decompose_syzygy(syzygy, basis.p, basis.q)
            return True, f"degrees {sorted({k, d - k, d})}"

        def splitting_bound() -> Tuple[bool, str]:
            return k <= d // 2, f"a={k}, d={d}"

        def implicit_equation() -> Tuple[bool, str]:
            result = implicitize(curve, seed=self.seed, trials=self.trials)
            vanishes = result.F.substitute(curve.forms).is_zero()
            return vanishes and result.F.degree * result.r == d, f"F={result.F.to_text()}, r={result.r}"

        scroll = second_level(curve)

        def second_level_syzygies() -> Tuple[bool, str]:
            alpha = basis.p.components
            ok = scroll.e >= 0
            ok = ok and scroll.gamma.apply(*alpha).is_zero() and scroll.delta.apply(*alpha).is_zero()
            for syzygy in syzygy_space(*alpha, k):
                decompose_syzygy(syzygy, scroll.gamma, scroll.delta)
            return ok, f"h={scroll.h}, e={scroll.e}"

        def ledger() -> Tuple[bool, str]:
            return scroll.scroll_degree == k, f"H^2={scroll.scroll_degree}"

        def ascenzi_coherence() -> Tuple[bool, str]:
            return scroll.ascenzi == scroll.alpha_dependent, (
                f"h={scroll.h}, alpha dependent={scroll.alpha_dependent}"
            )

        check("hilbert_burch", hilbert_burch)
        check("dimension_formula", dimension_formula)
        check("minimality", minimality)
        check("syzygy_decomposition", decomposition)
        check("splitting_bound", splitting_bound)
        check("implicit_equation", implicit_equation)
        check("second_level", second_level_syzygies)
        check("scroll_degree", ledger)
        check("ascenzi_coherence", ascenzi_coherence)

        try:
            lifted = lift(curve)
        except CurveAlgebraError as exc:
            checks.append(InvariantCheck(name="lift", passed=False, detail=f"{exc.code}: {exc}"))
        else:
            self._lift_checks(curve, lifted, scroll, check)

        passed = all(c.passed for c in checks)
        logger.info(f"Verification {'passed' if passed else 'failed'} with {len(checks)} checks")
        return VerificationReport(degree=d, checks=checks, passed=passed)

    def _lift_checks(self, curve: ParamCurve, lifted: LiftedCurve, scroll: ScrollData, check) -> None:
        def shape() -> Tuple[bool, str]:
            ok = (
                len(lifted.coords) == lifted.k + 2
                and lifted.d == curve.d
                and lifted.removed_gcd.degree == lifted.k
            )
            return ok, f"{len(lifted.coords)} coords of degree {lifted.d}, gcd degree {lifted.removed_gcd.degree}"

        def round_trip() -> Tuple[bool, str]:
            projected = project_from_points(lifted)
            return projectively_equal(projected.forms, curve.forms), f"chart {lifted.chart_label}"

        def chart_independence() -> Tuple[bool, str]:
            others = []
            for candidate in CHART_ORDER:
                try:
                    others.append(lift(curve, chart=candidate))
                except CurveAlgebraError:
                    continue
            agree = all(projectively_equal(other.coords, lifted.coords) for other in others)
            return agree, f"{len(others)} charts"

        def diagnostics() -> Tuple[bool, str]:
            result = lift_diagnostics(lifted, scroll)
            return result.passed, (
                f"immersion={result.immersion_pass}, injectivity={result.injectivity_degree}, "
                f"vertex degree={result.vertex_preimage_degree}"
            )

        check("lift_shape", shape)
        check("round_trip", round_trip)
        check("chart_independence", chart_independence)
        check("lift_diagnostics", diagnostics)
