"""
Pydantic Report Models

Structured results emitted by the analysis services, the acceptance battery
and the command line front end. Rationals are serialized as "p/q" strings so
that JSON output stays exact.
"""

from typing import List, Optional, Literal
from pydantic import BaseModel, Field, model_validator
from datetime import datetime


FormCoefficients = List[str]
LineCoefficients = List[FormCoefficients]


# ============================================
# Curve Invariants
# ============================================

class SplittingType(BaseModel):
    """Degrees (a, b) of the two syzygy generators"""
    a: int = Field(ge=1, description="Smaller generator degree k")
    b: int = Field(ge=1, description="Larger generator degree d - k")

    @model_validator(mode="after")
    def check_order(self) -> "SplittingType":
        if self.a > self.b:
            raise ValueError(f"Splitting type ({self.a},{self.b}) is not ordered")
        return self

    @property
    def d(self) -> int:
        return self.a + self.b

    @property
    def balanced(self) -> bool:
        return self.a == self.b


class AscenziVerdict(BaseModel):
    """Check of the multiplicity bound min(m,d-m) <= a <= min(d-m, d//2)"""
    d: int = Field(description="Curve degree")
    m: int = Field(ge=1, description="Hypothetical point multiplicity")
    a: int = Field(description="Computed smaller splitting degree")
    lower: int = Field(description="Lower end of the admissible interval")
    upper: int = Field(description="Upper end of the admissible interval")
    consistent: bool = Field(description="Whether a lies in the interval")
    forced: bool = Field(description="Whether 2m+1 >= d, forcing a = min(m, d-m)")


class MuBasisReport(BaseModel):
    """mu-basis rows and the Hilbert-Burch constant"""
    k: int = Field(description="Degree of p")
    p: LineCoefficients = Field(description="Coefficient lists of (A0, A1, A2) for p")
    q: LineCoefficients = Field(description="Coefficient lists of (A0, A1, A2) for q")
    balanced: bool = Field(description="Whether 2k = d")
    hilbert_burch_constant: str = Field(description="lambda with minors(p;q) = lambda*f")


class SecondLevelReport(BaseModel):
    """Syzygies of the p-triple and the scroll bookkeeping they determine"""
    h: int = Field(ge=0, description="Degree of gamma")
    e: int = Field(ge=0, description="k - 2h")
    ascenzi: bool = Field(description="Whether h = 0")
    alpha_dependent: bool = Field(description="Whether the p-triple is linearly dependent")
    gamma: LineCoefficients = Field(description="Coefficient lists of gamma")
    delta: LineCoefficients = Field(description="Coefficient lists of delta")
    c0_self_intersection: int = Field(description="C0^2 = -e")
    scroll_degree: int = Field(description="H^2 = C0^2 + 2(k-h)")
    hyperplane_class: List[int] = Field(description="H ~ C0 + (k-h) f as [1, k-h]")
    curve_class: List[int] = Field(description="D ~ C0 + (d-h) f as [1, d-h]")
    vertex_intersection: Optional[int] = Field(None, description="D.C0 = d - k when h = 0")
    borderline: bool = Field(default=False, description="Whether 2k+1 = d")


class ImplicitReport(BaseModel):
    """Implicit equation recovered from the moving-line resultant"""
    equation: str = Field(description="Primitive implicit polynomial F")
    degree: int = Field(description="Degree of F")
    map_degree: int = Field(ge=1, description="Degree r of the parameterization onto its image")
    resultant_raw: str = Field(description="Sylvester determinant before root extraction")


# ============================================
# Lift Models
# ============================================

class LiftDiagnosticsReport(BaseModel):
    """Smoothness, injectivity and cone-vertex checks of a lifted curve"""
    immersion_gcd_degree: Optional[int] = Field(None, description="Degree of the gcd of the derivative minors")
    immersion_pass: Optional[bool] = Field(None, description="Immersion check, asserted only when h > 0")
    injectivity_degree: int = Field(description="Map degree of the lifted parameterization")
    injectivity_pass: bool = Field(description="Whether the lift is birational onto its image")
    vertex: Optional[List[str]] = Field(None, description="Cone vertex in lift coordinates when h = 0")
    vertex_preimage_degree: Optional[int] = Field(None, description="Preimage degree of the vertex")
    expected_vertex_degree: Optional[int] = Field(None, description="d - k")
    vertex_pass: Optional[bool] = Field(None, description="Whether the vertex degree equals d - k")
    passed: bool = Field(description="Whether every applicable check passed")


class ExplicitLiftReport(BaseModel):
    """Explicit construction in P^4 for splitting type (3, d-3)"""
    branch: Literal["general", "tangent", "cone"] = Field(description="Normal form used")
    coords: List[FormCoefficients] = Field(description="Five coordinate forms")
    quadrics: List[str] = Field(description="Quadrics vanishing on the lift")
    centers: List[List[str]] = Field(description="Projection centers recovering the curve")
    vertex: Optional[List[str]] = Field(None, description="Cone vertex for the cone branch")


class LiftReport(BaseModel):
    """Lift of a plane curve to a rational normal scroll"""
    degree: int = Field(description="Curve degree d")
    k: int = Field(description="Smaller splitting degree")
    h: int = Field(description="Second-level degree")
    e: int = Field(description="k - 2h")
    chart: str = Field(description="Minor pair used, e.g. '02'")
    coords: List[FormCoefficients] = Field(description="k+2 coordinate forms of degree d")
    removed_gcd: FormCoefficients = Field(description="Common factor removed, degree k")
    syzygy_basis: List[LineCoefficients] = Field(description="Degree-k syzygies of p, Koszul triples last")
    quadric_count: int = Field(description="Dimension of quadrics through the lift")
    quadrics: List[str] = Field(default_factory=list, description="Echelon basis of those quadrics")
    diagnostics: LiftDiagnosticsReport = Field(description="Lift diagnostics")
    explicit: Optional[ExplicitLiftReport] = Field(None, description="Explicit P^4 construction when k = 3")


# ============================================
# Analysis Reports
# ============================================

class AnalysisReport(BaseModel):
    """Complete analysis of one parameterized curve"""
    input: List[FormCoefficients] = Field(description="Input forms as given")
    removed_factor: FormCoefficients = Field(description="Common factor divided out of the input")
    degree: int = Field(description="Degree d after normalization")
    splitting: SplittingType = Field(description="Splitting type (k, d-k)")
    balanced: bool = Field(description="Whether 2k = d")
    mu_basis: MuBasisReport = Field(description="mu-basis and Hilbert-Burch constant")
    map_degree: int = Field(ge=1, description="Degree of the map onto its image")
    second_level: SecondLevelReport = Field(description="Second-level syzygies and scroll ledger")
    ascenzi_table: List[AscenziVerdict] = Field(default_factory=list, description="Bound check for m = 1..d-1")
    implicit: Optional[ImplicitReport] = Field(None, description="Implicit equation when requested")
    lift: Optional[LiftReport] = Field(None, description="Lift summary when requested")
    diagnostics: List[str] = Field(default_factory=list, description="Free-form remarks")

    @model_validator(mode="after")
    def check_consistency(self) -> "AnalysisReport":
        if self.splitting.d != self.degree:
            raise ValueError("Splitting type does not add up to the degree")
        if self.second_level.e != self.splitting.a - 2 * self.second_level.h:
            raise ValueError("e differs from k - 2h")
        if self.implicit and self.implicit.degree * self.implicit.map_degree != self.degree:
            raise ValueError("deg(F) * r differs from d")
        return self


class InvariantCheck(BaseModel):
    """Single named invariant check"""
    name: str = Field(description="Check name")
    passed: bool = Field(description="Whether the check passed")
    detail: Optional[str] = Field(None, description="Observed values")


class VerificationReport(BaseModel):
    """Invariant suite run on one curve"""
    degree: int = Field(description="Curve degree")
    checks: List[InvariantCheck] = Field(default_factory=list, description="Individual checks")
    passed: bool = Field(description="Whether every check passed")


class CriterionResult(BaseModel):
    """Outcome of one acceptance criterion"""
    number: int = Field(ge=1, le=10, description="Criterion number")
    name: str = Field(description="Short criterion name")
    passed: bool = Field(description="Whether the criterion passed")
    detail: str = Field(default="", description="Observed values or failure reason")
    seconds: float = Field(ge=0, description="Wall time")


class BatteryReport(BaseModel):
    """Acceptance battery outcome"""
    seed: int = Field(description="Seed used for random fixtures")
    criteria: List[CriterionResult] = Field(default_factory=list, description="Per-criterion results")
    passed: bool = Field(description="Whether every criterion passed")
    generated_at: datetime = Field(default_factory=datetime.now, description="Report generation time")


class ErrorReport(BaseModel):
    """Error response model"""
    error: str = Field(description="Error code")
    detail: Optional[str] = Field(None, description="Error details")
