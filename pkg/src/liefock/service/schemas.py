"""Pydantic request/response models for the HTTP service.

Complex numbers travel as two-element [re, im] arrays everywhere.
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

ComplexPair = list[float]  # [re, im]
Vector = list[ComplexPair]
Matrix = list[Vector]


class BracketEntry(BaseModel):
    i: int
    j: int
    coeffs: Vector


class AlgebraInput(BaseModel):
    """Either a catalog id or an inline bracket table, never both."""

    catalog: Optional[str] = None
    dim: Optional[int] = None
    tol: Optional[float] = None
    labels: Optional[list[str]] = None
    brackets: Optional[list[BracketEntry]] = None

    @model_validator(mode="after")
    def _one_source(self):
        inline = self.dim is not None
        if (self.catalog is None) == (not inline):
            raise ValueError("provide exactly one of 'catalog' or an inline 'dim'+'brackets' table")
        return self

    def payload(self) -> Optional[dict]:
        if self.dim is None:
            return None
        out: dict = {"dim": self.dim}
        if self.tol is not None:
            out["tol"] = self.tol
        if self.labels is not None:
            out["labels"] = self.labels
        out["brackets"] = [b.model_dump() for b in (self.brackets or [])]
        return out


class DecomposeRequest(BaseModel):
    algebra: AlgebraInput
    a_basis: Matrix
    b_basis: Matrix


class ModelRequest(BaseModel):
    model: Literal["shifted", "swanson", "bender_jones", "bender-jones"]
    alpha: Optional[ComplexPair] = None
    beta: Optional[ComplexPair] = None
    beta_real: Optional[float] = None
    theta: Optional[float] = None
    allow_ccr: bool = False
    n_max: Optional[int] = Field(default=None, ge=8)
    guard: int = Field(default=2, ge=0)
    levels: Optional[int] = Field(default=None, ge=0)


class ValidationOut(BaseModel):
    antisymmetry_defect: float
    jacobi_residual: float
    tol: float
    accepted: bool


class AlgebraSummary(BaseModel):
    dim: int
    tol: float
    labels: Optional[list[str]] = None


class ValidateResponse(BaseModel):
    algebra: AlgebraSummary
    validation: ValidationOut


class SubspaceOut(BaseModel):
    dim: int
    basis: Matrix


class SeriesOut(BaseModel):
    dims: list[int]
    stabilized: bool


class AnalyzeResponse(BaseModel):
    algebra: AlgebraSummary
    validation: ValidationOut
    center: SubspaceOut
    derived_subalgebra: SubspaceOut
    upper_central_series: SeriesOut
    lower_central_series: SeriesOut
    nilpotent: bool
    nilpotency_class: Optional[int] = None


class FactorOut(BaseModel):
    dim: int
    abelian: bool
    center_dim: int


class VerdictOut(BaseModel):
    spans_whole: bool
    a_is_ideal: bool
    b_is_ideal: bool
    intersection_dim: int
    is_semidirect: bool
    is_central: bool
    is_direct: bool


class DecomposeResponse(BaseModel):
    algebra: AlgebraSummary
    a: FactorOut
    b: FactorOut
    verdict: VerdictOut


class FingerprintOut(BaseModel):
    dim: int
    lcs_dims: list[int]
    ucs_dims: list[int]
    nilpotency_class: int
    dim_derived: int
    dim_center: int
    dim_centralizer_of_derived: int
    h2_dim: int


class ClassifyResponse(BaseModel):
    algebra: AlgebraSummary
    fingerprint: FingerprintOut
    matched: Optional[str] = None
    ambiguous_with: list[str]


class CohomologyOut(BaseModel):
    dim_c1: int
    dim_c2: int
    dim_c3: int
    rank_d1: int
    rank_d2: int
    h2_dim: int
    composition_residual: float


class SchurResponse(BaseModel):
    algebra: AlgebraSummary
    cohomology: CohomologyOut
    multiplier_audit: Optional[dict] = None


class CatalogResponse(BaseModel):
    entries: list[str]


class ModelResponse(BaseModel):
    model: str
    parameters: dict
    space: dict
    levels: int
    adjoint_gap: float
    commutator_defect: float
    vacuum: Optional[dict] = None
    gram: Optional[dict] = None
    ladder: Optional[dict] = None
    number_operator: Optional[dict] = None
    quasi_basis: Optional[dict] = None


class ClaimOut(BaseModel):
    claim: str
    claimed: object
    computed: object
    agrees: bool


class AuditResponse(BaseModel):
    model: str
    parameters: dict
    space: dict
    extraction: dict
    analysis: dict
    decomposition: dict
    classification: dict
    cohomology: CohomologyOut
    claims: list[ClaimOut]


class ErrorBody(BaseModel):
    code: str
    message: str
