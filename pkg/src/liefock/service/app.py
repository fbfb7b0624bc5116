"""FastAPI service wrapping the analysis library.

All computations are pure functions over immutable inputs, so concurrent
requests are safe.  Run with: uvicorn liefock.service.app:app
"""

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import api
from ..errors import LiefockError, UsageError
from . import schemas

app = FastAPI(
    title="liefock",
    description=(
        "Structure-constant Lie algebra analysis (center, series, "
        "decompositions, classification, second cohomology) and truncated-"
        "Fock-space ladder-operator model verification."
    ),
    version="0.1.0",
)


@app.exception_handler(LiefockError)
async def _library_error(_request: Request, exc: LiefockError):
    status = 400 if isinstance(exc, UsageError) else 422
    return JSONResponse(
        status_code=status,
        content={"error": {"code": exc.code, "message": exc.message}},
    )


def _load(algebra: schemas.AlgebraInput):
    return api.load_algebra(algebra.catalog, algebra.payload())


@app.post("/validate", response_model=schemas.ValidateResponse)
def validate(algebra: schemas.AlgebraInput):
    return api.validate_report(_load(algebra))


@app.post("/analyze", response_model=schemas.AnalyzeResponse)
def analyze(algebra: schemas.AlgebraInput):
    return api.analyze_report(_load(algebra))


@app.post("/decompose", response_model=schemas.DecomposeResponse)
def decompose(request: schemas.DecomposeRequest):
    return api.decompose_report(_load(request.algebra), request.a_basis, request.b_basis)


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify(algebra: schemas.AlgebraInput):
    return api.classify_report(_load(algebra))


@app.post("/schur", response_model=schemas.SchurResponse)
def schur_endpoint(algebra: schemas.AlgebraInput, audit: bool = False):
    return api.schur_report(_load(algebra), include_audit=audit)


@app.get("/catalog", response_model=schemas.CatalogResponse)
def catalog_endpoint():
    return api.catalog_report()


@app.post("/model", response_model=schemas.ModelResponse)
def model_endpoint(request: schemas.ModelRequest, verify: bool = True):
    spec = api.build_spec(
        request.model,
        alpha=request.alpha,
        beta=request.beta,
        beta_real=request.beta_real,
        theta=request.theta,
        allow_ccr=request.allow_ccr,
    )
    return api.model_report(
        spec, n_max=request.n_max, guard=request.guard,
        levels=request.levels, verify=verify,
    )


@app.post("/audit", response_model=schemas.AuditResponse)
def audit_endpoint(request: schemas.ModelRequest):
    spec = api.build_spec(
        request.model,
        alpha=request.alpha,
        beta=request.beta,
        beta_real=request.beta_real,
        theta=request.theta,
        allow_ccr=request.allow_ccr,
    )
    return api.audit_report(spec, n_max=request.n_max, guard=request.guard)
