"""Report builders shared by the HTTP service and the CLI.

Every function takes plain inputs, runs the library, and returns a JSON-ready
dict with a fixed key order.  The CLI and the FastAPI endpoints are thin
adapters over these.
"""

import math

import numpy as np

from . import bridge, catalog, fock, lie_core, schur
from .errors import BadParameter, NotNilpotent, UsageError
from .jsonio import complex_pair, matrix_pairs
from .lie_core import LieAlgebra


def load_algebra(catalog_id: str | None = None, payload: dict | None = None,
                 tol: float | None = None) -> LieAlgebra:
    """Exactly one of catalog id / inline bracket payload, validated."""
    if (catalog_id is None) == (payload is None):
        raise UsageError("provide exactly one algebra source: a catalog id or a bracket payload")
    if catalog_id is not None:
        l = catalog.make(catalog_id) if tol is None else catalog.make(catalog_id, tol)
    else:
        if tol is not None:
            payload = dict(payload, tol=tol)
        l = lie_core.from_json_dict(payload)
    lie_core.require_valid(l)
    return l


def _algebra_summary(l: LieAlgebra) -> dict:
    out = {"dim": l.dim, "tol": l.tol}
    if l.labels is not None:
        out["labels"] = list(l.labels)
    return out


def _validation_dict(l: LieAlgebra) -> dict:
    rep = lie_core.validate(l)
    return {
        "antisymmetry_defect": rep.antisymmetry_defect,
        "jacobi_residual": rep.jacobi_residual,
        "tol": rep.tol,
        "accepted": rep.accepted,
    }


def validate_report(l: LieAlgebra) -> dict:
    return {"algebra": _algebra_summary(l), "validation": _validation_dict(l)}


def analyze_report(l: LieAlgebra) -> dict:
    center = lie_core.center(l)
    derived = lie_core.derived_subalgebra(l)
    ucs = lie_core.upper_central_series(l)
    lcs = lie_core.lower_central_series(l)
    try:
        klass = lie_core.nilpotency_class(l)
        nilpotent = True
    except NotNilpotent:
        klass = None
        nilpotent = False
    return {
        "algebra": _algebra_summary(l),
        "validation": _validation_dict(l),
        "center": {"dim": center.dim, "basis": matrix_pairs(center.basis)},
        "derived_subalgebra": {"dim": derived.dim, "basis": matrix_pairs(derived.basis)},
        "upper_central_series": {"dims": list(ucs.dims), "stabilized": ucs.stabilized},
        "lower_central_series": {"dims": list(lcs.dims), "stabilized": lcs.stabilized},
        "nilpotent": nilpotent,
        "nilpotency_class": klass,
    }


def _parse_basis(rows, dim: int) -> np.ndarray:
    vectors = []
    for row in rows:
        vec = [complex(re, im) for re, im in row]
        if len(vec) != dim:
            raise BadParameter(f"basis vector length {len(vec)} does not match dim {dim}")
        vectors.append(vec)
    return np.asarray(vectors, dtype=complex).reshape(-1, dim)


def decompose_report(l: LieAlgebra, a_rows, b_rows) -> dict:
    sub_a = lie_core.span(l, _parse_basis(a_rows, l.dim))
    sub_b = lie_core.span(l, _parse_basis(b_rows, l.dim))
    verdict = lie_core.check_decomposition(l, sub_a, sub_b)
    return {
        "algebra": _algebra_summary(l),
        "a": {
            "dim": sub_a.dim,
            "abelian": lie_core.is_abelian_subspace(l, sub_a),
            "center_dim": lie_core.subalgebra_center(l, sub_a).dim,
        },
        "b": {
            "dim": sub_b.dim,
            "abelian": lie_core.is_abelian_subspace(l, sub_b),
            "center_dim": lie_core.subalgebra_center(l, sub_b).dim,
        },
        "verdict": {
            "spans_whole": verdict.spans_whole,
            "a_is_ideal": verdict.a_is_ideal,
            "b_is_ideal": verdict.b_is_ideal,
            "intersection_dim": verdict.intersection_dim,
            "is_semidirect": verdict.is_semidirect,
            "is_central": verdict.is_central,
            "is_direct": verdict.is_direct,
        },
    }


def classify_report(l: LieAlgebra) -> dict:
    result = catalog.classify_dim_le5(l)
    return {
        "algebra": _algebra_summary(l),
        "fingerprint": result.fingerprint.as_dict(),
        "matched": result.matched,
        "ambiguous_with": list(result.ambiguous_with),
    }


def schur_report(l: LieAlgebra, include_audit: bool = False) -> dict:
    out = {"algebra": _algebra_summary(l), "cohomology": schur.h2_dim(l).as_dict()}
    if include_audit:
        out["multiplier_audit"] = schur.audit_multiplier_claims()
    return out


def catalog_report() -> dict:
    return {"entries": catalog.catalog_ids()}


# ---------------------------------------------------------------------------
# operator models
# ---------------------------------------------------------------------------

def build_spec(model: str, alpha=None, beta=None, beta_real=None, theta=None,
               allow_ccr: bool = False) -> fock.ModelSpec:
    model = model.replace("-", "_").lower()
    if model == "shifted":
        alpha = complex(0.3, 0.0) if alpha is None else complex(alpha[0], alpha[1])
        beta = complex(0.2, 0.0) if beta is None else complex(beta[0], beta[1])
        return fock.Shifted(alpha, beta, allow_ccr=allow_ccr)
    if model == "swanson":
        return fock.Swanson(math.pi / 8 if theta is None else float(theta))
    if model in ("bender_jones", "bender_jones_algebra"):
        if alpha is None:
            alpha_real = 0.7
        else:
            if alpha[1] != 0.0:
                raise BadParameter("bender-jones alpha must be real")
            alpha_real = alpha[0]
        return fock.BenderJones(alpha_real, 1.3 if beta_real is None else float(beta_real))
    raise BadParameter(f"unknown model {model!r}")


def model_report(spec: fock.ModelSpec, n_max: int | None = None, guard: int = 2,
                 levels: int | None = None, verify: bool = True) -> dict:
    space = fock.default_space(spec, n_max, guard)
    if levels is None:
        levels = fock.default_levels(spec)
    ops = fock.build_model(space, spec)
    out = {
        "model": spec.name,
        "parameters": bridge.spec_params(spec),
        "space": {"n_max": space.n_max, "guard": space.guard},
        "levels": levels,
        "adjoint_gap": float(
            np.max(np.abs(ops.a_dag.matrix - ops.a.matrix.conj().T))
        ),
        "commutator_defect": fock.commutator_defect(ops.a, ops.b, space),
    }
    if not verify:
        return out
    family = fock.build_family(space, spec, levels)
    fwd, rev = fock.quasi_basis_residual(
        family, _basis_vector(space.n_max, 0), _basis_vector(space.n_max, 0)
    )
    out["vacuum"] = {
        "a_residual": family.vacuum_residual_a,
        "b_dagger_residual": family.vacuum_residual_b_dag,
        "pairing": complex_pair(family.pairing),
    }
    out["gram"] = {
        "max_deviation_from_identity": fock.gram_deviation(family),
        "matrix": matrix_pairs(fock.gram_matrix(family)),
    }
    out["ladder"] = fock.ladder_residuals(family, ops)
    out["number_operator"] = fock.number_op_residuals(family, ops)
    out["quasi_basis"] = {
        "f": "e0",
        "g": "e0",
        "residuals": [float(x) for x in fwd],
        "residuals_swapped": [float(x) for x in rev],
    }
    return out


def _basis_vector(n: int, k: int) -> np.ndarray:
    v = np.zeros(n, dtype=complex)
    v[k] = 1.0
    return v


def audit_report(spec: fock.ModelSpec, n_max: int | None = None, guard: int = 2) -> dict:
    return bridge.audit_model(spec, fock.default_space(spec, n_max, guard))
