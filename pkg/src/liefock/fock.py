"""Truncated-Fock-space ladder models and their biorthogonal families.

Operators act on the number basis e_0 .. e_{n_max-1}.  Identities built from
products of degree-1 operators are trusted only on a guard-banded prefix of
the basis: each ladder factor can leak one index, so a degree-k expression is
checked on the first ``n_max - guard * k`` vectors.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadParameter,
    NormalizationFailure,
    NoVacuum,
    ShapeMismatch,
)

VACUUM_RESIDUAL_LIMIT = 1e-6
PAIRING_FLOOR = 1e-10


@dataclass(frozen=True)
class FockSpace:
    n_max: int
    guard: int = 2

    def __post_init__(self):
        if self.n_max < 8:
            raise BadParameter(f"n_max must be at least 8, got {self.n_max}")
        if self.guard < 0:
            raise BadParameter(f"guard must be nonnegative, got {self.guard}")

    def block(self, total_degree: int) -> int:
        """Number of leading basis vectors trusted for a degree-total expression."""
        return max(self.n_max - self.guard * total_degree, 0)


@dataclass(frozen=True)
class FockOperator:
    matrix: np.ndarray
    degree: int

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ShapeMismatch(f"operator matrix must be square, got {m.shape}")
        if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
            raise ShapeMismatch("operator matrix has non-finite entries")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def n_max(self) -> int:
        return self.matrix.shape[0]

    def adjoint(self) -> "FockOperator":
        return FockOperator(self.matrix.conj().T, self.degree)


def ladder_c(space: FockSpace) -> FockOperator:
    """Annihilator: c e_n = sqrt(n) e_{n-1}."""
    diag = np.sqrt(np.arange(1, space.n_max, dtype=float))
    return FockOperator(np.diag(diag, k=1).astype(complex), 1)


def ladder_c_dag(space: FockSpace) -> FockOperator:
    return ladder_c(space).adjoint()


def identity_op(space: FockSpace) -> FockOperator:
    return FockOperator(np.eye(space.n_max, dtype=complex), 0)


# ---------------------------------------------------------------------------
# model specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Shifted:
    """a = c - alpha I, b = c^dag - conj(beta) I; alpha != beta unless the
    explicit CCR flag is set (then b = a^dag and the pair is canonical)."""

    alpha: complex
    beta: complex
    allow_ccr: bool = False

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        if self.alpha == self.beta and not self.allow_ccr:
            raise BadParameter(
                "shifted model needs alpha != beta (set allow_ccr to reduce to CCR)"
            )

    name = "shifted"


@dataclass(frozen=True)
class Swanson:
    """a = cos(theta) c + i sin(theta) c^dag, b = cos(theta) c^dag + i sin(theta) c."""

    theta: float

    def __post_init__(self):
        if self.theta == 0.0 or abs(self.theta) >= math.pi / 4:
            raise BadParameter(
                f"swanson angle must lie in (-pi/4, pi/4) excluding 0, got {self.theta}"
            )

    name = "swanson"


@dataclass(frozen=True)
class BenderJones:
    """a = (iP + beta Q)/sqrt(2 beta), b = (-iP + beta Q)/sqrt(2 beta) with
    P = p and Q = x + i alpha."""

    alpha: float
    beta: float

    def __post_init__(self):
        if self.beta <= 0:
            raise BadParameter(f"bender-jones beta must be positive, got {self.beta}")

    name = "bender_jones"


ModelSpec = Shifted | Swanson | BenderJones


@dataclass(frozen=True)
class ModelOperators:
    a: FockOperator
    b: FockOperator
    a_dag: FockOperator
    b_dag: FockOperator
    identity: FockOperator
    space: FockSpace


def build_model(space: FockSpace, spec: ModelSpec) -> ModelOperators:
    c = ladder_c(space).matrix
    cd = c.conj().T
    eye = np.eye(space.n_max, dtype=complex)
    if isinstance(spec, Shifted):
        a = c - spec.alpha * eye
        b = cd - np.conj(spec.beta) * eye
    elif isinstance(spec, Swanson):
        cos_t, sin_t = math.cos(spec.theta), math.sin(spec.theta)
        a = cos_t * c + 1j * sin_t * cd
        b = cos_t * cd + 1j * sin_t * c
    elif isinstance(spec, BenderJones):
        # p = (c - c^dag)/(sqrt(2) i), x = (c + c^dag)/sqrt(2)
        u = (1 + spec.beta) / (2 * math.sqrt(spec.beta))
        v = (spec.beta - 1) / (2 * math.sqrt(spec.beta))
        w = 1j * spec.alpha * math.sqrt(spec.beta / 2)
        a = u * c + v * cd + w * eye
        b = v * c + u * cd + w * eye
    else:
        raise BadParameter(f"unknown model spec {spec!r}")
    a_op = FockOperator(a, 1)
    b_op = FockOperator(b, 1)
    return ModelOperators(
        a=a_op,
        b=b_op,
        a_dag=a_op.adjoint(),
        b_dag=b_op.adjoint(),
        identity=identity_op(space),
        space=space,
    )


def default_space(spec: ModelSpec, n_max: int | None = None, guard: int = 2) -> FockSpace:
    if n_max is None:
        n_max = 80 if isinstance(spec, Swanson) else 60
    return FockSpace(n_max=n_max, guard=guard)


def default_levels(spec: ModelSpec) -> int:
    return 6 if isinstance(spec, Swanson) else 8


# ---------------------------------------------------------------------------
# operator identities
# ---------------------------------------------------------------------------

def commutator_defect(x: FockOperator, y: FockOperator, space: FockSpace) -> float:
    """Max norm of ([x, y] - I) e_j over the guard-banded block."""
    if x.matrix.shape != y.matrix.shape or x.n_max != space.n_max:
        raise ShapeMismatch("operators must share the space's dimension")
    comm = x.matrix @ y.matrix - y.matrix @ x.matrix
    defect = comm - np.eye(space.n_max)
    cols = space.block(x.degree + y.degree)
    if cols == 0:
        return 0.0
    return float(np.max(np.linalg.norm(defect[:, :cols], axis=0)))


@dataclass(frozen=True)
class VacuumResult:
    vector: np.ndarray
    residual: float


def vacuum(op: FockOperator, space: FockSpace) -> VacuumResult:
    """Unit kernel candidate: the smallest right singular vector of the
    operator restricted to columns in the degree-1 block, phase-fixed so its
    first significant coefficient is real positive."""
    if op.degree != 1:
        raise BadParameter(f"vacuum search expects a degree-1 operator, got {op.degree}")
    if op.n_max != space.n_max:
        raise ShapeMismatch("operator does not act on this space")
    cols = space.block(1)
    sub = op.matrix[:, :cols]
    _, s, vh = np.linalg.svd(sub)
    residual = float(s[-1])
    if residual > VACUUM_RESIDUAL_LIMIT:
        raise NoVacuum(
            f"smallest singular value {residual:.3e} exceeds {VACUUM_RESIDUAL_LIMIT:.0e}; "
            "raise n_max or the operator has no normalizable kernel"
        )
    vec = np.zeros(space.n_max, dtype=complex)
    vec[:cols] = vh[-1].conj()
    vec = _fix_phase(vec)
    return VacuumResult(vec, residual)


def _fix_phase(vec: np.ndarray) -> np.ndarray:
    peak = float(np.max(np.abs(vec)))
    idx = int(np.argmax(np.abs(vec) > 1e-8 * peak))
    lead = vec[idx]
    if lead != 0.0:
        vec = vec * (abs(lead) / lead)
        vec[idx] = vec[idx].real + 0j
    return vec


# ---------------------------------------------------------------------------
# biorthogonal families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BiorthogonalFamily:
    """phis[n] = b^n phi_0 / sqrt(n!), psis[n] = (a^dag)^n psi_0 / sqrt(n!),
    scaled so <phi_0, psi_0> = 1 (psi_0 alone absorbs the scale)."""

    phis: tuple
    psis: tuple
    vacuum_residual_a: float
    vacuum_residual_b_dag: float
    pairing: complex  # <phi_0, psi_0> before rescaling

    @property
    def levels(self) -> int:
        return len(self.phis) - 1


def build_family(space: FockSpace, spec: ModelSpec, levels: int) -> BiorthogonalFamily:
    if levels < 0:
        raise BadParameter("levels must be nonnegative")
    if levels > space.block(1):
        raise BadParameter(
            f"levels {levels} exceeds the trusted block {space.block(1)} at n_max {space.n_max}"
        )
    ops = build_model(space, spec)
    vac_a = vacuum(ops.a, space)
    vac_bd = vacuum(ops.b_dag, space)
    pairing = complex(np.vdot(vac_a.vector, vac_bd.vector))
    if abs(pairing) < PAIRING_FLOOR:
        raise NormalizationFailure(
            f"|<phi_0, psi_0>| = {abs(pairing):.3e} is below {PAIRING_FLOOR:.0e}; "
            "the two vacua are numerically orthogonal"
        )
    phis = [vac_a.vector]
    psis = [vac_bd.vector / pairing]
    for n in range(levels):
        phis.append(ops.b.matrix @ phis[-1] / math.sqrt(n + 1))
        psis.append(ops.a_dag.matrix @ psis[-1] / math.sqrt(n + 1))
    return BiorthogonalFamily(
        phis=tuple(phis),
        psis=tuple(psis),
        vacuum_residual_a=vac_a.residual,
        vacuum_residual_b_dag=vac_bd.residual,
        pairing=pairing,
    )


def gram_matrix(family: BiorthogonalFamily) -> np.ndarray:
    k = len(family.phis)
    g = np.empty((k, k), dtype=complex)
    for n, phi in enumerate(family.phis):
        for m, psi in enumerate(family.psis):
            g[n, m] = np.vdot(phi, psi)
    return g


def gram_deviation(family: BiorthogonalFamily) -> float:
    g = gram_matrix(family)
    return float(np.max(np.abs(g - np.eye(g.shape[0]))))


def ladder_residuals(family: BiorthogonalFamily, ops: ModelOperators) -> dict:
    """Residuals of the four raising/lowering relations over the family."""
    k = family.levels
    raise_phi = max(
        float(np.linalg.norm(ops.b.matrix @ family.phis[n] - math.sqrt(n + 1) * family.phis[n + 1]))
        for n in range(k)
    ) if k else 0.0
    raise_psi = max(
        float(np.linalg.norm(ops.a_dag.matrix @ family.psis[n] - math.sqrt(n + 1) * family.psis[n + 1]))
        for n in range(k)
    ) if k else 0.0
    lower_phi = float(np.linalg.norm(ops.a.matrix @ family.phis[0]))
    for n in range(1, k + 1):
        lower_phi = max(
            lower_phi,
            float(np.linalg.norm(ops.a.matrix @ family.phis[n] - math.sqrt(n) * family.phis[n - 1])),
        )
    lower_psi = float(np.linalg.norm(ops.b_dag.matrix @ family.psis[0]))
    for n in range(1, k + 1):
        lower_psi = max(
            lower_psi,
            float(np.linalg.norm(ops.b_dag.matrix @ family.psis[n] - math.sqrt(n) * family.psis[n - 1])),
        )
    out = {
        "b_raise_phi": raise_phi,
        "a_lower_phi": lower_phi,
        "a_dag_raise_psi": raise_psi,
        "b_dag_lower_psi": lower_psi,
    }
    out["max"] = max(out.values())
    return out


def ladder_check(family: BiorthogonalFamily, ops: ModelOperators) -> float:
    return ladder_residuals(family, ops)["max"]


def number_op_residuals(family: BiorthogonalFamily, ops: ModelOperators) -> dict:
    num = ops.b.matrix @ ops.a.matrix
    num_dag = num.conj().T
    phi_res = max(
        float(np.linalg.norm(num @ phi - n * phi)) for n, phi in enumerate(family.phis)
    )
    psi_res = max(
        float(np.linalg.norm(num_dag @ psi - n * psi)) for n, psi in enumerate(family.psis)
    )
    return {"phi": phi_res, "psi": psi_res, "max": max(phi_res, psi_res)}


def number_op_check(family: BiorthogonalFamily, ops: ModelOperators) -> float:
    return number_op_residuals(family, ops)["max"]


def quasi_basis_residual(family: BiorthogonalFamily, f, g) -> tuple:
    """Partial-sum defects |<f,g> - sum_{n<=K} <f,phi_n><psi_n,g>| per K,
    for both orderings of the two families."""
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    n_max = family.phis[0].shape[0]
    if f.shape != (n_max,) or g.shape != (n_max,):
        raise ShapeMismatch(f"test vectors must have length {n_max}")
    target = np.vdot(f, g)
    terms_fwd = np.array(
        [np.vdot(f, phi) * np.vdot(psi, g) for phi, psi in zip(family.phis, family.psis)]
    )
    terms_rev = np.array(
        [np.vdot(f, psi) * np.vdot(phi, g) for phi, psi in zip(family.phis, family.psis)]
    )
    res_fwd = np.abs(target - np.cumsum(terms_fwd))
    res_rev = np.abs(target - np.cumsum(terms_rev))
    return res_fwd, res_rev


# closed-form oracles ---------------------------------------------------------

def coherent_profile(alpha: complex, n_max: int) -> np.ndarray:
    """Normalized truncation of the c-eigenvector with coefficients alpha^n/sqrt(n!)."""
    coeffs = np.empty(n_max, dtype=complex)
    coeffs[0] = 1.0
    for n in range(1, n_max):
        coeffs[n] = coeffs[n - 1] * alpha / math.sqrt(n)
    return coeffs / np.linalg.norm(coeffs)


def swanson_vacuum_profile(theta: float, n_max: int) -> np.ndarray:
    """Even-only kernel profile k_{m+1} = -i tan(theta) sqrt(m/(m+1)) k_{m-1}."""
    coeffs = np.zeros(n_max, dtype=complex)
    coeffs[0] = 1.0
    t = math.tan(theta)
    for m in range(1, n_max - 1):
        coeffs[m + 1] = -1j * t * math.sqrt(m / (m + 1)) * coeffs[m - 1]
    return coeffs / np.linalg.norm(coeffs)
