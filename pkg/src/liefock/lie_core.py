"""Complex Lie algebras presented by structure constants.

An algebra of dimension n is stored as the full array ``c[i][j][k]`` with
``[b_i, b_j] = sum_k c[i][j][k] b_k``.  All values are immutable after
construction and every operation is a pure function, so concurrent read-only
use is safe.  Quotients are never materialized: series steps use the
commutator form ``Z_{i+1} = {x : [x, b_j] in Z_i for all j}``.
"""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    AntisymmetryViolation,
    JacobiViolation,
    NonFinite,
    NotSubalgebra,
    ShapeMismatch,
)
from .linalg import DEFAULT_TOL


@dataclass(frozen=True)
class ValidationReport:
    antisymmetry_defect: float
    jacobi_residual: float
    tol: float

    @property
    def accepted(self) -> bool:
        return self.antisymmetry_defect <= self.tol and self.jacobi_residual <= self.tol


class LieAlgebra:
    """dim, structure constants, optional generator labels, zero threshold."""

    __slots__ = ("dim", "constants", "labels", "tol", "_validation")

    def __init__(self, constants, labels=None, tol: float = DEFAULT_TOL):
        c = np.asarray(constants, dtype=complex)
        if c.ndim != 3 or len(set(c.shape)) > 1:
            raise ShapeMismatch(f"structure constants must be n x n x n, got shape {c.shape}")
        if c.size and not (np.all(np.isfinite(c.real)) and np.all(np.isfinite(c.imag))):
            raise NonFinite("structure constants contain NaN or infinite entries")
        if tol < 0:
            raise ShapeMismatch("tol must be nonnegative")
        n = c.shape[0]
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ShapeMismatch(f"expected {n} labels, got {len(labels)}")
        c = c.copy()
        c.flags.writeable = False
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "constants", c)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "tol", float(tol))
        object.__setattr__(self, "_validation", None)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra instances are immutable")

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, tol={self.tol})"


class Subspace:
    """Subspace of C^n held as a reduced-row-echelon canonical basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "tol")

    def __init__(self, ambient_dim: int, basis: np.ndarray, pivots, tol: float):
        object.__setattr__(self, "ambient_dim", int(ambient_dim))
        b = np.asarray(basis, dtype=complex)
        if b.size == 0:
            b = np.zeros((0, ambient_dim), dtype=complex)
        else:
            b = b.reshape(-1, ambient_dim)
        b = b.copy()
        b.flags.writeable = False
        object.__setattr__(self, "basis", b)
        object.__setattr__(self, "pivots", tuple(pivots))
        object.__setattr__(self, "tol", float(tol))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace instances are immutable")

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=complex)
        if x.shape != (self.ambient_dim,):
            raise ShapeMismatch(f"vector length {x.shape} does not match ambient {self.ambient_dim}")
        rem = linalg.reduce_against(self.basis, list(self.pivots), x)
        scale = max(1.0, float(np.linalg.norm(x)))
        return float(np.linalg.norm(rem)) <= self.tol * scale

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def equals(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim or self.dim != other.dim:
            return False
        if self.pivots != other.pivots:
            return self.contains_subspace(other) and other.contains_subspace(self)
        return bool(np.all(np.abs(self.basis - other.basis) <= max(self.tol, other.tol)))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


@dataclass(frozen=True)
class SeriesReport:
    kind: str  # "upper_central" or "lower_central"
    terms: tuple
    dims: tuple
    stabilized: bool


@dataclass(frozen=True)
class DecompositionVerdict:
    spans_whole: bool
    a_is_ideal: bool
    b_is_ideal: bool
    intersection_dim: int
    is_semidirect: bool
    is_central: bool
    is_direct: bool


# ---------------------------------------------------------------------------
# validation and bracket
# ---------------------------------------------------------------------------

def validate(l: LieAlgebra) -> ValidationReport:
    """Max antisymmetry defect and max Jacobi residual over basis triples."""
    c = l.constants
    if l.dim == 0:
        report = ValidationReport(0.0, 0.0, l.tol)
    else:
        anti = float(np.max(np.abs(c + c.transpose(1, 0, 2))))
        # [b_i, [b_j, b_k]] summed over the three cyclic rotations of (i, j, k)
        t = (
            np.einsum("jkl,ilm->ijkm", c, c)
            + np.einsum("kil,jlm->ijkm", c, c)
            + np.einsum("ijl,klm->ijkm", c, c)
        )
        jac = float(np.max(np.linalg.norm(t, axis=3)))
        report = ValidationReport(anti, jac, l.tol)
    if l._validation is None:
        object.__setattr__(l, "_validation", report)
    return report


def require_valid(l: LieAlgebra) -> None:
    report = l._validation or validate(l)
    if report.antisymmetry_defect > l.tol:
        raise AntisymmetryViolation(
            f"antisymmetry defect {report.antisymmetry_defect:.3e} exceeds tol {l.tol:.1e}"
        )
    if report.jacobi_residual > l.tol:
        raise JacobiViolation(
            f"Jacobi residual {report.jacobi_residual:.3e} exceeds tol {l.tol:.1e}"
        )


def constant_scale(l: LieAlgebra) -> float:
    """Magnitude anchor for rank decisions on matrices built from the constants."""
    if l.dim == 0:
        return 1.0
    return max(1.0, float(np.max(np.abs(l.constants))))


def bracket(l: LieAlgebra, x, y) -> np.ndarray:
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if x.shape != (l.dim,) or y.shape != (l.dim,):
        raise ShapeMismatch(f"bracket arguments must have length {l.dim}")
    return np.einsum("i,j,ijk->k", x, y, l.constants)


def adjoint_action(l: LieAlgebra, j: int) -> np.ndarray:
    """Matrix of x -> [x, b_j]; entry [k, i] = c[i][j][k]."""
    return l.constants[:, j, :].T


# ---------------------------------------------------------------------------
# subspace machinery
# ---------------------------------------------------------------------------

def span(l: LieAlgebra, vectors) -> Subspace:
    m = linalg.as_complex_matrix(vectors, l.dim)
    reduced, pivots = linalg.rref(m, l.tol)
    return Subspace(l.dim, reduced, pivots, l.tol)


def zero_subspace(l: LieAlgebra) -> Subspace:
    return Subspace(l.dim, np.zeros((0, l.dim), dtype=complex), (), l.tol)


def whole_space(l: LieAlgebra) -> Subspace:
    return span(l, np.eye(l.dim, dtype=complex))


def subspace_sum(l: LieAlgebra, s: Subspace, t: Subspace) -> Subspace:
    _check_ambient(l, s, t)
    return span(l, np.vstack([s.basis, t.basis]))


def intersect(l: LieAlgebra, s: Subspace, t: Subspace) -> Subspace:
    """Intersection via the nullspace of the stacked bases."""
    _check_ambient(l, s, t)
    if s.dim == 0 or t.dim == 0:
        return zero_subspace(l)
    stacked = np.hstack([s.basis.T, -t.basis.T])  # n x (dim s + dim t)
    coeffs = linalg.nullspace_rows(stacked, l.tol)
    if coeffs.shape[0] == 0:
        return zero_subspace(l)
    vectors = coeffs[:, : s.dim] @ s.basis
    return span(l, vectors)


def _check_ambient(l: LieAlgebra, *subs: Subspace) -> None:
    for s in subs:
        if s.ambient_dim != l.dim:
            raise ShapeMismatch(
                f"subspace ambient dim {s.ambient_dim} does not match algebra dim {l.dim}"
            )


# ---------------------------------------------------------------------------
# centers, derived subalgebra, series
# ---------------------------------------------------------------------------

def center(l: LieAlgebra) -> Subspace:
    """Nullspace of the stacked adjoint maps x -> [x, b_j]."""
    require_valid(l)
    if l.dim == 0:
        return zero_subspace(l)
    stacked = l.constants.transpose(1, 2, 0).reshape(l.dim * l.dim, l.dim)
    return span(l, linalg.nullspace_rows(stacked, l.tol, scale=constant_scale(l)))


def centralizer(l: LieAlgebra, s: Subspace) -> Subspace:
    """{x : [x, w] = 0 for every w in s}."""
    _check_ambient(l, s)
    if s.dim == 0:
        return whole_space(l)
    blocks = [np.einsum("ijk,j->ki", l.constants, w) for w in s.basis]
    stacked = np.vstack(blocks)
    return span(l, linalg.nullspace_rows(stacked, l.tol, scale=constant_scale(l)))


def derived_subalgebra(l: LieAlgebra) -> Subspace:
    """Span of all pairwise basis brackets, closed under re-bracketing.

    The one-pass span is already an ideal, hence a subalgebra; the closure
    loop keeps the contract explicit for arbitrary inputs.
    """
    require_valid(l)
    n = l.dim
    gens = [l.constants[i, j] for i in range(n) for j in range(i + 1, n)]
    current = span(l, gens) if gens else zero_subspace(l)
    while True:
        extra = [
            bracket(l, u, v)
            for a, u in enumerate(current.basis)
            for v in current.basis[a + 1 :]
        ]
        if not extra:
            return current
        closed = span(l, np.vstack([current.basis, np.asarray(extra)]))
        if closed.dim == current.dim:
            return current
        current = closed


def _next_upper_term(l: LieAlgebra, z: Subspace) -> Subspace:
    ortho = linalg.orthonormal_rows(z.basis, l.tol)
    proj_perp = np.eye(l.dim, dtype=complex)
    if ortho.shape[0]:
        proj_perp -= ortho.T @ ortho.conj()
    stacked = np.vstack([proj_perp @ adjoint_action(l, j) for j in range(l.dim)])
    return span(l, linalg.nullspace_rows(stacked, l.tol, scale=constant_scale(l)))


def upper_central_series(l: LieAlgebra) -> SeriesReport:
    """Z_1 <= Z_2 <= ... computed until the chain stops growing."""
    require_valid(l)
    if l.dim == 0:
        return SeriesReport("upper_central", (), (), True)
    terms: list[Subspace] = []
    current = zero_subspace(l)
    while True:
        nxt = _next_upper_term(l, current)
        if nxt.dim == current.dim:
            break
        terms.append(nxt)
        current = nxt
        if current.dim == l.dim:
            break
    return SeriesReport(
        "upper_central", tuple(terms), tuple(t.dim for t in terms), True
    )


def lower_central_series(l: LieAlgebra) -> SeriesReport:
    """l^1 = l, l^{i+1} = span{[x, w] : x in l, w in l^i}."""
    require_valid(l)
    terms = [whole_space(l)]
    while True:
        cur = terms[-1]
        gens = [
            bracket(l, np.eye(l.dim, dtype=complex)[j], w)
            for j in range(l.dim)
            for w in cur.basis
        ]
        nxt = span(l, gens) if gens else zero_subspace(l)
        if nxt.dim == cur.dim:
            break
        terms.append(nxt)
    return SeriesReport(
        "lower_central", tuple(terms), tuple(t.dim for t in terms), True
    )


def nilpotency_class(l: LieAlgebra):
    """Smallest c with Z_c = l; raises NotNilpotent when the chain stalls."""
    from .errors import NotNilpotent

    require_valid(l)
    if l.dim == 0:
        return 0
    series = upper_central_series(l)
    if not series.dims or series.dims[-1] != l.dim:
        raise NotNilpotent(
            f"upper central series stabilizes at dimension "
            f"{series.dims[-1] if series.dims else 0} < {l.dim}"
        )
    return len(series.dims)


# ---------------------------------------------------------------------------
# ideals and decompositions
# ---------------------------------------------------------------------------

def is_ideal(l: LieAlgebra, s: Subspace) -> bool:
    _check_ambient(l, s)
    eye = np.eye(l.dim, dtype=complex)
    return all(
        s.contains(bracket(l, eye[j], w)) for j in range(l.dim) for w in s.basis
    )


def is_abelian_subspace(l: LieAlgebra, s: Subspace) -> bool:
    _check_ambient(l, s)
    for a, u in enumerate(s.basis):
        for v in s.basis[a + 1 :]:
            if np.linalg.norm(bracket(l, u, v)) > l.tol:
                return False
    return True


def is_subalgebra(l: LieAlgebra, s: Subspace) -> bool:
    _check_ambient(l, s)
    return all(
        s.contains(bracket(l, u, v))
        for a, u in enumerate(s.basis)
        for v in s.basis[a + 1 :]
    )


def subalgebra_center(l: LieAlgebra, s: Subspace) -> Subspace:
    """Center of s viewed as an algebra: {x in s : [x, s] = 0}."""
    return intersect(l, s, centralizer(l, s))


def check_decomposition(l: LieAlgebra, a: Subspace, b: Subspace) -> DecompositionVerdict:
    """Tests l = a + b as semidirect sum, direct sum, and central sum."""
    require_valid(l)
    for name, s in (("A", a), ("B", b)):
        if not is_subalgebra(l, s):
            raise NotSubalgebra(f"subspace {name} is not closed under the bracket")
    spans_whole = subspace_sum(l, a, b).dim == l.dim
    inter = intersect(l, a, b)
    a_ideal = is_ideal(l, a)
    b_ideal = is_ideal(l, b)
    za = subalgebra_center(l, a)
    zb = subalgebra_center(l, b)
    central_intersection = all(
        za.contains(w) and zb.contains(w) for w in inter.basis
    )
    is_semidirect = spans_whole and a_ideal and inter.dim == 0
    return DecompositionVerdict(
        spans_whole=spans_whole,
        a_is_ideal=a_ideal,
        b_is_ideal=b_ideal,
        intersection_dim=inter.dim,
        is_semidirect=is_semidirect,
        is_central=spans_whole and a_ideal and central_intersection,
        is_direct=is_semidirect and b_ideal,
    )


# ---------------------------------------------------------------------------
# basis changes and JSON form
# ---------------------------------------------------------------------------

def change_basis(l: LieAlgebra, p: np.ndarray) -> LieAlgebra:
    """Structure constants in the basis whose vectors are the columns of p."""
    p = np.asarray(p, dtype=complex)
    if p.shape != (l.dim, l.dim):
        raise ShapeMismatch(f"basis change matrix must be {l.dim} x {l.dim}")
    pinv = np.linalg.inv(p)
    mixed = np.einsum("ip,jq,ijk->pqk", p, p, l.constants)
    new_c = np.einsum("pqk,rk->pqr", mixed, pinv)
    new_c = 0.5 * (new_c - new_c.transpose(1, 0, 2))  # exact antisymmetry
    return LieAlgebra(new_c, labels=None, tol=l.tol)


def _complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def to_json_dict(l: LieAlgebra) -> dict:
    """Bracket-list form: only i < j entries, antisymmetric completion implied."""
    brackets = []
    for i in range(l.dim):
        for j in range(i + 1, l.dim):
            coeffs = l.constants[i, j]
            if np.any(coeffs != 0.0):
                brackets.append(
                    {"i": i, "j": j, "coeffs": [_complex_pair(z) for z in coeffs]}
                )
    out = {"dim": l.dim, "tol": l.tol}
    if l.labels is not None:
        out["labels"] = list(l.labels)
    out["brackets"] = brackets
    return out


def from_json_dict(data: dict) -> LieAlgebra:
    if not isinstance(data, dict) or "dim" not in data:
        raise ShapeMismatch("algebra JSON must be an object with a 'dim' field")
    n = int(data["dim"])
    if n < 0:
        raise ShapeMismatch("dim must be nonnegative")
    tol = float(data.get("tol", DEFAULT_TOL))
    labels = data.get("labels")
    c = np.zeros((n, n, n), dtype=complex)
    for entry in data.get("brackets", []):
        i, j = int(entry["i"]), int(entry["j"])
        if not (0 <= i < j < n):
            raise ShapeMismatch(f"bracket entry requires 0 <= i < j < dim, got ({i}, {j})")
        coeffs = entry["coeffs"]
        if len(coeffs) != n:
            raise ShapeMismatch(f"bracket ({i}, {j}) lists {len(coeffs)} coefficients, need {n}")
        vec = np.array([complex(re, im) for re, im in coeffs])
        c[i, j] = vec
        c[j, i] = -vec
    return LieAlgebra(c, labels=labels, tol=tol)
