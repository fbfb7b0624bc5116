"""Named algebra constructors and a fingerprint classifier for dim <= 5.

Catalog id strings: ``abelian:4``, ``heisenberg:2``, ``l5_6``, ``a_sh``,
``swanson:0.392699``, ``bender_jones``.  The nilpotent algebras of dimension
3, 4 and 5 are keyed by the ``l<d>_<k>`` names; classification returns the
unique table entry whose invariant fingerprint matches the input.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import lie_core, schur
from .errors import BadParameter, DimTooLarge
from .lie_core import LieAlgebra
from .linalg import DEFAULT_TOL

# Relation tables: {(i, j): {k: coefficient}} with i < j, implying [b_i, b_j].
_FIXED_RELATIONS = {
    "l3_1": (3, {}),
    "l3_2": (3, {(0, 1): {2: 1}}),
    "l4_1": (4, {}),
    "l4_2": (4, {(0, 1): {2: 1}}),
    "l4_3": (4, {(0, 1): {2: 1}, (0, 2): {3: 1}}),
    "l5_1": (5, {}),
    "l5_2": (5, {(0, 1): {2: 1}}),
    "l5_3": (5, {(0, 1): {2: 1}, (0, 2): {3: 1}}),
    "l5_4": (5, {(0, 1): {4: 1}, (2, 3): {4: 1}}),
    "l5_5": (5, {(0, 1): {2: 1}, (0, 2): {4: 1}, (1, 3): {4: 1}}),
    "l5_6": (5, {(0, 1): {2: 1}, (0, 2): {3: 1}, (0, 3): {4: 1}, (1, 2): {4: 1}}),
    "l5_7": (5, {(0, 1): {2: 1}, (0, 2): {3: 1}, (0, 3): {4: 1}}),
    "l5_8": (5, {(0, 1): {3: 1}, (0, 2): {4: 1}}),
    "l5_9": (5, {(0, 1): {2: 1}, (0, 2): {3: 1}, (1, 2): {4: 1}}),
}

DIM5_NAMES = tuple(f"l5_{k}" for k in range(1, 10))


def _from_relations(dim: int, relations: dict, labels, tol: float = DEFAULT_TOL) -> LieAlgebra:
    c = np.zeros((dim, dim, dim), dtype=complex)
    for (i, j), targets in relations.items():
        for k, coeff in targets.items():
            c[i, j, k] += coeff
            c[j, i, k] -= coeff
    return LieAlgebra(c, labels=labels, tol=tol)


def abelian(n: int, tol: float = DEFAULT_TOL) -> LieAlgebra:
    if n < 0:
        raise BadParameter(f"abelian dimension must be nonnegative, got {n}")
    labels = tuple(f"v{i + 1}" for i in range(n))
    return _from_relations(n, {}, labels, tol)


def heisenberg(m: int, tol: float = DEFAULT_TOL) -> LieAlgebra:
    """h(m): dimension 2m + 1, only [v_{2i-1}, v_{2i}] = v, with v last."""
    if m < 1:
        raise BadParameter(f"heisenberg parameter must be >= 1, got {m}")
    n = 2 * m + 1
    relations = {(2 * i, 2 * i + 1): {n - 1: 1} for i in range(m)}
    labels = tuple(f"v{i + 1}" for i in range(n - 1)) + ("v",)
    return _from_relations(n, relations, labels, tol)


_MODEL_LABELS = ("v1", "v2", "v3", "v4", "v")

# [v1,v2] = [v3,v4] = [v1,v4] = v and [v3,v2] = v, i.e. [v2,v3] = -v.
_ASH_RELATIONS = {(0, 1): {4: 1}, (2, 3): {4: 1}, (0, 3): {4: 1}, (1, 2): {4: -1}}


def shifted_oscillator_algebra(tol: float = DEFAULT_TOL) -> LieAlgebra:
    return _from_relations(5, _ASH_RELATIONS, _MODEL_LABELS, tol)


def bender_jones_algebra(tol: float = DEFAULT_TOL) -> LieAlgebra:
    # extraction from the deformed position/momentum ladder pair lands on the
    # same bracket table as the shifted oscillator
    return _from_relations(5, _ASH_RELATIONS, _MODEL_LABELS, tol)


def swanson_theta_valid(theta: float) -> bool:
    return theta != 0.0 and abs(theta) < math.pi / 4


def swanson(theta: float, tol: float = DEFAULT_TOL) -> LieAlgebra:
    """Bracket table of the Swanson-model ladder operators at angle theta."""
    if not swanson_theta_valid(theta):
        raise BadParameter(
            f"swanson angle must lie in (-pi/4, pi/4) excluding 0, got {theta}"
        )
    cos2, sin2 = math.cos(2 * theta), math.sin(2 * theta)
    relations = {
        (0, 1): {4: 1},
        (2, 3): {4: 1},
        (0, 3): {4: cos2},
        (1, 2): {4: -cos2},
        (0, 2): {4: -1j * sin2},
        (1, 3): {4: 1j * sin2},
    }
    return _from_relations(5, relations, _MODEL_LABELS, tol)


def make(catalog_id: str, tol: float = DEFAULT_TOL) -> LieAlgebra:
    """Build a catalog algebra from its id string."""
    name, _, arg = catalog_id.partition(":")
    name = name.strip().lower()
    if name in _FIXED_RELATIONS:
        dim, relations = _FIXED_RELATIONS[name]
        labels = tuple(f"v{i + 1}" for i in range(dim))
        return _from_relations(dim, relations, labels, tol)
    if name == "a_sh":
        return shifted_oscillator_algebra(tol)
    if name in ("bender_jones", "bender_jones_algebra"):
        return bender_jones_algebra(tol)
    try:
        if name == "abelian":
            return abelian(int(arg), tol)
        if name == "heisenberg":
            return heisenberg(int(arg), tol)
        if name == "swanson":
            return swanson(float(arg), tol)
    except ValueError as exc:
        raise BadParameter(f"bad parameter in catalog id {catalog_id!r}: {exc}") from exc
    raise BadParameter(f"unknown catalog id {catalog_id!r}")


def catalog_ids() -> list[str]:
    fixed = list(_FIXED_RELATIONS)
    return fixed + ["a_sh", "bender_jones", "abelian:<n>", "heisenberg:<m>", "swanson:<theta>"]


def direct_sum(l1: LieAlgebra, l2: LieAlgebra) -> LieAlgebra:
    """Block structure constants; cross brackets vanish."""
    lie_core.require_valid(l1)
    lie_core.require_valid(l2)
    n1, n2 = l1.dim, l2.dim
    n = n1 + n2
    c = np.zeros((n, n, n), dtype=complex)
    c[:n1, :n1, :n1] = l1.constants
    c[n1:, n1:, n1:] = l2.constants
    labels = None
    if l1.labels is not None and l2.labels is not None:
        seen = set(l1.labels)
        extra = []
        for lbl in l2.labels:
            while lbl in seen:
                lbl += "'"
            seen.add(lbl)
            extra.append(lbl)
        labels = l1.labels + tuple(extra)
    return LieAlgebra(c, labels=labels, tol=max(l1.tol, l2.tol))


# ---------------------------------------------------------------------------
# fingerprints and classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    dim: int
    lcs_dims: tuple
    ucs_dims: tuple
    nilpotency_class: int
    dim_derived: int
    dim_center: int
    dim_centralizer_of_derived: int
    h2_dim: int

    def key(self) -> tuple:
        return (
            self.dim,
            self.lcs_dims,
            self.ucs_dims,
            self.nilpotency_class,
            self.dim_derived,
            self.dim_center,
            self.dim_centralizer_of_derived,
            self.h2_dim,
        )

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "lcs_dims": list(self.lcs_dims),
            "ucs_dims": list(self.ucs_dims),
            "nilpotency_class": self.nilpotency_class,
            "dim_derived": self.dim_derived,
            "dim_center": self.dim_center,
            "dim_centralizer_of_derived": self.dim_centralizer_of_derived,
            "h2_dim": self.h2_dim,
        }


@dataclass(frozen=True)
class ClassificationResult:
    matched: str | None
    fingerprint: Fingerprint
    ambiguous_with: tuple


def fingerprint(l: LieAlgebra) -> Fingerprint:
    """Isomorphism-invariant tuple; raises NotNilpotent for non-nilpotent input."""
    klass = lie_core.nilpotency_class(l)
    ucs = lie_core.upper_central_series(l)
    lcs = lie_core.lower_central_series(l)
    derived = lie_core.derived_subalgebra(l)
    return Fingerprint(
        dim=l.dim,
        lcs_dims=lcs.dims,
        ucs_dims=ucs.dims,
        nilpotency_class=klass,
        dim_derived=derived.dim,
        dim_center=lie_core.center(l).dim,
        dim_centralizer_of_derived=lie_core.centralizer(l, derived).dim,
        h2_dim=schur.h2_dim(l).h2_dim,
    )


_TABLE_IDS = {
    0: ("abelian:0",),
    1: ("abelian:1",),
    2: ("abelian:2",),
    3: ("l3_1", "l3_2"),
    4: ("l4_1", "l4_2", "l4_3"),
    5: DIM5_NAMES,
}

_table_cache: dict[int, tuple] = {}


def fingerprint_table(dim: int) -> tuple:
    """Precomputed (catalog id, Fingerprint) pairs for one dimension."""
    if dim not in _table_cache:
        _table_cache[dim] = tuple(
            (cid, fingerprint(make(cid))) for cid in _TABLE_IDS.get(dim, ())
        )
    return _table_cache[dim]


def match_fingerprint(fp: Fingerprint, entries) -> ClassificationResult:
    hits = tuple(cid for cid, candidate in entries if candidate.key() == fp.key())
    if len(hits) == 1:
        return ClassificationResult(hits[0], fp, ())
    if len(hits) >= 2:
        return ClassificationResult(None, fp, hits)
    return ClassificationResult(None, fp, ())


def classify_dim_le5(l: LieAlgebra) -> ClassificationResult:
    if l.dim > 5:
        raise DimTooLarge(f"classification covers dimension <= 5, got {l.dim}")
    fp = fingerprint(l)
    return match_fingerprint(fp, fingerprint_table(l.dim))
