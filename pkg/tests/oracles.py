"""Independent oracle implementations used only by the tests.

These deliberately avoid the production code paths: exact rational/sympy
arithmetic where the constants are integers, and naive explicit loops
elsewhere, so that agreement is a genuine cross-check.
"""

from itertools import combinations

import numpy as np
import sympy as sp


def brute_jacobi_residual(constants: np.ndarray) -> float:
    """Triple loop over basis indices, no einsum."""
    n = constants.shape[0]

    def brk(x, y):
        out = np.zeros(n, dtype=complex)
        for i in range(n):
            for j in range(n):
                out += x[i] * y[j] * constants[i, j]
        return out

    eye = np.eye(n, dtype=complex)
    worst = 0.0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = (
                    brk(eye[i], brk(eye[j], eye[k]))
                    + brk(eye[j], brk(eye[k], eye[i]))
                    + brk(eye[k], brk(eye[i], eye[j]))
                )
                worst = max(worst, float(np.linalg.norm(s)))
    return worst


def brute_center_dim(constants: np.ndarray) -> int:
    """Solve [x, b_j] = 0 for all j by dense least squares on the full system."""
    n = constants.shape[0]
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([constants[i, j, k] for i in range(n)])
    m = np.asarray(rows, dtype=complex)
    s = np.linalg.svd(m, compute_uv=False)
    cutoff = 1e-9 * max(1.0, float(s[0]) if s.size else 0.0)
    return n - int(np.count_nonzero(s > cutoff))


def brute_centralizer_dim(constants: np.ndarray, subspace_rows: np.ndarray) -> int:
    n = constants.shape[0]
    rows = []
    for w in subspace_rows:
        for k in range(n):
            rows.append([sum(constants[i, j, k] * w[j] for j in range(n)) for i in range(n)])
    if not rows:
        return n
    m = np.asarray(rows, dtype=complex)
    s = np.linalg.svd(m, compute_uv=False)
    cutoff = 1e-9 * max(1.0, float(s[0]) if s.size else 0.0)
    return n - int(np.count_nonzero(s > cutoff))


def exact_h2_dim(constants: np.ndarray) -> int:
    """Cochain ranks over the rationals; valid for integer structure constants."""
    n = constants.shape[0]
    c_int = np.asarray(constants.real).round().astype(int)
    assert np.max(np.abs(constants - c_int)) == 0, "oracle needs integer constants"
    pairs = list(combinations(range(n), 2))
    pair_index = {p: i for i, p in enumerate(pairs)}
    triples = list(combinations(range(n), 3))

    d1 = sp.zeros(len(pairs), n)
    for row, (i, j) in enumerate(pairs):
        for m in range(n):
            d1[row, m] = -int(c_int[i, j, m])

    d2 = sp.zeros(len(triples), len(pairs))

    def add(row, p, q, coeff):
        if p == q or coeff == 0:
            return
        if p < q:
            d2[row, pair_index[(p, q)]] += coeff
        else:
            d2[row, pair_index[(q, p)]] -= coeff

    for row, (i, j, k) in enumerate(triples):
        for m in range(n):
            add(row, m, k, -int(c_int[i, j, m]))
            add(row, m, j, int(c_int[i, k, m]))
            add(row, m, i, -int(c_int[j, k, m]))

    return len(pairs) - d2.rank() - d1.rank()


def exact_upper_series_dims(constants: np.ndarray) -> list:
    """Upper central series over the rationals (integer constants only).

    Membership [x, b_j] in span(z) is encoded by annihilating functionals:
    f([x, b_j]) = 0 for every f vanishing on span(z).
    """
    n = constants.shape[0]
    c_int = np.asarray(constants.real).round().astype(int)
    assert np.max(np.abs(constants - c_int)) == 0

    def step(z_basis):
        if z_basis:
            z = sp.Matrix([list(v) for v in z_basis])
            ann = z.nullspace()  # columns f with z * f = 0
            ann_rows = sp.Matrix([list(f) for f in ann]) if ann else sp.zeros(0, n)
        else:
            ann_rows = sp.eye(n)
        system = sp.zeros(0, n)
        for j in range(n):
            adj = sp.Matrix(n, n, lambda k, i: int(c_int[i, j, k]))
            system = system.col_join(ann_rows * adj)
        null = system.nullspace()
        return [list(v) for v in null] if null else []

    dims = []
    basis: list = []
    while True:
        nxt = step(basis)
        if len(nxt) == len(basis):
            break
        basis = nxt
        dims.append(len(basis))
        if len(basis) == n:
            break
    return dims
