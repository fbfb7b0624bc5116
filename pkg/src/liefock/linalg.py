"""Tolerance-aware dense linear algebra over complex doubles.

Rank and nullspace decisions use a relative singular-value threshold
(``rel_tol`` times the largest singular value); row-echelon canonical forms
use an absolute pivot threshold.  Both thresholds default to the owning
algebra's ``tol``.
"""

import numpy as np

from .errors import NonFinite, ShapeMismatch

DEFAULT_TOL = 1e-9


def as_complex_matrix(rows, width: int | None = None) -> np.ndarray:
    """Coerce a sequence of vectors to a 2-D complex array, checking shape."""
    m = np.asarray(rows, dtype=complex)
    if m.size == 0:
        return m.reshape(0, width if width is not None else 0)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a matrix, got array of ndim {m.ndim}")
    if width is not None and m.shape[1] != width:
        raise ShapeMismatch(f"expected row length {width}, got {m.shape[1]}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise NonFinite("matrix contains NaN or infinite entries")
    return m


def svd_rank(m: np.ndarray, rel_tol: float = DEFAULT_TOL, scale: float = 0.0) -> int:
    """Singular values below ``rel_tol * max(sigma_max, scale)`` count as zero.

    ``scale`` anchors the threshold when the matrix is mathematically zero but
    numerically pure noise (then sigma_max itself is noise and a relative cut
    would keep it).
    """
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0:
        return 0
    cutoff = rel_tol * max(float(s[0]), scale)
    if cutoff == 0.0:
        return int(np.count_nonzero(s > 0.0))
    return int(np.count_nonzero(s > cutoff))


def nullspace_rows(m: np.ndarray, rel_tol: float = DEFAULT_TOL, scale: float = 0.0) -> np.ndarray:
    """Rows spanning {x : m @ x = 0}, orthonormal, via SVD."""
    n_cols = m.shape[1]
    if m.shape[0] == 0 or n_cols == 0:
        return np.eye(n_cols, dtype=complex)
    _, s, vh = np.linalg.svd(m)
    cutoff = rel_tol * max(float(s[0]) if s.size else 0.0, scale)
    if cutoff == 0.0:
        rank = int(np.count_nonzero(s > 0.0))
    else:
        rank = int(np.count_nonzero(s > cutoff))
    # right singular vectors are the conjugates of vh's rows
    return vh[rank:].conj()


def orthonormal_rows(basis: np.ndarray, rel_tol: float = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis for the row space of ``basis``.

    Rows of ``basis`` are combinations of vh's rows (a = u s vh), so the row
    space basis is vh[:rank] unconjugated; conjugating would instead span the
    conjugate subspace.
    """
    if basis.shape[0] == 0:
        return basis
    _, s, vh = np.linalg.svd(basis)
    if s.size == 0 or s[0] == 0.0:
        return basis[:0]
    rank = int(np.count_nonzero(s > rel_tol * s[0]))
    return vh[:rank]


def rref(matrix: np.ndarray, tol: float = DEFAULT_TOL):
    """Reduced row echelon form with partial pivoting.

    Returns ``(reduced, pivot_columns)`` where ``reduced`` has its zero rows
    dropped and entries of magnitude <= tol cleaned to exact zero, so
    re-reducing the result is a no-op.
    """
    a = np.array(matrix, dtype=complex)
    if a.ndim != 2:
        raise ShapeMismatch("rref expects a matrix")
    n_rows, n_cols = a.shape
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        p = r + int(np.argmax(np.abs(a[r:, col])))
        if abs(a[p, col]) <= tol:
            continue
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] / a[r, col]
        a[r, col] = 1.0  # kill rounding residue on the pivot itself
        for i in range(n_rows):
            if i != r and a[i, col] != 0.0:
                a[i] = a[i] - a[i, col] * a[r]
                a[i, col] = 0.0
        pivots.append(col)
        r += 1
    reduced = a[:r]
    reduced[np.abs(reduced) <= tol] = 0.0
    return reduced, pivots


def reduce_against(basis: np.ndarray, pivots: list[int], x: np.ndarray) -> np.ndarray:
    """Remainder of ``x`` after elimination by an rref basis."""
    y = np.array(x, dtype=complex)
    for row, col in enumerate(pivots):
        if y[col] != 0.0:
            y = y - y[col] * basis[row]
            y[col] = 0.0
    return y
