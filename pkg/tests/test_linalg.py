import numpy as np
import pytest

from liefock import linalg
from liefock.errors import NonFinite, ShapeMismatch


def test_rref_canonical_and_idempotent():
    rng = np.random.default_rng(7)
    for _ in range(25):
        m = rng.standard_normal((4, 6)) + 1j * rng.standard_normal((4, 6))
        reduced, pivots = linalg.rref(m, 1e-9)
        again, pivots2 = linalg.rref(reduced, 1e-9)
        assert pivots == pivots2
        assert np.array_equal(reduced, again)
        # pivot columns carry exact unit columns
        for row, col in enumerate(pivots):
            assert reduced[row, col] == 1.0
            assert np.count_nonzero(reduced[:, col]) == 1


def test_rref_drops_noise_rows():
    m = np.array([[1.0, 2.0], [1e-12, 2e-12]], dtype=complex)
    reduced, pivots = linalg.rref(m, 1e-9)
    assert reduced.shape[0] == 1
    assert pivots == [0]


def test_orthonormal_rows_spans_complex_row_space():
    rng = np.random.default_rng(12)
    b = rng.standard_normal((3, 5)) + 1j * rng.standard_normal((3, 5))
    u = linalg.orthonormal_rows(b, 1e-9)
    proj = u.T @ u.conj()
    # every original row must be fixed by the projector onto the row space
    assert np.max(np.abs(b.T - proj @ b.T)) < 1e-12


def test_nullspace_annihilates():
    rng = np.random.default_rng(3)
    m = rng.standard_normal((3, 6)) + 1j * rng.standard_normal((3, 6))
    rows = linalg.nullspace_rows(m, 1e-9)
    assert rows.shape[0] == 3
    assert np.max(np.abs(m @ rows.T)) < 1e-12


def test_rank_scale_anchor_kills_noise_matrix():
    noise = 1e-15 * np.ones((4, 4), dtype=complex)
    assert linalg.svd_rank(noise, 1e-9) == 1  # relative cut alone keeps noise
    assert linalg.svd_rank(noise, 1e-9, scale=1.0) == 0
    assert linalg.nullspace_rows(noise, 1e-9, scale=1.0).shape[0] == 4


def test_shape_and_finite_checks():
    with pytest.raises(ShapeMismatch):
        linalg.as_complex_matrix([[1, 2], [3, 4]], width=3)
    with pytest.raises(NonFinite):
        linalg.as_complex_matrix([[np.nan, 0.0]])
