import math

import numpy as np
import pytest

from liefock import bridge, catalog, fock, lie_core
from liefock.errors import BlockTooSmall, DegenerateSpan, ShapeMismatch

THETA = math.pi / 8


def test_shifted_extraction_matches_reference_table():
    res = bridge.extract_model(fock.Shifted(0.3, 0.2))
    target = bridge.expected_shifted_constants()
    assert np.max(np.abs(res.algebra.constants - target)) <= 1e-10
    assert res.max_fit_residual <= 1e-8
    assert res.block_used == 56


def test_extraction_parameter_independent_for_shifted():
    a = bridge.extract_model(fock.Shifted(0.3, 0.2)).algebra.constants
    b = bridge.extract_model(fock.Shifted(1 + 1j, -0.5)).algebra.constants
    assert np.max(np.abs(a - b)) <= 1e-10


def test_swanson_extraction_coefficients():
    res = bridge.extract_model(fock.Swanson(math.pi / 6))
    target = bridge.expected_swanson_constants(math.pi / 6)
    assert np.max(np.abs(res.algebra.constants - target)) <= 1e-10
    got = res.algebra.constants[0, 2, 4]  # [v1, v3] coefficient of v
    assert abs(got - (-1j * math.sin(math.pi / 3))) <= 1e-10


def test_extraction_constants_antisymmetric_and_jacobi():
    for spec in (fock.Shifted(0.3, 0.2), fock.Swanson(THETA), fock.BenderJones(0.7, 1.3)):
        res = bridge.extract_model(spec)
        c = res.algebra.constants
        assert np.max(np.abs(c + c.transpose(1, 0, 2))) == 0.0
        assert lie_core.validate(res.algebra).jacobi_residual <= 1e-10


def test_extraction_stable_under_truncation_doubling():
    spec = fock.Swanson(THETA)
    small = bridge.extract_model(spec, fock.FockSpace(80)).algebra.constants
    large = bridge.extract_model(spec, fock.FockSpace(160)).algebra.constants
    assert np.max(np.abs(small - large)) <= 1e-10


def test_swanson_theta_negation_conjugates_constants():
    plus = bridge.extract_model(fock.Swanson(math.pi / 6)).algebra.constants
    minus = bridge.extract_model(fock.Swanson(-math.pi / 6)).algebra.constants
    assert np.max(np.abs(minus - np.conj(plus))) <= 1e-10


def test_duplicate_generator_rejected():
    sp = fock.FockSpace(60)
    m = fock.build_model(sp, fock.Shifted(0.3, 0.2))
    with pytest.raises(DegenerateSpan):
        bridge.extract([m.a, m.a, m.b_dag, m.a_dag, m.identity], sp)


def test_equal_shift_parameters_rejected():
    # alpha = beta makes b = a^dag and b^dag = a: coincident generators
    with pytest.raises(DegenerateSpan):
        bridge.extract_model(fock.Shifted(0.4, 0.4, allow_ccr=True))


def test_wrong_count_and_small_block():
    sp = fock.FockSpace(60)
    m = fock.build_model(sp, fock.Shifted(0.3, 0.2))
    with pytest.raises(ShapeMismatch):
        bridge.extract([m.a, m.b], sp)
    tight = fock.FockSpace(8, guard=3)
    mt = fock.build_model(tight, fock.Shifted(0.3, 0.2))
    with pytest.raises(BlockTooSmall):
        bridge.extract([mt.a, mt.b, mt.b_dag, mt.a_dag, mt.identity], tight)


def test_full_rank_family_uses_plain_least_squares():
    # five independent operators: the unique expansion must be recovered
    sp = fock.FockSpace(16)
    c = fock.ladder_c(sp).matrix
    cd = c.conj().T
    eye = np.eye(16, dtype=complex)
    ops = [
        fock.FockOperator(c, 1),
        fock.FockOperator(cd, 1),
        fock.FockOperator(cd @ c, 2),
        fock.FockOperator(eye, 0),
        fock.FockOperator(c @ c, 2),
    ]
    res = bridge.extract(ops, sp)
    cst = res.algebra.constants
    # [c, c^dag] = I and [c^dag c, c] = -c
    assert abs(cst[0, 1, 3] - 1.0) < 1e-10
    assert abs(cst[2, 0, 0] + 1.0) < 1e-10
    assert res.max_fit_residual < 1e-10


# ---------------------------------------------------------------------------
# audits
# ---------------------------------------------------------------------------

def test_audit_shifted_structure():
    rep = bridge.audit_model(fock.Shifted(0.3, 0.2))
    assert rep["decomposition"]["is_semidirect"] is True
    assert rep["decomposition"]["a_abelian"] and rep["decomposition"]["b_abelian"]
    assert rep["decomposition"]["intersection_dim"] == 0
    assert rep["analysis"]["nilpotency_class"] == 2
    assert rep["classification"]["matched"] == "l5_2"
    claims = {c["claim"]: c for c in rep["claims"]}
    assert claims["is_semidirect"]["agrees"] is True
    # computed center is reported and measured against the documented dim 1
    assert claims["center_dim"]["claimed"] == 1
    assert claims["center_dim"]["computed"] == rep["analysis"]["center_dim"]
    assert isinstance(claims["center_dim"]["agrees"], bool)


def test_audit_bender_jones_matches_shifted_algebra():
    rep = bridge.audit_model(fock.BenderJones(0.7, 1.3))
    claims = {c["claim"]: c for c in rep["claims"]}
    assert claims["same_constants_as_shifted"]["computed"] is True
    assert rep["classification"]["matched"] == "l5_2"


def test_audit_swanson_structure_and_verdicts():
    rep = bridge.audit_model(fock.Swanson(THETA))
    dec = rep["decomposition"]
    assert dec["is_semidirect"] is False
    assert dec["is_central"] is True
    assert dec["intersection_dim"] == 1
    assert dec["a_is_ideal"] and dec["b_is_ideal"]
    assert dec["a_abelian"] and not dec["b_abelian"]
    assert rep["analysis"]["derived_dim"] == 1
    assert rep["analysis"]["derived_inside_center"] is True
    assert rep["analysis"]["nilpotency_class"] == 2
    claims = {c["claim"]: c for c in rep["claims"]}
    # machine-readable verdicts carry the computed value either way
    assert claims["center_dim"]["computed"] == rep["analysis"]["center_dim"]
    assert claims["isomorphic_to_shifted_algebra"]["claimed"] is False
    assert isinstance(claims["isomorphic_to_shifted_algebra"]["computed"], bool)
    assert claims["isomorphic_to_heisenberg_2"]["agrees"] is True


def test_audit_report_round_trips_algebra_json():
    rep = bridge.audit_model(fock.Shifted(0.3, 0.2))
    clone = lie_core.from_json_dict(rep["extraction"]["algebra"])
    target = catalog.shifted_oscillator_algebra()
    assert np.max(np.abs(clone.constants - target.constants)) <= 1e-10
