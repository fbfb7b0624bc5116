import numpy as np
import pytest

import oracles
from liefock import catalog, lie_core, schur
from liefock.errors import BadParameter

ALL_CATALOG = list(catalog._FIXED_RELATIONS) + [
    "a_sh", "bender_jones", "heisenberg:1", "heisenberg:2", "heisenberg:3",
    "abelian:1", "abelian:2", "abelian:6", "swanson:0.392699081698724",
]


def test_h2_heisenberg_values():
    assert schur.h2_dim(catalog.heisenberg(1)).h2_dim == 2
    assert schur.h2_dim(catalog.heisenberg(3)).h2_dim == 14
    for m in range(1, 6):
        assert schur.h2_dim(catalog.heisenberg(m)).h2_dim == schur.heisenberg_h2_formula(m)


def test_h2_abelian_values():
    assert schur.h2_dim(catalog.abelian(4)).h2_dim == 6
    for n in range(1, 7):
        assert schur.h2_dim(catalog.abelian(n)).h2_dim == n * (n - 1) // 2


def test_abelian_characterized_by_h2_both_directions():
    for name in ALL_CATALOG:
        l = catalog.make(name)
        if l.dim < 1:
            continue
        is_abelian = lie_core.derived_subalgebra(l).dim == 0
        hits_formula = schur.h2_dim(l).h2_dim == l.dim * (l.dim - 1) // 2
        assert is_abelian == hits_formula, name


def test_report_identity_and_rank_d1():
    for name in ("l5_6", "a_sh", "heisenberg:2", "l4_3"):
        l = catalog.make(name)
        rep = schur.h2_dim(l)
        assert rep.h2_dim == rep.dim_c2 - rep.rank_d2 - rep.rank_d1
        assert rep.rank_d1 == lie_core.derived_subalgebra(l).dim


def test_composition_d2_after_d1_vanishes():
    for name in ALL_CATALOG:
        rep = schur.h2_dim(catalog.make(name))
        assert rep.composition_residual <= 1e-12, name


def test_h2_matches_exact_rank_oracle():
    for name in ("l3_2", "l4_3", "l5_2", "l5_5", "l5_6", "l5_9", "a_sh"):
        l = catalog.make(name)
        assert schur.h2_dim(l).h2_dim == oracles.exact_h2_dim(l.constants), name


def test_formulas_and_bad_parameters():
    assert schur.heisenberg_h2_formula(1) == 2
    assert schur.heisenberg_h2_formula(2) == 5
    assert schur.abelian_h2_formula(1) == 0
    with pytest.raises(BadParameter):
        schur.heisenberg_h2_formula(0)
    with pytest.raises(BadParameter):
        schur.abelian_h2_formula(0)


def test_multiplier_bound_values():
    assert schur.multiplier_bound(5, 4) == 7
    assert schur.multiplier_bound(3, 2) == 2
    assert schur.multiplier_bound(4, 4) == 4  # degenerate n = d, arithmetic only
    with pytest.raises(BadParameter):
        schur.multiplier_bound(3, 0)
    with pytest.raises(BadParameter):
        schur.multiplier_bound(3, 4)


def test_bound_holds_for_nonabelian_nilpotent_catalog():
    for name in ALL_CATALOG:
        l = catalog.make(name)
        derived = lie_core.derived_subalgebra(l).dim
        if derived == 0:
            continue
        d = l.dim - derived
        assert schur.h2_dim(l).h2_dim <= schur.multiplier_bound(l.dim, d), name


def test_direct_sum_h2_examples():
    assert schur.direct_sum_h2(catalog.heisenberg(1), catalog.abelian(2)) == 2 + 1 + 4
    assert schur.direct_sum_h2(catalog.abelian(1), catalog.abelian(1)) == 1
    assert schur.direct_sum_h2(catalog.abelian(1), catalog.abelian(1)) == schur.abelian_h2_formula(2)


def test_direct_sum_h2_agrees_with_cochain_oracle_on_random_pairs():
    rng = np.random.default_rng(5)
    names = list(catalog._FIXED_RELATIONS) + ["a_sh", "heisenberg:1", "abelian:2"]
    for _ in range(20):
        a = catalog.make(names[rng.integers(len(names))])
        b = catalog.make(names[rng.integers(len(names))])
        rule = schur.direct_sum_h2(a, b)
        ce = schur.h2_dim(catalog.direct_sum(a, b)).h2_dim
        assert rule == ce


def test_h2_invariant_under_basis_change():
    rng = np.random.default_rng(17)
    for name in ("l5_2", "l5_6", "l5_9", "a_sh", "heisenberg:2"):
        l = catalog.make(name)
        reference = schur.h2_dim(l).h2_dim
        for _ in range(10):
            while True:
                p = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
                if np.linalg.cond(p) < 50:
                    break
            assert schur.h2_dim(lie_core.change_basis(l, p)).h2_dim == reference, name


def test_multiplier_audit_consistent_and_flags_claim():
    audit = schur.audit_multiplier_claims()
    assert audit["paths_agree"] is True
    assert audit["ce_h2"] == audit["direct_sum_rule_h2"] == audit["ce_h2_of_direct_sum"]
    assert audit["claimed_h2"] == 5
    assert isinstance(audit["agrees_with_claimed"], bool)
    # equality case of the bound at the smallest Heisenberg algebra
    assert audit["heisenberg_1_equality_case"]["equality"] is True
    assert audit["heisenberg_4_formula_case"]["agrees"] is True
    assert audit["heisenberg_4_formula_case"]["formula"] == 27
