"""Theorem audits: verdict paths, exact inequalities, the randomized suite."""

from __future__ import annotations

import pytest

from curvlab import (FinitePd, NotRegular, SetupViolation, UnsupportedDimension,
                     cyclic_module, free_module, residue_field, resolve)
from curvlab.audit import (audit_first, audit_second_ext, audit_second_tor,
                           audit_third, check_first_inequality,
                           check_length_identity, invariant_suite, modx_check,
                           require_noncomplete_intersection,
                           _second_inequalities)


def test_setup_violation_on_ci(r1, mod_a):
    with pytest.raises(SetupViolation):
        require_noncomplete_intersection(r1)
    with pytest.raises(SetupViolation):
        audit_first(r1, residue_field(r1), 6, 4)
    with pytest.raises(SetupViolation):
        audit_third(r1, residue_field(r1), 0, 6, 4)


def test_first_inequality_examples(r2, r3, res_k3_10, res_bc_10):
    rec = check_first_inequality(r2, residue_field(r2), 6)
    assert rec.verdict == "PASS"
    # over the m^2 = 0 ring the bound is attained at every index
    assert rec.details["equalities"] == rec.instances
    rec = check_first_inequality(
        r3, res_bc_10.module, 8, res_m=res_bc_10, res_k=res_k3_10)
    assert rec.verdict == "PASS" and rec.margin >= 0


def test_length_identity(r3, res_k3_10, mod_a):
    assert check_length_identity(r3, res_k3_10.module, 8,
                                 res_m=res_k3_10).verdict == "PASS"
    assert check_length_identity(r3, mod_a, 8).verdict == "PASS"


def test_audit_first_pass_and_vacuous(r3, mod_a, res_k3_10, res_bc_10):
    # A/(a) is 1-periodic: hi(M) = 1 < lo(k), the gap hypothesis holds
    rec = audit_first(r3, mod_a, 10, 4, res_k=res_k3_10)
    assert rec.verdict == "PASS"
    assert rec.margin is not None and rec.margin > 0
    # curv window for A/(b, c) matches k's up to tolerance: no gap, VACUOUS
    rec = audit_first(r3, res_bc_10.module, 10, 4,
                      res_m=res_bc_10, res_k=res_k3_10)
    assert rec.verdict == "VACUOUS"
    assert any("gap" in c for c in rec.caveats)


def test_audit_first_finite_pd_is_vacuous(r3, res_k3_10):
    rec = audit_first(r3, free_module(r3, 1), 10, 4, res_k=res_k3_10)
    assert rec.verdict == "VACUOUS"
    assert any("finite projective dimension" in c for c in rec.caveats)


def test_second_inequality_kernel():
    # e = 6 vs doubling sequences: 6ab >= (a+2a)(b+2b) = 9ab fails
    fails, margin, count = _second_inequalities(6, [1, 2, 4], [1, 2, 4])
    assert fails and margin < 0 and count == 4
    # e = 9 clears the same profile with margin 0
    fails, margin, count = _second_inequalities(9, [1, 2, 4], [1, 2, 4])
    assert not fails and margin == 0


def test_audit_second_tor(r3, mod_a):
    a_free = free_module(r3, 1)
    rec = audit_second_tor(r3, mod_a, a_free, 8, 3)
    # Tor_i(M, A) = 0 for i >= 1: the window exists and the bound holds
    assert rec.verdict == "PASS"
    assert rec.details["vanishing_from"] == 1
    k = residue_field(r3)
    rec = audit_second_tor(r3, k, k, 6, 3)
    assert rec.verdict == "VACUOUS"  # Tor(k, k) never vanishes
    assert rec.details["vanishing_from"] is None


def test_audit_second_ext(r3, mod_a):
    a_free = free_module(r3, 1)
    rec = audit_second_ext(r3, mod_a, a_free, 8, 3)
    assert rec.verdict in ("PASS", "VACUOUS")
    k = residue_field(r3)
    rec = audit_second_ext(r3, k, k, 6, 3)
    assert rec.verdict == "VACUOUS"


def test_audit_third_paths(r3, mod_a, res_k3_10, res_bc_10):
    # k itself: ratio beta_1/beta_0 = 3 > threshold, conclusion holds
    rec = audit_third(r3, res_k3_10.module, 0, 10, 4,
                      res_m=res_k3_10, res_k=res_k3_10)
    assert rec.verdict == "PASS" and rec.details["remark_1_9"]
    # doubling module clears the threshold too
    rec = audit_third(r3, res_bc_10.module, 0, 10, 4,
                      res_m=res_bc_10, res_k=res_k3_10)
    assert rec.verdict == "PASS"
    # the periodic module has ratio 1: below threshold, so VACUOUS
    rec = audit_third(r3, mod_a, 0, 10, 4, res_k=res_k3_10)
    assert rec.verdict == "VACUOUS"


def test_audit_third_finite_pd(r3, res_k3_10):
    with pytest.raises(FinitePd):
        audit_third(r3, free_module(r3, 1), 0, 8, 4, res_k=res_k3_10)


def test_audit_third_i0_out_of_range(r3, res_k3_10):
    with pytest.raises(ValueError):
        audit_third(r3, res_k3_10.module, 10, 10, 4,
                    res_m=res_k3_10, res_k=res_k3_10)


def test_modx_pass(r4):
    ref = [1] + [2] * 8
    rec = modx_check(r4, "x", 8, reference=ref)
    assert rec.verdict == "PASS"
    assert rec.details["betti_B"] == [1] * 9  # B = k[y]/(y^2)


def test_modx_rejects_nonregular(r4):
    with pytest.raises(NotRegular):
        modx_check(r4, "y", 6)


def test_modx_needs_dim_one(r3):
    with pytest.raises(UnsupportedDimension):
        modx_check(r3, "a", 6)


def test_modx_recursion_failure_detected(r4):
    rec = modx_check(r4, "x", 6, reference=[1, 2, 3, 2, 2, 2, 2])
    assert rec.verdict == "FAIL"
    assert any(v["check"] == "recursion" for v in rec.details["violations"])


def test_invariant_suite_small(r2):
    report = invariant_suite(r2, seed=3, count=8, depth=4, tor_depth=2)
    assert report.verdict == "PASS"
    names = {c.name for c in report.checks}
    assert names == {"first_inequality", "length_identity", "tensor_estimate",
                     "hom_estimate", "tor_symmetry", "matlis_roundtrip"}
    j = report.to_json()
    assert j["schema"] == 1 and j["verdict"] == "PASS"
    assert j["ring"]["e"] == 3 and j["ring"]["ci"] is False


def test_report_verdict_rollup(r3):
    report = invariant_suite(r3, seed=0, count=2, depth=3, tor_depth=2)
    assert report.verdict in ("PASS", "FAIL")
    assert all(c.verdict in ("PASS", "FAIL", "VACUOUS") for c in report.checks)
