"""Theorem audits at finite resolution depth.

Two kinds of checks live here.  The unconditional ones (the syzygy
inequality, the length identity, the tensor/Hom lower bounds, Tor
symmetry, Matlis round-trip) are exact integer statements that must hold
on every artinian input — a failure is an engine bug.  The theorem
audits (first/second/third) combine exact cross-multiplied ratio
inequalities from the proofs with interval surrogates for curvature;
those carry an explicit tolerance and can come out VACUOUS when a
hypothesis (a vanishing window, a ratio gap) is absent from the data.
Complete-intersection rings are rejected up front — the theorems assume
the ring is not one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import QuotientAlgebra, is_linear_regular, quotient_by_linear_form
from .asymptotics import curvature_interval
from .errors import (FinitePd, NotRegular, SetupViolation, UnsupportedDimension,
                     ZeroEntry)
from .homology import bass_sequence, ext_lengths, tor_lengths, vanishing_scan
from .modrep import (ModuleRep, cyclic_module, cokernel_module, hom_module,
                     matlis_dual, min_gens, presentation_from_strings,
                     residue_field, socle_dim, tensor)
from .resolution import DEFAULT_BUDGET, resolve

TOLERANCE = 0.05
FRAC_TOL = Fraction(1, 20)


@dataclass
class CheckRecord:
    name: str
    verdict: str                    # PASS | FAIL | VACUOUS
    margin: float | None = None
    instances: int = 0
    caveats: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "verdict": self.verdict,
                "margin": self.margin, "instances": self.instances,
                "caveats": list(self.caveats), "details": _jsonable(self.details)}


@dataclass
class AuditReport:
    ring: dict
    checks: list[CheckRecord]
    caveats: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if any(c.verdict == "FAIL" for c in self.checks):
            return "FAIL"
        if all(c.verdict == "VACUOUS" for c in self.checks):
            return "VACUOUS"
        return "PASS"

    def to_json(self) -> dict:
        return {"schema": 1,
                "ring": {"e": self.ring.get("e"), "length": self.ring.get("length"),
                         "embdim": self.ring.get("embdim"), "ci": self.ring.get("ci")},
                "verdict": self.verdict,
                "checks": [c.to_json() for c in self.checks],
                "caveats": list(self.caveats)}


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    return obj


def require_noncomplete_intersection(a: QuotientAlgebra) -> None:
    if a.is_ci:
        raise SetupViolation(
            "the ring is a complete intersection; the theorems assume it is not")


def _interval_or_none(betti, window):
    try:
        return curvature_interval(betti, window)
    except (ZeroEntry, ValueError):
        return None


# ---------------------------------------------------------------------------
# unconditional exact checks

def check_first_inequality(a: QuotientAlgebra, m: ModuleRep, depth: int,
                           res_m=None, res_k=None,
                           budget: int = DEFAULT_BUDGET) -> CheckRecord:
    """beta_{i+1}(M) + beta_0(M) l(Omega^i k) >= beta_i(k)(beta_0(M)+beta_1(M)),
    exactly, for every i < depth.  Unconditional in dimension 0."""
    if m.dim == 0:
        return CheckRecord("first_inequality", "VACUOUS",
                           caveats=["zero module"])
    res_m = res_m or resolve(m, depth, budget)
    res_k = res_k or resolve(residue_field(a), depth, budget)
    lk = res_k.syzygy_lengths()
    bm, bk = res_m.betti, res_k.betti
    fails, margin, equalities = [], None, 0
    for i in range(depth):
        lhs = bm[i + 1] + bm[0] * lk[i]
        rhs = bk[i] * (bm[0] + bm[1])
        d = lhs - rhs
        margin = d if margin is None else min(margin, d)
        if d < 0:
            fails.append({"i": i, "lhs": lhs, "rhs": rhs})
        elif d == 0:
            equalities += 1
    rec = CheckRecord("first_inequality",
                      "FAIL" if fails else "PASS",
                      margin=float(margin), instances=depth,
                      details={"equalities": equalities})
    if fails:
        rec.details["violations"] = fails
    return rec


def check_length_identity(a: QuotientAlgebra, m: ModuleRep, depth: int,
                          res_m=None, budget: int = DEFAULT_BUDGET) -> CheckRecord:
    """l(Omega^i M) + l(Omega^{i+1} M) = l(A) beta_i(M), exactly."""
    res_m = res_m or resolve(m, depth, budget)
    lm = res_m.syzygy_lengths()
    fails = []
    for i in range(depth):
        lhs = lm[i] + lm[i + 1]
        rhs = a.length * res_m.betti[i]
        if lhs != rhs:
            fails.append({"i": i, "lhs": lhs, "rhs": rhs})
    rec = CheckRecord("length_identity", "FAIL" if fails else "PASS",
                      margin=0.0, instances=depth)
    if fails:
        rec.details["violations"] = fails
    return rec


# ---------------------------------------------------------------------------
# theorem audits

def audit_first(a: QuotientAlgebra, m: ModuleRep, depth: int, window: int,
                res_m=None, res_k=None,
                budget: int = DEFAULT_BUDGET) -> CheckRecord:
    """curv(k) <= e/2 - 1 and curv(M) < sqrt(e) - 1 when a curvature gap
    hi(M) < lo(k) shows up in the windows; VACUOUS otherwise."""
    require_noncomplete_intersection(a)
    e = a.multiplicity
    res_m = res_m or resolve(m, depth, budget)
    res_k = res_k or resolve(residue_field(a), depth, budget)
    caveats = [f"intervals from depth {depth}, window {window}",
               "existence of the limit for k is assumed, not verified"]
    if 0 in res_m.betti:
        return CheckRecord("first_theorem", "VACUOUS", caveats=caveats + [
            "M has finite projective dimension at this depth"])
    ik = curvature_interval(res_k.betti, window)
    im = curvature_interval(res_m.betti, window)
    details = {"interval_k": ik.to_json(), "interval_M": im.to_json(), "e": e}
    bound_k = Fraction(e, 2) - 1
    if ik.lo > bound_k:
        details["corollary_1_4"] = ("curv(k) window exceeds e/2 - 1: every module "
                                    "of infinite projective dimension must have "
                                    "curv equal to curv(k)")
    # the gap must exceed the tolerance: finite windows overshoot the true
    # curvature slightly, and a sliver of a gap is indistinguishable from
    # curv(M) = curv(k)
    if not im.hi < ik.lo - FRAC_TOL:
        return CheckRecord("first_theorem", "VACUOUS", caveats=caveats + [
            "no curvature gap hi(M) < lo(k) beyond tolerance in the window"],
            details=details)
    ok_k = ik.lo <= bound_k + FRAC_TOL
    bound_m = math.sqrt(e) - 1
    ok_m = float(im.hi) < bound_m + TOLERANCE
    margin = min(float(bound_k + FRAC_TOL - ik.lo), bound_m + TOLERANCE - float(im.hi))
    details["bound_k"] = bound_k
    details["bound_M"] = bound_m
    return CheckRecord("first_theorem", "PASS" if ok_k and ok_m else "FAIL",
                       margin=margin, instances=2, caveats=caveats,
                       details=details)


def _second_inequalities(e: int, seq_n: list[int], seq_m: list[int]):
    """All cross-multiplied instances of e >= (1 + ratio_N)(1 + ratio_M)."""
    fails, margin, count = [], None, 0
    for j in range(len(seq_n) - 1):
        if seq_n[j] == 0:
            continue
        for n in range(len(seq_m) - 1):
            if seq_m[n] == 0:
                continue
            lhs = e * seq_n[j] * seq_m[n]
            rhs = (seq_n[j] + seq_n[j + 1]) * (seq_m[n] + seq_m[n + 1])
            d = lhs - rhs
            margin = d if margin is None else min(margin, d)
            count += 1
            if d < 0:
                fails.append({"j": j, "n": n, "lhs": lhs, "rhs": rhs})
    return fails, margin, count


def _second_record(name, a, window, vanish_w, seq_n, shifted_betti_m,
                   profile, caveats):
    e = a.multiplicity
    details = {"profile": list(profile), "vanishing_from": vanish_w}
    if vanish_w is None:
        return CheckRecord(name, "VACUOUS", caveats=caveats + [
            "no vanishing window in the profile at this depth"], details=details)
    fails, margin, count = _second_inequalities(e, seq_n, shifted_betti_m)
    i_n = _interval_or_none(seq_n, window)
    i_m = _interval_or_none(shifted_betti_m, window)
    curvs = []
    for iv, seq in ((i_m, shifted_betti_m), (i_n, seq_n)):
        if iv is not None:
            curvs.append(float(iv.hi))
        elif 0 in seq:
            curvs.append(0.0)
    if curvs:
        details["min_curv_hi"] = min(curvs)
        details["sqrt_e_minus_1"] = math.sqrt(e) - 1
        details["conclusion_min_curv"] = min(curvs) <= math.sqrt(e) - 1 + TOLERANCE
    if i_n is not None:
        details["interval_N_side"] = i_n.to_json()
    if i_m is not None:
        details["interval_M_side"] = i_m.to_json()
    if fails:
        details["violations"] = fails
    return CheckRecord(name, "FAIL" if fails else "PASS",
                       margin=None if margin is None else float(margin),
                       instances=count, caveats=caveats, details=details)


def audit_second_tor(a: QuotientAlgebra, m: ModuleRep, n: ModuleRep,
                     depth: int, window: int,
                     budget: int = DEFAULT_BUDGET) -> CheckRecord:
    """Theorem 1.5(1) in finite form: given a Tor(M, N) vanishing window,
    replace M by the syzygy at its start and check the proof inequality
    e >= (1 + ratio of beta(N))(1 + ratio of beta(M)) exactly."""
    require_noncomplete_intersection(a)
    res_m = resolve(m, depth + 1, budget)
    profile = tor_lengths(m, n, depth, budget, resolution=res_m)
    w = vanishing_scan(profile.lengths, window)
    caveats = [f"depth {depth}, window {window}"]
    seq_n = resolve(n, depth, budget).betti
    shifted = res_m.betti[w:] if w is not None else []
    return _second_record("second_theorem_tor", a, window, w, seq_n,
                          shifted, profile.lengths, caveats)


def audit_second_ext(a: QuotientAlgebra, m: ModuleRep, n: ModuleRep,
                     depth: int, window: int,
                     budget: int = DEFAULT_BUDGET) -> CheckRecord:
    """Theorem 1.5(2) in finite form, with Bass numbers of N via Matlis
    duality on the injective side."""
    require_noncomplete_intersection(a)
    res_m = resolve(m, depth + 1, budget)
    profile = ext_lengths(m, n, depth, budget, resolution=res_m)
    w = vanishing_scan(profile, window)
    caveats = [f"depth {depth}, window {window}",
               "Bass numbers via Matlis duality"]
    seq_r = bass_sequence(n, depth, budget).values
    shifted = res_m.betti[w:] if w is not None else []
    return _second_record("second_theorem_ext", a, window, w, seq_r,
                          shifted, profile, caveats)


def audit_third(a: QuotientAlgebra, m: ModuleRep, i0: int, depth: int,
                window: int, res_m=None, res_k=None,
                budget: int = DEFAULT_BUDGET) -> CheckRecord:
    """Theorem 1.8: if beta_{i0+1}(M)/beta_{i0}(M) > e/(1 + curv k) - 1
    then curv(M) >= liminf root of beta(k); checked with curv k replaced
    by its window interval, under both readings."""
    require_noncomplete_intersection(a)
    e = a.multiplicity
    res_m = res_m or resolve(m, depth, budget)
    res_k = res_k or resolve(residue_field(a), depth, budget)
    if 0 in res_m.betti:
        raise FinitePd("audit third requires infinite projective dimension; "
                       f"betti prefix {res_m.betti} has a zero")
    if i0 + 1 >= len(res_m.betti):
        raise ValueError("i0 + 1 exceeds the resolved depth")
    ik = curvature_interval(res_k.betti, window)
    im = curvature_interval(res_m.betti, window)
    ratio = Fraction(res_m.betti[i0 + 1], res_m.betti[i0])
    # threshold e/(1+c) - 1 falls as c grows: the pessimistic (hardest)
    # reading deflates the window's lower bound for curv(k) by the
    # tolerance, so a finite-window overshoot of curv(k) cannot fake a
    # hypothesis that fails at the true value
    thr_pess = Fraction(e) / (1 + ik.lo - FRAC_TOL) - 1
    thr_opt = Fraction(e) / (1 + ik.hi + FRAC_TOL) - 1
    details = {"i0": i0, "ratio": ratio,
               "threshold_pessimistic": thr_pess,
               "threshold_optimistic": thr_opt,
               "interval_k": ik.to_json(), "interval_M": im.to_json(),
               "remark_1_9": float(ik.lo) > 1}
    caveats = [f"depth {depth}, window {window}",
               "liminf and limsup cannot be separated at finite depth"]
    if ratio > thr_pess:
        ok = float(im.hi) >= float(ik.lo) - TOLERANCE
        margin = float(ratio - thr_pess)
        return CheckRecord("third_theorem", "PASS" if ok else "FAIL",
                           margin=margin, instances=1, caveats=caveats,
                           details=details)
    if ratio > thr_opt:
        caveats.append("hypothesis holds only under the optimistic reading")
    else:
        caveats.append("hypothesis ratio does not clear the threshold")
    return CheckRecord("third_theorem", "VACUOUS", instances=0,
                       margin=float(ratio - thr_pess), caveats=caveats,
                       details=details)


def modx_check(a: QuotientAlgebra, form, depth: int,
               reference: list[int] | None = None,
               budget: int = DEFAULT_BUDGET) -> CheckRecord:
    """Lemma 2.3 consequences over B = A/(x) for a 1-dimensional graded A:
    monotone betti of k over B, plus the exact recursion
    beta_n^B + beta_{n-1}^B = beta_n^A against a supplied reference."""
    if a.krull_dim != 1:
        raise UnsupportedDimension("modx needs a ring of Krull dimension 1")
    if isinstance(form, str):
        form = a.parse(form)
    if not is_linear_regular(a, form):
        raise NotRegular("the supplied linear form fails the degreewise "
                         "regularity check")
    b = quotient_by_linear_form(a, form)
    res = resolve(residue_field(b), depth, budget)
    bb = res.betti
    fails = []
    for i in range(1, depth + 1):
        if bb[i] < bb[i - 1]:
            fails.append({"check": "monotonicity", "n": i,
                          "lhs": bb[i], "rhs": bb[i - 1]})
    details = {"betti_B": bb, "length_B": b.length}
    instances = depth
    if reference is not None:
        ref = list(reference)
        if len(ref) < depth + 1:
            raise ValueError("reference betti sequence shorter than depth")
        for i in range(1, depth + 1):
            if bb[i] + bb[i - 1] != ref[i]:
                fails.append({"check": "recursion", "n": i,
                              "lhs": bb[i] + bb[i - 1], "rhs": ref[i]})
        details["reference"] = ref[:depth + 1]
        instances += depth
    if fails:
        details["violations"] = fails
    return CheckRecord("modx_lemma", "FAIL" if fails else "PASS",
                       margin=0.0, instances=instances,
                       caveats=[f"regularity verified degreewise up to the "
                                f"cap; depth {depth}"],
                       details=details)


# ---------------------------------------------------------------------------
# randomized unconditional suite

def _random_element_of_m(a: QuotientAlgebra, rng) -> dict:
    f = {}
    for mono in a.basis:
        if sum(mono) >= 1 and rng.integers(0, 2):
            c = int(rng.integers(1, a.p))
            f[mono] = c
    return f


def _random_module(a: QuotientAlgebra, rng) -> ModuleRep:
    if rng.integers(0, 2):
        gens = [_random_element_of_m(a, rng) for _ in range(int(rng.integers(1, 3)))]
        return cyclic_module(a, [g for g in gens if g] or [{}])
    b0 = int(rng.integers(1, 3))
    b1 = int(rng.integers(1, 3))
    rows = [[_random_element_of_m(a, rng) for _ in range(b1)] for _ in range(b0)]
    return cokernel_module(a, presentation_from_strings(a, rows))


def invariant_suite(a: QuotientAlgebra, seed: int = 0, count: int = 25,
                    depth: int = 5, tor_depth: int = 3,
                    budget: int = DEFAULT_BUDGET) -> AuditReport:
    """Randomized exact-invariant fuzz: the unconditional checks on
    `count` random module pairs (case 0 is always M = N = k)."""
    rng = np.random.default_rng(seed)
    res_k = resolve(residue_field(a), depth, budget)
    stats = {name: {"fails": [], "vacuous": 0, "equalities": 0, "checked": 0}
             for name in ("first_inequality", "length_identity",
                          "tensor_estimate", "hom_estimate",
                          "tor_symmetry", "matlis_roundtrip")}

    for case in range(count):
        if case == 0:
            M, N = residue_field(a), residue_field(a)
        else:
            M, N = _random_module(a, rng), _random_module(a, rng)

        if M.dim == 0:
            stats["first_inequality"]["vacuous"] += 1
            stats["length_identity"]["vacuous"] += 1
        else:
            rec = check_first_inequality(a, M, depth, res_k=res_k, budget=budget)
            stats["first_inequality"]["checked"] += 1
            stats["first_inequality"]["equalities"] += rec.details.get("equalities", 0)
            if rec.verdict == "FAIL":
                stats["first_inequality"]["fails"].append(case)
            rec = check_length_identity(a, M, depth, budget=budget)
            stats["length_identity"]["checked"] += 1
            if rec.verdict == "FAIL":
                stats["length_identity"]["fails"].append(case)

        T1, T2 = tensor(M, N), tensor(N, M)
        stats["tensor_estimate"]["checked"] += 1
        if not (T1.dim >= min_gens(M) * min_gens(N) and T1.dim == T2.dim):
            stats["tensor_estimate"]["fails"].append(case)

        H = hom_module(M, N)
        stats["hom_estimate"]["checked"] += 1
        if not H.dim >= min_gens(M) * socle_dim(N):
            stats["hom_estimate"]["fails"].append(case)

        if M.dim and N.dim:
            t_mn = tor_lengths(M, N, tor_depth, budget).lengths
            t_nm = tor_lengths(N, M, tor_depth, budget).lengths
            stats["tor_symmetry"]["checked"] += 1
            if t_mn != t_nm:
                stats["tor_symmetry"]["fails"].append(case)
        else:
            stats["tor_symmetry"]["vacuous"] += 1

        D = matlis_dual(M)
        DD = matlis_dual(D)
        stats["matlis_roundtrip"]["checked"] += 1
        if not (D.dim == M.dim == DD.dim
                and min_gens(D) == socle_dim(M)
                and socle_dim(D) == min_gens(M)):
            stats["matlis_roundtrip"]["fails"].append(case)

    checks = []
    for name, st in stats.items():
        rec = CheckRecord(name, "FAIL" if st["fails"] else "PASS",
                          instances=st["checked"],
                          details={"vacuous": st["vacuous"]})
        if name == "first_inequality":
            rec.details["equalities"] = st["equalities"]
        if st["fails"]:
            rec.details["failing_cases"] = st["fails"]
        checks.append(rec)
    return AuditReport(ring=a.summary(), checks=checks,
                       caveats=[f"seed {seed}, count {count}, depth {depth}"])
