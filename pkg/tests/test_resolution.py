"""Resolution engine: fixtures, the four FreeResolution invariants, budget."""

from __future__ import annotations

import numpy as np
import pytest

from curvlab import (BudgetExceeded, cyclic_module, free_module, linalg,
                     min_gens, minimal_presentation, residue_field, resolve)
from curvlab.audit import _random_module


def assert_resolution_invariants(res):
    a = res.algebra
    one = a.basis.index((0,) * a.nvars)
    # minimality: every boundary entry in m
    for pm in res.boundaries:
        assert pm.is_minimal(one)
    # mu(Omega^i) = beta_i
    for i, s in enumerate(res.syzygies):
        assert min_gens(s) == res.betti[i], i
    # length identity
    lens = res.syzygy_lengths()
    for i in range(res.depth):
        assert lens[i] + lens[i + 1] == a.length * res.betti[i], i
    # exactness: d_i . d_{i+1} = 0 and im(d_{i+1}) = ker(d_i)
    mats = [res.boundary_k_matrix(i) for i in range(min(res.depth, 4))]
    for i in range(len(mats) - 1):
        assert not linalg.matmul(mats[i], mats[i + 1], a.p).any()
        rk_next = linalg.rank(mats[i + 1], a.p)
        nullity = mats[i].shape[1] - linalg.rank(mats[i], a.p)
        assert rk_next == nullity, i
    # im(d_1) = ker(A^{b0} -> M)
    if mats:
        assert linalg.rank(mats[0], a.p) == res.syzygies[1].dim


def test_k_over_hypersurface(r1):
    res = resolve(residue_field(r1), 10)
    assert res.betti == [1] * 11
    assert_resolution_invariants(res)


def test_k_over_msquare(r2):
    res = resolve(residue_field(r2), 8)
    assert res.betti == [2 ** n for n in range(9)]
    assert_resolution_invariants(res)


def test_periodic_module_over_r3(r3, mod_a):
    res = resolve(mod_a, 12)
    assert res.betti == [1] * 13
    assert_resolution_invariants(res)


def test_free_module_resolution(r3):
    res = resolve(free_module(r3, 2), 5)
    assert res.betti == [2, 0, 0, 0, 0, 0]
    assert res.syzygies[1].dim == 0


def test_minimal_presentation_examples(r1, r3, mod_a):
    pm = minimal_presentation(free_module(r3, 1))
    assert (pm.target, pm.source) == (1, 0)
    pm = minimal_presentation(residue_field(r1))
    assert (pm.target, pm.source) == (1, 1)
    x = r1.nf_vector(r1.parse("x"))
    assert np.array_equal(pm.entries[0, 0], x)
    pm = minimal_presentation(mod_a)
    assert (pm.target, pm.source) == (1, 1)
    assert np.array_equal(pm.entries[0, 0], r3.nf_vector(r3.parse("a")))


def test_syzygy_examples(r2, mod_a):
    res = resolve(residue_field(r2), 2)
    assert res.syzygies[0].dim == 1
    assert res.syzygies[1].dim == r2.length - 1
    res = resolve(mod_a, 2)
    omega1 = res.syzygies[1]
    assert omega1.dim == 3 and min_gens(omega1) == 1


def test_budget_exceeded(r2):
    with pytest.raises(BudgetExceeded):
        resolve(residue_field(r2), 12, budget=50)


def test_determinism(r3):
    m1 = cyclic_module(r3, ["b", "c"])
    m2 = cyclic_module(r3, ["b", "c"])
    res1, res2 = resolve(m1, 6), resolve(m2, 6)
    assert res1.betti == res2.betti
    for p1, p2 in zip(res1.boundaries, res2.boundaries):
        assert np.array_equal(p1.entries, p2.entries)


def test_random_module_invariants(r2, r3):
    rng = np.random.default_rng(21)
    for a in (r2, r3):
        for _ in range(3):
            m = _random_module(a, rng)
            if m.dim == 0:
                continue
            res = resolve(m, 4)
            assert_resolution_invariants(res)
