"""Tor and Ext length profiles, Bass sequences, vanishing scans.

Tor_i(M, N) comes from tensoring a minimal free resolution of M with N:
the stage F_i (x) N is just N^{b_i}, and a boundary block (r, t) is the
algebra entry d[r, t] acting on N through its action matrices.  Ext uses
the transposed block layout for Hom(F_i, N).  Bass numbers are computed
twice — directly as Ext^i(k, N) and through the Matlis dual as
beta_i(N^v) — and must agree.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import MismatchError
from .modrep import ModuleRep, matlis_dual, residue_field
from .resolution import DEFAULT_BUDGET, FreeResolution, resolve


@dataclass
class TorProfile:
    left: ModuleRep
    right: ModuleRep
    depth: int
    lengths: list[int]
    vanishing_from: int | None


@dataclass
class BassSequence:
    module: ModuleRep
    depth: int
    values: list[int]          # r_n = l Ext^n(k, N)
    dual_betti: list[int]      # beta_n(N^v), must equal values


def _tensor_boundary(pm, n: ModuleRep) -> np.ndarray:
    """Boundary F_{i} (x) N -> F_{i-1} (x) N as a k-matrix."""
    a = n.algebra
    ell = a.length
    b_tgt, b_src = pm.target, pm.source
    out = np.zeros((b_tgt * n.dim, b_src * n.dim), dtype=np.int64)
    if pm.entries.size == 0 or n.dim == 0:
        return out
    for c in range(ell):
        coef = pm.entries[:, :, c]
        if coef.any():
            act = n.monomial_action(a.basis[c])
            out = (out + np.kron(coef, act)) % a.p
    return out


def _hom_boundary(pm, n: ModuleRep) -> np.ndarray:
    """Coboundary Hom(F_{i-1}, N) -> Hom(F_i, N): block (t, r) = entry (r, t)."""
    a = n.algebra
    out = np.zeros((pm.source * n.dim, pm.target * n.dim), dtype=np.int64)
    if pm.entries.size == 0 or n.dim == 0:
        return out
    for c in range(a.length):
        coef = pm.entries[:, :, c]
        if coef.any():
            act = n.monomial_action(a.basis[c])
            out = (out + np.kron(coef.T, act)) % a.p
    return out


def _resolution_for(m: ModuleRep, steps: int, budget: int,
                    cache: FreeResolution | None) -> FreeResolution:
    if cache is not None and cache.depth >= steps and cache.module is m:
        return cache
    return resolve(m, steps, budget)


def tor_lengths(m: ModuleRep, n: ModuleRep, depth: int,
                budget: int = DEFAULT_BUDGET,
                resolution: FreeResolution | None = None) -> TorProfile:
    """Lengths of Tor_i(M, N) for 0 <= i <= depth."""
    res = _resolution_for(m, depth + 1, budget, resolution)
    ranks = [0]  # rank of d_i (x) N for i = 0 (no boundary below F_0)
    for i in range(depth + 1):
        D = _tensor_boundary(res.boundaries[i], n)
        ranks.append(linalg.rank(D, n.p) if D.size else 0)
    lengths = []
    for i in range(depth + 1):
        dim_i = res.betti[i] * n.dim
        # l Tor_i = nullity(d_i (x) N) - rank(d_{i+1} (x) N)
        nullity = dim_i - ranks[i]
        lengths.append(nullity - ranks[i + 1])
    return TorProfile(m, n, depth, lengths,
                      vanishing_scan(lengths, window=1))


def ext_lengths(m: ModuleRep, n: ModuleRep, depth: int,
                budget: int = DEFAULT_BUDGET,
                resolution: FreeResolution | None = None) -> list[int]:
    """Lengths of Ext^i(M, N) for 0 <= i <= depth."""
    res = _resolution_for(m, depth + 1, budget, resolution)
    ranks = []
    for i in range(depth + 1):
        D = _hom_boundary(res.boundaries[i], n)  # N^{b_i} -> N^{b_{i+1}}
        ranks.append(linalg.rank(D, n.p) if D.size else 0)
    lengths = []
    for i in range(depth + 1):
        dim_i = res.betti[i] * n.dim
        nullity = dim_i - ranks[i]
        below = ranks[i - 1] if i >= 1 else 0
        lengths.append(nullity - below)
    return lengths


def bass_sequence(n: ModuleRep, depth: int,
                  budget: int = DEFAULT_BUDGET) -> BassSequence:
    """r_i(N) = l Ext^i(k, N), cross-checked against beta_i(N^v)."""
    k = residue_field(n.algebra)
    direct = ext_lengths(k, n, depth, budget)
    dual = resolve(matlis_dual(n), depth, budget).betti
    if direct != dual:
        raise MismatchError(
            f"Bass routes disagree: Ext(k,N) gives {direct}, "
            f"betti of the Matlis dual gives {dual}")
    return BassSequence(n, depth, direct, dual)


def vanishing_scan(seq: list[int], window: int) -> int | None:
    """Least w with seq[w:] all zero and at least `window` zeros in the tail."""
    n = len(seq)
    w = n
    while w > 0 and seq[w - 1] == 0:
        w -= 1
    if w == n or n - w < window:
        return None
    return w
