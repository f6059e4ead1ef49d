"""Minimal free resolutions over an artinian algebra by iterated syzygies.

Each stage picks deterministic minimal generators (unit vectors of the
module extending mM, smallest pivots first), builds the k-linear
presentation map A^{mu} -> M column by column from monomial actions, and
takes its kernel.  The canonical kernel basis has an identity block at
its free rows, so the syzygy module's induced actions are read off
directly and the next stage recurses on it.  Free modules A^b are never
expanded beyond b * l(A) coordinates and boundary maps are kept as
matrices of algebra elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .algebra import QuotientAlgebra
from .errors import BudgetExceeded, NotArtinian
from .modrep import ModuleRep, PresentationMatrix

DEFAULT_BUDGET = 200_000


def generator_indices(m: ModuleRep) -> list[int]:
    """Coordinates whose unit vectors are deterministic minimal generators."""
    if m.dim == 0:
        return []
    _, ext = linalg.split_pivots(m.stacked_actions_h(), m.p)
    return ext


@dataclass
class FreeResolution:
    module: ModuleRep
    depth: int
    betti: list[int]
    boundaries: list[PresentationMatrix]   # boundary i: A^{b_{i+1}} -> A^{b_i}
    syzygies: list[ModuleRep]              # Omega^0 = M, ..., Omega^depth
    gen_indices: list[list[int]] = field(default_factory=list)
    kernels: list = field(default_factory=list)  # (K, free) per stage

    @property
    def algebra(self) -> QuotientAlgebra:
        return self.module.algebra

    def syzygy(self, i: int) -> ModuleRep:
        return self.syzygies[i]

    def syzygy_lengths(self) -> list[int]:
        return [s.dim for s in self.syzygies]

    def boundary_k_matrix(self, i: int) -> np.ndarray:
        """The boundary A^{b_{i+1}} -> A^{b_i} expanded to a k-linear map."""
        a = self.algebra
        pm = self.boundaries[i]
        ell = a.length
        out = np.zeros((pm.target * ell, pm.source * ell), dtype=np.int64)
        for r in range(pm.target):
            for t in range(pm.source):
                blk = np.zeros((ell, ell), dtype=np.int64)
                vec = pm.entries[r, t]
                for c, coeff in enumerate(vec):
                    if coeff:
                        blk = (blk + int(coeff) * a.monomial_matrix(a.basis[c])) % a.p
                out[r * ell:(r + 1) * ell, t * ell:(t + 1) * ell] = blk
        return out


def _presentation_map(m: ModuleRep, gens: list[int]) -> np.ndarray:
    """k-matrix of A^{mu} -> M, column (slot t, basis monomial c) =
    c . e_{gens[t]}, laid out slot-major."""
    a = m.algebra
    ell = a.length
    mu = len(gens)
    G = np.zeros((m.dim, mu), dtype=np.int64)
    for t, j in enumerate(gens):
        G[j, t] = 1
    cols = {(0,) * a.nvars: G}
    P = np.zeros((m.dim, mu * ell), dtype=np.int64)
    P3 = P.reshape(m.dim, mu, ell)
    for c, mono in enumerate(a.basis):
        if mono not in cols:
            v, parent = a.mono_parent(mono)
            cols[mono] = linalg.matmul(m.actions[v], cols[parent], m.p)
        P3[:, :, c] = cols[mono]
    return P


def _syzygy_module(m: ModuleRep, K: np.ndarray, free: list[int],
                   mu: int, tag: str) -> ModuleRep:
    """Induced actions on ker subset A^{mu}, in canonical K-coordinates."""
    a = m.algebra
    ell = a.length
    s = K.shape[1]
    acts = []
    K3 = K.reshape(mu, ell, s)
    for act in a.actions:
        # block-diagonal action of the free module applied to the kernel basis;
        # entries < p and ell is small, so int64 matmul is exact
        moved = np.matmul(act, K3) % a.p
        acts.append(moved.reshape(mu * ell, s)[free, :])
    return ModuleRep(a, s, acts, tag=tag)


def resolve(m: ModuleRep, steps: int,
            budget: int = DEFAULT_BUDGET) -> FreeResolution:
    """Prefix of the minimal free resolution: betti b_0..b_steps.

    Raises BudgetExceeded when a free stage's k-dimension b_i * l(A)
    would top the budget.
    """
    a = m.algebra
    if a.krull_dim != 0:
        raise NotArtinian("resolutions are computed over artinian algebras")
    if steps < 0:
        raise ValueError("steps must be >= 0")
    ell = a.length
    betti: list[int] = []
    gen_lists: list[list[int]] = []
    syzygies: list[ModuleRep] = [m]
    kernels: list = []
    cur = m
    for i in range(steps + 1):
        gens = generator_indices(cur)
        betti.append(len(gens))
        gen_lists.append(gens)
        if i == steps:
            break
        if not gens:
            # finite projective dimension reached: everything after is zero
            from .modrep import zero_module
            for j in range(i + 1, steps + 1):
                betti.append(0)
                gen_lists.append([])
                syzygies.append(zero_module(a, tag=f"syz^{j}"))
                kernels.append((np.zeros((0, 0), dtype=np.int64), []))
            break
        if len(gens) * ell > budget:
            raise BudgetExceeded(
                f"free stage {i} needs {len(gens) * ell} k-dimensions "
                f"(budget {budget})")
        P = _presentation_map(cur, gens)
        K, free = linalg.kernel_with_free(P, a.p)
        kernels.append((K, free))
        cur = _syzygy_module(cur, K, free, len(gens), tag=f"syz^{i + 1}")
        syzygies.append(cur)

    boundaries = []
    for i in range(len(kernels)):
        K, _ = kernels[i]
        b_i, b_next = betti[i], betti[i + 1]
        if K.size == 0 or b_next == 0:
            ent = np.zeros((b_i, 0, ell), dtype=np.int64)
        else:
            V = K[:, gen_lists[i + 1]]
            ent = V.reshape(b_i, ell, b_next).transpose(0, 2, 1)
        boundaries.append(PresentationMatrix(b_i, b_next, ent.copy()))
    return FreeResolution(module=m, depth=steps, betti=betti,
                          boundaries=boundaries, syzygies=syzygies,
                          gen_indices=gen_lists, kernels=kernels)


def minimal_presentation(m: ModuleRep) -> PresentationMatrix:
    """The minimal presentation A^{b1} -> A^{b0} -> M -> 0."""
    return resolve(m, 1).boundaries[0]


def syzygy(m: ModuleRep, i: int) -> ModuleRep:
    """The i-th syzygy module Omega^i(M)."""
    return resolve(m, i).syzygies[i]
