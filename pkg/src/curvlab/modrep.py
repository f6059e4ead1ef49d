"""Finitely generated A-modules as finite-dimensional representations.

A module is a k-vector space with one commuting action matrix per
algebra variable.  Constructions (cyclic quotients, cokernels, tensor,
Hom, Matlis duals) all reduce to exact linear algebra; quotients carry a
deterministic coordinate choice (unit vectors extending the subspace,
smallest pivots first), so every invariant is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg, poly
from .algebra import QuotientAlgebra
from .errors import NotArtinian


@dataclass
class ModuleRep:
    algebra: QuotientAlgebra
    dim: int
    actions: list[np.ndarray]
    tag: str = ""
    _mono_cache: dict = field(repr=False, default_factory=dict)

    @property
    def p(self) -> int:
        return self.algebra.p

    def stacked_actions_h(self) -> np.ndarray:
        """Horizontal stack of actions; its column space is mM."""
        if not self.actions:
            return np.zeros((self.dim, 0), dtype=np.int64)
        return np.hstack(self.actions)

    def stacked_actions_v(self) -> np.ndarray:
        if not self.actions:
            return np.zeros((0, self.dim), dtype=np.int64)
        return np.vstack(self.actions)

    def monomial_action(self, m: poly.Monomial) -> np.ndarray:
        """Action of a basis monomial of A on this module."""
        if m in self._mono_cache:
            return self._mono_cache[m]
        if not any(m):
            out = np.eye(self.dim, dtype=np.int64)
        else:
            i, parent = self.algebra.mono_parent(m)
            out = linalg.matmul(self.actions[i], self.monomial_action(parent), self.p)
        self._mono_cache[m] = out
        return out

    def element_action(self, f) -> np.ndarray:
        """Action of an algebra element (coefficient vector over the basis)."""
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, c in enumerate(np.asarray(f, dtype=np.int64)):
            if c % self.p:
                out = (out + int(c) * self.monomial_action(self.algebra.basis[i])) % self.p
        return out

    def check(self) -> None:
        """Assert commuting actions satisfying the defining ideal."""
        p = self.p
        for i, ai in enumerate(self.actions):
            for aj in self.actions[i + 1:]:
                assert np.array_equal(linalg.matmul(ai, aj, p),
                                      linalg.matmul(aj, ai, p))
        for g in self.algebra.ideal:
            val = np.zeros((self.dim, self.dim), dtype=np.int64)
            for m, c in g.items():
                term = c * np.eye(self.dim, dtype=np.int64)
                for v, e in enumerate(m):
                    for _ in range(e):
                        term = linalg.matmul(self.actions[v], term, p)
                val = (val + term) % p
            assert not val.any(), "action matrices do not satisfy the ideal"


def _require_artinian(a: QuotientAlgebra):
    if a.krull_dim != 0:
        raise NotArtinian("module representations require an artinian algebra")


def free_module(a: QuotientAlgebra, rank: int) -> ModuleRep:
    _require_artinian(a)
    acts = [np.kron(np.eye(rank, dtype=np.int64), act) % a.p for act in a.actions]
    return ModuleRep(a, rank * a.length, acts, tag=f"A^{rank}")


def residue_field(a: QuotientAlgebra) -> ModuleRep:
    _require_artinian(a)
    acts = [np.zeros((1, 1), dtype=np.int64) for _ in range(a.nvars)]
    return ModuleRep(a, 1, acts, tag="k")


def quotient_rep(m: ModuleRep, subspace: np.ndarray, tag: str = "") -> ModuleRep:
    """M / (column span of subspace), with induced actions.

    The quotient basis is the deterministic set of unit vectors of M
    extending the subspace; the projection comes from inverting the
    combined basis matrix.
    """
    p = m.p
    sp, ext = linalg.split_pivots(subspace, p)
    q = len(ext)
    if q == 0:
        return zero_module(m.algebra, tag=tag)
    B = subspace[:, sp]
    emb = np.zeros((m.dim, q), dtype=np.int64)
    for c, j in enumerate(ext):
        emb[j, c] = 1
    C = np.hstack([B, emb])
    proj = linalg.inverse(C, p)[len(sp):, :]
    acts = [linalg.matmul(proj, linalg.matmul(act, emb, p), p) for act in m.actions]
    return ModuleRep(m.algebra, q, acts, tag=tag)


def zero_module(a: QuotientAlgebra, tag: str = "0") -> ModuleRep:
    return ModuleRep(a, 0, [np.zeros((0, 0), dtype=np.int64) for _ in range(a.nvars)],
                     tag=tag)


def submodule_span(m: ModuleRep, vectors: np.ndarray) -> np.ndarray:
    """Columns spanning the A-submodule generated by the given k-vectors."""
    cols = [linalg.matmul(m.monomial_action(mono), vectors, m.p)
            for mono in m.algebra.basis]
    return np.hstack(cols) if cols else vectors


def cyclic_module(a: QuotientAlgebra, ideal_strs: list) -> ModuleRep:
    """A/IA as a representation.

    The unit ideal yields the zero module (vs_dim 0) rather than an error.
    """
    _require_artinian(a)
    free = free_module(a, 1)
    gens = []
    for s in ideal_strs:
        f = s if isinstance(s, dict) else a.parse(s)
        v = a.nf_vector(f)
        if v.any():
            gens.append(v)
    if not gens:
        free.tag = "A/(0)"
        return free
    W = submodule_span(free, np.array(gens, dtype=np.int64).T)
    return quotient_rep(free, W, tag="cyclic")


@dataclass
class PresentationMatrix:
    """b0 x b1 matrix of algebra elements, stored as coefficient vectors
    over the standard-monomial basis: entries[r, t] is a length-l vector."""
    target: int
    source: int
    entries: np.ndarray  # shape (target, source, l)

    def is_minimal(self, one_index: int = 0) -> bool:
        if self.entries.size == 0:
            return True
        return not self.entries[:, :, one_index].any()


def cokernel_module(a: QuotientAlgebra, pm: PresentationMatrix) -> ModuleRep:
    """A^{b0} / (column span over A of the presentation matrix)."""
    _require_artinian(a)
    b0, b1 = pm.target, pm.source
    free = free_module(a, b0)
    if b1 == 0 or pm.entries.size == 0:
        free.tag = f"coker 0 -> A^{b0}"
        return free
    cols = pm.entries.transpose(0, 2, 1).reshape(b0 * a.length, b1) % a.p
    W = submodule_span(free, cols.astype(np.int64))
    return quotient_rep(free, W, tag="cokernel")


def presentation_from_strings(a: QuotientAlgebra, rows: list[list[str]]) -> PresentationMatrix:
    b0 = len(rows)
    b1 = len(rows[0]) if rows else 0
    ent = np.zeros((b0, b1, a.length), dtype=np.int64)
    for r, row in enumerate(rows):
        if len(row) != b1:
            from .errors import ParseError
            raise ParseError("ragged presentation matrix")
        for t, s in enumerate(row):
            ent[r, t] = a.nf_vector(s if isinstance(s, dict) else a.parse(s))
    return PresentationMatrix(b0, b1, ent)


def min_gens(m: ModuleRep) -> int:
    """mu(M) = dim_k M/mM."""
    if m.dim == 0:
        return 0
    return m.dim - linalg.rank(m.stacked_actions_h(), m.p)


def socle_dim(m: ModuleRep) -> int:
    """r(M) = dim of the joint kernel of all variable actions."""
    if m.dim == 0:
        return 0
    return m.dim - linalg.rank(m.stacked_actions_v(), m.p)


def length(m: ModuleRep) -> int:
    return m.dim


def tensor(m: ModuleRep, n: ModuleRep) -> ModuleRep:
    """M tensor_A N as a quotient of M tensor_k N."""
    if m.algebra is not n.algebra:
        raise ValueError("tensor needs modules over the same algebra")
    p = m.p
    if m.dim == 0 or n.dim == 0:
        return zero_module(m.algebra, tag="tensor")
    big = ModuleRep(m.algebra, m.dim * n.dim,
                    [np.kron(am, np.eye(n.dim, dtype=np.int64)) % p
                     for am in m.actions], tag="M (x)_k N")
    rel_blocks = [
        (np.kron(am, np.eye(n.dim, dtype=np.int64)) -
         np.kron(np.eye(m.dim, dtype=np.int64), an)) % p
        for am, an in zip(m.actions, n.actions)]
    if rel_blocks:
        W = np.hstack(rel_blocks)
    else:
        W = np.zeros((m.dim * n.dim, 0), dtype=np.int64)
    return quotient_rep(big, W, tag="tensor")


def hom_module(m: ModuleRep, n: ModuleRep) -> ModuleRep:
    """Hom_A(M, N): A-linear maps, with action (v.f)(u) = v.f(u)."""
    if m.algebra is not n.algebra:
        raise ValueError("hom needs modules over the same algebra")
    p = m.p
    if m.dim == 0 or n.dim == 0:
        return zero_module(m.algebra, tag="hom")
    # vec(f) column-stacked; f A_v - B_v f = 0  <=>  (A_v^T (x) I - I (x) B_v) vec f = 0
    blocks = [
        (np.kron(am.T, np.eye(n.dim, dtype=np.int64)) -
         np.kron(np.eye(m.dim, dtype=np.int64), an)) % p
        for am, an in zip(m.actions, n.actions)]
    if blocks:
        constraint = np.vstack(blocks)
    else:
        constraint = np.zeros((0, m.dim * n.dim), dtype=np.int64)
    K, free = linalg.kernel_with_free(constraint, p)
    h = K.shape[1]
    acts = []
    for an in n.actions:
        big = np.kron(np.eye(m.dim, dtype=np.int64), an) % p
        img = linalg.matmul(big, K, p)
        acts.append(img[free, :])
    if not acts:
        acts = []
    return ModuleRep(m.algebra, h, acts, tag="hom")


def matlis_dual(m: ModuleRep) -> ModuleRep:
    """M^v: same space, transposed actions; swaps mu and socle dimension."""
    _require_artinian(m.algebra)
    acts = [act.T.copy() for act in m.actions]
    return ModuleRep(m.algebra, m.dim, acts, tag=f"({m.tag})^v" if m.tag else "dual")
