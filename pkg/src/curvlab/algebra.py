"""The ring object: A = k[x_1..x_n]/I over F_p.

Building an algebra runs Buchberger, enumerates standard monomials,
fills multiplication tables (dimension 0), computes the Hilbert
function, multiplicity, embedding dimension and the complete-
intersection flag.  Positive-dimensional inputs must be standard graded
and only dimension <= 1 gets a multiplicity; the graded linear
regular-element search and quotient implement the computable slice of
superficial reduction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg, poly
from .errors import (CurvlabError, NotArtinian, NotInMSquared,
                     NotStandardGraded, ParseError, UnsupportedDimension,
                     ZeroDimensional)


@dataclass
class QuotientAlgebra:
    p: int
    var_names: list[str]
    order: str
    ideal: list[poly.Polynomial]
    groebner: list[poly.Polynomial]
    krull_dim: int
    basis: list[poly.Monomial]          # all standard monomials (d = 0) or capped view
    degree_cap: int | None              # None when d = 0
    length: int | None                  # None when d > 0
    multiplicity: int | None            # None when d >= 2
    embedding_dim: int
    hilbert: list[int]
    actions: list[np.ndarray]           # one l x l matrix per variable (d = 0 only)
    is_ci: bool
    _index: dict = field(repr=False, default_factory=dict)
    _mono_cache: dict = field(repr=False, default_factory=dict)

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def key(self):
        return poly.order_key(self.order)

    def normal_form(self, f: poly.Polynomial) -> poly.Polynomial:
        return poly.normal_form(f, self.groebner, self.p, self.key)

    def nf_vector(self, f: poly.Polynomial) -> np.ndarray:
        """Coordinates of NF(f) in the standard-monomial basis (d = 0)."""
        self._require_artinian()
        v = np.zeros(self.length, dtype=np.int64)
        for m, c in self.normal_form(f).items():
            v[self._index[m]] = c
        return v

    def parse(self, text: str) -> poly.Polynomial:
        return poly.parse_polynomial(text, self.var_names, self.p)

    def mono_parent(self, m: poly.Monomial) -> tuple[int, poly.Monomial]:
        """Factor a nonunit basis monomial as variable * smaller basis monomial."""
        i = next(i for i, e in enumerate(m) if e)
        return i, m[:i] + (m[i] - 1,) + m[i + 1:]

    def monomial_matrix(self, m: poly.Monomial) -> np.ndarray:
        """Matrix of multiplication by the basis monomial m on A (d = 0)."""
        self._require_artinian()
        if m in self._mono_cache:
            return self._mono_cache[m]
        if not any(m):
            out = np.eye(self.length, dtype=np.int64)
        else:
            i, parent = self.mono_parent(m)
            out = linalg.matmul(self.actions[i], self.monomial_matrix(parent), self.p)
        self._mono_cache[m] = out
        return out

    def basis_degrees(self) -> list[int]:
        return [poly.mono_degree(m) for m in self.basis]

    def _require_artinian(self):
        if self.krull_dim != 0:
            raise NotArtinian("operation requires an artinian (dimension 0) algebra")

    def summary(self) -> dict:
        return {
            "char": self.p,
            "vars": list(self.var_names),
            "dim": self.krull_dim,
            "length": self.length,
            "e": self.multiplicity,
            "embdim": self.embedding_dim,
            "ci": self.is_ci,
        }


def build_algebra(p: int, var_names: list[str], ideal_strs: list[str],
                  order: str = "grevlex", degree_guard: int = 32) -> QuotientAlgebra:
    """Build k[vars]/I with all tables populated.

    Generators must lie in m^2 (no constant or linear terms after mod-p
    reduction); positive-dimensional quotients must be standard graded.
    """
    if not linalg.is_prime(p):
        raise ParseError(f"characteristic {p} is not prime")
    if len(set(var_names)) != len(var_names):
        raise ParseError("duplicate variable names")
    key = poly.order_key(order)
    gens = []
    for s in ideal_strs:
        f = s if isinstance(s, dict) else poly.parse_polynomial(s, var_names, p)
        if not f:
            continue
        if min(poly.mono_degree(m) for m in f) < 2:
            raise NotInMSquared(
                f"ideal generator {s!r} has a term of degree < 2")
        gens.append(f)
    return _build_from_gens(p, var_names, gens, order, degree_guard)


def _build_from_gens(p, var_names, gens, order, degree_guard):
    key = poly.order_key(order)
    n = len(var_names)
    gb = poly.buchberger(gens, p, key, degree_guard) if gens else []
    lts = [poly.leading_monomial(g, key) for g in gb]
    d = poly.monomial_ideal_dimension(lts, n) if n else 0
    if d < 0:
        raise NotInMSquared("ideal is the unit ideal")

    max_gen_deg = max((poly.poly_degree(g) for g in gens), default=2)
    if d == 0:
        basis = poly.standard_monomials(lts, n)
        cap = None
        length = len(basis)
    else:
        if any(len({poly.mono_degree(m) for m in g}) > 1 for g in gens):
            raise NotStandardGraded(
                "positive-dimensional quotients require homogeneous generators")
        cap = 2 * max_gen_deg + 6
        basis = poly.standard_monomials(lts, n, degree_cap=cap)
        length = None

    index = {m: i for i, m in enumerate(basis)}
    degs = [poly.mono_degree(m) for m in basis]
    top = max(degs, default=0)
    hilbert = [degs.count(t) for t in range(top + 1)]
    if d == 0:
        hilbert.append(0)
    embdim = hilbert[1] if len(hilbert) > 1 else 0

    if d == 0:
        e = length
    elif d == 1:
        tail = hilbert[-3:]
        if len(set(tail)) != 1:
            raise CurvlabError("Hilbert function did not stabilize below the cap")
        e = tail[-1]
    else:
        e = None

    actions = []
    if d == 0:
        for i in range(n):
            act = np.zeros((length, length), dtype=np.int64)
            xi = (0,) * i + (1,) + (0,) * (n - i - 1)
            for j, m in enumerate(basis):
                nf = poly.normal_form({poly.mono_mul(xi, m): 1}, gb, p, key)
                for mm, c in nf.items():
                    act[index[mm], j] = c
            actions.append(act)

    mu_I = _min_gens_of_ideal(p, n, gens, basis, lts, d, max_gen_deg)
    is_ci = (mu_I == n - d)

    a = QuotientAlgebra(p=p, var_names=list(var_names), order=order,
                        ideal=gens, groebner=gb, krull_dim=d, basis=basis,
                        degree_cap=cap, length=length, multiplicity=e,
                        embedding_dim=embdim, hilbert=hilbert,
                        actions=actions, is_ci=is_ci)
    a._index = index
    return a


def _monos_of_degree(n, t):
    if n == 0:
        return [()] if t == 0 else []
    out = []
    for e in range(t + 1):
        for rest in _monos_of_degree(n - 1, t - e):
            out.append((e,) + rest)
    return out


def _min_gens_of_ideal(p, n, gens, basis, lts, d, max_gen_deg):
    """mu(I) = dim_k I/mI, via degreewise spans (homogeneous case) or
    truncation modulo a power of m that lies inside mI (artinian case)."""
    if not gens:
        return 0
    homogeneous = all(len({poly.mono_degree(m) for m in g}) == 1 for g in gens)
    if homogeneous:
        mu = 0
        for t in range(2, max_gen_deg + 1):
            monos_t = _monos_of_degree(n, t)
            idx = {m: i for i, m in enumerate(monos_t)}
            full, sub = [], []
            for g in gens:
                dg = poly.poly_degree(g)
                if dg > t:
                    continue
                for m in _monos_of_degree(n, t - dg):
                    col = np.zeros(len(monos_t), dtype=np.int64)
                    for mm, c in poly.term_mul(g, m, 1, p).items():
                        col[idx[mm]] = c
                    full.append(col)
                    if poly.mono_degree(m) >= 1:
                        sub.append(col)
            rk_full = linalg.rank(np.array(full).T, p) if full else 0
            rk_sub = linalg.rank(np.array(sub).T, p) if sub else 0
            mu += rk_full - rk_sub
        return mu
    # non-homogeneous: only legal when artinian; m^{s+1} subset of mI for
    # s = max standard-monomial degree + 1, so compute in k[x] truncated there
    s = max((poly.mono_degree(m) for m in basis), default=0) + 1
    monos = [m for t in range(s + 1) for m in _monos_of_degree(n, t)]
    idx = {m: i for i, m in enumerate(monos)}

    def trunc_col(f):
        col = np.zeros(len(monos), dtype=np.int64)
        for mm, c in f.items():
            if poly.mono_degree(mm) <= s:
                col[idx[mm]] = c
        return col

    full, sub = [], []
    for g in gens:
        for m in monos:
            prod = poly.term_mul(g, m, 1, p)
            full.append(trunc_col(prod))
            if poly.mono_degree(m) >= 1:
                sub.append(trunc_col(prod))
    rk_full = linalg.rank(np.array(full).T, p)
    rk_sub = linalg.rank(np.array(sub).T, p)
    return rk_full - rk_sub


def multiplicity(a: QuotientAlgebra) -> int:
    """e(A); defined here for Krull dimension <= 1 only."""
    if a.krull_dim >= 2:
        raise UnsupportedDimension(
            f"multiplicity implemented for dim <= 1, got {a.krull_dim}")
    return a.multiplicity


def is_complete_intersection(a: QuotientAlgebra) -> bool:
    return a.is_ci


def _degree_slices(a: QuotientAlgebra):
    by_deg: dict[int, list[int]] = {}
    for i, m in enumerate(a.basis):
        by_deg.setdefault(poly.mono_degree(m), []).append(i)
    return by_deg


def _linear_poly(a: QuotientAlgebra, coeffs) -> poly.Polynomial:
    f: poly.Polynomial = {}
    n = a.nvars
    for i, c in enumerate(coeffs):
        c %= a.p
        if c:
            f[(0,) * i + (1,) + (0,) * (n - i - 1)] = c
    return f


def is_linear_regular(a: QuotientAlgebra, form: poly.Polynomial,
                      degree_bound: int | None = None) -> bool:
    """Check multiplication by a linear form is injective on A_t, t <= D."""
    if a.krull_dim == 0:
        return False
    D = degree_bound if degree_bound is not None else a.degree_cap - 1
    D = min(D, a.degree_cap - 1)
    by_deg = _degree_slices(a)
    for t in range(D):
        src = by_deg.get(t, [])
        tgt = by_deg.get(t + 1, [])
        if not src:
            continue
        tidx = {a.basis[i]: r for r, i in enumerate(tgt)}
        mat = np.zeros((len(tgt), len(src)), dtype=np.int64)
        for c, i in enumerate(src):
            prod = poly.poly_mul(form, {a.basis[i]: 1}, a.p)
            nf = a.normal_form(prod)
            for mm, cc in nf.items():
                mat[tidx[mm], c] = cc
        if linalg.rank(mat, a.p) < len(src):
            return False
    return True


def find_linear_regular_element(a: QuotientAlgebra,
                                degree_bound: int | None = None,
                                attempts: int = 50,
                                seed: int = 0) -> poly.Polynomial | None:
    """A degree-1 form acting injectively on A_t for all t <= degree_bound.

    Tries unit coefficient vectors first, then seeded random draws;
    returns None if nothing passes within `attempts`.
    """
    if a.krull_dim == 0:
        raise ZeroDimensional("artinian ring has no regular element (depth 0)")
    n = a.nvars
    candidates = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rng = np.random.default_rng(seed)
    while len(candidates) < n + attempts:
        candidates.append(tuple(int(c) for c in rng.integers(0, a.p, n)))
    for coeffs in candidates:
        form = _linear_poly(a, coeffs)
        if form and is_linear_regular(a, form, degree_bound):
            return form
    return None


def quotient_by_linear_form(a: QuotientAlgebra,
                            form: poly.Polynomial) -> QuotientAlgebra:
    """B = A/(x) for a degree-1 form x, rebuilt by eliminating a variable.

    The variable with the smallest index and nonzero coefficient is
    solved for and substituted into every ideal generator; generators
    keep all terms in degree >= 2, so the rebuilt presentation is legal.
    """
    if not form or {poly.mono_degree(m) for m in form} != {1}:
        raise ParseError("quotient form must be homogeneous of degree 1")
    if not a.normal_form(form):
        raise CurvlabError("linear form is zero in A")
    n = a.nvars
    coeffs = [0] * n
    for m, c in form.items():
        coeffs[m.index(1)] = c
    j = next(i for i, c in enumerate(coeffs) if c)
    inv = pow(coeffs[j], -1, a.p)
    new_vars = a.var_names[:j] + a.var_names[j + 1:]
    nn = len(new_vars)
    # x_j = -inv * sum_{i != j} c_i x_i, written in the new variables
    images: list[poly.Polynomial] = []
    for i in range(n):
        if i != j:
            k = i if i < j else i - 1
            images.append({(0,) * k + (1,) + (0,) * (nn - k - 1): 1})
        else:
            sub: poly.Polynomial = {}
            for i2, c in enumerate(coeffs):
                if i2 == j or not c:
                    continue
                k = i2 if i2 < j else i2 - 1
                mono = (0,) * k + (1,) + (0,) * (nn - k - 1)
                sub[mono] = (-inv * c) % a.p
            images.append(sub)
    # pad unit images to the right arity when the substitution is zero
    images = [{tuple(list(m) + [0] * (nn - len(m))): c for m, c in g.items()}
              if g else {} for g in images]
    new_gens = []
    for g in a.ideal:
        h = poly.substitute(g, [gi if gi else {(0,) * nn: 0} for gi in images], a.p)
        h = {m[:nn] if len(m) >= nn else m + (0,) * (nn - len(m)): c
             for m, c in h.items() if c}
        if h:
            new_gens.append(h)
    return _build_from_gens(a.p, new_vars, new_gens, a.order, 32)


def residue_field_name(a: QuotientAlgebra) -> str:
    return f"F_{a.p}"
