"""Dense exact linear algebra over a prime field F_p.

Matrices are numpy int64 arrays with entries reduced into [0, p).  The
eliminations run internally in float64 so the bulk updates go through
BLAS matmuls; panel/block sizes are capped so that every accumulated dot
product stays strictly below 2**53 and the arithmetic is therefore exact.

Reduced row echelon form is canonical, so every routine built on it
(kernel bases, solve, pivot selection) is bit-reproducible regardless of
the internal blocking.
"""

from __future__ import annotations

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _block_size(p: int) -> int:
    # accumulate at most blk products of size (p-1)^2 per dot product
    return max(1, min(64, (1 << 53) // ((p - 1) ** 2 + 1)))


def reduce_mod(a, p: int) -> np.ndarray:
    return np.asarray(a, dtype=np.int64) % p


def _reduce_inplace(a: np.ndarray, p: int) -> None:
    """Fast in-place reduction of a float64 array into [0, p).

    Uses the multiply-by-reciprocal floor trick; a 1-ulp floor slip is
    repaired by the masked fixups, so the result is canonical.
    """
    q = a * (1.0 / p)
    np.floor(q, out=q)
    q *= p
    a -= q
    np.add(a, p, out=a, where=a < 0)
    np.subtract(a, p, out=a, where=a >= p)


def _forward(A: np.ndarray, p: int) -> list[int]:
    """In-place forward elimination of a float64 matrix to row echelon
    form with unit pivots.  Returns the pivot column list.

    Reductions mod p on the trailing block are deferred: multipliers and
    pivot rows are always reduced, so each bulk update adds at most
    blk * (p-1)^2 in magnitude and everything stays exact in float64.
    """
    m, n = A.shape
    blk = _block_size(p)
    flush_width = 4 * blk
    pivots: list[int] = []
    r = 0
    j = 0
    while j < n and r < m:
        r0 = r
        k = 0
        invs = np.zeros(blk)
        L = np.zeros((m - r0, blk))
        jstart = j
        while j < n and k < blk and (j - jstart) < flush_width:
            col = A[r0:, j]
            _reduce_inplace(col, p)
            # catch this column up on the panel's pending row operations
            for t in range(k):
                col[t] = (col[t] * invs[t]) % p
                col[t + 1:] -= L[t + 1:, t] * col[t]
            if k:
                _reduce_inplace(col, p)
            nz = np.nonzero(col[k:])[0]
            if nz.size:
                q = k + int(nz[0])
                if q != k:
                    A[[r0 + k, r0 + q], :] = A[[r0 + q, r0 + k], :]
                    L[[k, q], :] = L[[q, k], :]
                invs[k] = pow(int(col[k]), -1, p)
                A[r0 + k, j] = 1.0
                L[k + 1:, k] = col[k + 1:]
                col[k + 1:] = 0.0
                pivots.append(j)
                k += 1
            j += 1
        if k:
            # finalize the panel pivot rows' trailing columns, then bulk-update
            for t in range(k):
                row = A[r0 + t, j:]
                _reduce_inplace(row, p)
                row *= invs[t]
                _reduce_inplace(row, p)
                if t + 1 < k:
                    A[r0 + t + 1:r0 + k, j:] -= np.outer(L[t + 1:k, t], row)
            if r0 + k < m and j < n:
                A[r0 + k:, j:] -= L[k:, :k] @ A[r0:r0 + k, j:]
            r += k
    _reduce_inplace(A, p)
    return pivots


def _back(A: np.ndarray, p: int, pivots: list[int]) -> None:
    """In-place back elimination of a row echelon matrix to RREF."""
    blk = _block_size(p)
    r = len(pivots)
    t1 = r
    while t1 > 0:
        t0 = max(0, t1 - blk)
        _reduce_inplace(A[t0:t1, :], p)
        for t in range(t1 - 2, t0 - 1, -1):
            f = A[t, pivots[t + 1:t1]]
            if np.any(f):
                A[t, :] -= f @ A[t + 1:t1, :]
                _reduce_inplace(A[t, :], p)
        if t0 > 0:
            F = A[:t0, pivots[t0:t1]] % p
            A[:t0, :] -= F @ A[t0:t1, :]
        t1 = t0
    _reduce_inplace(A, p)


def rref(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.  Canonical output."""
    A = reduce_mod(a, p).astype(np.float64)
    pivots = _forward(A, p)
    _back(A, p, pivots)
    return A.astype(np.int64), pivots


def rank(a, p: int) -> int:
    A = reduce_mod(a, p).astype(np.float64)
    return len(_forward(A, p))


def kernel_with_free(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Canonical basis of the right null space, plus the free columns.

    Derived from RREF: one basis vector per free column, carrying a 1 at
    its free column and the negated RREF entries at the pivot columns.
    The rows of the basis matrix at the free columns form an identity, so
    coordinates of any kernel vector v are just v[free].
    """
    a = reduce_mod(a, p)
    n = a.shape[1]
    R, pivots = rref(a, p)
    free = [j for j in range(n) if j not in set(pivots)]
    K = np.zeros((n, len(free)), dtype=np.int64)
    for i, f in enumerate(free):
        K[f, i] = 1
    if pivots and free:
        K[pivots, :] = (-R[:len(pivots), :][:, free]) % p
    return K, free


def kernel_basis(a, p: int) -> np.ndarray:
    """Canonical basis of the right null space, as columns."""
    return kernel_with_free(a, p)[0]


def inverse(a, p: int) -> np.ndarray:
    """Inverse of a square matrix mod p; raises ValueError if singular."""
    a = reduce_mod(a, p)
    d = a.shape[0]
    if a.shape != (d, d):
        raise ValueError("inverse needs a square matrix")
    R, pivots = rref(np.hstack([a, np.eye(d, dtype=np.int64)]), p)
    if len(pivots) != d or pivots != list(range(d)):
        raise ValueError("matrix is singular mod p")
    return R[:, d:]


def solve(a, rhs, p: int):
    """Some solution of a @ x = rhs, or None if inconsistent.

    Returns the canonical solution with zeros at the free columns.
    """
    a = reduce_mod(a, p)
    b = reduce_mod(rhs, p).reshape(-1, 1)
    if a.shape[0] != b.shape[0]:
        raise ValueError("rhs length must equal the number of rows")
    n = a.shape[1]
    R, pivots = rref(np.hstack([a, b]), p)
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for t, pc in enumerate(pivots):
        x[pc] = R[t, n]
    return x


def matmul(a, b, p: int) -> np.ndarray:
    """Exact a @ b mod p, chunking the inner dimension to stay below 2**53."""
    a = reduce_mod(a, p).astype(np.float64)
    b = reduce_mod(b, p).astype(np.float64)
    inner = a.shape[-1]
    chunk = max(1, (1 << 53) // ((p - 1) ** 2 + 1))
    if inner <= chunk:
        return (a @ b % p).astype(np.int64)
    out = np.zeros((a.shape[0], b.shape[1]))
    for s in range(0, inner, chunk):
        out = (out + a[:, s:s + chunk] @ b[s:s + chunk, :]) % p
    return out.astype(np.int64)


def split_pivots(span, p: int) -> tuple[list[int], list[int]]:
    """Pivot columns of `span` plus the unit vectors completing its span.

    Returns (pivot column indices of span, indices j such that the unit
    vectors e_j extend a basis of the column space of `span` to the full
    space).  Both lists are the deterministic (smallest-pivot) choice.
    """
    span = reduce_mod(span, p)
    d, c = span.shape
    aug = np.hstack([span, np.eye(d, dtype=np.int64)])
    A = aug.astype(np.float64)
    pivots = _forward(A, p)
    in_span = [j for j in pivots if j < c]
    ext = [j - c for j in pivots if j >= c]
    return in_span, ext


def complement_pivots(span, p: int) -> tuple[int, list[int]]:
    """Rank of the column span plus the unit vectors extending it."""
    in_span, ext = split_pivots(span, p)
    return len(in_span), ext
