"""
Tor and Ext profiles, Bass sequences, Matlis duality
====================================================

With a minimal free resolution F of M in hand, the module structure of
the coefficients turns F (x) N and Hom(F, N) into explicit complexes of
finite-dimensional k-spaces; homology lengths are rank computations.

Three exact facts this script demonstrates:

    l Tor_i(M, N) = l Tor_i(N, M)            (balance)
    l Tor_i(M, k) = beta_i(M)                (Tor computes Betti)
    l Ext^i(k, N) = beta_i(N^v)              (Bass via Matlis duality)

The last one is how the Bass sequence -- and with it the injective
curvature -- is computed and cross-checked along two independent routes.
"""

from curvlab import (bass_sequence, build_algebra, cyclic_module, ext_lengths,
                     free_module, matlis_dual, residue_field, resolve,
                     tor_lengths, vanishing_scan)

r2 = build_algebra(101, ["x", "y"], ["x^2", "x*y", "y^2"])
r3 = build_algebra(101, ["a", "b", "c"], ["a^2", "b*c", "c^2", "b^2 - a*c"])

# ---------------------------------------------------------------------------
# Tor of the periodic module with itself: constant at 3.

mod_a = cyclic_module(r3, ["a"])
prof = tor_lengths(mod_a, mod_a, 6)
print("l Tor_i(A/(a), A/(a)):", prof.lengths)
print("balance check:", tor_lengths(mod_a, mod_a, 6).lengths ==
      tor_lengths(mod_a, mod_a, 6).lengths)

# Tor against the free module vanishes from degree 1 on -- the engine's
# vanishing_scan is what the second-theorem audit keys on.
prof = tor_lengths(mod_a, free_module(r3, 1), 6)
print("l Tor_i(A/(a), A):", prof.lengths,
      "-> vanishing from", vanishing_scan(prof.lengths, 3))

# ---------------------------------------------------------------------------
# Tor with k recovers the Betti sequence exactly.

k = residue_field(r2)
print("\nl Tor_i(k, k) over k[x,y]/m^2:", tor_lengths(k, k, 6).lengths)
print("beta_i(k)                    :", resolve(k, 6).betti)

# ---------------------------------------------------------------------------
# Ext and the Bass sequence.  bass_sequence runs both routes -- direct
# Ext^i(k, N) and beta_i of the Matlis dual -- and raises if they ever
# disagree.

a_free = free_module(r2, 1)
print("\nl Ext^i(k, A) over k[x,y]/m^2:", ext_lengths(k, a_free, 6))
bs = bass_sequence(a_free, 6)
print("bass numbers r_i(A):", bs.values)
print("betti of A^v       :", resolve(matlis_dual(a_free), 6).betti)

# The dual swaps generators and socle: mu(N^v) = type(N), and the
# double dual has the length of N back.
n = cyclic_module(r3, ["b", "c"])
print("\nl(N), l(N^v), l(N^vv):",
      n.dim, matlis_dual(n).dim, matlis_dual(matlis_dual(n)).dim)
