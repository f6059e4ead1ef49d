"""
Minimal free resolutions and Betti sequences
============================================

The engine resolves a module M by iterated syzygies: present M
minimally, take the kernel, present that minimally, and so on.  Every
boundary matrix has entries in the maximal ideal, so the Betti numbers
beta_n(M) read off as the ranks of the free modules.

Two exact identities make good smoke tests at every depth:

    l(Omega^i M) + l(Omega^{i+1} M) = l(A) * beta_i(M)
    mu(Omega^i M) = beta_i(M)

This script resolves the residue field over the fixtures and a
1-periodic module, and checks both identities by hand.
"""

from curvlab import build_algebra, cyclic_module, min_gens, residue_field, resolve

r2 = build_algebra(101, ["x", "y"], ["x^2", "x*y", "y^2"])
r3 = build_algebra(101, ["a", "b", "c"], ["a^2", "b*c", "c^2", "b^2 - a*c"])

# ---------------------------------------------------------------------------
# Over the minimal-multiplicity ring the resolution of k doubles at
# every step: Omega(k) = m is two copies of k.

res = resolve(residue_field(r2), 8)
print("beta_n(k) over k[x,y]/m^2:", res.betti)

# ---------------------------------------------------------------------------
# Over the h = 2 example the count is beta_n(k) = 2^{n+1} - 1.  The
# length identity pins down every entry: with l(A) = 6,
# l(Omega^n) + l(Omega^{n+1}) must equal 6 * beta_n.

res = resolve(residue_field(r3), 8)
print("\nbeta_n(k) over the h = 2 ring:", res.betti)
lens = res.syzygy_lengths()
print("syzygy lengths:", lens)
for i in range(8):
    assert lens[i] + lens[i + 1] == 6 * res.betti[i]
    assert min_gens(res.syzygies[i]) == res.betti[i]
print("length identity and mu(Omega^i) = beta_i verified for i < 8")

# ---------------------------------------------------------------------------
# M = A/(a) is 1-periodic: a * (basis of aA) lands back on a itself, so
# the resolution repeats with beta_n = 1 forever.

mod_a = cyclic_module(r3, ["a"])
res = resolve(mod_a, 12)
print("\nbeta_n(A/(a)):", res.betti)

# The boundary matrices themselves are available; each entry is the
# coefficient vector of a ring element over the standard-monomial basis.
pm = res.boundaries[0]
print("first boundary is", pm.target, "x", pm.source,
      "with entries of length", pm.entries.shape[-1])
