"""
Building quotient algebras and reading off their invariants
===========================================================

curvlab works over A = k[x_1..x_n]/I with k a prime field.  The
constructor runs Buchberger's algorithm, enumerates the standard
monomials, and precomputes the multiplication tables; everything
downstream is exact linear algebra mod p on those tables.

This script builds the four shipped fixtures and prints the invariants
the theorems care about: length, multiplicity, embedding dimension, the
Hilbert function, and whether the ring is a complete intersection.
"""

from curvlab import build_algebra

# ---------------------------------------------------------------------------
# The hypersurface k[x]/(x^2): the smallest interesting artinian ring,
# and a complete intersection (so the theorem audits refuse it).

r1 = build_algebra(101, ["x"], ["x^2"])
print("r1 = k[x]/(x^2)")
print("  summary:", r1.summary())
print("  basis:  ", r1.basis)

# ---------------------------------------------------------------------------
# The ring of minimal multiplicity k[x,y]/m^2.  Here m^2 = 0, so every
# syzygy computation collapses to counting: beta_n(k) = 2^n.

r2 = build_algebra(101, ["x", "y"], ["x^2", "x*y", "y^2"])
print("\nr2 = k[x,y]/(x^2, xy, y^2)")
print("  summary:", r2.summary())
print("  hilbert:", r2.hilbert)

# ---------------------------------------------------------------------------
# The h = 2 semigroup example: A = k[a,b,c]/(a^2, bc, c^2, b^2 - ac),
# the artinian reduction of the numerical semigroup ring with a = t^3,
# b = t^4, c = t^5.  It has length = multiplicity = 6 and is *not* a
# complete intersection -- mu(I) = 4 > 3 = embedding dimension.

r3 = build_algebra(101, ["a", "b", "c"], ["a^2", "b*c", "c^2", "b^2 - a*c"])
print("\nr3 = k[a,b,c]/(a^2, bc, c^2, b^2 - ac)")
print("  summary:", r3.summary())
print("  basis:  ", r3.basis)
print("  normal form of b^2:", r3.normal_form(r3.parse("b^2")))

# ---------------------------------------------------------------------------
# A one-dimensional graded ring for the mod-x lemma: k[x,y]/(y^2).  Its
# Hilbert function stabilizes at the multiplicity e = 2, and x is a
# linear regular element.

r4 = build_algebra(101, ["x", "y"], ["y^2"])
print("\nr4 = k[x,y]/(y^2)")
print("  summary:", r4.summary())
print("  hilbert:", r4.hilbert, "(stabilizes at e = 2)")
