"""
Curvature from finite windows
=============================

curv(M) = limsup beta_n(M)^{1/n} is a limit, and no finite computation
sees a limit.  What the engine reports instead is an interval built
from consecutive-ratio extremes over a trailing window, together with a
growth classification:

    finite-pd          a zero appears in the Betti sequence
    periodic/bounded   the tail is constant
    exponential        every tail ratio clears the cutoff 1.1
    polynomial         growth without a clear exponential signal

The interval endpoints are exact rationals -- no floating point enters
until display time.
"""

from fractions import Fraction

from curvlab import (build_algebra, curvature_interval, cyclic_module,
                     ratio_window, residue_field, resolve, root_window)

r3 = build_algebra(101, ["a", "b", "c"], ["a^2", "b*c", "c^2", "b^2 - a*c"])

# ---------------------------------------------------------------------------
# The residue field: beta_n = 2^{n+1} - 1, so the true curvature is 2
# and the finite ratios straddle it from above.

res = resolve(residue_field(r3), 10)
iv = curvature_interval(res.betti, window=4)
print("k over the h = 2 ring")
print("  betti:   ", res.betti)
print("  interval:", iv.lo, "..", iv.hi, f"({iv.classification})")
print("  floats:  ", float(iv.lo), float(iv.hi))
assert iv.lo == Fraction(2047, 1023)  # exactly (2^11 - 1)/(2^10 - 1)

# The root-based window is a coarser second opinion on the same tail.
print("  roots:   ", root_window(res.betti, 4))

# ---------------------------------------------------------------------------
# A periodic module sits at the bottom of the curvature scale: constant
# Betti numbers give the exact interval [1, 1].

mod_a = cyclic_module(r3, ["a"])
iv = curvature_interval(resolve(mod_a, 10).betti, window=4)
print("\nA/(a):", iv.lo, "..", iv.hi, f"({iv.classification})")

# ---------------------------------------------------------------------------
# Windows are honest about what they cannot see.  A polynomially
# growing sequence keeps its tail ratios under the cutoff, but a short
# window on a slow exponential would look the same -- which is why every
# audit built on these intervals carries a tolerance and can come out
# VACUOUS rather than guessing.

print("\nsynthetic beta_n = n + 1:",
      curvature_interval(list(range(1, 15)), 4).classification)
print("ratio window of that tail:", ratio_window(list(range(1, 15)), 4))
