"""
Auditing the obstruction theorems at finite depth
=================================================

The theorems under audit relate curvature gaps, Tor/Ext vanishing, and
the multiplicity e of the ring.  At finite depth the engine replaces
each limit by its window interval and each strict inequality by an
exact cross-multiplied integer check; a missing hypothesis yields
VACUOUS, never a silent pass.  Complete intersections are rejected up
front -- the statements assume the ring is not one.

All of this is also available on the command line:

    curvlab audit first  r3.toml --module mod-a.toml --steps 10
    curvlab audit third  r3.toml --module mod-bc.toml --i0 0
    curvlab audit second-tor r3.toml --module mod-a.toml
"""

from curvlab import (SetupViolation, build_algebra, cyclic_module,
                     free_module, residue_field, resolve)
from curvlab.audit import (audit_first, audit_second_tor, audit_third,
                           invariant_suite)

r3 = build_algebra(101, ["a", "b", "c"], ["a^2", "b*c", "c^2", "b^2 - a*c"])
mod_a = cyclic_module(r3, ["a"])
mod_bc = cyclic_module(r3, ["b", "c"])
res_k = resolve(residue_field(r3), 10)


def show(rec):
    print(f"  {rec.name}: {rec.verdict}"
          + (f" (margin {rec.margin:.4f})" if rec.margin is not None else ""))
    for c in rec.caveats:
        print(f"    note: {c}")


# ---------------------------------------------------------------------------
# First theorem: a genuine curvature gap hi(M) < lo(k) forces both
# curv(k) <= e/2 - 1 and curv(M) < sqrt(e) - 1.  The periodic module
# A/(a) exhibits the gap; the interval for k sits right at the sharp
# bound e/2 - 1 = 2, inside the tolerance.

print("audit first on (R3, A/(a)):")
show(audit_first(r3, mod_a, 10, 4, res_k=res_k))

# A/(b,c) has the same curvature as k, so there is no gap to exploit.
print("audit first on (R3, A/(b,c)):")
show(audit_first(r3, mod_bc, 10, 4, res_k=res_k))

# ---------------------------------------------------------------------------
# Second theorem: a Tor vanishing window lets the audit shift M by a
# syzygy and test e >= (1 + ratio_N)(1 + ratio_M) exactly.

print("audit second-tor on (R3, A/(a), A):")
show(audit_second_tor(r3, mod_a, free_module(r3, 1), 8, 3))

# ---------------------------------------------------------------------------
# Third theorem: if beta_1(M)/beta_0(M) clears e/(1 + curv k) - 1, then
# curv(M) must reach curv(k).  The doubling module clears it with ratio
# exactly 2; the periodic module does not, and honestly reports VACUOUS
# -- the statement is known to fail when the quotient is by a single
# element.

print("audit third on (R3, A/(b,c), i0 = 0):")
show(audit_third(r3, mod_bc, 0, 10, 4, res_k=res_k))
print("audit third on (R3, A/(a), i0 = 0):")
show(audit_third(r3, mod_a, 0, 10, 4, res_k=res_k))

# ---------------------------------------------------------------------------
# The gate: over a complete intersection every theorem audit refuses.

r1 = build_algebra(101, ["x"], ["x^2"])
try:
    audit_first(r1, residue_field(r1), 8, 4)
except SetupViolation as exc:
    print("\nCI gate:", exc)

# ---------------------------------------------------------------------------
# Unconditional invariants never need hypotheses: the randomized suite
# fuzzes the exact identities over random modules.

report = invariant_suite(r3, seed=0, count=10)
print("\ninvariant suite on R3 (10 cases):", report.verdict)
for c in report.checks:
    print(f"  {c.name}: {c.verdict} [{c.instances} checked]")
