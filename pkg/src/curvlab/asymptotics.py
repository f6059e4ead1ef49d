"""Finite-window curvature estimators.

Ratio statistics over the tail of a Betti/Bass prefix drive the
reported interval (n-th roots converge too slowly at desk depth; the
discrete form of the root-vs-ratio inequality is exposed as a checkable
bound instead).  All ratios are exact Fractions; nothing here decides
that a limit exists — reports carry the window and a heuristic flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroEntry

# a tail whose minimum consecutive ratio clears this is called exponential;
# between 1 and this, polynomial growth is the best finite-window guess
EXPONENTIAL_CUTOFF = Fraction(11, 10)


@dataclass
class CurvatureInterval:
    lo: Fraction
    hi: Fraction
    method: str                 # "ratio-window"
    window: tuple[int, int]     # [n0, n1] indices used
    classification: str         # finite-pd | periodic/bounded | polynomial | exponential

    def as_floats(self) -> tuple[float, float]:
        return float(self.lo), float(self.hi)

    def to_json(self) -> dict:
        return {
            "lo": str(self.lo), "hi": str(self.hi),
            "lo_float": float(self.lo), "hi_float": float(self.hi),
            "method": self.method, "window": list(self.window),
            "classification": self.classification,
        }


def ratio_window(seq: list[int], window: int) -> tuple[Fraction, Fraction]:
    """(min, max) of c_{n+1}/c_n over the last `window` steps."""
    if window < 1 or len(seq) < window + 1:
        raise ValueError("sequence too short for the requested window")
    tail = seq[-(window + 1):]
    if any(c == 0 for c in tail):
        raise ZeroEntry("zero entry in the tail window (finite projective dimension)")
    ratios = [Fraction(tail[i + 1], tail[i]) for i in range(window)]
    return min(ratios), max(ratios)


def root_window(seq: list[int], window: int) -> tuple[float, float]:
    """(min, max) of c_n^{1/n} over the last `window` indices (n >= 1)."""
    n1 = len(seq) - 1
    n0 = n1 - window + 1
    if n0 < 1:
        raise ValueError("sequence too short for the requested window")
    if any(seq[n] == 0 for n in range(n0, n1 + 1)):
        raise ZeroEntry("zero entry in the tail window (finite projective dimension)")
    roots = [seq[n] ** (1.0 / n) for n in range(n0, n1 + 1)]
    return min(roots), max(roots)


def check_discrete_bounds(seq: list[int]) -> bool:
    """The exactly-true discrete root/ratio inequality over the full prefix:
    c_1 * (min ratio)^{N-1} <= c_N <= c_1 * (max ratio)^{N-1}."""
    pos = seq[1:]
    if any(c == 0 for c in pos) or len(pos) < 2:
        return True
    ratios = [Fraction(pos[i + 1], pos[i]) for i in range(len(pos) - 1)]
    n = len(pos) - 1
    return (pos[0] * min(ratios) ** n <= pos[-1] <= pos[0] * max(ratios) ** n)


def curvature_interval(betti: list[int], window: int) -> CurvatureInterval:
    """Interval estimate for curv from a Betti prefix.

    finite-pd (some zero) -> [0, 0]; constant tail -> periodic/bounded
    [1, 1]; otherwise [min ratio, max ratio] classified by the growth of
    the tail ratios.
    """
    depth = len(betti) - 1
    if depth < window + 2:
        raise ValueError(f"depth {depth} must be at least window + 2 = {window + 2}")
    if 0 in betti:
        return CurvatureInterval(Fraction(0), Fraction(0), "ratio-window",
                                 (depth - window, depth), "finite-pd")
    lo, hi = ratio_window(betti, window)
    n0, n1 = depth - window, depth
    if lo == hi == 1:
        return CurvatureInterval(Fraction(1), Fraction(1), "ratio-window",
                                 (n0, n1), "periodic/bounded")
    if lo >= EXPONENTIAL_CUTOFF:
        cls = "exponential"
    elif hi <= 1:
        cls = "periodic/bounded"
    else:
        cls = "polynomial"
    return CurvatureInterval(lo, hi, "ratio-window", (n0, n1), cls)


def curvature_estimate(res, window: int = 4) -> CurvatureInterval:
    """Curvature interval of a FreeResolution (ratio window over its betti)."""
    return curvature_interval(res.betti, window)
