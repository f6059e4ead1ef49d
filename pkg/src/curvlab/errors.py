"""Exception types shared across the package."""


class CurvlabError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CurvlabError):
    """Malformed polynomial string or input file."""


class GuardExceeded(CurvlabError):
    """Groebner basis computation ran past the degree guard.

    Usually means the input ideal is not artinian (or explosively far
    from it) and the computation would not terminate at desk scale.
    """


class BudgetExceeded(CurvlabError):
    """A free stage of a resolution grew past the k-dimension budget."""


class NotInMSquared(CurvlabError):
    """An ideal generator has a unit or linear term."""


class NotStandardGraded(CurvlabError):
    """Positive-dimensional input with non-homogeneous generators."""


class UnsupportedDimension(CurvlabError):
    """Operation only available in Krull dimension 0 or 1."""


class ZeroDimensional(CurvlabError):
    """A regular element was requested over an artinian ring."""


class NotArtinian(CurvlabError):
    """Module-level operation that needs a finite-length algebra."""


class MismatchError(CurvlabError):
    """Two independent computation routes disagreed (internal bug detector)."""


class ZeroEntry(CurvlabError):
    """A ratio/root window hit a zero Betti number (finite projective dimension)."""


class SetupViolation(CurvlabError):
    """Theorem audit invoked on a complete intersection ring."""


class FinitePd(CurvlabError):
    """Audit requires infinite projective dimension but a Betti number vanished."""


class NotRegular(CurvlabError):
    """Supplied linear form fails the degreewise regularity check."""


class UnknownPreset(CurvlabError):
    """Preset name not recognized."""
