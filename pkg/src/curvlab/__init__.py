"""curvlab: minimal free resolutions, Betti growth, Tor/Ext profiles and
curvature audits over artinian quotient algebras k[x_1..x_n]/I over F_p."""

__version__ = "0.1.0"

from .algebra import (QuotientAlgebra, build_algebra, find_linear_regular_element,
                      is_complete_intersection, is_linear_regular, multiplicity,
                      quotient_by_linear_form)
from .asymptotics import (CurvatureInterval, curvature_estimate,
                          curvature_interval, ratio_window, root_window)
from .audit import (AuditReport, CheckRecord, audit_first, audit_second_ext,
                    audit_second_tor, audit_third, check_first_inequality,
                    check_length_identity, invariant_suite, modx_check)
from .errors import (BudgetExceeded, CurvlabError, FinitePd, GuardExceeded,
                     MismatchError, NotArtinian, NotInMSquared, NotRegular,
                     NotStandardGraded, ParseError, SetupViolation,
                     UnknownPreset, UnsupportedDimension, ZeroDimensional,
                     ZeroEntry)
from .files import load_module, load_ring
from .homology import (BassSequence, TorProfile, bass_sequence, ext_lengths,
                       tor_lengths, vanishing_scan)
from .modrep import (ModuleRep, PresentationMatrix, cokernel_module,
                     cyclic_module, free_module, hom_module, matlis_dual,
                     min_gens, presentation_from_strings, residue_field,
                     socle_dim, tensor, zero_module)
from .presets import PRESET_NAMES, write_preset
from .resolution import (FreeResolution, minimal_presentation, resolve, syzygy)

__all__ = [name for name in dir() if not name.startswith("_")]
