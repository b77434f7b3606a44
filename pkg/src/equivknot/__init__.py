"""
Equivariant unknotting of strongly invertible knots.

Braid words and their Garside normal form, intravergent braids and the
equivariant unknotting algorithm, 2-bridge fractions with the 4-move
criterion, exact signatures, and the quotient lower bounds.
"""

from .braid import (
    BraidError,
    BraidWord,
    braids_equal,
    canonical_form,
    closure_components,
    cycle_count,
    exponent_sum,
    format_word,
    parse_word,
    underlying_permutation,
)
from .intravergent import EquivariantMove, IntravergentBraid, apply_move, validate_intravergent
from .unknotter import (
    MoveLog,
    UnknotterError,
    VerificationReport,
    equivariant_unknot,
    sigma_low_rewrite,
    unknot_with_stats,
    verify_move_log,
)
from .torus import normalize_torus_parameters, torus_braid, torus_equivariant_unknotting_number
from .two_bridge import (
    TwoBridgeFraction,
    U4Witness,
    eval_continued_fraction,
    is_torus_fraction,
    jm_fraction,
    normalize,
    parse_fraction,
    same_knot,
    u4_equals_one,
    u4_search,
)
from .signature import Inertia, matrix_signature, signature, signature_magnitude, signature_q2_jm
from .registry import QuotientData, Registry, RegistryError, load_registry
from .bounds import (
    knot_bounds,
    nonadditivity_report,
    type_A_lower,
    type_B_lower,
    type_C_lower,
    unknotting_lower_bound,
)

__version__ = "0.1.0"
