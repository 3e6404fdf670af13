"""Perfect-play engine for the k-heap Wythoff-style token game (k >= 3).

Move rules: take any positive number of tokens from up to k-1 heaps, or
the same positive number from all k heaps; whoever takes the last token
wins.  The package classifies positions, constructs winning moves,
verifies the closed form against a brute-force retrograde engine,
reproduces the two-heap Wythoff baseline, and measures how rare the
cold positions are.
"""

from .core import (
    MAX_HEAP_COUNT,
    PClass,
    Position,
    U64_MAX,
    enumerate_p_class,
    exact_triangular_index,
    is_p_position,
    normalize,
    p_class_index,
    p_position_containing,
    triangular,
    triangular_floor_index,
)
from .errors import ArithmeticRangeError, IllegalMoveError, ResourceLimitError
from .oracle import (
    AgreementReport,
    GrundyTable,
    exhaustive_agreement,
    grundy,
    mex,
    oracle_classify,
)
from .strategy import (
    Analysis,
    Derivation,
    DiagonalMove,
    Move,
    SubsetMove,
    all_winning_moves,
    analyze,
    apply,
    engine_move,
    followers,
    is_legal,
    violated_rule,
)
from .wythoff import WythoffPair, beatty_pair, wythoff_classify, wythoff_pairs_mex
from .density import (
    DensityReport,
    closed_form_bounds,
    count_partitions,
    density_report,
    density_rows,
    fitted_loglog_slope,
    nu_exact,
    pi_exact,
    ratio_scan,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_HEAP_COUNT",
    "U64_MAX",
    "Position",
    "PClass",
    "normalize",
    "triangular",
    "triangular_floor_index",
    "exact_triangular_index",
    "is_p_position",
    "p_class_index",
    "enumerate_p_class",
    "p_position_containing",
    "Move",
    "SubsetMove",
    "DiagonalMove",
    "Analysis",
    "Derivation",
    "is_legal",
    "violated_rule",
    "apply",
    "followers",
    "analyze",
    "all_winning_moves",
    "engine_move",
    "mex",
    "GrundyTable",
    "oracle_classify",
    "grundy",
    "exhaustive_agreement",
    "AgreementReport",
    "WythoffPair",
    "wythoff_pairs_mex",
    "beatty_pair",
    "wythoff_classify",
    "DensityReport",
    "count_partitions",
    "pi_exact",
    "nu_exact",
    "closed_form_bounds",
    "density_report",
    "density_rows",
    "ratio_scan",
    "fitted_loglog_slope",
    "ArithmeticRangeError",
    "ResourceLimitError",
    "IllegalMoveError",
]
