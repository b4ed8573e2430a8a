"""Inverse type AII quantum Littlewood-Richardson map via slack data of recording tableaux."""

from ._kernels import BACKEND
from .errors import (
    DominanceViolation,
    InvalidTarget,
    InvariantViolation,
    MalformedLRS,
    NegativeGap,
    NonzeroSlack,
    NotACorner,
    NotFound,
    ParseError,
    ShapeMismatch,
    TableauError,
)
from .insertion import BumpExtraction, column_insert, pieri_product, prepend_column, reverse_extract
from .inverse import InversePair, inverse_null_slack, inverse_one_strip, inverse_trace, lr_aii_inverse
from .kweights import (
    KWeight,
    classify_n2,
    extremal_symplectic,
    generate_khw_set,
    k_weight,
    khw_vertical_strip,
    uv_sequences,
)
from .oracle import AuditReport, audit_bijection, enumerate_spt, enumerate_sst, forward_by_search
from .recording import (
    RecordingTableau,
    StripChain,
    blacklozenge,
    enumerate_rec,
    is_lrs,
    is_recording,
    lozenge,
    lozenge_inverse,
    strip_decomposition,
)
from .reduction import SymplecticColumn, partner, reduce, reduce_inverse, reduce_inverse_formula, removals
from .shapes import (
    Partition,
    SkewShape,
    SkewTableau,
    conjugate,
    is_even_partition,
    is_vertical_strip,
    is_yamanouchi,
    words,
    yamanouchi_tableau,
)
from .slack import SlackProfile, admissible_slacks, leq_r, slack_profile, validate_slack

__version__ = "0.1.0"
