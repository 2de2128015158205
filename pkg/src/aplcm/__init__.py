"""Exact least common multiples of arithmetic progressions and their lower bounds."""

from .bounds import (
    BoundKind,
    Corollary,
    HongYang,
    Main,
    bound_value,
    corollary_dominates,
    hypothesis_holds,
)
from .core import Progression, Ratio, divides, new_progression, term, threshold_index
from .errors import (
    AplcmError,
    HypothesisError,
    InternalContradiction,
    InvalidInputError,
    NotCoprimeError,
)
from .lcm import Decomposition, a_value, c_value, decompose, lcm_range
from .search import Counterexample, counterexample_search, full_search, probe, tight_pairs
from .verifier import Claim, SweepRanges, VerificationRecord, sweep

__version__ = "0.1.0"
