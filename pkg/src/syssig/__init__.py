"""Exact signatures of coherent systems and Kruskal-Katona realizability."""

from .exceptions import (
    CapacityError,
    DegenerateSystemError,
    NonIntegerFaceCount,
    NotAntichainError,
    NotProbabilityVector,
    SignatureError,
)
from .realizability import (
    Verdict,
    Violation,
    check_candidate,
    enumerate_achievable,
    fvector_from_candidate,
    kk_check,
    synthesize,
)
from .signature import (
    normalize,
    reverse,
    signature,
    signature_by_counting,
    signature_by_permutations,
    signature_inclusion_exclusion,
)
from .system import System, cut_counts_by_size, dualize, evaluate, extract_minimal

__version__ = "0.1.0"
