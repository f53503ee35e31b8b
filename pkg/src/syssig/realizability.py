"""Deciding which vectors are system signatures, and building a witness system.

The non-cut sets of a system form a simplicial complex whose face counts are
fixed by the signature: ``f_l = C(n, l) * (s_{l+1} + ... + s_n)``. A vector is a
signature exactly when those counts are integers satisfying the
Kruskal-Katona shadow bounds. The witness takes, at every size ``l``, the
first ``C(n, l) * (s_1 + ... + s_l)`` subsets in lex order as cut sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Sequence

from .combinatorics import Subset, colex_unrank, lex_subsets, shadow_size
from .exceptions import CapacityError, NonIntegerFaceCount, NotProbabilityVector
from .signature import Counts, signature_by_counting
from .system import System, all_systems

MAX_ENUMERATION_N = 5


@dataclass(frozen=True)
class Violation:
    """Why a candidate was rejected.

    ``stage`` is ``"probability"``, ``"integrality"`` or ``"shadow"``. For a
    shadow failure, ``shadow`` is the minimum shadow of ``f_level`` sets and
    ``bound`` is the available ``f_{level-1}``.
    """

    stage: str
    level: Optional[int] = None
    shadow: Optional[int] = None
    bound: Optional[int] = None
    message: str = ""

    def to_json(self) -> dict:
        doc = {"stage": self.stage, "level": self.level}
        if self.shadow is not None:
            doc["shadow"] = self.shadow
            doc["bound"] = self.bound
        if self.message:
            doc["message"] = self.message
        return doc


@dataclass(frozen=True)
class Verdict:
    realizable: bool
    witness: Optional[System] = None
    violation: Optional[Violation] = None

    def __post_init__(self):
        if self.realizable != (self.witness is not None) or self.realizable == (self.violation is not None):
            raise ValueError("a verdict carries a witness if realizable and a violation otherwise")

    def to_json(self) -> dict:
        return {
            "realizable": self.realizable,
            "witness": self.witness.to_json() if self.witness else None,
            "violation": self.violation.to_json() if self.violation else None,
        }


def _probability_vector(candidate: Sequence) -> list[Fraction]:
    if len(candidate) == 0:
        raise NotProbabilityVector("empty vector")
    try:
        entries = [Fraction(x) for x in candidate]
    except (TypeError, ValueError) as exc:
        raise NotProbabilityVector(f"entries must be exact rationals: {exc}") from None
    if any(x < 0 for x in entries):
        raise NotProbabilityVector("negative entry")
    if sum(entries) != 1:
        raise NotProbabilityVector(f"entries sum to {sum(entries)}, not 1")
    return entries


def _integral(value: Fraction, level: int) -> int:
    if value.denominator != 1:
        raise NonIntegerFaceCount(level, value)
    return int(value)


def fvector_from_candidate(candidate: Sequence) -> list[int]:
    """Face counts (f_0, ..., f_n) of the non-cut complex a signature would force.

    Raises NotProbabilityVector, or NonIntegerFaceCount naming the first level
    whose count is fractional.
    """
    s = _probability_vector(candidate)
    n = len(s)
    tail = Fraction(1)
    f = []
    for l in range(n + 1):
        if l:
            tail -= s[l - 1]
        f.append(_integral(comb(n, l) * tail, l))
    return f


def cut_segment_sizes(candidate: Sequence) -> list[int]:
    """Number of cut sets of each size 1..n, ``C(n, l) * (s_1 + ... + s_l)``."""
    f = fvector_from_candidate(candidate)
    n = len(f) - 1
    return [comb(n, l) - f[l] for l in range(1, n + 1)]


def kk_check(f: Sequence[int]) -> Optional[Violation]:
    """Return None if ``f`` is the f-vector of a complex, else the violation.

    Levels are scanned from the top down; the reported level is the highest
    one whose minimum shadow exceeds the count one level below.
    """
    n = len(f) - 1
    if n < 0 or f[0] != 1:
        return Violation("shadow", 0, message="f_0 must be 1")
    for l in range(1, n + 1):
        if not 0 <= f[l] <= comb(n, l):
            return Violation("shadow", l, message=f"f_{l} = {f[l]} outside 0..C({n},{l})")
    for l in range(n, 0, -1):
        sh = shadow_size(f[l], l)
        if sh > f[l - 1]:
            return Violation("shadow", l, shadow=sh, bound=f[l - 1])
    return None


def synthesis_segments(candidate: Sequence) -> list[list[Subset]]:
    """Per-size initial lex segments of the candidate's cut sets (sizes 1..n)."""
    sizes = cut_segment_sizes(candidate)
    n = len(sizes)
    segments = []
    for l, k in enumerate(sizes, start=1):
        if not 0 <= k <= comb(n, l):
            raise NotProbabilityVector(f"cut count {k} at size {l} outside 0..C({n},{l})")
        it = lex_subsets(n, l)
        segments.append([next(it) for _ in range(k)])
    return segments


def criterion_check(segments: Sequence[Sequence[Sequence[int]]], n: Optional[int] = None) -> Optional[int]:
    """Check that every one-element extension of a level-l member is at level l+1.

    ``segments[l - 1]`` holds the size-``l`` sets. Returns None on success or
    the first level ``l`` with a member whose extension is missing.
    """
    if n is None:
        n = len(segments)
    levels = []
    for l, seg in enumerate(segments, start=1):
        members = {tuple(sorted(s)) for s in seg}
        if any(len(s) != l for s in members):
            raise ValueError(f"segment {l} is not {l}-uniform")
        levels.append(members)
    for l in range(1, len(levels)):
        upper = levels[l]
        for s in levels[l - 1]:
            for x in range(1, n + 1):
                if x not in s and tuple(sorted(s + (x,))) not in upper:
                    return l
    return None


def synthesize(candidate: Sequence) -> System:
    """A system whose signature is ``candidate``.

    The candidate must pass :func:`check_candidate`'s tests; otherwise the
    result is undefined (the cut segments do not form an up-set).
    """
    sizes = cut_segment_sizes(candidate)
    n = len(sizes)
    minimal: list[Subset] = []
    last_below: Optional[Subset] = None
    for l, k in enumerate(sizes, start=1):
        last = None
        for s in itertools.islice(lex_subsets(n, l), k):
            # the level below is a lex prefix, so membership is a tuple comparison;
            # in an up-set a member is minimal iff no one-smaller subset is a member
            if last_below is None or all(s[:i] + s[i + 1:] > last_below for i in range(l)):
                minimal.append(s)
            last = s
        last_below = last
    return System(n, minimal)


def check_candidate(candidate: Sequence) -> Verdict:
    """Decide whether ``candidate`` is a signature and build a witness if so."""
    try:
        f = fvector_from_candidate(candidate)
    except NonIntegerFaceCount as exc:
        return Verdict(False, violation=Violation("integrality", exc.level, message=str(exc)))
    except NotProbabilityVector as exc:
        return Verdict(False, violation=Violation("probability", message=str(exc)))
    bad = kk_check(f)
    if bad is not None:
        return Verdict(False, violation=bad)
    witness = synthesize(candidate)
    counts = signature_by_counting(witness)
    n = len(f) - 1
    if [Fraction(c, factorial(n)) for c in counts] != [Fraction(x) for x in candidate]:
        raise AssertionError(f"witness {witness.min_cuts} has counts {counts}, not the candidate")
    return Verdict(True, witness=witness)


def build_reverse_lex_complex(f: Sequence[int]) -> list[Subset]:
    """The empty set plus the first ``f_l`` colex ``l``-subsets for each l >= 1."""
    n = len(f) - 1
    family: list[Subset] = [()]
    for l in range(1, n + 1):
        if f[l] > comb(n, l):
            raise ValueError(f"f_{l} = {f[l]} exceeds C({n},{l})")
        family.extend(colex_unrank(r, l) for r in range(f[l]))
    return family


def enumerate_witnesses(n: int) -> dict[Counts, System]:
    """Every achievable count vector on ``n`` components with its lex-least witness."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise CapacityError(f"exhaustive enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    found: dict[Counts, System] = {}
    for system in all_systems(n):
        counts = signature_by_counting(system)
        best = found.get(counts)
        if best is None or system.min_cuts < best.min_cuts:
            found[counts] = system
    return found


def enumerate_achievable(n: int) -> set[Counts]:
    return set(enumerate_witnesses(n))
