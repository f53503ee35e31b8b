"""Signatures of systems.

All arithmetic is on the unnormalized count vector ``N`` (entry ``i`` is the
number of failure orders that kill the system at the ``i``-th failure, so the
entries sum to ``n!``). :func:`normalize` turns counts into exact fractions.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .exceptions import CapacityError, NotProbabilityVector
from .system import System, cut_counts_by_size, cut_table

MAX_PERMUTATION_N = 9
MAX_INCLUSION_EXCLUSION_SETS = 20

Counts = tuple[int, ...]


def _check_level(n: int, l: int):
    if n < 1 or not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got n={n}, l={l}")


def series_family_counts(n: int, l: int) -> Counts:
    """Counts for the system whose cut sets are the singletons {1}, ..., {l}."""
    _check_level(n, l)
    w = factorial(n - l) * factorial(l)
    return tuple(w * comb(n - i, l - 1) if i <= n - l + 1 else 0 for i in range(1, n + 1))


def dual_family_counts(n: int, l: int) -> Counts:
    """Counts for the system with the single cut set {1, ..., l}."""
    _check_level(n, l)
    w = factorial(n - l) * factorial(l)
    return tuple(w * comb(i - 1, l - 1) if i >= l else 0 for i in range(1, n + 1))


def reverse(counts: Sequence) -> tuple:
    return tuple(reversed(counts))


def _verified(counts: list[int], n: int) -> Counts:
    if sum(counts) != factorial(n) or min(counts) < 0:
        raise AssertionError(f"inconsistent signature counts {counts} for n={n}")
    return tuple(counts)


def signature_by_counting(system: System) -> Counts:
    """Counts from the number of cut sets of each size.

    A uniformly random set of ``i`` failed components is a cut set with
    probability ``c_i / C(n, i)``, which is the cumulative signature ``S_i``.
    Hence ``N_i = c_i (n-i)! i! - c_{i-1} (n-i+1)! (i-1)!``.
    """
    n = system.n
    cuts = [0] + cut_counts_by_size(system)
    weight = [factorial(n - i) * factorial(i) for i in range(n + 1)]
    return _verified([cuts[i] * weight[i] - cuts[i - 1] * weight[i - 1] for i in range(1, n + 1)], n)


def signature_by_permutations(system: System) -> Counts:
    """Counts by walking every failure order and recording when the system dies."""
    n = system.n
    if n > MAX_PERMUTATION_N:
        raise CapacityError(f"permutation count needs n <= {MAX_PERMUTATION_N}, got {n}")
    is_cut = cut_table(system).tolist()
    bits = [1 << i for i in range(n)]
    counts = [0] * n
    for order in itertools.permutations(bits):
        failed = 0
        for i, b in enumerate(order):
            failed |= b
            if is_cut[failed]:
                counts[i] += 1
                break
    return _verified(counts, n)


def signature_inclusion_exclusion(system: System) -> Counts:
    """Counts as a signed sum of single-cut-set systems.

    The system dies by the ``i``-th failure iff some minimal cut set has failed,
    so inclusion-exclusion over nonempty subfamilies expresses its counts as
    ``sum (-1)^(|G|+1) * dual_family_counts(n, |union G|)``.
    """
    n = system.n
    masks = system.masks
    if len(masks) > MAX_INCLUSION_EXCLUSION_SETS:
        raise CapacityError(
            f"inclusion-exclusion needs at most {MAX_INCLUSION_EXCLUSION_SETS} cut sets, got {len(masks)}"
        )
    # signed multiplicity of each union over all nonempty subfamilies seen so far
    unions: dict[int, int] = {}
    for m in masks:
        step = dict(unions)
        for u, coef in unions.items():
            step[u | m] = step.get(u | m, 0) - coef
        step[m] = step.get(m, 0) + 1
        unions = step
    by_size = [0] * (n + 1)
    for u, coef in unions.items():
        by_size[u.bit_count()] += coef
    total = [0] * n
    for size, coef in enumerate(by_size):
        if coef:
            for i, v in enumerate(dual_family_counts(n, size)):
                total[i] += coef * v
    return _verified(total, n)


METHODS = {
    "count": signature_by_counting,
    "ie": signature_inclusion_exclusion,
    "perm": signature_by_permutations,
}


def signature(system: System, method: str = "count") -> Counts:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; choose from {sorted(METHODS)}") from None
    return fn(system)


def normalize(counts: Sequence[int]) -> tuple[Fraction, ...]:
    total = factorial(len(counts))
    return tuple(Fraction(c, total) for c in counts)


def cumulative(signature: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(itertools.accumulate(signature))


def to_counts(signature: Sequence) -> Counts:
    """Validate a probability vector and scale it to integer counts.

    Raises NotProbabilityVector for negative entries, a total other than 1, or
    entries that are not multiples of ``1/n!``.
    """
    n = len(signature)
    if n == 0:
        raise NotProbabilityVector("empty vector")
    entries = [Fraction(x) for x in signature]
    if any(x < 0 for x in entries):
        raise NotProbabilityVector(f"negative entry in {signature}")
    if sum(entries) != 1:
        raise NotProbabilityVector(f"entries sum to {sum(entries)}, not 1")
    scaled = [x * factorial(n) for x in entries]
    if any(x.denominator != 1 for x in scaled):
        raise NotProbabilityVector(f"entries of {signature} are not multiples of 1/{n}!")
    return tuple(int(x) for x in scaled)
