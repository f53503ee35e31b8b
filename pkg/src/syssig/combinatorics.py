"""Exact binomial arithmetic, cascade representations and subset orders.

Subsets are sorted tuples of 1-based component indices. Where speed matters
they are also handled as bitmasks, element ``i`` living in bit ``i - 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

Subset = tuple[int, ...]


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer, zero when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({n}, {k})")
    return comb(n, k)


def _largest_top(value: int, bottom: int) -> int:
    """Largest ``t >= bottom - 1`` with ``C(t, bottom) <= value``."""
    lo = bottom - 1
    hi = max(bottom, 1)
    while comb(hi, bottom) <= value:
        lo = hi
        hi *= 2
    # comb(lo, bottom) <= value < comb(hi, bottom)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if comb(mid, bottom) <= value:
            lo = mid
        else:
            hi = mid
    return lo


@dataclass(frozen=True)
class CascadeRep:
    """The ``level``-binomial expansion ``m = sum C(top, bottom)``.

    ``terms`` holds ``(top, bottom)`` pairs with ``bottom`` running down from
    ``level`` by one per term and ``top`` strictly decreasing, ``top >= bottom``.
    """

    level: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.level < 1 or not self.terms:
            raise ValueError("a cascade needs level >= 1 and at least one term")
        prev_top = None
        for offset, (top, bottom) in enumerate(self.terms):
            if bottom != self.level - offset or bottom < 1:
                raise ValueError(f"bad lower index {bottom} in {self.terms}")
            if top < bottom:
                raise ValueError(f"term C({top},{bottom}) violates top >= bottom")
            if prev_top is not None and top >= prev_top:
                raise ValueError(f"upper indices not strictly decreasing in {self.terms}")
            prev_top = top

    @property
    def value(self) -> int:
        return sum(comb(top, bottom) for top, bottom in self.terms)


def cascade_decompose(m: int, level: int) -> CascadeRep:
    """Greedy expansion of ``m >= 1`` as a sum of binomials starting at ``level``."""
    if m < 1:
        raise ValueError(f"cascade_decompose needs m >= 1, got {m}")
    if level < 1:
        raise ValueError(f"cascade_decompose needs level >= 1, got {level}")
    terms = []
    rest = m
    bottom = level
    while rest > 0:
        if bottom < 1:
            # unreachable: C(top, 1) = top absorbs any remainder at level 1
            raise AssertionError("cascade ran past level 1")
        top = _largest_top(rest, bottom)
        terms.append((top, bottom))
        rest -= comb(top, bottom)
        bottom -= 1
    return CascadeRep(level, tuple(terms))


def cascade_shadow(rep: CascadeRep) -> int:
    return sum(comb(top, bottom - 1) for top, bottom in rep.terms)


def cascade_shade(rep: CascadeRep) -> int:
    return sum(comb(top, bottom + 1) for top, bottom in rep.terms)


def shadow_size(m: int, level: int) -> int:
    """Minimum shadow of ``m`` sets of size ``level``; 0 for ``m = 0``."""
    if m == 0:
        return 0
    return cascade_shadow(cascade_decompose(m, level))


def shade_size(m: int, level: int) -> int:
    """Cascade upper operator of ``m`` at ``level``; 0 for ``m = 0``."""
    if m == 0:
        return 0
    return cascade_shade(cascade_decompose(m, level))


# -- orders ---------------------------------------------------------------

def lex_subsets(n: int, size: int) -> Iterator[Subset]:
    """All ``size``-subsets of 1..n in lexicographic order."""
    return itertools.combinations(range(1, n + 1), size)


def colex_key(subset: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(subset))


def colex_subsets(n: int, size: int) -> list[Subset]:
    return sorted(lex_subsets(n, size), key=colex_key)


def lex_unrank(rank: int, size: int, n: int) -> Subset:
    total = comb(n, size)
    if not 0 <= rank < total:
        raise ValueError(f"rank {rank} out of range for C({n},{size}) = {total}")
    out = []
    x = 1
    for remaining in range(size, 0, -1):
        # skip blocks of subsets whose next element is x
        while True:
            block = comb(n - x, remaining - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def lex_rank(subset: Sequence[int], n: int) -> int:
    rank = 0
    prev = 0
    size = len(subset)
    for pos, x in enumerate(subset):
        remaining = size - pos
        for skipped in range(prev + 1, x):
            rank += comb(n - skipped, remaining - 1)
        prev = x
    return rank


def colex_unrank(rank: int, size: int) -> Subset:
    """The ``rank``-th ``size``-subset of the positive integers in colex order."""
    if rank < 0:
        raise ValueError(f"rank must be non-negative, got {rank}")
    out = []
    for bottom in range(size, 0, -1):
        c = _largest_top(rank, bottom)
        rank -= comb(c, bottom)
        out.append(c + 1)
    return tuple(reversed(out))


def colex_rank(subset: Sequence[int]) -> int:
    return sum(comb(x - 1, i + 1) for i, x in enumerate(subset))


# -- families -------------------------------------------------------------

def family_lower_shadow(family: Iterable[Sequence[int]]) -> list[Subset]:
    """All sets one element smaller than some member, lex sorted.

    Raises ValueError for a family mixing cardinalities or holding the empty set.
    """
    members = [tuple(sorted(s)) for s in family]
    if not members:
        return []
    size = len(members[0])
    if any(len(s) != size for s in members):
        raise ValueError("family_lower_shadow needs a uniform family")
    if size == 0:
        raise ValueError("the empty set has no lower shadow")
    shadow = set()
    for s in members:
        shadow.update(itertools.combinations(s, size - 1))
    return sorted(shadow)


def is_downward_closed(family: Iterable[Sequence[int]]) -> bool:
    """True iff every subset of every member is a member too."""
    members = {tuple(sorted(s)) for s in family}
    for s in members:
        for i in range(len(s)):
            if s[:i] + s[i + 1:] not in members:
                return False
    return True


def to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for x in subset:
        mask |= 1 << (x - 1)
    return mask


def from_mask(mask: int) -> Subset:
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)
