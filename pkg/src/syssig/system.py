"""Coherent systems encoded by their minimal cut sets."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

from .combinatorics import Subset, from_mask, to_mask
from .exceptions import CapacityError, DegenerateSystemError, NotAntichainError

#: largest universe whose 2^n truth table we are willing to build
MAX_TABLE_N = 25


#: above this many sets, minimality is decided on a truth table instead of pairwise
PAIRWISE_LIMIT = 64


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    masks = set(masks)
    n = max(masks, default=0).bit_length()
    if len(masks) > PAIRWISE_LIMIT and n <= MAX_TABLE_N:
        return _minimal_of_upset(n, up_closure(n, masks))
    kept: list[int] = []
    for m in sorted(masks, key=lambda m: (m.bit_count(), m)):
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _canonical(sets: Iterable[Iterable[int]]) -> tuple[Subset, ...]:
    return tuple(sorted(tuple(sorted(s)) for s in sets))


def extract_minimal(family: Iterable[Sequence[int]]) -> tuple[Subset, ...]:
    """Members of ``family`` that contain no other member, lex sorted."""
    masks = [to_mask(s) for s in family]
    if not masks:
        raise DegenerateSystemError("cannot extract a minimal family from an empty family")
    if 0 in masks:
        raise DegenerateSystemError("family contains the empty set")
    return _canonical(from_mask(m) for m in _minimal_masks(masks))


@dataclass(frozen=True)
class System:
    """A non-constant monotone system given by its minimal cut sets.

    ``min_cuts`` is stored as a lex sorted tuple of sorted tuples, so two
    systems compare equal exactly when their structure functions do.
    """

    n: int
    min_cuts: tuple[Subset, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"universe size must be positive, got {self.n}")
        cuts = _canonical(self.min_cuts)
        if not cuts:
            raise DegenerateSystemError("empty cut family gives a system that never fails")
        for c in cuts:
            if not c:
                raise DegenerateSystemError("empty cut set gives a system that never works")
            if len(set(c)) != len(c):
                raise ValueError(f"repeated component in cut set {c}")
            if c[0] < 1 or c[-1] > self.n:
                raise ValueError(f"cut set {c} leaves the universe 1..{self.n}")
        if len(set(cuts)) != len(cuts) or len(_minimal_masks(map(to_mask, cuts))) != len(cuts):
            raise NotAntichainError("minimal cut sets must not contain one another")
        object.__setattr__(self, "min_cuts", cuts)

    @classmethod
    def from_family(cls, n: int, family: Iterable[Sequence[int]]) -> "System":
        """Build a system from any family of cut sets, keeping the minimal ones."""
        return cls(n, extract_minimal(family))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(c) for c in self.min_cuts)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def min_paths(self) -> tuple[Subset, ...]:
        return dualize(self).min_cuts

    def is_cut(self, failed: Iterable[int]) -> bool:
        m = to_mask(failed)
        return any(c & m == c for c in self.masks)

    def to_json(self) -> dict:
        return {"n": self.n, "min_cut_sets": [list(c) for c in self.min_cuts]}

    @classmethod
    def from_json(cls, doc: dict, minimize: bool = False) -> "System":
        if not isinstance(doc, dict) or "n" not in doc or "min_cut_sets" not in doc:
            raise ValueError('system must be an object with keys "n" and "min_cut_sets"')
        n = doc["n"]
        sets = doc["min_cut_sets"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError('"n" must be an integer')
        if not isinstance(sets, list) or not all(
            isinstance(s, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in s)
            for s in sets
        ):
            raise ValueError('"min_cut_sets" must be a list of integer lists')
        if minimize:
            for s in sets:
                if any(x < 1 or x > n for x in s):
                    raise ValueError(f"cut set {s} leaves the universe 1..{n}")
            return cls.from_family(n, sets)
        return cls(n, sets)


def evaluate(system: System, working: Iterable[int]) -> int:
    """Structure function: 1 if the system works when exactly ``working`` is up."""
    working = list(working)
    if any(x < 1 or x > system.n for x in working):
        raise ValueError(f"working set {sorted(working)} leaves the universe 1..{system.n}")
    failed = system.full_mask & ~to_mask(working)
    return 0 if any(c & failed == c for c in system.masks) else 1


# -- truth tables -----------------------------------------------------------

@functools.lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1, dtype=np.uint8)
    for _ in range(n):
        pc = np.concatenate([pc, pc + 1])
    pc.setflags(write=False)
    return pc


def _check_table_size(n: int):
    if n > MAX_TABLE_N:
        raise CapacityError(f"n = {n} exceeds the truth-table limit of {MAX_TABLE_N}")


def up_closure(n: int, masks: Iterable[int]) -> np.ndarray:
    """Boolean table over all 2^n masks: True where the mask contains a generator."""
    _check_table_size(n)
    table = np.zeros(1 << n, dtype=bool)
    table[list(masks)] = True
    for i in range(n):
        view = table.reshape(-1, 2, 1 << i)
        view[:, 1, :] |= view[:, 0, :]
    return table


def cut_table(system: System) -> np.ndarray:
    """``table[m]`` is True iff failing the components in ``m`` downs the system."""
    return up_closure(system.n, system.masks)


def _minimal_of_upset(n: int, upset: np.ndarray) -> list[int]:
    minimal = upset.copy()
    for i in range(n):
        mv = minimal.reshape(-1, 2, 1 << i)
        uv = upset.reshape(-1, 2, 1 << i)
        mv[:, 1, :] &= ~uv[:, 0, :]
    return [int(m) for m in np.flatnonzero(minimal)]


def dualize(system: System) -> System:
    """The dual system: its minimal cut sets are the minimal path sets of ``system``."""
    cuts = cut_table(system)
    # P is a path set iff its complement is not a cut set; complement of m is full - m
    paths = ~cuts[::-1]
    return System(system.n, tuple(from_mask(m) for m in _minimal_of_upset(system.n, paths)))


def cut_counts_by_size(system: System) -> list[int]:
    """Number of cut sets (minimal or not) of each size 1..n."""
    table = cut_table(system)
    counts = np.bincount(popcounts(system.n)[table], minlength=system.n + 1)
    return [int(c) for c in counts[1:]]


def noncut_fvector(system: System) -> list[int]:
    """Face counts (f_0, ..., f_n) of the complex of non-cut sets."""
    cuts = cut_counts_by_size(system)
    return [1] + [comb(system.n, l) - cuts[l - 1] for l in range(1, system.n + 1)]


# -- constructors and enumeration --------------------------------------------

def series_system(n: int, l: int) -> System:
    """Cut sets {1}, ..., {l}: the system dies with the first of 1..l."""
    return System(n, tuple((i,) for i in range(1, l + 1)))


def parallel_system(n: int, l: int) -> System:
    """Single cut set {1, ..., l}: the system dies with the last of 1..l."""
    return System(n, (tuple(range(1, l + 1)),))


def relabel(system: System, perm: Sequence[int]) -> System:
    """Rename component ``i`` to ``perm[i - 1]``."""
    if sorted(perm) != list(range(1, system.n + 1)):
        raise ValueError(f"{perm} is not a permutation of 1..{system.n}")
    return System(system.n, tuple(tuple(perm[x - 1] for x in c) for c in system.min_cuts))


def all_systems(n: int) -> Iterator[System]:
    """Every non-constant system on ``n`` components, one per nonempty antichain of nonempty sets."""
    _check_table_size(n)
    order = sorted(range(1, 1 << n), key=lambda m: (m.bit_count(), m))
    chosen: list[int] = []

    def walk(start: int) -> Iterator[System]:
        for idx in range(start, len(order)):
            m = order[idx]
            # earlier masks are never supersets of m, so only subsets can clash
            if any(c & m == c for c in chosen):
                continue
            chosen.append(m)
            yield System(n, tuple(from_mask(c) for c in chosen))
            yield from walk(idx + 1)
            chosen.pop()

    yield from walk(0)
