import itertools
from math import comb

import pytest

from syssig.exceptions import CapacityError, DegenerateSystemError, NotAntichainError
from syssig.system import (
    System,
    all_systems,
    cut_counts_by_size,
    dualize,
    evaluate,
    extract_minimal,
    noncut_fvector,
    parallel_system,
    relabel,
    series_system,
)

import oracles

EXAMPLE_CUTS = ((1, 2), (1, 3), (1, 4), (2, 3, 4))


def test_extract_minimal_examples():
    assert extract_minimal([(1, 2), (1, 2, 3), (1, 3)]) == ((1, 2), (1, 3))
    assert extract_minimal(EXAMPLE_CUTS) == EXAMPLE_CUTS


def test_extract_minimal_of_the_worked_segments():
    segments = [
        [(1, 2), (1, 3), (1, 4)],
        [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5), (1, 4, 5), (2, 3, 4)],
        [(1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 4, 5), (1, 3, 4, 5), (2, 3, 4, 5)],
        [(1, 2, 3, 4, 5)],
    ]
    assert extract_minimal(s for seg in segments for s in seg) == EXAMPLE_CUTS


def test_extract_minimal_rejects_degenerate_input():
    with pytest.raises(DegenerateSystemError):
        extract_minimal([])
    with pytest.raises(DegenerateSystemError):
        extract_minimal([(), (1,)])


def test_system_validation():
    with pytest.raises(NotAntichainError):
        System(3, [(1,), (1, 2)])
    with pytest.raises(NotAntichainError):
        System(3, [(1, 2), (2, 1)])
    with pytest.raises(DegenerateSystemError):
        System(3, [])
    with pytest.raises(DegenerateSystemError):
        System(3, [()])
    with pytest.raises(ValueError):
        System(3, [(1, 4)])
    with pytest.raises(ValueError):
        System(0, [(1,)])


def test_system_is_canonical():
    a = System(5, [(2, 3, 4), (1, 4), (3, 1), (2, 1)])
    assert a.min_cuts == EXAMPLE_CUTS
    assert a == System(5, EXAMPLE_CUTS)
    assert hash(a) == hash(System(5, EXAMPLE_CUTS))


def test_evaluate_examples():
    s = System(5, EXAMPLE_CUTS)
    assert evaluate(s, [2, 3, 5]) == 0
    assert evaluate(s, [1, 2, 3, 4, 5]) == 1
    assert evaluate(s, []) == 0
    assert evaluate(s, [1, 2, 5]) == 1
    assert evaluate(s, [1, 5]) == 0
    with pytest.raises(ValueError):
        evaluate(s, [6])


def test_evaluate_constant_ends_for_every_small_system():
    for n in range(1, 5):
        for s in all_systems(n):
            assert evaluate(s, range(1, n + 1)) == 1
            assert evaluate(s, []) == 0


def test_evaluate_is_monotone():
    rng = oracles.random_rng(1)
    for _ in range(40):
        n = rng.randint(1, 7)
        s = oracles.random_system(rng, n)
        values = {m: evaluate(s, [i + 1 for i in range(n) if m >> i & 1]) for m in range(1 << n)}
        for a in range(1 << n):
            for b in range(1 << n):
                if a & b == a:
                    assert values[a] <= values[b]


def _brute_dual(system):
    n = system.n

    def dual_down(failed):
        # phi*(working) = 1 - phi(complement of working); working = complement of failed
        return 1 - evaluate(system, [i + 1 for i in range(n) if failed >> i & 1]) == 0

    return tuple(oracles.truth_table_min_cuts(n, dual_down))


@pytest.mark.parametrize("l", range(1, 6))
def test_dual_of_series_family(l):
    assert dualize(series_system(6, l)) == parallel_system(6, l)
    assert dualize(parallel_system(6, l)) == series_system(6, l)


def test_two_out_of_three_is_self_dual():
    s = System(3, [(1, 2), (1, 3), (2, 3)])
    assert dualize(s) == s
    assert _brute_dual(s) == s.min_cuts


def test_dualize_matches_truth_table_and_is_an_involution():
    rng = oracles.random_rng(2)
    for _ in range(100):
        s = oracles.random_system(rng, rng.randint(1, 8))
        d = dualize(s)
        assert d.min_cuts == _brute_dual(s)
        assert dualize(d) == s


def test_dualize_capacity():
    with pytest.raises(CapacityError):
        dualize(System(26, [(1,)]))


def test_min_paths_meet_every_min_cut():
    rng = oracles.random_rng(3)
    for _ in range(100):
        s = oracles.random_system(rng, rng.randint(1, 8))
        for c in s.min_cuts:
            for p in s.min_paths:
                assert set(c) & set(p)


def test_cut_path_intersection_is_not_always_a_singleton():
    # 2-out-of-3: {1,2} is both a minimal cut and a minimal path set
    s = System(3, [(1, 2), (1, 3), (2, 3)])
    assert (1, 2) in s.min_paths
    assert len(set((1, 2)) & set((1, 2))) == 2


def test_cut_counts_examples():
    assert cut_counts_by_size(System(5, [(1, 2), (1, 3)])) == [0, 2, 5, 4, 1]
    assert cut_counts_by_size(parallel_system(5, 5)) == [0, 0, 0, 0, 1]
    assert cut_counts_by_size(series_system(3, 3)) == [3, 3, 1]


def _cut_counts_by_inclusion_exclusion(system):
    n = system.n
    out = [0] * n
    sets = [set(c) for c in system.min_cuts]
    for r in range(1, len(sets) + 1):
        for group in itertools.combinations(sets, r):
            u = len(set().union(*group))
            for l in range(1, n + 1):
                out[l - 1] += (-1) ** (r + 1) * comb(n - u, l - u) if l >= u else 0
    return out


def test_cut_counts_match_inclusion_exclusion():
    rng = oracles.random_rng(4)
    for _ in range(100):
        s = oracles.random_system(rng, rng.randint(1, 9), max_sets=8)
        assert cut_counts_by_size(s) == _cut_counts_by_inclusion_exclusion(s)


def test_noncut_sets_form_a_complex():
    rng = oracles.random_rng(5)
    for _ in range(50):
        n = rng.randint(1, 7)
        s = oracles.random_system(rng, n)
        noncut = [c for r in range(n + 1) for c in itertools.combinations(range(1, n + 1), r) if not s.is_cut(c)]
        assert () in noncut
        for c in noncut:
            for x in c:
                assert not s.is_cut(tuple(y for y in c if y != x))
        f = noncut_fvector(s)
        assert f == [sum(len(c) == l for c in noncut) for l in range(n + 1)]


def test_json_round_trip():
    s = System(5, EXAMPLE_CUTS)
    doc = s.to_json()
    assert doc == {"n": 5, "min_cut_sets": [[1, 2], [1, 3], [1, 4], [2, 3, 4]]}
    assert System.from_json(doc) == s
    assert System.from_json({"n": 5, "min_cut_sets": [[1, 2], [1, 2, 3]]}, minimize=True) == System(5, [(1, 2)])
    with pytest.raises(NotAntichainError):
        System.from_json({"n": 5, "min_cut_sets": [[1, 2], [1, 2, 3]]})
    with pytest.raises(ValueError):
        System.from_json({"n": "5", "min_cut_sets": [[1]]})
    with pytest.raises(ValueError):
        System.from_json({"min_cut_sets": [[1]]})


# Dedekind numbers 3, 6, 20, 168, 7581 minus the two constant functions
@pytest.mark.parametrize("n, expected", [(1, 1), (2, 4), (3, 18), (4, 166), (5, 7579)])
def test_all_systems_counts(n, expected):
    systems = list(all_systems(n))
    assert len(systems) == expected
    assert len(set(systems)) == expected


def test_relabel():
    s = System(3, [(1,), (2, 3)])
    assert relabel(s, [3, 1, 2]) == System(3, [(3,), (1, 2)])
    with pytest.raises(ValueError):
        relabel(s, [1, 1, 2])


def test_large_families_use_the_table_path_consistently():
    from syssig.system import PAIRWISE_LIMIT, _minimal_masks

    rng = oracles.random_rng(6)
    for _ in range(20):
        n = rng.randint(6, 11)
        masks = [rng.randrange(1, 1 << n) for _ in range(PAIRWISE_LIMIT + rng.randint(1, 200))]
        expected = [m for m in set(masks) if not any(k != m and k & m == k for k in masks)]
        assert sorted(_minimal_masks(masks)) == sorted(expected)
    big = list(itertools.combinations(range(1, 13), 6))
    assert len(System(12, big).min_cuts) == 924
    with pytest.raises(NotAntichainError):
        System(12, big + [(1, 2, 3, 4, 5, 6, 7)])
