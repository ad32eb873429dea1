"""Survivor-index calculus: the fold, its reflection, and the branch sums."""

from itertools import product

import pytest

from minorform import (
    DomainError,
    IndexHistory,
    heav,
    kappa,
    primed_index,
    primed_index_expanded,
    reflected_primed_index,
    reflected_primed_index_expanded,
)

MAX_SOURCE_SIZE = 8


def valid_histories(n, depth):
    """Every deletion chain of the given depth starting from an n x n matrix.

    Level d deletes from a matrix of size n - d, so chain[d] runs 1..n-d;
    the base then indexes the remaining (n - depth)-sized minor.
    """
    ranges = [range(1, n - d + 1) for d in range(depth)]
    for chain in product(*ranges):
        for base in range(1, n - depth + 1):
            yield IndexHistory(base, chain)


def test_kappa_pass_and_skip():
    assert kappa(1, 2) == 1  # before the cut: unchanged
    assert kappa(2, 2) == 3  # at the cut: skips past
    assert kappa(3, 2) == 4
    assert kappa(5, 9) == 5


def test_kappa_matches_step_definition():
    for t in range(1, 10):
        for r0 in range(1, 10):
            assert kappa(t, r0) == t + 1 - heav(r0 - t - 1)


def test_kappa_rejects_non_positive():
    with pytest.raises(DomainError):
        kappa(0, 1)
    with pytest.raises(DomainError):
        kappa(1, 0)


def test_kappa_composition_order_matters():
    # the chain is ordered: swapping deletion levels changes the survivor
    assert kappa(kappa(2, 1), 3) == 4
    assert kappa(kappa(2, 3), 1) == 3


def test_primed_index_single_level_is_kappa():
    for base in range(1, 6):
        for r in range(1, 6):
            assert primed_index(1, IndexHistory(base, (r,))) == kappa(base, r)


def test_primed_index_known_chains():
    # hand-folded: all-ones chains push the base up one per level
    assert primed_index(1, IndexHistory(1, (1,))) == 2
    assert primed_index(2, IndexHistory(1, (1, 1))) == 3
    assert primed_index(3, IndexHistory(1, (1, 1, 1))) == 4
    assert reflected_primed_index(3, IndexHistory(1, (1, 1, 1))) == 5
    # a later deletion leaves earlier positions alone
    assert primed_index(2, IndexHistory(1, (3, 2))) == 1
    assert primed_index(2, IndexHistory(2, (1, 2))) == 4


def test_primed_index_equals_explicit_fold():
    for n in range(2, MAX_SOURCE_SIZE + 1):
        for depth in range(1, n):
            for hist in valid_histories(n, depth):
                value = hist.base
                for deleted in reversed(hist.chain):
                    value = kappa(value, deleted)
                assert primed_index(depth, hist) == value
                assert 1 <= value <= n


def test_expanded_sum_matches_fold_everywhere():
    for n in range(2, MAX_SOURCE_SIZE + 1):
        for depth in range(1, n):
            for hist in valid_histories(n, depth):
                assert primed_index_expanded(depth, hist) == primed_index(depth, hist)


def test_reflected_expanded_matches_reflected_fold():
    for n in range(3, MAX_SOURCE_SIZE + 1):
        for depth in range(1, n - 1):
            for hist in valid_histories(n, depth):
                if hist.base not in (1, 2):
                    continue
                assert reflected_primed_index_expanded(depth, hist) == reflected_primed_index(
                    depth, hist
                )


def test_reflection_swaps_the_two_by_two_rows():
    for hist in valid_histories(5, 3):
        if hist.base not in (1, 2):
            continue
        mirrored = IndexHistory(3 - hist.base, hist.chain)
        assert reflected_primed_index(3, hist) == primed_index(3, mirrored)


def test_all_ones_specialization_steps_with_the_first_cut():
    # base 1 under k all-ones deletions lands at k + 1
    for k in range(1, 5):
        assert primed_index(k, IndexHistory(1, (1,) * k)) == k + 1
    # with inner all-ones cuts, only the outermost deletion r0 can undo the
    # last shift: the survivor is (k + 1) - heav(r0 - (k + 1))
    for r0 in range(1, 8):
        assert kappa(1, r0) == 2 - heav(r0 - 2)
        assert primed_index(2, IndexHistory(1, (r0, 1))) == 3 - heav(r0 - 3)
        assert primed_index(3, IndexHistory(1, (r0, 1, 1))) == 4 - heav(r0 - 4)
        assert reflected_primed_index(3, IndexHistory(1, (r0, 1, 1))) == 5 - heav(r0 - 5)


def test_history_validation():
    with pytest.raises(DomainError):
        IndexHistory(0, (1,))
    with pytest.raises(DomainError):
        IndexHistory(1, ())
    with pytest.raises(DomainError):
        IndexHistory(1, (1, 0))
    with pytest.raises(DomainError):
        primed_index(2, IndexHistory(1, (1,)))  # depth mismatch
    with pytest.raises(DomainError):
        reflected_primed_index(1, IndexHistory(3, (1,)))  # base must be 1 or 2
