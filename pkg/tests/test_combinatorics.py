"""Hat reindexing, signed splits, block permutations, run decompositions."""

import itertools

import pytest

from ainfsimp.combinatorics import (BlockPermutation, block_inversion_formula,
                                    block_permutation, enum_composition_splits,
                                    enum_relation_splits, hat_sequence,
                                    hat_tuple, inversion_count,
                                    is_strictly_increasing, positive_compositions,
                                    run_decomposition)


def test_hat_identity_is_identity():
    for t in [(0,), (1, 3), (0, 2, 5)]:
        assert hat_tuple(tuple(range(len(t))), t) == t


def test_hat_swap_pair():
    # swapping (i, j) hats to (j-1, i)
    assert hat_tuple((1, 0), (2, 7)) == (6, 2)
    assert hat_tuple((1, 0), (1, 3)) == (2, 1)


def test_hat_counts_smaller_to_the_right():
    assert hat_sequence((3, 1, 2)) == (1, 1, 2)
    assert hat_sequence((5, 4, 3)) == (3, 3, 3)


def test_relation_splits_empty_for_singletons():
    assert enum_relation_splits((4,)) == []


def test_relation_splits_pair():
    splits = {(sp.sign, sp.left, sp.right) for sp in enum_relation_splits((10, 20))}
    assert splits == {(-1, (10,), (20,)), (1, (19,), (10,))}


def test_relation_splits_triple_matches_display():
    got = {(sp.sign, sp.left, sp.right) for sp in enum_relation_splits((10, 20, 30))}
    want = {
        (-1, (10,), (20, 30)),
        (-1, (10, 20), (30,)),
        (-1, (28,), (10, 20)),
        (-1, (19, 29), (10,)),
        (1, (19,), (10, 30)),
        (1, (10, 29), (20,)),
    }
    assert got == want


def test_composition_splits_counts():
    for k, expected in [(0, 1), (1, 2), (2, 4), (3, 8)]:
        t = tuple(10 * (i + 1) for i in range(k))
        assert len(enum_composition_splits(t)) == expected


def test_composition_splits_empty_tuple():
    (sp,) = enum_composition_splits(())
    assert sp.sign == 1 and sp.left == () and sp.right == ()


def test_relation_split_counts_small():
    for k, expected in [(1, 0), (2, 2), (3, 6)]:
        t = tuple(10 * (i + 1) for i in range(k))
        assert len(enum_relation_splits(t)) == expected


@pytest.mark.parametrize("k", range(1, 6))
def test_split_halves_strictly_increasing(k):
    for t in itertools.combinations(range(0, 8), k):
        for sp in enum_relation_splits(t):
            assert is_strictly_increasing(sp.left)
            assert is_strictly_increasing(sp.right)
        for sp in enum_composition_splits(t):
            assert is_strictly_increasing(sp.left)
            assert is_strictly_increasing(sp.right)


def test_inversion_count():
    assert inversion_count(()) == 0
    assert inversion_count((1, 2, 3)) == 0
    assert inversion_count((3, 1, 2)) == 2
    assert inversion_count((3, 2, 1)) == 3


def test_block_permutation_example():
    perm = block_permutation(2, (2,), (1,))
    assert perm.image == (3, 1, 2)
    assert hat_sequence(perm.image) == (1, 1, 2)
    assert perm.inversions() == 2
    assert block_inversion_formula(perm) == 2


def test_block_permutation_no_move_blocks_is_identity():
    # a single trivial moved block at the far end acts as close to the
    # identity as the block shape allows
    perm = block_permutation(3, (1,), (1,))
    assert perm.image == (2, 3, 4, 1)
    # genuinely the identity when the kept block swallows everything
    perm = block_permutation(3, (1,), (3,))
    assert perm.image == (1, 2, 4, 3)


def test_block_permutation_validation():
    with pytest.raises(ValueError):
        block_permutation(2, (0,), (1,))
    with pytest.raises(ValueError):
        block_permutation(2, (3,), (1,))
    with pytest.raises(ValueError):
        # sum of kept blocks exceeds m + 2
        block_permutation(4, (2, 2), (2, 1))


def test_hat_collection_equality_exhaustive():
    for n in range(0, 9):
        for s in range(1, n + 1):
            for total_n in range(s, n + 1):
                m = n - total_n
                for n_blocks in positive_compositions(total_n, s):
                    for total_t in range(s, m + 3):
                        for t_blocks in positive_compositions(total_t, s):
                            perm = block_permutation(n, n_blocks, t_blocks)
                            expected = tuple(range(1, m + 2)) + tuple(
                                itertools.chain(*perm.b_blocks))
                            assert hat_sequence(perm.image) == expected
                            assert block_inversion_formula(perm) == perm.inversions()


def test_run_decomposition_example():
    rd = run_decomposition((2, 3, 6, 7, 8), 15)
    assert rd.runs == ((2, 3), (6, 7, 8))
    assert rd.lengths == (2, 3)
    assert rd.gaps == (2, 2, 7)


def test_run_decomposition_single_run():
    rd = run_decomposition((1, 2, 3), 5)
    assert rd.lengths == (3,)
    assert rd.gaps == (1, 2)


def test_run_decomposition_rejects_boundary():
    with pytest.raises(ValueError):
        run_decomposition((0, 1), 4)
    with pytest.raises(ValueError):
        run_decomposition((2, 4), 4)
