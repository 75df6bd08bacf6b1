"""Closed-form sign exponents against their worked examples, their
mechanical derivations, and the brute-force permutation oracle."""

import pytest

from ainfsimp.combinatorics import (block_permutation, compositions,
                                    positive_compositions)
from ainfsimp.exponents import (block_sign_exponent, block_sign_single_exponent,
                                derived_homotopy_slot_exponent,
                                derived_insertion_exponent_homotopy,
                                derived_insertion_exponent_morphism,
                                derived_insertion_exponent_structure,
                                derived_interleave_exponent,
                                derived_run_interchange_exponent,
                                grouped_homotopy_exponent,
                                grouped_interleave_exponent,
                                homotopy_slot_exponent,
                                insertion_exponent_homotopy,
                                insertion_exponent_morphism,
                                insertion_exponent_structure,
                                interleave_exponent, raw_alpha_homotopy,
                                raw_alpha_morphism, raw_beta_homotopy,
                                raw_beta_morphism, reduced_alpha_homotopy,
                                reduced_alpha_morphism, run_interchange_exponent,
                                sign_exponents)


def test_interleave_worked_example():
    # two parts of size one: (1+1)*1 = 2, even
    assert interleave_exponent((1, 1)) == 0
    assert interleave_exponent((0, 1)) == 1
    assert interleave_exponent((1, 0)) == 0


def test_run_interchange_worked_example():
    # runs (2, 3): 2*3 = 6, even
    assert run_interchange_exponent((2, 3)) == 0
    assert run_interchange_exponent((1, 2)) == 0
    assert run_interchange_exponent((1, 1)) == 1


def test_block_sign_special_worked_example():
    perm = block_permutation(2, (2,), (1,))
    assert block_sign_single_exponent(2, 0, 1) == 0
    assert perm.inversions() == 2


def test_sign_exponents_dispatcher():
    assert sign_exponents("epsilon", (1, 1)) == 0
    assert sign_exponents("gamma", (2, 3)) == 0
    assert sign_exponents("block_special", (2, 0, 1)) == 0
    assert sign_exponents("rho", (0, (0, 0), 1)) == 0
    with pytest.raises(KeyError):
        sign_exponents("nope", ())


@pytest.mark.parametrize("n", range(-1, 7))
def test_insertion_mechanical_derivations(n):
    for m in range(0, n + 1):
        for t in range(1, m + 3):
            assert (derived_insertion_exponent_structure(n, m, t)
                    == insertion_exponent_structure(n, m, t))
        for t in range(1, m + 2):
            assert (derived_insertion_exponent_morphism(n, m, t)
                    == insertion_exponent_morphism(n, m, t))
            assert (derived_insertion_exponent_homotopy(n, m, t)
                    == insertion_exponent_homotopy(n, m, t))


@pytest.mark.parametrize("n", range(0, 7))
def test_interleave_and_slot_mechanical_derivations(n):
    for m in range(0, n + 1):
        for parts in compositions(n - m, m + 2):
            assert derived_interleave_exponent(parts) == interleave_exponent(parts)
            for i in range(1, m + 3):
                assert (derived_homotopy_slot_exponent(m, parts, i)
                        == homotopy_slot_exponent(m, parts, i))


@pytest.mark.parametrize("n", range(0, 7))
def test_run_interchange_mechanical(n):
    for s in range(1, n + 1):
        for lengths in positive_compositions(n, s):
            assert (derived_run_interchange_exponent(lengths)
                    == run_interchange_exponent(lengths))


def test_block_sign_congruence_against_direct_count():
    for n in range(0, 9):
        for s in range(1, n + 1):
            for total_n in range(s, n + 1):
                m = n - total_n
                for n_blocks in positive_compositions(total_n, s):
                    for total_t in range(s, m + 3):
                        for t_blocks in positive_compositions(total_t, s):
                            perm = block_permutation(n, n_blocks, t_blocks)
                            assert (block_sign_exponent(n, t_blocks, n_blocks)
                                    == perm.sign())


def test_special_case_congruence():
    for n in range(0, 7):
        for m in range(0, n):
            for t in range(1, m + 3):
                perm = block_permutation(n, (n - m,), (t,))
                assert block_sign_single_exponent(n, m, t) == perm.sign()


def test_alpha_reductions():
    for n in range(0, 7):
        for m in range(0, n):
            for t in range(1, m + 3):
                for q in range(0, 7):
                    assert raw_alpha_morphism(n, m, t, q) == reduced_alpha_morphism(n, m, t)
                    assert raw_alpha_homotopy(n, m, t, q) == reduced_alpha_homotopy(n, m, t)


def test_beta_reductions():
    for n in range(0, 7):
        for m in range(0, n):
            for s in range(1, m + 3):
                for n_blocks in positive_compositions(n - m, s):
                    for total_t in range(s, m + 3):
                        for t_blocks in positive_compositions(total_t, s):
                            for q in range(0, 7):
                                assert (raw_beta_morphism(n, m, q, t_blocks, n_blocks)
                                        == grouped_interleave_exponent(t_blocks, n_blocks))
                                assert (raw_beta_homotopy(n, m, q, t_blocks, n_blocks)
                                        == grouped_homotopy_exponent(m, t_blocks, n_blocks))


def test_grouped_equals_composition_indexed():
    # positions-of-nonzero-parts correspondence between the two index sets
    for n in range(0, 7):
        for m in range(0, n):
            for s in range(1, m + 3):
                for n_blocks in positive_compositions(n - m, s):
                    for total_t in range(s, m + 3):
                        for t_blocks in positive_compositions(total_t, s):
                            parts = [0] * (m + 2)
                            pos = 0
                            for tb, nb in zip(t_blocks, n_blocks):
                                pos += tb
                                parts[pos - 1] = nb
                            assert (interleave_exponent(tuple(parts))
                                    == grouped_interleave_exponent(t_blocks, n_blocks))
