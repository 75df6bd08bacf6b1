"""Permutation combinatorics for face-operator relations: the hat reindexing,
signed two-block splits, block permutations, and inversion counts.

The hat of a permuted index sequence subtracts, from each entry, the number
of strictly smaller entries to its right; it is what makes a permuted tuple
of face indices composable again.  The relation and composition sums are
indexed by the splits of a hatted sequence into two strictly increasing
halves, enumerated literally over all permutations (no deduplication).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


def inversion_count(seq):
    """Number of out-of-order pairs in ``seq``."""
    count = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                count += 1
    return count


def apply_permutation(sigma, t):
    """Rearrange tuple ``t`` by position map ``sigma`` (a tuple of indices)."""
    if len(sigma) != len(t):
        raise ValueError("permutation length mismatch")
    return tuple(t[i] for i in sigma)


def hat_sequence(seq):
    """Hat reindexing: entry minus the count of smaller entries to its right."""
    out = []
    for s, v in enumerate(seq):
        smaller = sum(1 for w in seq[s + 1:] if w < v)
        out.append(v - smaller)
    return tuple(out)


def hat_tuple(sigma, t):
    return hat_sequence(apply_permutation(sigma, t))


def is_strictly_increasing(seq):
    return all(a < b for a, b in zip(seq, seq[1:]))


@dataclass(frozen=True)
class SignedSplit:
    """One summand of a relation or composition sum.

    ``sign`` is +1 or -1; ``left`` and ``right`` are the strictly increasing
    halves of the hatted permuted tuple; ``sigma`` and ``m`` record where the
    split came from.
    """

    sign: int
    left: tuple
    right: tuple
    sigma: tuple
    m: int


def _enum_splits(t, m_range, sign_offset):
    k = len(t)
    out = []
    for sigma in itertools.permutations(range(k)):
        hatted = hat_sequence(apply_permutation(sigma, t))
        parity = inversion_count(sigma)
        sign = -1 if (parity + sign_offset) % 2 else 1
        for m in m_range:
            left, right = hatted[:m], hatted[m:]
            if is_strictly_increasing(left) and is_strictly_increasing(right):
                out.append(SignedSplit(sign, left, right, sigma, m))
    return out


def enum_relation_splits(t):
    """Splits indexing the structure/morphism/homotopy relation sums:
    1 <= m <= k-1, sign (-1)**(sign(sigma)+1).  Empty for k <= 1."""
    k = len(t)
    return _enum_splits(tuple(t), range(1, k), 1)


def enum_composition_splits(t):
    """Splits indexing morphism composition: 0 <= m <= k with empty halves
    allowed, sign (-1)**sign(sigma).  For k = 0 this is the single empty
    split with sign +1."""
    k = len(t)
    return _enum_splits(tuple(t), range(0, k + 1), 0)


# -- block permutations -------------------------------------------------------

@dataclass(frozen=True)
class BlockPermutation:
    """The permutation of (1, ..., n+1) that carries the interleaved blocks
    (a_1, b_1, ..., a_s, b_s, a_{s+1}) to (a_1, ..., a_{s+1}, b_1, ..., b_s),
    where |b_i| = n_i, |a_1| = t_1 - 1, |a_i| = t_i for 2 <= i <= s, and
    a_{s+1} takes up the rest."""

    n: int
    n_blocks: tuple
    t_blocks: tuple
    a_blocks: tuple
    b_blocks: tuple
    image: tuple

    @property
    def s(self):
        return len(self.n_blocks)

    def inversions(self):
        return inversion_count(self.image)

    def sign(self):
        return self.inversions() % 2


def block_permutation(n, n_blocks, t_blocks):
    """Build the block permutation for block sizes ``n_blocks`` (moved) and
    ``t_blocks`` (kept), acting on (1, ..., n+1)."""
    n_blocks = tuple(n_blocks)
    t_blocks = tuple(t_blocks)
    if len(n_blocks) != len(t_blocks):
        raise ValueError("block lists must have equal length")
    if any(v < 1 for v in n_blocks) or any(v < 1 for v in t_blocks):
        raise ValueError("block sizes must be >= 1")
    s = len(n_blocks)
    m = n - sum(n_blocks)
    if m < 0:
        raise ValueError("n blocks exceed ambient size")
    if sum(t_blocks) > m + 2:
        raise ValueError(f"sum of t blocks {sum(t_blocks)} exceeds {m + 2}")
    a_blocks = []
    b_blocks = []
    pos = 1
    for i in range(s):
        width_a = t_blocks[i] - 1 if i == 0 else t_blocks[i]
        a_blocks.append(tuple(range(pos, pos + width_a)))
        pos += width_a
        b_blocks.append(tuple(range(pos, pos + n_blocks[i])))
        pos += n_blocks[i]
    a_blocks.append(tuple(range(pos, n + 2)))
    image = tuple(itertools.chain(*a_blocks, *b_blocks))
    if len(image) != n + 1:
        raise ValueError("blocks do not partition (1, ..., n+1)")
    return BlockPermutation(n, n_blocks, t_blocks, tuple(a_blocks),
                            tuple(b_blocks), image)


def block_inversion_formula(perm):
    """Closed-form inversion count: each kept block a_i (i >= 2) crosses all
    moved blocks to its left."""
    total = 0
    moved = 0
    for i in range(1, perm.s + 1):
        moved += len(perm.b_blocks[i - 1])
        total += len(perm.a_blocks[i]) * moved
    return total


# -- consecutive-run decomposition --------------------------------------------

@dataclass(frozen=True)
class RunDecomposition:
    """A strictly increasing tuple split into maximal runs of consecutive
    integers.  ``runs`` are the runs themselves, ``lengths`` their sizes
    (n_1, ..., n_s), and ``gaps`` = (k_1, ..., k_{s+1}) with k_1 the start of
    the first run, k_i the gap before run i, and k_{s+1} covering the tail
    up to the ambient level."""

    tuple_: tuple
    runs: tuple
    lengths: tuple
    gaps: tuple

    @property
    def s(self):
        return len(self.runs)


def run_decomposition(t, n):
    """Decompose interior tuple ``t`` (1 <= i_1 < ... < i_k <= n-1) into
    maximal consecutive runs relative to ambient level ``n``."""
    t = tuple(t)
    k = len(t)
    if k == 0:
        raise ValueError("empty tuple has no run decomposition")
    if t[0] < 1 or t[-1] > n - 1:
        raise ValueError("run decomposition needs an interior tuple")
    if not is_strictly_increasing(t):
        raise ValueError("tuple must be strictly increasing")
    runs = []
    start = 0
    for i in range(1, k + 1):
        if i == k or t[i] != t[i - 1] + 1:
            runs.append(t[start:i])
            start = i
    lengths = tuple(len(r) for r in runs)
    gaps = [runs[0][0]]
    for i in range(1, len(runs)):
        gaps.append(runs[i][0] - runs[i - 1][-1] - 1)
    gaps.append(n - sum(gaps) - k + 1)
    return RunDecomposition(t, tuple(runs), lengths, tuple(gaps))


def is_consecutive_run(t):
    return all(b == a + 1 for a, b in zip(t, t[1:]))


def compositions(total, parts):
    """All tuples of ``parts`` nonnegative integers summing to ``total``,
    in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def positive_compositions(total, parts):
    """All tuples of ``parts`` positive integers summing to ``total``."""
    for c in compositions(total - parts, parts):
        yield tuple(v + 1 for v in c)
