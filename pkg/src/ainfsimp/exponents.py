"""Closed-form sign exponents of the structural relations, and independent
re-derivations of each of them.

Each exponent has two routes:

* a closed form (the ``*_exponent`` functions, all reduced mod 2), and
* a mechanical derivation built from :func:`~ainfsimp.graded.koszul_interchange_sign`
  following the suspension-transport recipe (the ``derived_*`` functions),
  or, for the block-permutation signs, from brute-force inversion counting.

The two routes are compared exhaustively by the sign suites; the closed
forms are what the checkers actually use.
"""

from __future__ import annotations

from .combinatorics import block_permutation, inversion_count
from .graded import koszul_interchange_sign


def _suffix_sums(parts):
    out = [0] * (len(parts) + 1)
    for i in range(len(parts) - 1, -1, -1):
        out[i] = out[i + 1] + parts[i]
    return out


# -- closed forms -------------------------------------------------------------

def insertion_exponent_structure(n, m, t):
    """Sign exponent on inserting one operation into another in the
    structure relation of index n (summand (m, t))."""
    return (t * (n - m + 1) + n + 1) % 2


def insertion_exponent_morphism(n, m, t):
    """Sign exponent on the component-precomposed-with-operation summands of
    the morphism relation."""
    return (t * (n - m + 1) + n + 1) % 2


def insertion_exponent_homotopy(n, m, t):
    """Sign exponent on the homotopy-precomposed-with-operation summands of
    the homotopy relation."""
    return (t * (n - m + 1) + n) % 2


def interleave_exponent(parts):
    """Exponent on an operation applied to a tensor of components, for the
    morphism relation and for composition: sum over consecutive pairs of
    (part_i + 1) * (sum of later parts)."""
    suffix = _suffix_sums(list(parts))
    total = 0
    for i in range(len(parts) - 1):
        total += (parts[i] + 1) * suffix[i + 1]
    return total % 2


def homotopy_slot_exponent(m, parts, i):
    """Exponent of the mixed g...h...f summand of the homotopy relation;
    ``parts`` has m+2 entries and the homotopy component occupies slot i
    (1-based)."""
    if len(parts) != m + 2:
        raise ValueError("homotopy summand needs m+2 parts")
    if not (1 <= i <= m + 2):
        raise ValueError("slot out of range")
    return (m + interleave_exponent(parts) + sum(parts[:i - 1])) % 2


def run_interchange_exponent(lengths):
    """Exponent from interchanging the nontrivial component blocks of a run
    decomposition: sum of n_i * (sum of later lengths)."""
    suffix = _suffix_sums(list(lengths))
    total = 0
    for i in range(len(lengths) - 1):
        total += lengths[i] * suffix[i + 1]
    return total % 2


def grouped_interleave_exponent(t_blocks, n_blocks):
    """Exponent of the grouped (run-indexed) form of the morphism relation's
    interleaved summands."""
    if len(t_blocks) != len(n_blocks):
        raise ValueError("block lists must have equal length")
    suffix = _suffix_sums(list(n_blocks))
    total = 0
    for i in range(len(n_blocks)):
        total += (t_blocks[i] - 1) * suffix[i]
    for i in range(len(n_blocks) - 1):
        total += (n_blocks[i] + 1) * suffix[i + 1]
    return total % 2


def grouped_homotopy_exponent(m, t_blocks, n_blocks):
    """Exponent of the grouped form of the homotopy relation's interleaved
    summands."""
    return (m + grouped_interleave_exponent(t_blocks, n_blocks)) % 2


def block_sign_exponent(n, t_blocks, n_blocks):
    """Congruence for the sign of the block permutation moving the n-blocks
    to the rear of (1, ..., n+1)."""
    if len(t_blocks) != len(n_blocks):
        raise ValueError("block lists must have equal length")
    m = n - sum(n_blocks)
    prefix = 0
    total = 0
    for i in range(1, len(t_blocks)):
        prefix += n_blocks[i - 1]
        total += t_blocks[i] * prefix
    total += m * n + m + sum(t_blocks) * (n - m)
    return total % 2


def block_sign_single_exponent(n, m, t):
    """The one-block special case of :func:`block_sign_exponent`."""
    return (m * n + m + t * (n - m)) % 2


def reduced_alpha_morphism(n, m, t):
    return (t * (n - m) + n + 1) % 2


def reduced_alpha_homotopy(n, m, t):
    return (t * (n - m) + n) % 2


_KINDS = {
    "structure_insertion": lambda p: insertion_exponent_structure(*p),
    "morphism_insertion": lambda p: insertion_exponent_morphism(*p),
    "homotopy_insertion": lambda p: insertion_exponent_homotopy(*p),
    "epsilon": lambda p: interleave_exponent(p),
    "rho": lambda p: homotopy_slot_exponent(*p),
    "gamma": lambda p: run_interchange_exponent(p),
    "mu": lambda p: grouped_interleave_exponent(*p),
    "vartheta": lambda p: grouped_homotopy_exponent(*p),
    "block": lambda p: block_sign_exponent(*p),
    "block_special": lambda p: block_sign_single_exponent(*p),
    "alpha_morphism": lambda p: reduced_alpha_morphism(*p),
    "alpha_homotopy": lambda p: reduced_alpha_homotopy(*p),
}


def sign_exponents(kind, params):
    """Dispatch a named exponent; ``params`` is the tuple of arguments the
    named closed form takes.  Unknown kinds raise ``KeyError``."""
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise KeyError(f"unknown sign exponent kind {kind!r}; "
                       f"known: {sorted(_KINDS)}") from None
    return fn(params)


# -- mechanical derivations via the Koszul primitive ---------------------------

def _parity(sign):
    return 0 if sign == 1 else 1


def derived_insertion_exponent_structure(n, m, t):
    """Suspension-transport derivation of the structure insertion sign:
    collapse maps to the right of the slot cross the degree -1 suspended
    operation; the bare operation then crosses the collapses to the left;
    moving the sum across the equation flips once more."""
    right_of_slot = m - t + 2
    step1 = koszul_interchange_sign([-1] * right_of_slot, [-1],
                                    [(i, 0) for i in range(right_of_slot)])
    step2 = koszul_interchange_sign([n - m], [-1] * (t - 1),
                                    [(0, j) for j in range(t - 1)])
    return (_parity(step1) + _parity(step2) + 1) % 2


def derived_insertion_exponent_morphism(n, m, t):
    right_of_slot = m - t + 1
    step1 = koszul_interchange_sign([-1] * right_of_slot, [-1],
                                    [(i, 0) for i in range(right_of_slot)])
    step2 = koszul_interchange_sign([n - m], [-1] * (t - 1),
                                    [(0, j) for j in range(t - 1)])
    return (_parity(step1) + _parity(step2)) % 2


def derived_insertion_exponent_homotopy(n, m, t):
    """Like the morphism case but the suspended sum carries a leading minus."""
    return (derived_insertion_exponent_morphism(n, m, t) + 1) % 2


def derived_interleave_exponent(parts):
    """Pull the per-slot collapse blocks out of an interleaved tensor of
    components: the component in slot j crosses every collapse block to its
    left, of degree -(part_i + 1)."""
    left = list(parts)
    right = [-(p + 1) for p in parts]
    crossings = [(j, i) for j in range(len(parts)) for i in range(j)]
    return _parity(koszul_interchange_sign(left, right, crossings))


def derived_homotopy_slot_exponent(m, parts, i):
    """Suspension-transport derivation of the mixed-summand sign: a leading
    minus, collapse maps crossing the degree +1 suspended homotopy, then the
    block interchange in which the slot-i component has degree part_i + 1."""
    eta_past_h = koszul_interchange_sign([-1] * (m + 2 - i), [1],
                                         [(k, 0) for k in range(m + 2 - i)])
    left = [parts[k] + 1 if k == i - 1 else parts[k] for k in range(len(parts))]
    right = [-(p + 1) for p in parts]
    crossings = [(j, k) for j in range(len(parts)) for k in range(j)]
    interleave = koszul_interchange_sign(left, right, crossings)
    return (1 + _parity(eta_past_h) + _parity(interleave)) % 2


def derived_run_interchange_exponent(lengths):
    """The run blocks cross pairwise (degree-0 padding crosses freely)."""
    crossings = [(j, i) for j in range(len(lengths)) for i in range(j)]
    return _parity(koszul_interchange_sign(list(lengths), list(lengths), crossings))


# -- raw proof exponents (reduced by the alpha/beta congruence suites) ---------

def block_sign_direct(n, t_blocks, n_blocks):
    """Brute-force parity of the block permutation, the oracle for
    :func:`block_sign_exponent`."""
    return block_permutation(n, n_blocks, t_blocks).sign()


def raw_alpha_morphism(n, m, t, q):
    """Unreduced exponent of the component-side summand in the grouped
    rewrite of the morphism relation, with the block sign counted directly."""
    sign = inversion_count(block_permutation(n, (n - m,), (t,)).image)
    return ((n + 1) * (q - 1) + sign + (n - m) * (q - 1)
            + (m + 1) * (q + (n - m - 1) - 1)) % 2


def raw_beta_morphism(n, m, q, t_blocks, n_blocks):
    """Unreduced exponent of the operation-side summand in the grouped
    rewrite of the morphism relation."""
    sign = inversion_count(block_permutation(n, n_blocks, t_blocks).image)
    return ((n + 1) * (q - 1) + sign + (n - m) * (q - 1)
            + run_interchange_exponent(n_blocks)
            + (m + 1) * (q + (n - m) - 1)) % 2


def raw_alpha_homotopy(n, m, t, q):
    return (raw_alpha_morphism(n, m, t, q) + 1) % 2


def raw_beta_homotopy(n, m, q, t_blocks, n_blocks):
    sign = inversion_count(block_permutation(n, n_blocks, t_blocks).image)
    return ((n + 1) * (q - 1) + sign + (n - m) * (q - 1)
            + run_interchange_exponent(n_blocks)
            + (m + 1) * (q + (n - m + 1) - 1) + 1) % 2
