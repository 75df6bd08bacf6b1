"""Face-module structures: the strict embedding, identity and composition,
mutation sensitivity, and the symbolic/numeric bridge."""

import itertools

import pytest

from ainfsimp.combinatorics import enum_relation_splits
from ainfsimp.generators import GeneratorSpec, extend_ainf, extend_morphism
from ainfsimp.functor import tensor_morphism, tensor_object
from ainfsimp.graded import (DifferentialModule, GradedMap, GradedModule,
                             map_differential, zero_map)
from ainfsimp.linalg import Matrix
from ainfsimp.scalars import Rationals
from ainfsimp.simplicial import (InftySimplicialModule, StructureError,
                                 check_faces, check_homotopy, check_morphism,
                                 compose_infty, from_simplicial,
                                 identity_infty_morphism, level_slice)
from ainfsimp.symbolic import expand_relation

QQ = Rationals()


def interval_simplicial(max_level):
    """The simplicial module of the 1-simplex, truncated: level n has the
    monotone 0/1-strings of length n+1 as basis, faces delete a letter."""
    dims = {(n, 0): n + 2 for n in range(0, max_level + 1)}
    module = GradedModule(QQ, dims)
    dm = DifferentialModule(module, zero_map(module, module, (0, -1)))
    faces = {}
    max_index = max_level
    for i in range(0, max_index + 1):
        phi = GradedMap(module, module, (-1, 0))
        for n in range(1, max_level + 1):
            if i > n:
                continue
            # basis j = number of ones; deleting position i (1-indexed
            # slots 0..n) keeps monotonicity: string j has ones in the last
            # j slots of n+1 slots
            mat = Matrix.zeros(QQ, n + 1, n + 2)
            for j in range(n + 2):
                # deleting slot i from 0^(n+1-j) 1^j
                if i < n + 1 - j:
                    out = j
                else:
                    out = j - 1
                mat.set(out, j, QQ.one())
            phi.set_block(n, 0, mat)
        faces[i] = phi
    return dm, faces


def test_interval_strict_embedding():
    dm, faces = interval_simplicial(4)
    x_mod = from_simplicial(dm, faces, 4)
    report = check_faces(x_mod, 4)
    assert report.ok
    # round trip: singleton faces recover the strict ones, higher vanish
    for n in range(1, 5):
        for i in range(0, n + 1):
            assert x_mod.face(n, (i,)) == level_slice(faces[i], n)
        for t in itertools.combinations(range(n + 1), 2):
            assert x_mod.face(n, t).is_zero()


def test_zero_faces_embed():
    dims = {(n, 0): 1 for n in range(3)}
    module = GradedModule(QQ, dims)
    dm = DifferentialModule(module, zero_map(module, module, (0, -1)))
    x_mod = from_simplicial(dm, {}, 2)
    assert check_faces(x_mod, 2).ok


def test_swapped_faces_rejected():
    dm, faces = interval_simplicial(3)
    swapped = {0: faces[1], 1: faces[0], 2: faces[2], 3: faces[3]}
    with pytest.raises(StructureError):
        from_simplicial(dm, swapped, 3)


@pytest.fixture(scope="module")
def image_pair():
    a = extend_ainf(GeneratorSpec(seed=1, profile=((0, 1), (1, 1)),
                                  kernel_offset=True))
    b = extend_ainf(GeneratorSpec(seed=22, profile=((0, 1), (1, 1)),
                                  kernel_offset=True))
    f = extend_morphism(GeneratorSpec(seed=31), a, b)
    g = extend_morphism(GeneratorSpec(seed=41), b, a)
    tf = tensor_morphism(f, 4)
    tg = tensor_morphism(g, 4, tx=tf.target, ty=tf.source, check=False)
    return tf, tg


def test_identity_morphism_neutral(image_pair):
    tf, _ = image_pair
    ident_src = identity_infty_morphism(tf.source)
    ident_tgt = identity_infty_morphism(tf.target)
    assert check_morphism(ident_src, 4).ok
    assert compose_infty(ident_tgt, tf) == tf
    assert compose_infty(tf, ident_src) == tf


def test_composition_passes_and_associates(image_pair):
    tf, tg = image_pair
    gf = compose_infty(tg, tf)
    assert check_morphism(gf, 4).ok
    left = compose_infty(compose_infty(tf, tg), tf)
    right = compose_infty(tf, compose_infty(tg, tf))
    for n in range(0, 4):
        for k in range(0, n + 1):
            for t in itertools.combinations(range(n + 1), k):
                assert left.component(n, t) == right.component(n, t)


def test_face_mutation_detected(image_pair):
    tf, _ = image_pair
    tx = tf.source
    mutated_faces = dict(tx.faces)
    mutated_faces[(2, (1,))] = -tx.face(2, (1,))
    mutated = InftySimplicialModule(tx.dm, mutated_faces, tx.max_level)
    assert not check_faces(mutated, 3).ok


def test_missing_face_noted():
    a = extend_ainf(GeneratorSpec(seed=2, profile=((0, 1), (1, 1)),
                                  kernel_offset=True))
    tx = tensor_object(a, 3)
    faces = {key: phi for key, phi in tx.faces.items() if key != (2, (1,))}
    partial = InftySimplicialModule(tx.dm, faces, 3, complete=False)
    report = check_faces(partial, 3)
    noted = [e for e in report.entries if "absent" in e.note]
    assert noted


def test_symbolic_numeric_agreement(image_pair):
    # evaluating the symbolic expansion at a numeric tuple reproduces the
    # checker's sum, term for term
    tf, _ = image_pair
    tx = tf.source
    d = tx.dm.d
    for n, t in [(3, (1, 2)), (4, (1, 2, 3)), (4, (1, 3))]:
        k = len(t)
        expansion = expand_relation("1.1", t)
        total = None
        for term, coeff in expansion.terms():
            left, right = term.symbols
            level_left = n - len(right.indices)
            comp = tx.face(level_left, left.indices) @ tx.face(n, right.indices)
            comp = comp if coeff > 0 else -comp
            total = comp if total is None else total + comp
        lhs = map_differential(level_slice(tx.face(n, t), n), d, d)
        if total is None:
            assert lhs.is_zero()
        else:
            assert lhs == total
        # and the checker's own enumeration agrees with the expansion
        splits = {(sp.sign, sp.left, sp.right) for sp in enum_relation_splits(t)}
        from_terms = {(coeff, term.symbols[0].indices, term.symbols[1].indices)
                      for term, coeff in expansion.terms()}
        merged = {}
        for sign, left, right in splits:
            merged[(left, right)] = merged.get((left, right), 0) + sign
        assert {(c, l, r) for (l, r), c in merged.items() if c != 0} == from_terms


def test_homotopy_zero_between_equal_morphisms(image_pair):
    tf, _ = image_pair
    from ainfsimp.simplicial import InftyHomotopy
    comps = {}
    for n in range(0, 5):
        for k in range(0, n + 1):
            for t in itertools.combinations(range(n + 1), k):
                comps[(n, t)] = zero_map(tf.source.module, tf.target.module,
                                         (-k, k + 1))
    h = InftyHomotopy(tf, tf, comps, 4)
    assert check_homotopy(h, 4).ok
