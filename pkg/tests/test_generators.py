"""Generators: determinism, contraction identities, nontriviality, and the
independence of generated instances from the checkers that judge them."""

import pytest

from ainfsimp.ainf import check_ainf, check_ainf_homotopy, check_ainf_morphism
from ainfsimp.campaign import corpus_nontriviality, default_corpus
from ainfsimp.generators import (GeneratorSpec, extend_ainf, extend_homotopy,
                                 extend_morphism, make_cone, make_strict_dga,
                                 strict_dga_catalog)
from ainfsimp.graded import identity_map, tensor_power
from ainfsimp.io import dumps_instance
from ainfsimp.linalg import Matrix, kernel_basis, rank
from ainfsimp.scalars import PrimeField

PROFILE = ((0, 1), (1, 1))


def test_strict_dga_catalog_passes():
    for algebra in strict_dga_catalog():
        assert check_ainf(algebra, max_relation=3).ok, algebra.name
    names = {a.name for a in strict_dga_catalog()}
    assert len(names) >= 3


def test_make_strict_dga_by_name():
    spec = GeneratorSpec(seed=0, kind="exterior-rank1")
    assert make_strict_dga(spec).name == "exterior-rank1"


def test_cone_contraction_identity():
    for seed in (1, 5, 9):
        cone = make_cone(GeneratorSpec(seed=seed, profile=PROFILE))
        lhs = (cone.dm.d @ cone.contraction) + (cone.contraction @ cone.dm.d)
        assert lhs == identity_map(cone.dm.module)


def test_cone_is_acyclic():
    cone = make_cone(GeneratorSpec(seed=3, profile=PROFILE))
    module, d = cone.dm.module, cone.dm.d
    degrees = sorted(m for (_, m) in module.dims)
    for q in degrees:
        block = d.block(0, q)
        cycles = len(kernel_basis(block)) if block.ncols else 0
        image_rank = rank(d.block(0, q + 1))
        assert cycles == image_rank, f"homology at degree {q}"


def test_determinism_byte_identical():
    spec = GeneratorSpec(seed=4, profile=PROFILE, kernel_offset=True)
    a = extend_ainf(spec)
    b = extend_ainf(spec)
    assert dumps_instance(a) == dumps_instance(b)


def test_extension_passes_checker():
    a = extend_ainf(GeneratorSpec(seed=9, profile=PROFILE, kernel_offset=True))
    assert check_ainf(a, max_relation=3).ok
    assert not a.op(1).is_zero()


def test_extension_over_prime_field():
    field = PrimeField(7)
    a = extend_ainf(GeneratorSpec(seed=5, profile=PROFILE, kernel_offset=True),
                    field_=field)
    assert check_ainf(a, max_relation=3).ok


def test_identity_extension_has_nonzero_higher_component():
    shared = make_cone(GeneratorSpec(seed=7, profile=PROFILE))
    a = extend_ainf(GeneratorSpec(seed=71, profile=PROFILE, kernel_offset=True),
                    base=shared)
    b = extend_ainf(GeneratorSpec(seed=72, profile=PROFILE, kernel_offset=True),
                    base=shared)
    f = extend_morphism(GeneratorSpec(seed=43, profile=PROFILE), a, b,
                        f0=identity_map(a.module))
    assert f.component(0) == identity_map(a.module)
    assert check_ainf_morphism(f, max_relation=3).ok
    assert not f.component(1).is_zero()


def test_homotopy_between_different_extensions():
    a = extend_ainf(GeneratorSpec(seed=1, profile=PROFILE, kernel_offset=True))
    b = extend_ainf(GeneratorSpec(seed=22, profile=PROFILE, kernel_offset=True))
    f = extend_morphism(GeneratorSpec(seed=31), a, b)
    g = extend_morphism(GeneratorSpec(seed=32), a, b)
    h = extend_homotopy(GeneratorSpec(seed=33), f, g)
    assert check_ainf_homotopy(h, max_relation=3).ok
    assert not h.component(0).is_zero()


def test_corpus_nontriviality(corpus):
    has1, has2 = corpus_nontriviality(corpus)
    assert has1, "corpus needs an instance with a nonzero ternary operation"
    assert has2, "corpus needs an instance with a nonzero quaternary operation"
    assert len(corpus.dgas) >= 3
    assert len(corpus.algebras) >= 5
    assert len(corpus.morphisms) >= 5
    assert len(corpus.homotopies) >= 3


def test_checkers_do_not_use_the_solver():
    # generator/checker independence: the checking modules never import the
    # solving machinery
    import ainfsimp.ainf as ainf_mod
    import ainfsimp.simplicial as simp_mod
    import inspect
    for mod in (ainf_mod, simp_mod):
        source = inspect.getsource(mod)
        assert "solve_linear" not in source
        assert "generators" not in source
