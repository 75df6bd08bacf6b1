"""Graded machinery: tensor powers, the interchange sign, map differentials,
and suspension."""

import random
from fractions import Fraction

import pytest

from ainfsimp.graded import (DifferentialModule, GradedMap, GradedModule,
                             GradingError, identity_map, koszul_interchange_sign,
                             map_differential, scalar_of_identity_multiple,
                             suspend, tensor2_map, tensor_maps, tensor_power,
                             unit_module, zero_map)
from ainfsimp.linalg import Matrix
from ainfsimp.scalars import Rationals

QQ = Rationals()


def two_term_complex():
    """A_0 = A_1 = rank 1 with d the identity."""
    module = GradedModule.single_graded(QQ, {0: 1, 1: 1})
    d = GradedMap(module, module, (0, -1))
    d.set_block(0, 1, Matrix.identity(QQ, 1))
    return DifferentialModule(module, d)


def random_map(rng, source, target, degree):
    phi = GradedMap(source, target, (0, degree))
    for (_, m), cols in source.dims.items():
        rows = target.dim(0, m + degree)
        if rows == 0:
            continue
        block = Matrix.zeros(QQ, rows, cols)
        for i in range(rows):
            for j in range(cols):
                block.set(i, j, Fraction(rng.randint(-2, 2)))
        phi.set_block(0, m, block)
    return phi


def test_tensor_power_dims_degree_zero():
    module = GradedModule.single_graded(QQ, {0: 2})
    dm = DifferentialModule(module, zero_map(module, module, (0, -1)))
    p2 = tensor_power(dm, 2)
    assert p2.module.dim(0, 0) == 4
    assert p2.d.is_zero()


def test_tensor_power_two_term():
    dm = two_term_complex()
    p2 = tensor_power(dm, 2)
    assert [p2.module.dim(0, q) for q in range(3)] == [1, 2, 1]
    assert (p2.d @ p2.d).is_zero()
    # expand the Leibniz differential by hand on the 4-dimensional space:
    # basis degree 1: (e0 x e1), (e1 x e0); degree 2: (e1 x e1)
    d1 = p2.d.block(0, 1)
    assert d1.to_dense() == [[Fraction(1), Fraction(1)]]
    d2 = p2.d.block(0, 2)
    # d(e1 x e1) = e0 x e1 - e1 x e0 by the interchange sign
    assert d2.to_dense() == [[Fraction(1)], [Fraction(-1)]]


def test_tensor_power_zero_is_unit():
    dm = two_term_complex()
    p0 = tensor_power(dm, 0)
    assert p0.module.dims == {(0, 0): 1}
    assert (p0.d @ p0.d).is_zero()


def test_tensor_power_squares_to_zero():
    dm = two_term_complex()
    for n in range(1, 5):
        p = tensor_power(dm, n)
        assert (p.d @ p.d).is_zero()


def test_tensor_composition_interchange_sign():
    rng = random.Random(0)
    n1 = GradedModule.single_graded(QQ, {0: 2, 1: 1, 2: 1})
    n2 = GradedModule.single_graded(QQ, {0: 1, 1: 2})
    n3 = GradedModule.single_graded(QQ, {0: 2, 1: 1})
    for df in (-1, 0, 1, 2):
        for dg in (-1, 0, 1, 3):
            f1 = random_map(rng, n2, n3, df)
            f2 = random_map(rng, n2, n1, df + 1)
            g1 = random_map(rng, n1, n2, dg)
            g2 = random_map(rng, n3, n2, dg - 1)
            lhs = tensor2_map(f1, f2) @ tensor2_map(g1, g2)
            rhs = tensor2_map(f1 @ g1, f2 @ g2)
            sign = (-1) ** ((f2.dm % 2) * (g1.dm % 2))
            assert lhs == rhs.scaled(QQ.from_int(sign))


def test_map_differential_of_d_vanishes():
    dm = two_term_complex()
    assert map_differential(dm.d, dm.d, dm.d).is_zero()


def test_map_differential_chain_map_of_degree_zero():
    dm = two_term_complex()
    ident = identity_map(dm.module)
    assert map_differential(ident, dm.d, dm.d).is_zero()


def test_map_differential_squares_to_zero():
    rng = random.Random(3)
    dm = two_term_complex()
    for degree in (-1, 0, 1, 2):
        phi = random_map(rng, dm.module, dm.module, degree)
        once = map_differential(phi, dm.d, dm.d)
        twice = map_differential(once, dm.d, dm.d)
        assert twice.is_zero()


def test_suspension_basics():
    module = GradedModule.single_graded(QQ, {0: 1})
    dm = DifferentialModule(module, zero_map(module, module, (0, -1)))
    sa, eta, xi = suspend(dm)
    assert sa.module.dims == {(0, 1): 1}
    assert (eta @ xi) == identity_map(module)
    assert (xi @ eta) == identity_map(sa.module)


def test_suspension_commutes_with_d():
    dm = two_term_complex()
    sa, eta, xi = suspend(dm)
    assert (dm.d @ eta) == (eta @ sa.d)
    assert (sa.d @ xi) == (xi @ dm.d)


def test_suspension_power_scalar():
    dm = two_term_complex()
    sa, eta, xi = suspend(dm)
    for k in range(1, 5):
        c = scalar_of_identity_multiple(tensor_maps([eta] * k) @ tensor_maps([xi] * k))
        assert c == QQ.from_int((-1) ** (k * (k - 1) // 2))


def test_koszul_interchange_sign():
    assert koszul_interchange_sign([-1], [0], [(0, 0)]) == 1
    assert koszul_interchange_sign([-1], [-1], [(0, 0)]) == -1
    assert koszul_interchange_sign([2, 3], [1, 1], [(0, 0), (1, 1)]) == -1
    assert koszul_interchange_sign([], [], []) == 1


def test_blocks_outside_support_rejected():
    module = GradedModule.single_graded(QQ, {0: 1})
    phi = GradedMap(module, module, (0, 1))
    bad = Matrix.zeros(QQ, 0, 1)
    phi.set_block(0, 0, bad)  # zero block of shape (0, 1) is fine
    with pytest.raises(GradingError):
        wrong_shape = Matrix.identity(QQ, 1)
        phi.set_block(0, 0, wrong_shape)


def test_composition_shift_addition():
    dm = two_term_complex()
    d = dm.d
    dd = d @ d
    assert dd.shift == (0, -2)
    assert dd.is_zero()


def test_unit_module_tensor_identity():
    dm = two_term_complex()
    u = unit_module(QQ)
    ident = tensor_maps([], field=QQ)
    assert ident.source == u
    assert ident == identity_map(u)
