"""Reproducible generators for the verification corpus: strict differential
graded algebras, contractible cones with explicit contractions, and
linear-solver extension of higher structures stage by stage.

The extension strategy reads each relation as a linear equation for the next
unknown component: the map differential of the unknown must equal the part
of the relation built from already-known data.  Over a contractible base (a
cone) the relevant Hom complexes are acyclic, so every stage is solvable;
the solver itself is never consulted by the checkers, which keeps generator
and oracle independent.

Determinism: everything is driven by ``random.Random(seed)``, and the same
spec reproduces the same instance bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import random

from .ainf import (AInfAlgebra, AInfHomotopy, AInfMorphism, homotopy_residual,
                   morphism_residual, structure_residual)
from .graded import (DifferentialModule, GradedMap, GradedModule, layout,
                     map_differential, tensor_power)
from .linalg import Matrix, inverse, kernel_basis, solve_linear
from .scalars import Rationals
from .simplicial import StructureError


class GenerationError(RuntimeError):
    """The solver hit an obstruction after exhausting its retry budget."""


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic recipe for one generated instance."""

    seed: int
    kind: str = "ainf-extend"
    profile: tuple = ((0, 1), (1, 1))
    max_op: int | None = None
    scramble: bool = True
    kernel_offset: bool = False
    retries: int = 8

    def rng(self):
        return random.Random(self.seed)


# -- map-equation solving -------------------------------------------------------

def _coords(source_module, target_module, shift):
    coords = []
    for (n, m) in sorted(source_module.dims):
        rows = target_module.dim(n + shift[0], m + shift[1])
        cols = source_module.dim(n, m)
        for r in range(rows):
            for c in range(cols):
                coords.append((n, m, r, c))
    return coords


def _vectorize(phi, coords):
    return [phi.block(n, m).get(r, c) for (n, m, r, c) in coords]


def _map_from_vector(source, target, shift, coords, vec):
    phi = GradedMap(source, target, shift)
    acc = {}
    for (n, m, r, c), v in zip(coords, vec):
        acc.setdefault((n, m), []).append((r, c, v))
    zero = source.field.zero()
    for (n, m), entries in acc.items():
        rows, cols = phi.block_shape(n, m)
        mat = Matrix.zeros(source.field, rows, cols)
        for r, c, v in entries:
            if v != zero:
                mat.set(r, c, v)
        phi.set_block(n, m, mat)
    return phi


def solve_map_equation(source_dm, target_dm, shift, rhs, rng=None,
                       kernel_offset=False):
    """Solve ``map_differential(phi) == rhs`` for phi of the given shift.

    Returns ``None`` when the equation has no solution.  Free variables are
    zero; with ``kernel_offset`` a random chain-map correction from the
    kernel is added (this never changes the equation's validity).
    """
    src, tgt = source_dm.module, target_dm.module
    eq_shift = (shift[0], shift[1] - 1)
    unknowns = _coords(src, tgt, shift)
    equations = _coords(src, tgt, eq_shift)
    if rhs.shift != eq_shift:
        raise StructureError(f"rhs shift {rhs.shift} does not match {eq_shift}")
    system = Matrix.zeros(src.field, len(equations), len(unknowns))
    for col, coord in enumerate(unknowns):
        n, m, r, c = coord
        basis = _map_from_vector(src, tgt, shift, [coord], [src.field.one()])
        image = map_differential(basis, source_dm.d, target_dm.d)
        for row, value in enumerate(_vectorize(image, equations)):
            if value != src.field.zero():
                system.set(row, col, value)
    solution = solve_linear(system, _vectorize(rhs, equations))
    if solution is None:
        return None
    if kernel_offset and rng is not None:
        for vec in kernel_basis(system):
            c = src.field.from_int(rng.randint(-1, 1))
            if c != src.field.zero():
                solution = [s + c * v for s, v in zip(solution, vec)]
    return _map_from_vector(src, tgt, shift, unknowns, solution)


def chain_map_space(source_dm, target_dm, shift=(0, 0)):
    """A basis of the chain maps of the given shift, via the kernel of the
    map differential."""
    src, tgt = source_dm.module, target_dm.module
    eq_shift = (shift[0], shift[1] - 1)
    unknowns = _coords(src, tgt, shift)
    equations = _coords(src, tgt, eq_shift)
    system = Matrix.zeros(src.field, len(equations), len(unknowns))
    for col, coord in enumerate(unknowns):
        basis = _map_from_vector(src, tgt, shift, [coord], [src.field.one()])
        image = map_differential(basis, source_dm.d, target_dm.d)
        for row, value in enumerate(_vectorize(image, equations)):
            if value != src.field.zero():
                system.set(row, col, value)
    return [
        _map_from_vector(src, tgt, shift, unknowns, vec)
        for vec in kernel_basis(system)
    ]


def random_chain_map(source_dm, target_dm, rng, shift=(0, 0), span=1):
    basis = chain_map_space(source_dm, target_dm, shift)
    field_ = source_dm.field
    out = GradedMap(source_dm.module, target_dm.module, shift)
    for b in basis:
        c = field_.from_int(rng.randint(-span, span))
        if c != field_.zero():
            out = out + b.scaled(c)
    return out


# -- strict differential graded algebras ----------------------------------------

def _product_map(dm, degree_dims, table):
    """Assemble the binary product from a table keyed by
    ((deg_a, idx_a), (deg_b, idx_b)) -> list of (idx_out, coeff); the output
    degree is deg_a + deg_b."""
    power = tensor_power(dm, 2)
    module = dm.module
    out = GradedMap(power.module, module, (0, 0))
    field_ = dm.field
    blocks = {}
    for q in {a + b for a in degree_dims for b in degree_dims}:
        lay = layout(power.module, q)
        rows = module.dim(0, q)
        if rows == 0 or lay.dim == 0:
            continue
        mat = Matrix.zeros(field_, rows, lay.dim)
        for slot, (da, db) in enumerate(lay.tuples):
            base = lay.offsets[slot]
            dim_b = degree_dims[db]
            for ia in range(degree_dims[da]):
                for ib in range(dim_b):
                    for idx_out, coeff in table.get(((da, ia), (db, ib)), []):
                        mat.add_to(idx_out, base + ia * dim_b + ib,
                                   field_.from_int(coeff))
        blocks[q] = mat
    for q, mat in blocks.items():
        out.set_block(0, q, mat)
    return out


def _dga(field_, degree_dims, table, name, d_entries=()):
    module = GradedModule.single_graded(field_, degree_dims)
    d = GradedMap(module, module, (0, -1))
    for (m, r, c, v) in d_entries:
        rows, cols = d.block_shape(0, m)
        mat = d.block(0, m).copy()
        mat.set(r, c, field_.from_int(v))
        d.set_block(0, m, mat)
    dm = DifferentialModule(module, d)
    product = _product_map(dm, degree_dims, table)
    return AInfAlgebra(dm, {0: product}, complete=True, name=name)


def strict_dga_catalog(field_=None):
    """The built-in strict differential graded algebras."""
    field_ = field_ or Rationals()
    unit = lambda: [(0, 1)]

    triangular = _dga(field_, {0: 3}, {
        # basis order in degree 0: e11, e12, e22
        ((0, 0), (0, 0)): [(0, 1)],
        ((0, 0), (0, 1)): [(1, 1)],
        ((0, 1), (0, 2)): [(1, 1)],
        ((0, 2), (0, 2)): [(2, 1)],
    }, "triangular2x2")

    dual = _dga(field_, {0: 2}, {
        ((0, 0), (0, 0)): [(0, 1)],
        ((0, 0), (0, 1)): [(1, 1)],
        ((0, 1), (0, 0)): [(1, 1)],
    }, "dual-numbers")

    exterior = _dga(field_, {0: 1, 1: 1}, {
        ((0, 0), (0, 0)): unit(),
        ((0, 0), (1, 0)): [(0, 1)],
        ((1, 0), (0, 0)): [(0, 1)],
    }, "exterior-rank1")

    # graded tensor square of the exterior algebra: degrees 0,1,1,2 with
    # basis u; x, y; w and the sign rule y.x = -x.y
    exterior_pair = _dga(field_, {0: 1, 1: 2, 2: 1}, {
        ((0, 0), (0, 0)): unit(),
        ((0, 0), (1, 0)): [(0, 1)],
        ((0, 0), (1, 1)): [(1, 1)],
        ((1, 0), (0, 0)): [(0, 1)],
        ((1, 1), (0, 0)): [(1, 1)],
        ((0, 0), (2, 0)): [(0, 1)],
        ((2, 0), (0, 0)): [(0, 1)],
        ((1, 0), (1, 1)): [(0, 1)],
        ((1, 1), (1, 0)): [(0, -1)],
    }, "exterior-pair")

    contractible = _dga(field_, {0: 1, 1: 1}, {
        ((0, 0), (0, 0)): unit(),
        ((0, 0), (1, 0)): [(0, 1)],
        ((1, 0), (0, 0)): [(0, 1)],
    }, "contractible-dga", d_entries=[(1, 0, 0, 1)])

    return [triangular, dual, exterior, exterior_pair, contractible]


def make_strict_dga(spec, field_=None):
    catalog = {a.name: a for a in strict_dga_catalog(field_)}
    if spec.kind in catalog:
        return catalog[spec.kind]
    names = sorted(catalog)
    return catalog[names[spec.seed % len(names)]]


# -- cones -----------------------------------------------------------------------

@dataclass
class Cone:
    """A contractible complex with an explicit contraction s, ds + sd = 1."""

    dm: DifferentialModule
    contraction: GradedMap


def make_cone(spec, field_=None):
    """The cone of the identity on the graded module given by the profile,
    optionally conjugated by a random invertible degree-0 map (which
    preserves both exactness and the contraction identity)."""
    field_ = field_ or Rationals()
    rng = spec.rng()
    profile = dict(spec.profile)
    cone_dims = {}
    degrees = range(0, max(profile, default=0) + 2)
    for k in degrees:
        dim = profile.get(k - 1, 0) + profile.get(k, 0)
        if dim:
            cone_dims[k] = dim
    module = GradedModule.single_graded(field_, cone_dims)
    d = GradedMap(module, module, (0, -1))
    s = GradedMap(module, module, (0, 1))
    for k in degrees:
        rows_d = module.dim1(k - 1)
        cols = module.dim1(k)
        if rows_d and cols:
            mat = Matrix.zeros(field_, rows_d, cols)
            # the shifted part of degree k maps identically onto the plain
            # part of degree k-1
            shifted = profile.get(k - 1, 0)
            offset = profile.get(k - 2, 0)
            for i in range(shifted):
                mat.set(offset + i, i, field_.one())
            d.set_block(0, k, mat)
        rows_s = module.dim1(k + 1)
        if rows_s and cols:
            mat = Matrix.zeros(field_, rows_s, cols)
            plain = profile.get(k, 0)
            shifted = profile.get(k - 1, 0)
            for i in range(plain):
                mat.set(i, shifted + i, field_.one())
            s.set_block(0, k, mat)
    if spec.scramble:
        u = GradedMap(module, module, (0, 0))
        u_inv = GradedMap(module, module, (0, 0))
        for k, dim in cone_dims.items():
            while True:
                mat = Matrix.zeros(field_, dim, dim)
                for i in range(dim):
                    for j in range(dim):
                        mat.set(i, j, field_.from_int(rng.randint(-1, 1)))
                inv = inverse(mat)
                if inv is not None:
                    break
            u.set_block(0, k, mat)
            u_inv.set_block(0, k, inv)
        d = u @ d @ u_inv
        s = u @ s @ u_inv
    dm = DifferentialModule(module, d)
    return Cone(dm, s)


# -- solver extension ------------------------------------------------------------

def _max_degree(module):
    return max((m for (_, m) in module.dims), default=0)


def extend_ainf(spec, field_=None, base=None):
    """Extend a random binary chain map on a cone to a full structure by
    solving each relation for the next operation.

    Operations whose internal degree exceeds the degree span are zero for
    support reasons, so the resulting structure is complete: relations of
    every index hold, not only the solved ones.  A prebuilt contractible
    ``base`` may be supplied (e.g. to put several structures on one complex).
    """
    field_ = field_ or Rationals()
    last_error = None
    for attempt in range(spec.retries):
        seed = spec.seed + 1_000_003 * attempt
        rng = random.Random(seed)
        cone = base if base is not None else make_cone(replace(spec, seed=seed), field_)
        dm = cone.dm
        span = _max_degree(dm.module)
        top = span if spec.max_op is None else min(spec.max_op, span)
        pi0 = random_chain_map(tensor_power(dm, 2), dm, rng)
        if pi0.is_zero():
            last_error = "zero binary operation"
            continue
        ops = {0: pi0}
        ok = True
        for idx in range(1, top + 1):
            partial = AInfAlgebra(dm, ops, complete=False, name="partial")
            rhs = -structure_residual(partial, idx - 1)
            phi = solve_map_equation(tensor_power(dm, idx + 2), dm, (0, idx),
                                     rhs, rng=rng,
                                     kernel_offset=spec.kernel_offset)
            if phi is None:
                ok = False
                last_error = f"obstruction at operation {idx}"
                break
            if not phi.is_zero():
                ops[idx] = phi
        if ok:
            return AInfAlgebra(dm, ops, complete=True,
                               name=f"cone-extend(seed={spec.seed})")
    raise GenerationError(f"extension failed after {spec.retries} attempts: {last_error}")


def extend_morphism(spec, source, target, f0=None):
    """Extend a chain map between structures to a full morphism by stagewise
    solving; the target must be contractible for guaranteed solvability."""
    last_error = None
    for attempt in range(spec.retries):
        rng = random.Random(spec.seed + 1_000_003 * attempt)
        if f0 is None:
            base = random_chain_map(source.dm, target.dm, rng)
            if base.is_zero():
                last_error = "zero base chain map"
                continue
        else:
            base = f0
        span = _max_degree(target.module)
        comps = {0: base}
        ok = True
        for idx in range(1, span + 1):
            partial = AInfMorphism(source, target, comps, complete=False)
            rhs = -morphism_residual(partial, idx - 1)
            phi = solve_map_equation(tensor_power(source.dm, idx + 1),
                                     target.dm, (0, idx), rhs, rng=rng,
                                     kernel_offset=spec.kernel_offset)
            if phi is None:
                ok = False
                last_error = f"obstruction at component {idx}"
                break
            if not phi.is_zero():
                comps[idx] = phi
        if ok:
            return AInfMorphism(source, target, comps, complete=True,
                                name=f"morphism(seed={spec.seed})")
    raise GenerationError(f"morphism extension failed: {last_error}")


def extend_homotopy(spec, f, g):
    """Extend a homotopy between two parallel morphisms by stagewise solving;
    over a contractible target any two morphisms are homotopic."""
    source, target = f.source, f.target
    last_error = None
    for attempt in range(spec.retries):
        rng = random.Random(spec.seed + 1_000_003 * attempt)
        span = _max_degree(target.module)
        comps = {}
        ok = True
        for idx in range(0, span + 1):
            partial = AInfHomotopy(f, g, comps, complete=False)
            rhs = -homotopy_residual(partial, idx - 1)
            phi = solve_map_equation(tensor_power(source.dm, idx + 1),
                                     target.dm, (0, idx + 1), rhs, rng=rng,
                                     kernel_offset=spec.kernel_offset)
            if phi is None:
                ok = False
                last_error = f"obstruction at component {idx}"
                break
            if not phi.is_zero():
                comps[idx] = phi
        if ok:
            return AInfHomotopy(f, g, comps, complete=True,
                                name=f"homotopy(seed={spec.seed})")
    raise GenerationError(f"homotopy extension failed: {last_error}")


def generate(spec, field_=None):
    """Generate the instance a spec describes (for the command line)."""
    field_ = field_ or Rationals()
    if spec.kind in ("dga",) or spec.kind in {a.name for a in strict_dga_catalog(field_)}:
        return make_strict_dga(spec, field_)
    if spec.kind == "cone":
        return make_cone(spec, field_)
    if spec.kind == "ainf-extend":
        return extend_ainf(spec, field_)
    if spec.kind == "morphism-extend":
        a = extend_ainf(replace(spec, seed=spec.seed * 2 + 1, kind="ainf-extend"), field_)
        b = extend_ainf(replace(spec, seed=spec.seed * 2 + 2, kind="ainf-extend"), field_)
        return extend_morphism(spec, a, b)
    if spec.kind == "homotopy-extend":
        a = extend_ainf(replace(spec, seed=spec.seed * 2 + 1, kind="ainf-extend"), field_)
        b = extend_ainf(replace(spec, seed=spec.seed * 2 + 2, kind="ainf-extend"), field_)
        f = extend_morphism(replace(spec, seed=spec.seed * 3 + 1), a, b)
        g = extend_morphism(replace(spec, seed=spec.seed * 3 + 2), a, b)
        return extend_homotopy(spec, f, g)
    raise GenerationError(f"unknown generator kind {spec.kind!r}")
