"""Differential modules with infinity-simplicial faces: structure checks,
morphisms, composition, homotopies, and the strict-simplicial embedding.

A face family maps keys ``(level, index_tuple)`` to graded maps whose blocks
live at first index ``level``; the face for tuple (i_1 < ... < i_k) drops the
level by k and raises internal degree by k-1.  Checks evaluate each relation
as an exact matrix identity per (level, tuple) cell.  Missing components in a
declared range are treated as zero maps and noted (never silently), and
relations beyond an instance's declared level are reported as skipped.
"""

from __future__ import annotations

import itertools

from .combinatorics import enum_composition_splits, enum_relation_splits
from .graded import GradedMap, GradingError, map_differential, zero_map
from .linalg import Matrix
from .report import VerificationReport


class StructureError(ValueError):
    """A structure violates its defining relations or ranges."""


def _check_tuple(n, t):
    k = len(t)
    if k > n:
        raise StructureError(f"tuple {t} too long for level {n}")
    if k and (t[0] < 0 or t[-1] > n):
        raise StructureError(f"tuple {t} out of range at level {n}")
    if any(a >= b for a, b in zip(t, t[1:])):
        raise StructureError(f"tuple {t} is not strictly increasing")


def level_slice(phi, n):
    """Restrict a graded map to the blocks with first index n."""
    out = GradedMap(phi.source, phi.target, phi.shift)
    for (bn, bm), mat in phi.blocks.items():
        if bn == n:
            out.set_block(bn, bm, mat)
    return out


def _first_nonzero_block(phi, q_max=None):
    for (n, m), mat in sorted(phi.blocks.items()):
        if q_max is not None and m > q_max:
            continue
        if not mat.is_zero():
            return {"level": n, "degree": m}
    return None


def _residual_zero(phi, q_max=None):
    return _first_nonzero_block(phi, q_max) is None


class InftySimplicialModule:
    """A bigraded differential module with a family of higher face operators."""

    def __init__(self, dm, faces, max_level, complete=True):
        self.dm = dm
        self.module = dm.module
        self.max_level = max_level
        self.complete = complete
        self.faces = {}
        for (n, t), phi in faces.items():
            t = tuple(t)
            _check_tuple(n, t)
            if len(t) < 1:
                raise StructureError("face tuples must be nonempty")
            k = len(t)
            if phi.shift != (-k, k - 1):
                raise GradingError(
                    f"face {t} at level {n} has shift {phi.shift}, wanted {(-k, k - 1)}")
            self.faces[(n, t)] = phi

    @property
    def field(self):
        return self.module.field

    def face(self, n, t):
        """The face map for (level, tuple); absent keys give the zero map."""
        t = tuple(t)
        got = self.faces.get((n, t))
        if got is not None:
            return got
        k = len(t)
        return zero_map(self.module, self.module, (-k, k - 1))

    def has_face(self, n, t):
        return (n, tuple(t)) in self.faces

    def level_tuples(self, n):
        for k in range(1, n + 1):
            for t in itertools.combinations(range(0, n + 1), k):
                yield t


def all_face_keys(max_level):
    for n in range(1, max_level + 1):
        for k in range(1, n + 1):
            for t in itertools.combinations(range(0, n + 1), k):
                yield (n, t)


def relation_terms_faces(x_mod, n, t):
    """The signed composite face terms of the structure relation at (n, t)."""
    k = len(t)
    terms = []
    missing = []
    for sp in enum_relation_splits(t):
        level_left = n - len(sp.right)
        if not x_mod.has_face(n, sp.right) and not x_mod.complete:
            missing.append((n, sp.right))
        if not x_mod.has_face(level_left, sp.left) and not x_mod.complete:
            missing.append((level_left, sp.left))
        comp = x_mod.face(level_left, sp.left) @ x_mod.face(n, sp.right)
        terms.append((sp.sign, comp))
    return terms, missing


def check_faces(x_mod, max_level=None, max_degree=None, report=None):
    """Verify the face structure relation on every (level, tuple) cell."""
    if report is None:
        report = VerificationReport("face structure check")
    top = x_mod.max_level if max_level is None else max_level
    d = x_mod.dm.d
    for n in range(1, top + 1):
        if n > x_mod.max_level:
            for t in x_mod.level_tuples(n):
                report.skip("1.1", {"level": n, "tuple": list(t)},
                            note="beyond declared level truncation")
            continue
        for t in x_mod.level_tuples(n):
            note = ""
            if not x_mod.has_face(n, t) and not x_mod.complete:
                note = "face absent, treated as zero"
            lhs = map_differential(level_slice(x_mod.face(n, t), n), d, d)
            terms, missing = relation_terms_faces(x_mod, n, t)
            residual = lhs
            for sign, comp in terms:
                residual = residual - comp if sign > 0 else residual + comp
            if missing:
                note = (note + "; " if note else "") + \
                    f"absent faces treated as zero: {sorted(set(missing))}"
            report.record("1.1", {"level": n, "tuple": list(t)},
                          _residual_zero(residual, max_degree),
                          location=_first_nonzero_block(residual, max_degree),
                          note=note)
    return report


class InftyMorphism:
    """A morphism of differential modules with infinity-simplicial faces."""

    def __init__(self, source, target, components, max_level, complete=True):
        self.source = source
        self.target = target
        self.max_level = max_level
        self.complete = complete
        self.components = {}
        for (n, t), phi in components.items():
            t = tuple(t)
            _check_tuple(n, t)
            k = len(t)
            if phi.shift != (-k, k):
                raise GradingError(
                    f"component {t} at level {n} has shift {phi.shift}, wanted {(-k, k)}")
            self.components[(n, t)] = phi

    def component(self, n, t):
        t = tuple(t)
        got = self.components.get((n, t))
        if got is not None:
            return got
        k = len(t)
        return zero_map(self.source.module, self.target.module, (-k, k))

    def has_component(self, n, t):
        return (n, tuple(t)) in self.components

    def __eq__(self, other):
        if not isinstance(other, InftyMorphism):
            return NotImplemented
        keys = set(self.components) | set(other.components)
        return all(self.component(*key) == other.component(*key) for key in keys)


def identity_infty_morphism(x_mod):
    """Identity morphism: the empty-tuple component is the identity at every
    level and all higher components vanish."""
    comps = {}
    for n in range(0, x_mod.max_level + 1):
        ident = GradedMap(x_mod.module, x_mod.module, (0, 0))
        for (bn, bm), dim in x_mod.module.dims.items():
            if bn == n:
                ident.set_block(bn, bm, Matrix.identity(x_mod.field, dim))
        comps[(n, ())] = ident
        for t in x_mod.level_tuples(n):
            comps[(n, t)] = zero_map(x_mod.module, x_mod.module,
                                     (-len(t), len(t)))
    return InftyMorphism(x_mod, x_mod, comps, x_mod.max_level)


def morphism_keys(max_level):
    for n in range(0, max_level + 1):
        yield (n, ())
        for k in range(1, n + 1):
            for t in itertools.combinations(range(0, n + 1), k):
                yield (n, t)


def check_morphism(f, max_level=None, max_degree=None, report=None):
    """Verify the morphism relation on every (level, tuple) cell, including
    the k = 0 chain-map condition."""
    if report is None:
        report = VerificationReport("face morphism check")
    top = f.max_level if max_level is None else max_level
    d_x = f.source.dm.d
    d_y = f.target.dm.d
    for n, t in morphism_keys(top):
        if n > f.max_level:
            report.skip("1.2", {"level": n, "tuple": list(t)},
                        note="beyond declared level truncation")
            continue
        k = len(t)
        lhs = map_differential(level_slice(f.component(n, t), n), d_x, d_y)
        residual = lhs
        if k > 0:
            residual = residual + (f.target.face(n, t) @ f.component(n, ()))
            residual = residual - (f.component(n - k, ()) @ f.source.face(n, t))
        for sp in enum_relation_splits(t):
            level_left = n - len(sp.right)
            term_df = f.target.face(level_left, sp.left) @ f.component(n, sp.right)
            term_fd = f.component(level_left, sp.left) @ f.source.face(n, sp.right)
            if sp.sign > 0:
                residual = residual - term_df + term_fd
            else:
                residual = residual + term_df - term_fd
        report.record("1.2", {"level": n, "tuple": list(t)},
                      _residual_zero(residual, max_degree),
                      location=_first_nonzero_block(residual, max_degree))
    return report


def compose_infty(g, f, max_level=None):
    """Composition of morphisms of differential modules with
    infinity-simplicial faces."""
    if f.target is not g.source and f.target.module != g.source.module:
        raise StructureError("composition endpoint mismatch")
    top = min(f.max_level, g.max_level) if max_level is None else max_level
    comps = {}
    for n, t in morphism_keys(top):
        k = len(t)
        acc = zero_map(f.source.module, g.target.module, (-k, k))
        for sp in enum_composition_splits(t):
            level_left = n - len(sp.right)
            term = g.component(level_left, sp.left) @ level_slice(f.component(n, sp.right), n)
            acc = acc + term if sp.sign > 0 else acc - term
        comps[(n, t)] = acc
    return InftyMorphism(f.source, g.target, comps, top,
                         complete=f.complete and g.complete)


class InftyHomotopy:
    """A homotopy between two parallel morphisms of differential modules
    with infinity-simplicial faces."""

    def __init__(self, f, g, components, max_level, complete=True):
        if f.source is not g.source and f.source.module != g.source.module:
            raise StructureError("homotopy endpoints do not match")
        if f.target is not g.target and f.target.module != g.target.module:
            raise StructureError("homotopy endpoints do not match")
        self.f = f
        self.g = g
        self.source = f.source
        self.target = f.target
        self.max_level = max_level
        self.complete = complete
        self.components = {}
        for (n, t), phi in components.items():
            t = tuple(t)
            _check_tuple(n, t)
            k = len(t)
            if phi.shift != (-k, k + 1):
                raise GradingError(
                    f"homotopy component {t} at level {n} has shift {phi.shift}, "
                    f"wanted {(-k, k + 1)}")
            self.components[(n, t)] = phi

    def component(self, n, t):
        t = tuple(t)
        got = self.components.get((n, t))
        if got is not None:
            return got
        k = len(t)
        return zero_map(self.source.module, self.target.module, (-k, k + 1))


def check_homotopy(h, max_level=None, max_degree=None, report=None):
    """Verify the homotopy relation on every (level, tuple) cell."""
    if report is None:
        report = VerificationReport("face homotopy check")
    top = h.max_level if max_level is None else max_level
    d_x = h.source.dm.d
    d_y = h.target.dm.d
    for n, t in morphism_keys(top):
        if n > h.max_level:
            report.skip("1.4", {"level": n, "tuple": list(t)},
                        note="beyond declared level truncation")
            continue
        k = len(t)
        lhs = map_differential(level_slice(h.component(n, t), n), d_x, d_y)
        residual = lhs
        residual = residual - level_slice(h.f.component(n, t), n)
        residual = residual + level_slice(h.g.component(n, t), n)
        if k > 0:
            residual = residual + (h.target.face(n, t) @ h.component(n, ()))
            residual = residual + (h.component(n - k, ()) @ h.source.face(n, t))
        for sp in enum_relation_splits(t):
            level_left = n - len(sp.right)
            term_dh = h.target.face(level_left, sp.left) @ h.component(n, sp.right)
            term_hd = h.component(level_left, sp.left) @ h.source.face(n, sp.right)
            if sp.sign > 0:
                residual = residual - term_dh - term_hd
            else:
                residual = residual + term_dh + term_hd
        report.record("1.4", {"level": n, "tuple": list(t)},
                      _residual_zero(residual, max_degree),
                      location=_first_nonzero_block(residual, max_degree))
    return report


def from_simplicial(dm, strict_faces, max_level):
    """Embed a differential module with strict simplicial faces.

    ``strict_faces`` maps the face index i to a graded map of shift (-1, 0)
    (blocks at every level where the face is defined).  The strict
    commutation identities and the chain-map conditions are verified first;
    violations are rejected with the offending (i, j, level).
    """
    d = dm.d
    for i, phi in sorted(strict_faces.items()):
        if phi.shift != (-1, 0):
            raise GradingError(f"strict face {i} has shift {phi.shift}")
        chain_residual = (d @ phi) - (phi @ d)
        loc = _first_nonzero_block(chain_residual)
        if loc is not None:
            raise StructureError(f"strict face {i} is not a chain map at {loc}")
    for n in range(1, max_level + 1):
        for i in sorted(strict_faces):
            for j in sorted(strict_faces):
                if not (i < j <= n):
                    continue
                lhs = level_slice(strict_faces[i], n - 1) @ level_slice(strict_faces[j], n)
                rhs = level_slice(strict_faces[j - 1], n - 1) @ level_slice(strict_faces[i], n)
                if lhs != rhs:
                    raise StructureError(
                        f"strict commutation fails for (i, j) = ({i}, {j}) at level {n}")
    faces = {}
    for n in range(1, max_level + 1):
        for i in sorted(strict_faces):
            if i <= n:
                faces[(n, (i,))] = level_slice(strict_faces[i], n)
        for k in range(2, n + 1):
            for t in itertools.combinations(range(0, n + 1), k):
                faces[(n, t)] = zero_map(dm.module, dm.module, (-k, k - 1))
    return InftySimplicialModule(dm, faces, max_level)
