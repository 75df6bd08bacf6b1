"""The tensor functor from A-infinity algebras to differential modules with
infinity-simplicial faces.

On objects, level n of the image is the n-th tensor power with the tensor
differential, and the face for a consecutive interior run (j, ..., j+k-1)
inserts the arity-(k-1) operation at slot j with sign ``(-1)**(k(q-1))`` on
inputs of internal degree q; all other tuples give the zero face.  Morphisms
and homotopies are transported by interleaving components along the run
decomposition of the index tuple.

Every sign sits in a small named exponent function so the mutation suite
can flip each one independently and watch the relation checkers fail.

Component construction is split into a "plan" stage (pure combinatorics:
factor lists plus exponents) and a matrix stage; the plans are unit-testable
against the closed-form examples without building any tensor power.
"""

from __future__ import annotations

from .ainf import check_ainf, compose_ainf
from .combinatorics import (block_permutation, is_consecutive_run,
                            positive_compositions, run_decomposition)
from .exponents import (grouped_homotopy_exponent, grouped_interleave_exponent,
                        homotopy_slot_exponent, interleave_exponent,
                        run_interchange_exponent)
from .graded import (DifferentialModule, GradedMap, GradedModule, identity_map,
                     map_differential, tensor_maps, tensor_power, zero_map)
from .report import VerificationReport
from .simplicial import (InftyHomotopy, InftyMorphism, InftySimplicialModule,
                         StructureError, _first_nonzero_block, _residual_zero,
                         all_face_keys, check_homotopy, check_morphism,
                         compose_infty, identity_infty_morphism, morphism_keys)


class FunctorInputError(StructureError):
    """The input structure is invalid or insufficiently deep for the image."""


# -- sign sites (each one individually flippable by the mutation suite) ---------

def face_sign_exponent(k, q):
    """Sign exponent of the face for a k-run on inputs of degree q."""
    return (k * (q - 1)) % 2


def morphism_sign_exponent(k, q, lengths):
    """Sign exponent of a transported morphism component."""
    return (k * (q - 1) + run_interchange_exponent(lengths)) % 2


def homotopy_sign_exponent(k, q, lengths):
    """Outer sign exponent of a transported homotopy component."""
    return (k * (q - 1) + run_interchange_exponent(lengths)) % 2


def homotopy_prefix_exponent(lengths, i):
    """Inner sign exponent (-1)**(n_1 + ... + n_{i-1}) of the i-th summand."""
    return sum(lengths[:i - 1]) % 2


# -- construction plans ----------------------------------------------------------

def face_plan(n, t):
    """(exponent_fn_input, slot) for the face at (level n, tuple t), or None
    when the face is zero: the tuple must be a consecutive interior run."""
    k = len(t)
    if k == 0 or not is_consecutive_run(t):
        return None
    j = t[0]
    if not (1 <= j <= n - k):
        return None
    return j


def morphism_component_plan(n, t):
    """Factor list for the transported morphism component at (level n, t):
    a list of ("f", index) descriptors, plus the run lengths (which fix the
    interchange exponent).  Returns None for boundary tuples (zero
    component)."""
    k = len(t)
    if k == 0:
        return [("f", 0)] * n, ()
    if t[0] == 0 or t[-1] == n:
        return None
    rd = run_decomposition(t, n)
    factors = []
    for gap, length in zip(rd.gaps, rd.lengths):
        factors.extend([("f", 0)] * (gap - 1))
        factors.append(("f", length))
    factors.extend([("f", 0)] * (rd.gaps[-1] - 1))
    return factors, rd.lengths


def homotopy_component_plan(n, t):
    """Signed factor lists for the transported homotopy component at
    (level n, t): a list of (prefix_exponent, descriptors) summands, plus
    the interchange exponent.  Descriptors are ("f"|"g"|"h", index)."""
    k = len(t)
    if k == 0:
        summands = []
        for i in range(1, n + 1):
            desc = [("g", 0)] * (i - 1) + [("h", 0)] + [("f", 0)] * (n - i)
            summands.append((0, desc))
        return summands, ()
    if t[0] == 0 or t[-1] == n:
        return None
    rd = run_decomposition(t, n)
    s = rd.s
    gaps, lengths = rd.gaps, rd.lengths
    summands = []
    for i in range(1, s + 1):
        desc = []
        for l in range(1, i):
            desc.extend([("g", 0)] * (gaps[l - 1] - 1))
            desc.append(("g", lengths[l - 1]))
        desc.extend([("g", 0)] * (gaps[i - 1] - 1))
        desc.append(("h", lengths[i - 1]))
        for l in range(i + 1, s + 1):
            desc.extend([("f", 0)] * (gaps[l - 1] - 1))
            desc.append(("f", lengths[l - 1]))
        desc.extend([("f", 0)] * (gaps[s] - 1))
        summands.append((homotopy_prefix_exponent(lengths, i), desc))
    for i in range(1, s + 2):
        gap = gaps[i - 1]
        for j in range(1, gap):
            desc = []
            for l in range(1, i):
                desc.extend([("g", 0)] * (gaps[l - 1] - 1))
                desc.append(("g", lengths[l - 1]))
            desc.extend([("g", 0)] * (j - 1))
            desc.append(("h", 0))
            desc.extend([("f", 0)] * (gap - 1 - j))
            if i <= s:
                desc.append(("f", lengths[i - 1]))
                for l in range(i + 1, s + 1):
                    desc.extend([("f", 0)] * (gaps[l - 1] - 1))
                    desc.append(("f", lengths[l - 1]))
                desc.extend([("f", 0)] * (gaps[s] - 1))
            summands.append((homotopy_prefix_exponent(lengths, i), desc))
    return summands, lengths


# -- matrix assembly -------------------------------------------------------------

def _bigraded_from_single(tx_module, ty_module, level, shift, base, exponent_fn):
    """Lift a map between tensor powers into the bigraded picture at one
    level, scaling the block at source degree q by (-1)**exponent_fn(q)."""
    out = GradedMap(tx_module, ty_module, shift)
    field_ = tx_module.field
    for (_, q), mat in base.blocks.items():
        if exponent_fn(q):
            mat = -mat
        out.set_block(level, q, mat)
    return out


def _ensure_valid(algebra, max_level):
    if not algebra.complete and algebra.max_op < max_level - 1:
        raise FunctorInputError(
            f"operations declared only up to index {algebra.max_op}; "
            f"level {max_level} needs index {max_level - 1}")
    rep = check_ainf(algebra, max_relation=algebra.max_op + 1)
    if not rep.ok:
        bad = rep.failures()[0]
        raise FunctorInputError(f"input fails its structure relation at {bad.params}")


def tensor_object(algebra, max_level, check=True):
    """The image differential module with infinity-simplicial faces."""
    if check:
        _ensure_valid(algebra, max_level)
    field_ = algebra.field
    dims = {}
    powers = [tensor_power(algebra.dm, n) for n in range(max_level + 1)]
    for n, power in enumerate(powers):
        for (_, q), dim in power.module.dims.items():
            dims[(n, q)] = dim
    module = GradedModule(field_, dims)
    d = GradedMap(module, module, (0, -1))
    for n, power in enumerate(powers):
        for (_, q), mat in power.d.blocks.items():
            d.set_block(n, q, mat)
    dm = DifferentialModule(module, d, check=False)
    ident = identity_map(algebra.module)
    faces = {}
    for n, t in all_face_keys(max_level):
        k = len(t)
        j = face_plan(n, t)
        if j is None:
            faces[(n, t)] = zero_map(module, module, (-k, k - 1))
            continue
        factors = [ident] * (j - 1) + [algebra.op(k - 1)] + [ident] * (n - k - j)
        base = tensor_maps(factors, field=field_)
        faces[(n, t)] = _bigraded_from_single(
            module, module, n, (-k, k - 1), base,
            lambda q, k=k: face_sign_exponent(k, q))
    return InftySimplicialModule(dm, faces, max_level)


def _descriptor_maps(desc, f=None, g=None, h=None):
    out = []
    for fam, idx in desc:
        if fam == "f":
            out.append(f.component(idx))
        elif fam == "g":
            out.append(g.component(idx))
        else:
            out.append(h.component(idx))
    return out


def tensor_morphism(f, max_level, tx=None, ty=None, check=True):
    """The image morphism between the image modules of source and target."""
    tx = tx or tensor_object(f.source, max_level, check=check)
    ty = ty or tensor_object(f.target, max_level, check=check)
    field_ = f.source.field
    comps = {}
    for n, t in morphism_keys(max_level):
        k = len(t)
        plan = morphism_component_plan(n, t)
        if plan is None:
            comps[(n, t)] = zero_map(tx.module, ty.module, (-k, k))
            continue
        desc, lengths = plan
        base = tensor_maps(_descriptor_maps(desc, f=f), field=field_)
        comps[(n, t)] = _bigraded_from_single(
            tx.module, ty.module, n, (-k, k), base,
            lambda q, k=k, ln=lengths: morphism_sign_exponent(k, q, ln))
    return InftyMorphism(tx, ty, comps, max_level)


def tensor_homotopy(h, max_level, tf=None, tg=None, check=True):
    """The image homotopy between the image morphisms of its endpoints."""
    tf = tf or tensor_morphism(h.f, max_level, check=check)
    tg = tg or tensor_morphism(h.g, max_level, tx=tf.source, ty=tf.target,
                               check=False)
    tx, ty = tf.source, tf.target
    field_ = h.source.field
    comps = {}
    for n, t in morphism_keys(max_level):
        k = len(t)
        plan = homotopy_component_plan(n, t)
        if plan is None:
            comps[(n, t)] = zero_map(tx.module, ty.module, (-k, k + 1))
            continue
        summands, lengths = plan
        base = None
        for prefix_exp, desc in summands:
            term = tensor_maps(_descriptor_maps(desc, f=h.f, g=h.g, h=h),
                               field=field_)
            if prefix_exp:
                term = -term
            base = term if base is None else base + term
        if base is None:
            comps[(n, t)] = zero_map(tx.module, ty.module, (-k, k + 1))
            continue
        comps[(n, t)] = _bigraded_from_single(
            tx.module, ty.module, n, (-k, k + 1), base,
            lambda q, k=k, ln=lengths: homotopy_sign_exponent(k, q, ln))
    return InftyHomotopy(tf, tg, comps, max_level)


# -- theorem-level verifiers ------------------------------------------------------

def verify_object_theorem(algebra, max_level, max_degree=None, report=None):
    """Image of a valid structure satisfies the face relations."""
    from .simplicial import check_faces
    if report is None:
        report = VerificationReport(f"faces of image of {algebra.name}".strip())
    tx = tensor_object(algebra, max_level)
    return check_faces(tx, max_level, max_degree, report)


def verify_morphism_theorem(f, max_level, max_degree=None, report=None):
    tf = tensor_morphism(f, max_level)
    if report is None:
        report = VerificationReport(f"morphism image check {f.name}".strip())
    return check_morphism(tf, max_level, max_degree, report)


def verify_homotopy_theorem(h, max_level, max_degree=None, report=None):
    th = tensor_homotopy(h, max_level)
    if report is None:
        report = VerificationReport(f"homotopy image check {h.name}".strip())
    return check_homotopy(th, max_level, max_degree, report)


def verify_functoriality(g, f, max_level, report=None):
    """Image of a composition equals the composition of the images,
    component by component."""
    if report is None:
        report = VerificationReport("functoriality check")
    ta = tensor_object(f.source, max_level)
    tb = tensor_object(f.target, max_level)
    tc = tensor_object(g.target, max_level)
    tf = tensor_morphism(f, max_level, tx=ta, ty=tb, check=False)
    tg = tensor_morphism(g, max_level, tx=tb, ty=tc, check=False)
    gf = compose_ainf(g, f)
    t_gf = tensor_morphism(gf, max_level, tx=ta, ty=tc, check=False)
    composed = compose_infty(tg, tf)
    for n, t in morphism_keys(max_level):
        same = t_gf.component(n, t) == composed.component(n, t)
        report.record("T3.3", {"level": n, "tuple": list(t)}, same)
    return report


def verify_identity_image(algebra, max_level, report=None):
    """The image of the identity morphism is the identity morphism."""
    if report is None:
        report = VerificationReport("identity image check")
    from .ainf import identity_ainf_morphism
    tx = tensor_object(algebra, max_level)
    t_id = tensor_morphism(identity_ainf_morphism(algebra), max_level,
                           tx=tx, ty=tx, check=False)
    ident = identity_infty_morphism(tx)
    for n, t in morphism_keys(max_level):
        same = t_id.component(n, t) == ident.component(n, t)
        report.record("T(1)=1", {"level": n, "tuple": list(t)}, same)
    return report


def verify_homotopy_equivalence(phi, psi, h_left, h_right, max_level,
                                max_degree=None, report=None):
    """Transported homotopy-equivalence witnesses verify on the images.

    ``h_left`` is a homotopy between psi.phi and the identity on the source,
    ``h_right`` between phi.psi and the identity on the target.  The check
    confirms that the transported homotopies connect the *composed* image
    morphisms to the identity morphisms of the images, so the images really
    are homotopy equivalent with the transported maps as witnesses.
    """
    if report is None:
        report = VerificationReport("homotopy equivalence transport")
    ta = tensor_object(phi.source, max_level)
    tb = tensor_object(phi.target, max_level)
    t_phi = tensor_morphism(phi, max_level, tx=ta, ty=tb, check=False)
    t_psi = tensor_morphism(psi, max_level, tx=tb, ty=ta, check=False)
    sides = (
        ("source", h_left, compose_infty(t_psi, t_phi), identity_infty_morphism(ta), ta),
        ("target", h_right, compose_infty(t_phi, t_psi), identity_infty_morphism(tb), tb),
    )
    for name, hom, composed, ident, t_end in sides:
        tf_end = tensor_morphism(hom.f, max_level,
                                 tx=t_end, ty=t_end, check=False)
        tg_end = tensor_morphism(hom.g, max_level,
                                 tx=t_end, ty=t_end, check=False)
        for n, t in morphism_keys(max_level):
            same = tf_end.component(n, t) == composed.component(n, t)
            report.record("C3.1-endpoint-compose", {"side": name, "level": n,
                                                    "tuple": list(t)}, same)
            same_id = tg_end.component(n, t) == ident.component(n, t)
            report.record("C3.1-endpoint-identity", {"side": name, "level": n,
                                                     "tuple": list(t)}, same_id)
        th = tensor_homotopy(hom, max_level, tf=tf_end, tg=tg_end)
        sub = check_homotopy(th, max_level, max_degree)
        for e in sub.entries:
            e.relation = "C3.1"
            e.params["side"] = name
        report.merge(sub)
    return report


# -- rewritten relation cross-checks ----------------------------------------------

def grouped_morphism_residual(f, n):
    """Residual of the grouped (run-indexed) rewrite of the morphism
    relation of index n, against the same map differential."""
    src, tgt = f.source, f.target
    lhs = map_differential(f.component(n + 1), src.power(n + 2).d, tgt.dm.d)
    residual = lhs
    residual = residual - (f.component(0) @ src.op(n))
    ident = identity_map(src.module)
    for m in range(0, n):
        for t in range(1, m + 3):
            factors = [ident] * (t - 1) + [src.op(n - m - 1)] + [ident] * (m + 2 - t)
            term = f.component(m + 1) @ tensor_maps(factors)
            if (t * (n - m) + n + 1) % 2:
                residual = residual + term
            else:
                residual = residual - term
    residual = residual + (tgt.op(n) @ tensor_maps([f.component(0)] * (n + 2),
                                                   field=src.field))
    for m in range(0, n):
        for s in range(1, m + 3):
            for n_blocks in positive_compositions(n - m, s):
                for t_total in range(s, m + 3):
                    for t_blocks in positive_compositions(t_total, s):
                        desc = []
                        for tb, nb in zip(t_blocks, n_blocks):
                            desc.extend([("f", 0)] * (tb - 1))
                            desc.append(("f", nb))
                        desc.extend([("f", 0)] * (m + 2 - t_total))
                        term = tgt.op(m) @ tensor_maps(
                            _descriptor_maps(desc, f=f), field=src.field)
                        if grouped_interleave_exponent(t_blocks, n_blocks):
                            residual = residual - term
                        else:
                            residual = residual + term
    return residual


def grouped_homotopy_residual(h, n):
    """Residual of the grouped rewrite of the homotopy relation of index n."""
    src, tgt = h.source, h.target
    f, g = h.f, h.g
    lhs = map_differential(h.component(n + 1), src.power(n + 2).d, tgt.dm.d)
    residual = lhs - f.component(n + 1) + g.component(n + 1)
    residual = residual + (h.component(0) @ src.op(n))
    ident = identity_map(src.module)
    for m in range(0, n):
        for t in range(1, m + 3):
            factors = [ident] * (t - 1) + [src.op(n - m - 1)] + [ident] * (m + 2 - t)
            term = h.component(m + 1) @ tensor_maps(factors)
            if (t * (n - m) + n) % 2:
                residual = residual + term
            else:
                residual = residual - term
    for i in range(1, n + 3):
        desc = [("g", 0)] * (i - 1) + [("h", 0)] + [("f", 0)] * (n + 2 - i)
        term = tgt.op(n) @ tensor_maps(_descriptor_maps(desc, f=f, g=g, h=h),
                                       field=src.field)
        if n % 2:
            residual = residual + term
        else:
            residual = residual - term
    for m in range(0, n):
        for s in range(1, m + 3):
            for n_blocks in positive_compositions(n - m, s):
                for t_total in range(s, m + 3):
                    for t_blocks in positive_compositions(t_total, s):
                        t_tail = m + 3 - t_total
                        theta = grouped_homotopy_exponent(m, t_blocks, n_blocks)
                        for i in range(1, s + 1):
                            desc = []
                            for l in range(1, i):
                                desc.extend([("g", 0)] * (t_blocks[l - 1] - 1))
                                desc.append(("g", n_blocks[l - 1]))
                            desc.extend([("g", 0)] * (t_blocks[i - 1] - 1))
                            desc.append(("h", n_blocks[i - 1]))
                            for l in range(i + 1, s + 1):
                                desc.extend([("f", 0)] * (t_blocks[l - 1] - 1))
                                desc.append(("f", n_blocks[l - 1]))
                            desc.extend([("f", 0)] * (t_tail - 1))
                            term = tgt.op(m) @ tensor_maps(
                                _descriptor_maps(desc, f=f, g=g, h=h),
                                field=src.field)
                            exp = (theta + sum(n_blocks[:i - 1])) % 2
                            residual = residual - term if exp == 0 else residual + term
                        gaps = list(t_blocks) + [t_tail]
                        for i in range(1, s + 2):
                            gap = gaps[i - 1]
                            for j in range(1, gap):
                                desc = []
                                for l in range(1, i):
                                    desc.extend([("g", 0)] * (t_blocks[l - 1] - 1))
                                    desc.append(("g", n_blocks[l - 1]))
                                desc.extend([("g", 0)] * (j - 1))
                                desc.append(("h", 0))
                                desc.extend([("f", 0)] * (gap - 1 - j))
                                if i <= s:
                                    desc.append(("f", n_blocks[i - 1]))
                                    for l in range(i + 1, s + 1):
                                        desc.extend([("f", 0)] * (t_blocks[l - 1] - 1))
                                        desc.append(("f", n_blocks[l - 1]))
                                    desc.extend([("f", 0)] * (t_tail - 1))
                                term = tgt.op(m) @ tensor_maps(
                                    _descriptor_maps(desc, f=f, g=g, h=h),
                                    field=src.field)
                                exp = (theta + sum(n_blocks[:i - 1])) % 2
                                residual = residual - term if exp == 0 else residual + term
    return residual


def verify_rewrites_morphism(f, max_relation, max_degree=None, report=None):
    """The grouped rewrite agrees with the direct relation, index by index."""
    if report is None:
        report = VerificationReport(f"morphism rewrite check {f.name}".strip())
    from .ainf import morphism_residual
    for n in range(-1, max_relation + 1):
        direct = morphism_residual(f, n)
        grouped = grouped_morphism_residual(f, n)
        report.record("3.5", {"n": n}, _residual_zero(grouped, max_degree),
                      location=_first_nonzero_block(grouped, max_degree))
        report.record("3.5=2.2", {"n": n}, direct == grouped)
    return report


def verify_rewrites_homotopy(h, max_relation, max_degree=None, report=None):
    if report is None:
        report = VerificationReport(f"homotopy rewrite check {h.name}".strip())
    from .ainf import homotopy_residual
    for n in range(-1, max_relation + 1):
        direct = homotopy_residual(h, n)
        grouped = grouped_homotopy_residual(h, n)
        report.record("3.12", {"n": n}, _residual_zero(grouped, max_degree),
                      location=_first_nonzero_block(grouped, max_degree))
        report.record("3.12=2.4", {"n": n}, direct == grouped)
    return report


# -- block-permutation forms on the image -----------------------------------------

def _interval(start, length):
    return tuple(range(start, start + length))


def blockform_morphism_residual(tf, n):
    """Residual of the block-permutation form of the image morphism relation
    at the full interior tuple (1, ..., n+1) of level n+2."""
    tx, ty = tf.source, tf.target
    level = n + 2
    full = _interval(1, n + 1)
    from .simplicial import level_slice
    lhs = map_differential(level_slice(tf.component(level, full), level),
                           tx.dm.d, ty.dm.d)
    residual = lhs
    residual = residual - (tf.component(1, ()) @ tx.face(level, full))
    for m in range(0, n):
        for t in range(1, m + 3):
            sign = block_permutation(n, (n - m,), (t,)).sign()
            term = tf.component(m + 2, _interval(1, m + 1)) \
                @ tx.face(level, _interval(t, n - m))
            residual = residual + term if sign else residual - term
    residual = residual + (ty.face(level, full) @ tf.component(level, ()))
    for m in range(0, n):
        for s in range(1, m + 3):
            for n_blocks in positive_compositions(n - m, s):
                for t_total in range(s, m + 3):
                    for t_blocks in positive_compositions(t_total, s):
                        perm = block_permutation(n, n_blocks, t_blocks)
                        b_tuple = tuple(x for blk in perm.b_blocks for x in blk)
                        term = ty.face(m + 2, _interval(1, m + 1)) \
                            @ tf.component(level, b_tuple)
                        if perm.sign():
                            residual = residual - term
                        else:
                            residual = residual + term
    return residual


def blockform_homotopy_residual(th, n):
    """Residual of the block-permutation form of the image homotopy relation
    at the full interior tuple (1, ..., n+1) of level n+2."""
    tx, ty = th.source, th.target
    tf, tg = th.f, th.g
    level = n + 2
    full = _interval(1, n + 1)
    from .simplicial import level_slice
    lhs = map_differential(level_slice(th.component(level, full), level),
                           tx.dm.d, ty.dm.d)
    residual = lhs
    residual = residual - level_slice(tf.component(level, full), level)
    residual = residual + level_slice(tg.component(level, full), level)
    residual = residual + (th.component(1, ()) @ tx.face(level, full))
    for m in range(0, n):
        for t in range(1, m + 3):
            sign = block_permutation(n, (n - m,), (t,)).sign()
            term = th.component(m + 2, _interval(1, m + 1)) \
                @ tx.face(level, _interval(t, n - m))
            residual = residual - term if sign else residual + term
    residual = residual + (ty.face(level, full) @ th.component(level, ()))
    for m in range(0, n):
        for s in range(1, m + 3):
            for n_blocks in positive_compositions(n - m, s):
                for t_total in range(s, m + 3):
                    for t_blocks in positive_compositions(t_total, s):
                        perm = block_permutation(n, n_blocks, t_blocks)
                        b_tuple = tuple(x for blk in perm.b_blocks for x in blk)
                        term = ty.face(m + 2, _interval(1, m + 1)) \
                            @ th.component(level, b_tuple)
                        if perm.sign():
                            residual = residual - term
                        else:
                            residual = residual + term
    return residual


def verify_blockforms(f_or_h, tf_or_th, max_n, kind, max_degree=None, report=None):
    """The block-permutation forms vanish on images (equivalently, they agree
    with the generic relation instantiated at the full interior tuple)."""
    if report is None:
        report = VerificationReport(f"block-form check ({kind})")
    for n in range(0, max_n + 1):
        if kind == "morphism":
            residual = blockform_morphism_residual(tf_or_th, n)
            rel = "3.8"
        else:
            residual = blockform_homotopy_residual(tf_or_th, n)
            rel = "3.13"
        report.record(rel, {"n": n}, _residual_zero(residual, max_degree),
                      location=_first_nonzero_block(residual, max_degree))
    return report


def exponent_reindex_report(max_n, report=None):
    """The grouped exponents equal the composition-indexed exponents under
    the positions-of-nonzero-parts correspondence, exhaustively."""
    if report is None:
        report = VerificationReport("exponent re-indexing")
    for n in range(0, max_n + 1):
        ok_mu = True
        ok_theta = True
        for m in range(0, n):
            for s in range(1, m + 3):
                for n_blocks in positive_compositions(n - m, s):
                    for t_total in range(s, m + 3):
                        for t_blocks in positive_compositions(t_total, s):
                            parts = [0] * (m + 2)
                            pos = 0
                            positions = []
                            for tb, nb in zip(t_blocks, n_blocks):
                                pos += tb
                                parts[pos - 1] = nb
                                positions.append(pos)
                            parts_t = tuple(parts)
                            ok_mu &= (interleave_exponent(parts_t)
                                      == grouped_interleave_exponent(t_blocks, n_blocks))
                            theta = grouped_homotopy_exponent(m, t_blocks, n_blocks)
                            for i, p in enumerate(positions, start=1):
                                want = (theta + sum(n_blocks[:i - 1])) % 2
                                ok_theta &= (homotopy_slot_exponent(m, parts_t, p)
                                             == want)
                            gaps = list(t_blocks) + [m + 3 - t_total]
                            slot_base = 0
                            for i in range(1, s + 2):
                                for j in range(1, gaps[i - 1]):
                                    slot = slot_base + j
                                    want = (theta + sum(n_blocks[:i - 1])) % 2
                                    ok_theta &= (homotopy_slot_exponent(m, parts_t, slot)
                                                 == want)
                                if i <= s:
                                    slot_base += gaps[i - 1]
        report.record("mu=epsilon", {"n": n}, ok_mu)
        report.record("theta=rho", {"n": n}, ok_theta)
    return report
