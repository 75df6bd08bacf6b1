"""A-infinity algebras, their morphisms and homotopies, with exact relation
checkers, composition, and the suspension correspondence.

The operation of arity index n takes n+2 inputs and raises internal degree
by n; morphism components f_n take n+1 inputs of degree n, homotopy
components h_n take n+1 inputs of degree n+1.  The relation checkers
evaluate each identity as an exact matrix equation per internal degree.

Suspension is the independent route for every sign: transporting a family
along ``op(n) = xi . op_n . eta^{(x)(n+2)}`` turns the signed relations into
sign-free ones on the suspension, and the checkers for both sides are kept
separate so they can cross-validate each other (including the stronger
statement that the suspended residual is exactly the conjugate of the base
residual, relation by relation, whether or not it vanishes).
"""

from __future__ import annotations

from .combinatorics import compositions
from .exponents import (homotopy_slot_exponent, insertion_exponent_homotopy,
                        insertion_exponent_morphism,
                        insertion_exponent_structure, interleave_exponent)
from .graded import (GradedMap, GradingError, Suspension, identity_map,
                     map_differential, scalar_of_identity_multiple,
                     tensor_maps, tensor_power, zero_map)
from .report import VerificationReport
from .simplicial import StructureError, _first_nonzero_block, _residual_zero


class AInfAlgebra:
    """A single-graded differential module with higher operations.

    ``ops`` maps the arity index n (>= 0) to a graded map from the (n+2)-th
    tensor power to the base with internal shift n.  ``complete=True`` means
    every unstored index is the zero operation (e.g. forced by the degree
    span); otherwise unstored indices are unknown and relations touching
    them are skipped by the checkers.
    """

    def __init__(self, dm, ops, complete=True, name=""):
        self.dm = dm
        self.module = dm.module
        self.name = name
        self.complete = complete
        self.ops = {}
        for n, phi in ops.items():
            if n < 0:
                raise StructureError("operation index must be >= 0")
            expected = tensor_power(dm, n + 2).module
            if phi.shift != (0, n):
                raise GradingError(f"operation {n} has shift {phi.shift}, wanted {(0, n)}")
            if phi.source != expected:
                raise GradingError(f"operation {n} source does not match tensor power")
            if not phi.is_zero():
                self.ops[n] = phi

    @property
    def field(self):
        return self.module.field

    @property
    def max_op(self):
        return max(self.ops, default=-1)

    def op(self, n):
        got = self.ops.get(n)
        if got is not None:
            return got
        return zero_map(tensor_power(self.dm, n + 2).module, self.module, (0, n))

    def has_op(self, n):
        return self.complete or n in self.ops or n < 0

    def power(self, r):
        return tensor_power(self.dm, r)


def strict_dga(dm, product, name=""):
    """The algebra with the single binary operation ``product`` and no
    higher ones; ``product`` must be an associative chain map, which the
    structure checker will confirm."""
    return AInfAlgebra(dm, {0: product}, complete=True, name=name)


def _insertion(algebra, inner_index, slot, slots):
    """1 (x) ... (x) op_{inner} (x) ... (x) 1 with ``slots`` tensor factors,
    the operation sitting at ``slot`` (1-based)."""
    ident = identity_map(algebra.module)
    factors = [ident] * (slot - 1) + [algebra.op(inner_index)] + [ident] * (slots - slot)
    return tensor_maps(factors)


def structure_residual(algebra, n):
    """Exact residual of the coherence relation of index n (n >= -1)."""
    d = algebra.dm.d
    lhs = map_differential(algebra.op(n + 1),
                           algebra.power(n + 3).d, d)
    residual = lhs
    for m in range(0, n + 1):
        outer = algebra.op(m)
        for t in range(1, m + 3):
            term = outer @ _insertion(algebra, n - m, t, m + 2)
            if insertion_exponent_structure(n, m, t):
                residual = residual + term
            else:
                residual = residual - term
    return residual


def check_ainf(algebra, max_relation=None, max_degree=None, report=None):
    """Verify the coherence relations for -1 <= n <= max_relation."""
    if report is None:
        report = VerificationReport(f"ainf structure check {algebra.name}".strip())
    top = algebra.max_op if max_relation is None else max_relation
    for n in range(-1, top + 1):
        if not (algebra.has_op(n + 1)
                and all(algebra.has_op(m) and algebra.has_op(n - m)
                        for m in range(0, n + 1))):
            report.skip("2.1", {"n": n}, note="operations beyond declared arity")
            continue
        residual = structure_residual(algebra, n)
        report.record("2.1", {"n": n}, _residual_zero(residual, max_degree),
                      location=_first_nonzero_block(residual, max_degree))
    return report


class AInfMorphism:
    """A morphism of A-infinity algebras, given by components f_n of n+1
    inputs and internal degree n."""

    def __init__(self, source, target, components, complete=True, name=""):
        self.source = source
        self.target = target
        self.name = name
        self.complete = complete
        self.components = {}
        for n, phi in components.items():
            if n < 0:
                raise StructureError("component index must be >= 0")
            expected = tensor_power(source.dm, n + 1).module
            if phi.shift != (0, n):
                raise GradingError(f"component {n} has shift {phi.shift}, wanted {(0, n)}")
            if phi.source != expected:
                raise GradingError(f"component {n} source does not match tensor power")
            if not phi.is_zero():
                self.components[n] = phi

    @property
    def max_component(self):
        return max(self.components, default=-1)

    def component(self, n):
        got = self.components.get(n)
        if got is not None:
            return got
        return zero_map(tensor_power(self.source.dm, n + 1).module,
                        self.target.module, (0, n))

    def has_component(self, n):
        return self.complete or n in self.components

    def __eq__(self, other):
        if not isinstance(other, AInfMorphism):
            return NotImplemented
        keys = set(self.components) | set(other.components)
        return all(self.component(n) == other.component(n) for n in keys)


def identity_ainf_morphism(algebra):
    return AInfMorphism(algebra, algebra,
                        {0: identity_map(algebra.module)},
                        complete=True, name="identity")


def _component_tensor(morphisms_with_indices, source_algebra):
    """Tensor of morphism components f_{n_1} (x) ... (x) f_{n_r}."""
    factors = [mor.component(idx) for mor, idx in morphisms_with_indices]
    return tensor_maps(factors, field=source_algebra.field)


def morphism_residual(f, n):
    """Exact residual of the morphism relation of index n (n >= -1)."""
    src, tgt = f.source, f.target
    lhs = map_differential(f.component(n + 1), src.power(n + 2).d, tgt.dm.d)
    residual = lhs
    for m in range(0, n + 1):
        comp = f.component(m)
        for t in range(1, m + 2):
            term = comp @ _insertion(src, n - m, t, m + 1)
            if insertion_exponent_morphism(n, m, t):
                residual = residual + term
            else:
                residual = residual - term
        outer = tgt.op(m)
        for parts in compositions(n - m, m + 2):
            term = outer @ _component_tensor([(f, p) for p in parts], src)
            if interleave_exponent(parts):
                residual = residual - term
            else:
                residual = residual + term
    return residual


def check_ainf_morphism(f, max_relation=None, max_degree=None, report=None):
    if report is None:
        report = VerificationReport(f"ainf morphism check {f.name}".strip())
    top = f.max_component if max_relation is None else max_relation
    for n in range(-1, top + 1):
        ops_ok = all(f.source.has_op(j) and f.target.has_op(j) for j in range(0, n + 1))
        comps_ok = f.has_component(n + 1) and all(f.has_component(m)
                                                  for m in range(0, n + 1))
        if not (ops_ok and comps_ok):
            report.skip("2.2", {"n": n}, note="data beyond declared arity")
            continue
        residual = morphism_residual(f, n)
        report.record("2.2", {"n": n}, _residual_zero(residual, max_degree),
                      location=_first_nonzero_block(residual, max_degree))
    return report


def compose_ainf(g, f, max_component=None):
    """Composition of A-infinity morphisms."""
    if f.target.module != g.source.module:
        raise StructureError("composition endpoint mismatch")
    if max_component is None:
        if f.complete and g.complete:
            # components of internal degree beyond the target span vanish
            max_component = max((m for (_, m) in g.target.module.dims), default=0)
        else:
            max_component = min(f.max_component, g.max_component)
    comps = {}
    for n in range(0, max_component + 1):
        acc = zero_map(tensor_power(f.source.dm, n + 1).module,
                       g.target.module, (0, n))
        for m in range(0, n + 1):
            outer = g.component(m)
            for parts in compositions(n - m, m + 1):
                term = outer @ _component_tensor([(f, p) for p in parts], f.source)
                if interleave_exponent(parts):
                    acc = acc - term
                else:
                    acc = acc + term
        comps[n] = acc
    return AInfMorphism(f.source, g.target, comps,
                        complete=f.complete and g.complete,
                        name=f"{g.name}.{f.name}".strip("."))


class AInfHomotopy:
    """A homotopy between parallel A-infinity morphisms, with components h_n
    of n+1 inputs and internal degree n+1."""

    def __init__(self, f, g, components, complete=True, name=""):
        if f.source.module != g.source.module or f.target.module != g.target.module:
            raise StructureError("homotopy endpoints do not match")
        self.f = f
        self.g = g
        self.source = f.source
        self.target = f.target
        self.name = name
        self.complete = complete
        self.components = {}
        for n, phi in components.items():
            if n < 0:
                raise StructureError("component index must be >= 0")
            expected = tensor_power(self.source.dm, n + 1).module
            if phi.shift != (0, n + 1):
                raise GradingError(f"homotopy component {n} has shift {phi.shift}, "
                                   f"wanted {(0, n + 1)}")
            if phi.source != expected:
                raise GradingError(f"homotopy component {n} source mismatch")
            if not phi.is_zero():
                self.components[n] = phi

    @property
    def max_component(self):
        return max(self.components, default=-1)

    def component(self, n):
        got = self.components.get(n)
        if got is not None:
            return got
        return zero_map(tensor_power(self.source.dm, n + 1).module,
                        self.target.module, (0, n + 1))

    def has_component(self, n):
        return self.complete or n in self.components


def homotopy_residual(h, n):
    """Exact residual of the homotopy relation of index n (n >= -1)."""
    src, tgt = h.source, h.target
    f, g = h.f, h.g
    lhs = map_differential(h.component(n + 1), src.power(n + 2).d, tgt.dm.d)
    residual = lhs - f.component(n + 1) + g.component(n + 1)
    for m in range(0, n + 1):
        comp = h.component(m)
        for t in range(1, m + 2):
            term = comp @ _insertion(src, n - m, t, m + 1)
            if insertion_exponent_homotopy(n, m, t):
                residual = residual + term
            else:
                residual = residual - term
        outer = tgt.op(m)
        for parts in compositions(n - m, m + 2):
            for i in range(1, m + 3):
                factors = [(g, p) for p in parts[:i - 1]]
                factors.append((h, parts[i - 1]))
                factors.extend((f, p) for p in parts[i:])
                term = outer @ _component_tensor(factors, src)
                if homotopy_slot_exponent(m, parts, i):
                    residual = residual + term
                else:
                    residual = residual - term
    return residual


def check_ainf_homotopy(h, max_relation=None, max_degree=None, report=None):
    if report is None:
        report = VerificationReport(f"ainf homotopy check {h.name}".strip())
    top = h.max_component if max_relation is None else max_relation
    for n in range(-1, top + 1):
        ops_ok = all(h.source.has_op(j) and h.target.has_op(j) for j in range(0, n + 1))
        comps_ok = (h.has_component(n + 1)
                    and h.f.has_component(n + 1) and h.g.has_component(n + 1)
                    and all(h.has_component(m) and h.f.has_component(m)
                            and h.g.has_component(m) for m in range(0, n + 1)))
        if not (ops_ok and comps_ok):
            report.skip("2.4", {"n": n}, note="data beyond declared arity")
            continue
        residual = homotopy_residual(h, n)
        report.record("2.4", {"n": n}, _residual_zero(residual, max_degree),
                      location=_first_nonzero_block(residual, max_degree))
    return report


# -- suspension correspondence --------------------------------------------------

class SuspendedAlgebra:
    """The transported family op(n) = xi . op_n . eta^{(x)(n+2)} on the
    suspension, whose relations are sign-free."""

    def __init__(self, base, sa, eta, xi, ops):
        self.base = base
        self.sa = sa
        self.eta = eta
        self.xi = xi
        self.ops = ops

    def op(self, n):
        got = self.ops.get(n)
        if got is not None:
            return got
        return zero_map(tensor_power(self.sa, n + 2).module, self.sa.module, (0, -1))

    def power(self, r):
        return tensor_power(self.sa, r)


def suspend_structure(algebra):
    susp = Suspension(algebra.dm)
    ops = {}
    for n in sorted(algebra.ops):
        eta_pow = tensor_maps([susp.eta] * (n + 2))
        ops[n] = susp.xi @ algebra.op(n) @ eta_pow
    return SuspendedAlgebra(algebra, susp.sa, susp.eta, susp.xi, ops)


def desuspend_structure(suspended):
    """Invert the suspension transport exactly, recovering the base family.

    The conjugation scalar eta^{(x)k} . xi^{(x)k} = c * id is computed, not
    assumed, so no sign enters by hand.
    """
    base = suspended.base
    ops = {}
    for n in sorted(suspended.ops):
        k = n + 2
        eta_pow = tensor_maps([suspended.eta] * k)
        xi_pow = tensor_maps([suspended.xi] * k)
        c = scalar_of_identity_multiple(eta_pow @ xi_pow)
        raw = suspended.eta @ suspended.op(n) @ xi_pow
        ops[n] = raw.scaled(base.field.one() / c)
    return AInfAlgebra(base.dm, ops, complete=base.complete,
                       name=f"{base.name}(desuspended)".strip())


def _suspended_insertion(suspended, inner_index, slot, slots):
    ident = identity_map(suspended.sa.module)
    factors = [ident] * (slot - 1) + [suspended.op(inner_index)] + [ident] * (slots - slot)
    return tensor_maps(factors)


def suspended_structure_residual(suspended, n):
    """Residual of the sign-free relation on the suspension: the map
    differential of op(n+1) plus the plain double sum, no signs at all."""
    residual = map_differential(suspended.op(n + 1),
                                suspended.power(n + 3).d, suspended.sa.d)
    for m in range(0, n + 1):
        outer = suspended.op(m)
        for t in range(1, m + 3):
            residual = residual + outer @ _suspended_insertion(suspended, n - m, t, m + 2)
    return residual


def check_suspended_structure(suspended, max_relation, max_degree=None, report=None):
    if report is None:
        report = VerificationReport("suspended structure check")
    for n in range(-1, max_relation + 1):
        residual = suspended_structure_residual(suspended, n)
        report.record("2.1S", {"n": n}, _residual_zero(residual, max_degree),
                      location=_first_nonzero_block(residual, max_degree))
    return report


def structure_transport_identity(algebra, suspended, n):
    """The derivation identity behind every sign of the structure relation:
    conjugating the sign-free residual recovers the signed residual exactly,
    for any operation family whatsoever (valid or not)."""
    r_sa = suspended_structure_residual(suspended, n)
    r_base = structure_residual(algebra, n)
    eta_pow = tensor_maps([suspended.eta] * (n + 3))
    return (suspended.eta @ r_sa) == (r_base @ eta_pow)


class SuspendedMorphism:
    """Transported morphism components f(n) = xi' . f_n . eta^{(x)(n+1)}."""

    def __init__(self, source_susp, target_susp, components):
        self.source = source_susp
        self.target = target_susp
        self.components = components

    def component(self, n):
        got = self.components.get(n)
        if got is not None:
            return got
        return zero_map(tensor_power(self.source.sa, n + 1).module,
                        self.target.sa.module, (0, 0))


def suspend_morphism(f, source_susp=None, target_susp=None):
    source_susp = source_susp or suspend_structure(f.source)
    target_susp = target_susp or suspend_structure(f.target)
    comps = {}
    for n in sorted(f.components):
        eta_pow = tensor_maps([source_susp.eta] * (n + 1))
        comps[n] = target_susp.xi @ f.component(n) @ eta_pow
    return SuspendedMorphism(source_susp, target_susp, comps)


def suspended_morphism_residual(sf, n):
    src, tgt = sf.source, sf.target
    residual = map_differential(sf.component(n + 1),
                                src.power(n + 2).d, tgt.sa.d)
    for m in range(0, n + 1):
        comp = sf.component(m)
        for t in range(1, m + 2):
            residual = residual - comp @ _suspended_insertion(src, n - m, t, m + 1)
        outer = tgt.op(m)
        for parts in compositions(n - m, m + 2):
            term = outer @ tensor_maps([sf.component(p) for p in parts],
                                       field=src.sa.field)
            residual = residual + term
    return residual


def morphism_transport_identity(f, sf, n):
    r_sa = suspended_morphism_residual(sf, n)
    r_base = morphism_residual(f, n)
    eta_pow = tensor_maps([sf.source.eta] * (n + 2))
    return (sf.target.eta @ r_sa) == (r_base @ eta_pow)


class SuspendedHomotopy:
    """Transported homotopy components h(n) = xi' . h_n . eta^{(x)(n+1)}."""

    def __init__(self, sf, sg, components):
        self.sf = sf
        self.sg = sg
        self.source = sf.source
        self.target = sf.target
        self.components = components

    def component(self, n):
        got = self.components.get(n)
        if got is not None:
            return got
        return zero_map(tensor_power(self.source.sa, n + 1).module,
                        self.target.sa.module, (0, 1))


def suspend_homotopy(h, source_susp=None, target_susp=None):
    source_susp = source_susp or suspend_structure(h.source)
    target_susp = target_susp or suspend_structure(h.target)
    sf = suspend_morphism(h.f, source_susp, target_susp)
    sg = suspend_morphism(h.g, source_susp, target_susp)
    comps = {}
    for n in sorted(h.components):
        eta_pow = tensor_maps([source_susp.eta] * (n + 1))
        comps[n] = target_susp.xi @ h.component(n) @ eta_pow
    return SuspendedHomotopy(sf, sg, comps)


def suspended_homotopy_residual(sh, n):
    src, tgt = sh.source, sh.target
    residual = map_differential(sh.component(n + 1), src.power(n + 2).d, tgt.sa.d)
    residual = residual - sh.sf.component(n + 1) + sh.sg.component(n + 1)
    for m in range(0, n + 1):
        comp = sh.component(m)
        for t in range(1, m + 2):
            residual = residual + comp @ _suspended_insertion(src, n - m, t, m + 1)
        outer = tgt.op(m)
        for parts in compositions(n - m, m + 2):
            for i in range(1, m + 3):
                factors = [sh.sg.component(p) for p in parts[:i - 1]]
                factors.append(sh.component(parts[i - 1]))
                factors.extend(sh.sf.component(p) for p in parts[i:])
                residual = residual + outer @ tensor_maps(factors, field=src.sa.field)
    return residual


def homotopy_transport_identity(h, sh, n):
    r_sa = suspended_homotopy_residual(sh, n)
    r_base = homotopy_residual(h, n)
    eta_pow = tensor_maps([sh.source.eta] * (n + 2))
    return (sh.target.eta @ r_sa) == (r_base @ eta_pow)
