"""Bigraded modules, graded maps with bidegree shifts, graded tensor products,
the map (Hom) differential, and suspension.

Sign discipline
---------------
Every sign in the library ultimately comes from one rule: when a graded
symbol of degree p moves past a graded symbol of degree q, the expression
acquires ``(-1)**(p*q)``.  Concretely this enters in exactly two places:

* evaluation of a tensor product of maps,
      (f (x) g)(x (x) y) = (-1)**(|g| |x|) f(x) (x) g(y),
  which is what :func:`tensor2_map` implements blockwise, and

* the map differential
      D(phi) = d . phi - (-1)**|phi| phi . d,
  where |phi| is the internal-degree shift of phi.

Everything else (tensor differentials, suspension transport, interchange of
tensor composition) is a consequence and is covered by property tests rather
than being special-cased.

Basis conventions: a tensor product remembers its flattened list of atomic
factors, and the basis of the product in total degree q is ordered by the
lexicographically ascending tuple of factor degrees, row-major within each
tuple.  Association of tensor products is therefore immaterial.
"""

from __future__ import annotations

import itertools

from .linalg import DimensionError, Matrix


class GradingError(ValueError):
    """Structural error: a map violates the declared grading data."""


class GradedModule:
    """A finitely supported (bi)graded module over an exact field.

    ``dims`` maps bidegrees (n, m) to positive dimensions.  Single-graded
    modules use n = 0 throughout and set ``single=True``; they are the ones
    that participate in tensor products and suspension.
    """

    def __init__(self, field, dims, single=False):
        self.field = field
        self.dims = {}
        for (n, m), d in dims.items():
            if d < 0:
                raise GradingError(f"negative dimension at {(n, m)}")
            if n < 0 or m < 0:
                raise GradingError(f"negative bidegree {(n, m)}")
            if single and n != 0:
                raise GradingError("single-graded module with nonzero first index")
            if d > 0:
                self.dims[(n, m)] = d
        self.single = single
        self._factors = None
        self._layouts = {}
        self._tensor_cache = {}

    @classmethod
    def single_graded(cls, field, degree_dims):
        """Build a single-graded module from ``{m: dim}``."""
        return cls(field, {(0, m): d for m, d in degree_dims.items()}, single=True)

    def dim(self, n, m):
        return self.dims.get((n, m), 0)

    def dim1(self, m):
        if not self.single:
            raise GradingError("dim1 on a bigraded module")
        return self.dims.get((0, m), 0)

    def bidegrees(self):
        return sorted(self.dims)

    def degrees(self):
        if not self.single:
            raise GradingError("degrees() on a bigraded module")
        return sorted(m for (_, m) in self.dims)

    def total_dim(self):
        return sum(self.dims.values())

    def is_zero(self):
        return not self.dims

    @property
    def factors(self):
        if self._factors is None:
            return (self,)
        return self._factors

    def __eq__(self, other):
        if not isinstance(other, GradedModule):
            return NotImplemented
        return self.field == other.field and self.dims == other.dims

    def __repr__(self):
        kind = "single" if self.single else "bigraded"
        return f"GradedModule({kind}, dims={dict(sorted(self.dims.items()))})"


class _Layout:
    """Ordered basis of a tensor product in one total degree."""

    __slots__ = ("tuples", "offsets", "widths", "index", "dim")

    def __init__(self, tuples, widths):
        self.tuples = tuples
        self.widths = widths
        self.offsets = []
        pos = 0
        for w in widths:
            self.offsets.append(pos)
            pos += w
        self.dim = pos
        self.index = {t: i for i, t in enumerate(tuples)}

    def locate(self, pos):
        """Return (slot, inner) for a flat basis index."""
        lo, hi = 0, len(self.offsets) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.offsets[mid] <= pos:
                lo = mid
            else:
                hi = mid - 1
        return lo, pos - self.offsets[lo]


def _atom_support(module):
    if not module.single:
        raise GradingError("tensor factors must be single-graded")
    return sorted(m for (_, m) in module.dims)


def layout(module, q):
    """The ordered degree-tuple basis layout of ``module`` in total degree q."""
    cached = module._layouts.get(q)
    if cached is not None:
        return cached
    atoms = module.factors
    supports = [_atom_support(a) for a in atoms]
    mins = [s[0] if s else 0 for s in supports]
    maxs = [s[-1] if s else 0 for s in supports]
    suffix_min = [0] * (len(atoms) + 1)
    suffix_max = [0] * (len(atoms) + 1)
    for i in range(len(atoms) - 1, -1, -1):
        suffix_min[i] = suffix_min[i + 1] + mins[i]
        suffix_max[i] = suffix_max[i + 1] + maxs[i]
    tuples, widths = [], []

    def rec(i, remaining, prefix, width):
        if i == len(atoms):
            if remaining == 0:
                tuples.append(tuple(prefix))
                widths.append(width)
            return
        if not (suffix_min[i] <= remaining <= suffix_max[i]):
            return
        for m in supports[i]:
            if m > remaining:
                break
            prefix.append(m)
            rec(i + 1, remaining - m, prefix, width * atoms[i].dim1(m))
            prefix.pop()

    if atoms:
        rec(0, q, [], 1)
    elif q == 0:
        tuples, widths = [()], [1]
    lay = _Layout(tuples, widths)
    module._layouts[q] = lay
    return lay


def unit_module(field):
    """The rank-1 module in degree 0 (empty tensor product)."""
    u = GradedModule.single_graded(field, {0: 1})
    u._factors = ()
    return u


def tensor_module(left, right):
    """Tensor product of single-graded modules; factor lists concatenate."""
    cached = left._tensor_cache.get(id(right))
    if cached is not None:
        return cached[1]
    if left.field != right.field:
        raise GradingError("tensor over different fields")
    atoms = left.factors + right.factors
    dims = {}
    supports = [_atom_support(a) for a in atoms]
    for combo in itertools.product(*supports):
        q = sum(combo)
        w = 1
        for a, m in zip(atoms, combo):
            w *= a.dim1(m)
        dims[(0, q)] = dims.get((0, q), 0) + w
    out = GradedModule(left.field, dims, single=True)
    out._factors = atoms
    left._tensor_cache[id(right)] = (right, out)
    return out


class GradedMap:
    """A module map with a fixed bidegree shift, stored as per-bidegree blocks.

    The block at source bidegree (n, m) is a matrix of shape
    ``dim(target, n+dn, m+dm) x dim(source, n, m)``.  Blocks that would land
    outside the target support cannot hold nonzero entries; attempting to
    store one raises, rather than silently truncating, so grading bugs
    surface immediately.
    """

    __slots__ = ("source", "target", "shift", "blocks")

    def __init__(self, source, target, shift, blocks=None):
        self.source = source
        self.target = target
        self.shift = (int(shift[0]), int(shift[1]))
        self.blocks = {}
        if blocks:
            for key, mat in blocks.items():
                self.set_block(key[0], key[1], mat)

    @property
    def dn(self):
        return self.shift[0]

    @property
    def dm(self):
        return self.shift[1]

    def block_shape(self, n, m):
        return (self.target.dim(n + self.dn, m + self.dm), self.source.dim(n, m))

    def set_block(self, n, m, mat):
        rows, cols = self.block_shape(n, m)
        if mat.nrows != rows or mat.ncols != cols:
            raise GradingError(
                f"block at {(n, m)} has shape {mat.nrows}x{mat.ncols}, "
                f"grading requires {rows}x{cols}")
        if rows == 0 and not mat.is_zero():
            raise GradingError(f"nonzero block at {(n, m)} lands outside target support")
        if mat.is_zero():
            self.blocks.pop((n, m), None)
        else:
            self.blocks[(n, m)] = mat

    def block(self, n, m):
        """The block at source bidegree (n, m), materializing zeros."""
        b = self.blocks.get((n, m))
        if b is not None:
            return b
        rows, cols = self.block_shape(n, m)
        return Matrix.zeros(self.source.field, rows, cols)

    def stored_blocks(self):
        return sorted(self.blocks.items())

    def is_zero(self):
        return not self.blocks

    def same_hom_type(self, other):
        return (self.source == other.source and self.target == other.target
                and self.shift == other.shift)

    def __add__(self, other):
        if not self.same_hom_type(other):
            raise GradingError("sum of maps with different type or shift")
        out = GradedMap(self.source, self.target, self.shift)
        for key in set(self.blocks) | set(other.blocks):
            out.set_block(key[0], key[1], self.block(*key) + other.block(*key))
        return out

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        out = GradedMap(self.source, self.target, self.shift)
        for (n, m), b in self.blocks.items():
            out.set_block(n, m, -b)
        return out

    def scaled(self, c):
        out = GradedMap(self.source, self.target, self.shift)
        if c == self.source.field.zero():
            return out
        for (n, m), b in self.blocks.items():
            out.set_block(n, m, b.scaled(c))
        return out

    def __matmul__(self, inner):
        """Composition self . inner (inner acts first)."""
        if inner.target != self.source:
            raise GradingError("composition endpoint mismatch")
        shift = (self.dn + inner.dn, self.dm + inner.dm)
        out = GradedMap(inner.source, self.target, shift)
        for (n, m), b in inner.blocks.items():
            outer = self.blocks.get((n + inner.dn, m + inner.dm))
            if outer is None:
                continue
            prod = outer @ b
            if not prod.is_zero():
                out.set_block(n, m, prod + out.block(n, m))
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if not self.same_hom_type(other):
            return False
        for key in set(self.blocks) | set(other.blocks):
            if self.block(*key) != other.block(*key):
                return False
        return True

    def __repr__(self):
        return (f"GradedMap(shift={self.shift}, "
                f"blocks={sorted(self.blocks)})")


def zero_map(source, target, shift):
    return GradedMap(source, target, shift)


def identity_map(module):
    out = GradedMap(module, module, (0, 0))
    for (n, m), d in module.dims.items():
        out.set_block(n, m, Matrix.identity(module.field, d))
    return out


def scalar_of_identity_multiple(phi):
    """Given a map known to be c * identity, recover the scalar c.

    Raises :class:`GradingError` when the map is not a scalar multiple of
    the identity; used to desuspend conjugated structures without guessing
    any sign by hand.
    """
    if phi.shift != (0, 0) or phi.source != phi.target:
        raise GradingError("not an endomorphism of shift (0, 0)")
    field = phi.source.field
    c = None
    for (n, m), d in phi.source.dims.items():
        b = phi.block(n, m)
        for i in range(d):
            for j in range(d):
                v = b.get(i, j)
                if i == j:
                    if c is None:
                        c = v
                    elif v != c:
                        raise GradingError("not a multiple of the identity")
                elif v != field.zero():
                    raise GradingError("not a multiple of the identity")
    return field.zero() if c is None else c


# -- tensor products of maps ------------------------------------------------

def _decode_block(mat, src_layout, tgt_layout):
    out = []
    for r, c, v in mat.entries():
        ts, ti = tgt_layout.locate(r)
        ss, si = src_layout.locate(c)
        out.append((ts, ti, ss, si, v))
    return out


def tensor2_map(f, g):
    """Graded tensor product of two maps between single-graded modules."""
    src = tensor_module(f.source, g.source)
    tgt = tensor_module(f.target, g.target)
    dm = f.dm + g.dm
    out = GradedMap(src, tgt, (0, dm))
    sign_flip = g.dm % 2 == 1
    acc = {}
    for (_, qa), fb in f.blocks.items():
        f_src_lay = layout(f.source, qa)
        f_tgt_lay = layout(f.target, qa + f.dm)
        f_entries = _decode_block(fb, f_src_lay, f_tgt_lay)
        negate = sign_flip and qa % 2 == 1
        for (_, qc), gb in g.blocks.items():
            g_src_lay = layout(g.source, qc)
            g_tgt_lay = layout(g.target, qc + g.dm)
            g_entries = _decode_block(gb, g_src_lay, g_tgt_lay)
            q = qa + qc
            src_lay = layout(src, q)
            tgt_lay = layout(tgt, q + dm)
            block = acc.get(q)
            if block is None:
                block = Matrix.zeros(src.field, tgt_lay.dim, src_lay.dim)
                acc[q] = block
            for ts_f, ti_f, ss_f, si_f, a in f_entries:
                u_t = f_tgt_lay.tuples[ts_f]
                u_s = f_src_lay.tuples[ss_f]
                for ts_g, ti_g, ss_g, si_g, b in g_entries:
                    v_t = g_tgt_lay.tuples[ts_g]
                    v_s = g_src_lay.tuples[ss_g]
                    row = (tgt_lay.offsets[tgt_lay.index[u_t + v_t]]
                           + ti_f * g_tgt_lay.widths[ts_g] + ti_g)
                    col = (src_lay.offsets[src_lay.index[u_s + v_s]]
                           + si_f * g_src_lay.widths[ss_g] + si_g)
                    val = a * b
                    if negate:
                        val = -val
                    block.add_to(row, col, val)
    for q, block in acc.items():
        if not block.is_zero():
            out.set_block(0, q, block)
    return out


def tensor_maps(factors, field=None):
    """Left fold of :func:`tensor2_map`; the empty product is the identity
    of the rank-1 module (a field must then be supplied)."""
    if not factors:
        return identity_map(unit_module(field))
    result = factors[0]
    for f in factors[1:]:
        result = tensor2_map(result, f)
    return result


# -- differentials ----------------------------------------------------------

class DifferentialModule:
    """A graded module with a differential of bidegree (0, -1) squaring to 0."""

    def __init__(self, module, d, check=True):
        if d.shift != (0, -1):
            raise GradingError(f"differential has shift {d.shift}, wanted (0, -1)")
        if d.source is not module and d.source != module:
            raise GradingError("differential not defined on the given module")
        self.module = module
        self.d = d
        if check and not (d @ d).is_zero():
            raise GradingError("d . d != 0")
        self._power_cache = {}

    @property
    def field(self):
        return self.module.field

    def __eq__(self, other):
        if not isinstance(other, DifferentialModule):
            return NotImplemented
        return self.module == other.module and self.d == other.d


def map_differential(phi, d_source, d_target):
    """The Hom-complex differential D(phi) = d.phi - (-1)**|phi| phi.d,
    graded by the total-degree shift of phi.

    On single-graded maps the total degree is the internal degree, giving
    the familiar per-case conventions for operations, morphism components,
    and homotopies.  On bigraded maps the first-index shift counts too:
    a face operator of shift (-k, k-1) is odd for every k, which is the
    grading under which the transported face operators (with their
    degree-alternating signs) close the structure relations.
    """
    if d_source.source != phi.source or d_target.source != phi.target:
        raise GradingError("map differential: differentials do not match endpoints")
    left = d_target @ phi
    right = phi @ d_source
    if (phi.dn + phi.dm) % 2 == 0:
        return left - right
    return left + right


def tensor_power(dm, n):
    """n-th graded tensor power of a single-graded differential module.

    The differential is the usual one, D = sum_i 1 (x) ... (x) d (x) ... (x) 1,
    assembled recursively so the interchange signs come out of the tensor
    machinery itself.
    """
    if n < 0:
        raise GradingError("negative tensor power")
    cached = dm._power_cache.get(n)
    if cached is not None:
        return cached
    if n == 0:
        u = unit_module(dm.field)
        out = DifferentialModule(u, zero_map(u, u, (0, -1)), check=False)
    elif n == 1:
        out = dm
    else:
        prev = tensor_power(dm, n - 1)
        module = tensor_module(prev.module, dm.module)
        d = (tensor2_map(prev.d, identity_map(dm.module))
             + tensor2_map(identity_map(prev.module), dm.d))
        out = DifferentialModule(module, d, check=False)
    dm._power_cache[n] = out
    return out


def identity_power_map(dm, n):
    return identity_map(tensor_power(dm, n).module)


# -- suspension --------------------------------------------------------------

class Suspension:
    """The suspension SA of a single-graded differential module A.

    (SA)_{m+1} = A_m with d[a] = [da]; ``eta``: SA -> A has degree -1 and
    ``xi``: A -> SA degree +1, with eta . xi = 1_A and xi . eta = 1_SA.
    """

    def __init__(self, base):
        module = base.module
        if not module.single:
            raise GradingError("suspension of a bigraded module")
        sa_mod = GradedModule.single_graded(
            module.field, {m + 1: d for (_, m), d in module.dims.items()})
        d_blocks = {}
        for (_, m), mat in base.d.blocks.items():
            d_blocks[(0, m + 1)] = mat
        sa_d = GradedMap(sa_mod, sa_mod, (0, -1), d_blocks)
        self.base = base
        self.sa = DifferentialModule(sa_mod, sa_d, check=False)
        eta = GradedMap(sa_mod, module, (0, -1))
        xi = GradedMap(module, sa_mod, (0, 1))
        for (_, m), d in module.dims.items():
            ident = Matrix.identity(module.field, d)
            eta.set_block(0, m + 1, ident)
            xi.set_block(0, m, ident)
        self.eta = eta
        self.xi = xi


def suspend(dm):
    """Suspension with its structure maps, as (SA, eta, xi)."""
    s = Suspension(dm)
    return s.sa, s.eta, s.xi


# -- the Koszul primitive -----------------------------------------------------

def koszul_interchange_sign(left_degrees, right_degrees, crossings):
    """Sign acquired when graded symbols cross.

    ``crossings`` lists pairs (i, j) meaning the symbol of degree
    ``left_degrees[i]`` passes the symbol of degree ``right_degrees[j]``;
    the result is ``(-1)**sum(|a||b|)`` over the crossed pairs.  Every sign
    convention in the library can be reproduced by mechanical applications
    of this single primitive.
    """
    total = 0
    for i, j in crossings:
        total += left_degrees[i] * right_degrees[j]
    return -1 if total % 2 else 1
