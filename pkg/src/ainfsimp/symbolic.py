"""Symbolic expansion of the structural relations into canonical signed sums.

The face-relation expansions run the *same* split enumerator the numeric
checkers use, but on symbolic indices.  A symbolic index is an affine
expression ``i_s + c``; two of them compare under the generic-spacing rule
(different bases compare by base, equal bases by offset), which is exactly
the regime the displayed small cases live in.  Instantiating at a concrete
tuple uses plain integers instead, so non-generic collisions are handled by
coefficient merging, never by guessing.

Canonical form: terms are sorted by a structural key and equal terms merge
their integer coefficients; golden comparisons are multiset comparisons of
(coefficient, rendered term).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .combinatorics import (compositions, enum_composition_splits,
                            enum_relation_splits)
from .exponents import (homotopy_slot_exponent, insertion_exponent_homotopy,
                        insertion_exponent_morphism,
                        insertion_exponent_structure, interleave_exponent)


@functools.total_ordering
@dataclass(frozen=True)
class SymIndex:
    """An affine symbolic index ``base + offset`` with generic spacing:
    indices with different bases never collide, whatever the offsets."""

    base: int
    offset: int = 0

    def __sub__(self, k):
        return SymIndex(self.base, self.offset - int(k))

    def __add__(self, k):
        return SymIndex(self.base, self.offset + int(k))

    def __lt__(self, other):
        if isinstance(other, SymIndex):
            return (self.base, self.offset) < (other.base, other.offset)
        return NotImplemented

    def key(self):
        return (self.base, self.offset)

    def render(self, k):
        if k == 1:
            name = "i"
        elif k == 2:
            name = "i" if self.base == 1 else "j"
        else:
            name = f"i{self.base}"
        if self.offset == 0:
            return name
        return f"{name}{self.offset:+d}"


def symbolic_tuple(k):
    return tuple(SymIndex(s + 1) for s in range(k))


def _index_key(v):
    if isinstance(v, SymIndex):
        return v.key()
    return (0, v)


def _render_index(v, k):
    if isinstance(v, SymIndex):
        return v.render(k)
    return str(v)


# -- terms ---------------------------------------------------------------------

@dataclass(frozen=True)
class FaceSymbol:
    """A face/component symbol such as ``∂_(i,j)`` or ``f_()``."""

    family: str
    indices: tuple

    def key(self):
        return (self.family, tuple(_index_key(v) for v in self.indices))

    def render(self, k):
        inner = ",".join(_render_index(v, k) for v in self.indices)
        return f"{self.family}_({inner})"


@dataclass(frozen=True)
class CompositeTerm:
    """A composition of face symbols, rightmost acting first."""

    symbols: tuple

    def key(self):
        return (len(self.symbols), tuple(s.key() for s in self.symbols))

    def render(self, k):
        return "".join(s.render(k) for s in self.symbols)


@dataclass(frozen=True)
class OpTerm:
    """An arity-indexed operation applied to a tensor of slots, e.g.
    ``π0(π1⊗1)`` or ``f0π0``; ``args=None`` renders the bare symbol."""

    head: tuple
    args: tuple | None

    def key(self):
        if self.args is None:
            return (0, self.head, ())
        norm = tuple(("1", -1) if a == "one" else a for a in self.args)
        return (1, self.head, norm)

    def render(self, k=None):
        fam, idx = self.head
        head = f"{fam}{idx}"
        if self.args is None:
            return head
        rendered = ["1" if a == "one" else f"{a[0]}{a[1]}" for a in self.args]
        if len(rendered) == 1:
            return head + rendered[0]
        return f"{head}({'⊗'.join(rendered)})"


class FormalTermSum:
    """A signed integer combination of formal terms in canonical order."""

    def __init__(self, lhs, k=None):
        self.lhs = lhs
        self.k = k
        self._coeffs = {}

    def add(self, coeff, term):
        cur = self._coeffs.get(term, 0) + coeff
        if cur:
            self._coeffs[term] = cur
        else:
            self._coeffs.pop(term, None)

    def terms(self):
        """Canonically ordered (coefficient, term) pairs."""
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].key())

    def rendered_terms(self):
        return [(c, t.render(self.k)) for t, c in self.terms()]

    def render(self):
        parts = []
        for term, coeff in self.terms():
            body = term.render(self.k)
            mag = abs(coeff)
            body = body if mag == 1 else f"{mag}·{body}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {body}")
        rhs = " ".join(parts) if parts else "0"
        return f"{self.lhs} = {rhs}"

    def __eq__(self, other):
        if not isinstance(other, FormalTermSum):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __len__(self):
        return len(self._coeffs)


# -- face-relation expansions ---------------------------------------------------

def _tuple_arg(t):
    if isinstance(t, int):
        return symbolic_tuple(t), t
    return tuple(t), len(t)


def expand_faces_relation(t):
    """Structure relation for the face operator at index tuple ``t`` (or the
    generic tuple of length ``t`` when an int is given)."""
    tup, k = _tuple_arg(t)
    out = FormalTermSum(f"d({FaceSymbol('∂', tup).render(k)})", k)
    for sp in enum_relation_splits(tup):
        out.add(sp.sign, CompositeTerm((FaceSymbol("∂", sp.left),
                                        FaceSymbol("∂", sp.right))))
    return out


def expand_morphism_relation(t):
    tup, k = _tuple_arg(t)
    out = FormalTermSum(f"d({FaceSymbol('f', tup).render(k)})", k)
    if k > 0:
        out.add(-1, CompositeTerm((FaceSymbol("∂", tup), FaceSymbol("f", ()))))
        out.add(+1, CompositeTerm((FaceSymbol("f", ()), FaceSymbol("∂", tup))))
    for sp in enum_relation_splits(tup):
        out.add(sp.sign, CompositeTerm((FaceSymbol("∂", sp.left),
                                        FaceSymbol("f", sp.right))))
        out.add(-sp.sign, CompositeTerm((FaceSymbol("f", sp.left),
                                         FaceSymbol("∂", sp.right))))
    return out


def expand_composition_relation(t):
    tup, k = _tuple_arg(t)
    out = FormalTermSum(f"(gf)_({','.join(_render_index(v, k) for v in tup)})", k)
    for sp in enum_composition_splits(tup):
        out.add(sp.sign, CompositeTerm((FaceSymbol("g", sp.left),
                                        FaceSymbol("f", sp.right))))
    return out


def expand_homotopy_relation(t):
    tup, k = _tuple_arg(t)
    out = FormalTermSum(f"d({FaceSymbol('h', tup).render(k)})", k)
    out.add(+1, CompositeTerm((FaceSymbol("f", tup),)))
    out.add(-1, CompositeTerm((FaceSymbol("g", tup),)))
    if k > 0:
        out.add(-1, CompositeTerm((FaceSymbol("∂", tup), FaceSymbol("h", ()))))
        out.add(-1, CompositeTerm((FaceSymbol("h", ()), FaceSymbol("∂", tup))))
    for sp in enum_relation_splits(tup):
        out.add(sp.sign, CompositeTerm((FaceSymbol("∂", sp.left),
                                        FaceSymbol("h", sp.right))))
        out.add(sp.sign, CompositeTerm((FaceSymbol("h", sp.left),
                                        FaceSymbol("∂", sp.right))))
    return out


# -- operation-relation expansions ----------------------------------------------

def _insertion_args(slots, t, inner):
    args = ["one"] * slots
    args[t - 1] = inner
    return tuple(args)


def expand_ainf_relation(n):
    """Coherence relation of index n for the operation family (n >= -1)."""
    out = FormalTermSum(f"d(π{n + 1})")
    for m in range(0, n + 1):
        for t in range(1, m + 3):
            sign = -1 if insertion_exponent_structure(n, m, t) else 1
            out.add(sign, OpTerm(("π", m),
                                 _insertion_args(m + 2, t, ("π", n - m))))
    return out


def expand_ainf_morphism_relation(n):
    out = FormalTermSum(f"d(f{n + 1})")
    for m in range(0, n + 1):
        for t in range(1, m + 2):
            sign = -1 if insertion_exponent_morphism(n, m, t) else 1
            out.add(sign, OpTerm(("f", m),
                                 _insertion_args(m + 1, t, ("π", n - m))))
        for parts in compositions(n - m, m + 2):
            sign = -1 if interleave_exponent(parts) else 1
            out.add(-sign, OpTerm(("π", m), tuple(("f", p) for p in parts)))
    return out


def expand_ainf_composition_relation(n):
    out = FormalTermSum(f"(gf){n}")
    for m in range(0, n + 1):
        for parts in compositions(n - m, m + 1):
            sign = -1 if interleave_exponent(parts) else 1
            out.add(sign, OpTerm(("g", m), tuple(("f", p) for p in parts)))
    return out


def expand_ainf_homotopy_relation(n):
    out = FormalTermSum(f"d(h{n + 1})")
    out.add(+1, OpTerm(("f", n + 1), None))
    out.add(-1, OpTerm(("g", n + 1), None))
    for m in range(0, n + 1):
        for t in range(1, m + 2):
            sign = -1 if insertion_exponent_homotopy(n, m, t) else 1
            out.add(sign, OpTerm(("h", m),
                                 _insertion_args(m + 1, t, ("π", n - m))))
        for parts in compositions(n - m, m + 2):
            for i in range(1, m + 3):
                sign = -1 if homotopy_slot_exponent(m, parts, i) else 1
                args = tuple(("g", p) for p in parts[:i - 1]) \
                    + (("h", parts[i - 1]),) \
                    + tuple(("f", p) for p in parts[i:])
                out.add(sign, OpTerm(("π", m), args))
    return out


_RELATIONS = {
    "1.1": ("faces", expand_faces_relation),
    "1.2": ("morphism", expand_morphism_relation),
    "1.3": ("composition", expand_composition_relation),
    "1.4": ("homotopy", expand_homotopy_relation),
    "2.1": ("ainf", expand_ainf_relation),
    "2.2": ("ainf-morphism", expand_ainf_morphism_relation),
    "2.3": ("ainf-composition", expand_ainf_composition_relation),
    "2.4": ("ainf-homotopy", expand_ainf_homotopy_relation),
}

RELATION_IDS = sorted(_RELATIONS)
RELATION_ALIASES = {name: rid for rid, (name, _) in _RELATIONS.items()}


def expand_relation(relation_id, index):
    """Expand a relation by catalog id; ``index`` is the tuple length k for
    the face-side relations 1.x and the relation index n for the
    operation-side relations 2.x."""
    rid = RELATION_ALIASES.get(relation_id, relation_id)
    if rid not in _RELATIONS:
        raise KeyError(f"unknown relation {relation_id!r}; known: {RELATION_IDS}")
    return _RELATIONS[rid][1](index)
