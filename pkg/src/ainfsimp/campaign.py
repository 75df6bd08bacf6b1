"""The verification campaign: a fixed, reproducible corpus of instances and
the full battery of structure, theorem, rewrite, and sign checks over it.

The corpus seeds are constants: the same corpus is generated on every run,
and the generator tests assert its nontriviality (some instance with a
nonzero ternary operation, some with a nonzero quaternary one) so the
campaign can never silently degenerate to the strict case.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .ainf import (check_ainf, check_ainf_homotopy, check_ainf_morphism,
                   check_suspended_structure, compose_ainf,
                   homotopy_transport_identity, identity_ainf_morphism,
                   morphism_transport_identity, structure_transport_identity,
                   suspend_homotopy, suspend_morphism, suspend_structure)
from .combinatorics import positive_compositions
from .exponents import (block_sign_exponent, block_sign_single_exponent,
                        derived_insertion_exponent_homotopy,
                        derived_insertion_exponent_morphism,
                        derived_insertion_exponent_structure,
                        derived_interleave_exponent,
                        derived_homotopy_slot_exponent,
                        derived_run_interchange_exponent,
                        grouped_homotopy_exponent, grouped_interleave_exponent,
                        homotopy_slot_exponent, insertion_exponent_homotopy,
                        insertion_exponent_morphism, insertion_exponent_structure,
                        interleave_exponent, raw_alpha_homotopy,
                        raw_alpha_morphism, raw_beta_homotopy, raw_beta_morphism,
                        reduced_alpha_homotopy, reduced_alpha_morphism,
                        run_interchange_exponent)
from .combinatorics import (block_inversion_formula, block_permutation,
                            compositions, hat_sequence)
from .generators import (GeneratorSpec, extend_ainf, extend_homotopy,
                         extend_morphism, make_cone, strict_dga_catalog)
from .functor import (exponent_reindex_report, tensor_homotopy, tensor_morphism,
                      tensor_object, verify_blockforms, verify_functoriality,
                      verify_homotopy_equivalence, verify_identity_image,
                      verify_rewrites_homotopy, verify_rewrites_morphism)
from .report import VerificationReport
from .simplicial import check_faces, check_homotopy, check_morphism
from .symbolic import expand_relation

GOLDEN_CASES = (
    [("1.1", k) for k in (1, 2, 3)]
    + [("1.2", k) for k in (0, 1, 2, 3)]
    + [("1.3", k) for k in (0, 1, 2, 3)]
    + [("1.4", k) for k in (0, 1, 2, 3)]
    + [("2.1", n) for n in (-1, 0, 1)]
    + [("2.2", n) for n in (-1, 0, 1)]
    + [("2.3", n) for n in (0, 1, 2)]
    + [("2.4", n) for n in (-1, 0, 1)]
)


def load_golden():
    import json
    from importlib import resources
    data = resources.files("ainfsimp").joinpath("golden/expansions.json")
    return json.loads(data.read_text(encoding="utf-8"))


def golden_report(report=None):
    """Compare every expansion against its frozen golden term multiset."""
    if report is None:
        report = VerificationReport("golden expansions")
    golden = load_golden()
    for rid, idx in GOLDEN_CASES:
        entry = golden[f"{rid}:{idx}"]
        got = expand_relation(rid, idx)
        want = {}
        for coeff, text in entry["terms"]:
            want[text] = want.get(text, 0) + coeff
        have = {}
        for coeff, text in got.rendered_terms():
            have[text] = have.get(text, 0) + coeff
        ok = want == have and got.lhs == entry["lhs"]
        report.record("golden", {"relation": rid, "index": idx}, ok,
                      note=entry.get("note", ""))
    return report


# -- corpus -----------------------------------------------------------------------

@dataclass
class Corpus:
    dgas: list = field(default_factory=list)
    algebras: list = field(default_factory=list)
    morphisms: list = field(default_factory=list)
    homotopies: list = field(default_factory=list)
    equivalences: list = field(default_factory=list)

    def all_algebras(self):
        return self.dgas + self.algebras


_PROFILE = ((0, 1), (1, 1))


def default_corpus(field_=None):
    """The fixed corpus: built-in strict algebras, five solver-extended
    structures (two on a shared complex), five morphisms including an
    identity-based one, three homotopies, and an equivalence witness pair."""
    corpus = Corpus()
    corpus.dgas = strict_dga_catalog(field_)

    def ext(seed, **kw):
        return extend_ainf(GeneratorSpec(seed=seed, profile=_PROFILE,
                                         kernel_offset=True, **kw), field_)

    a1 = ext(1)
    a2 = ext(2)
    a5 = ext(5)
    a22 = ext(22)
    shared = make_cone(GeneratorSpec(seed=7, profile=_PROFILE), field_)
    b1 = extend_ainf(GeneratorSpec(seed=71, profile=_PROFILE, kernel_offset=True),
                     field_, base=shared)
    b2 = extend_ainf(GeneratorSpec(seed=72, profile=_PROFILE, kernel_offset=True),
                     field_, base=shared)
    corpus.algebras = [a1, a2, a5, a22, b1, b2]

    f1 = extend_morphism(GeneratorSpec(seed=31, profile=_PROFILE), a1, a22)
    f2 = extend_morphism(GeneratorSpec(seed=32, profile=_PROFILE), a1, a22)
    f3 = extend_morphism(GeneratorSpec(seed=41, profile=_PROFILE), a22, a1)
    f4 = extend_morphism(GeneratorSpec(seed=42, profile=_PROFILE), a2, a5)
    from .graded import identity_map
    f_id = extend_morphism(GeneratorSpec(seed=43, profile=_PROFILE), b1, b2,
                           f0=identity_map(b1.module))
    corpus.morphisms = [f1, f2, f3, f4, f_id]

    h1 = extend_homotopy(GeneratorSpec(seed=33, profile=_PROFILE), f1, f2)
    h_left = extend_homotopy(GeneratorSpec(seed=51, profile=_PROFILE),
                             compose_ainf(f3, f1), identity_ainf_morphism(a1))
    h_right = extend_homotopy(GeneratorSpec(seed=52, profile=_PROFILE),
                              compose_ainf(f1, f3), identity_ainf_morphism(a22))
    corpus.homotopies = [h1, h_left, h_right]
    corpus.equivalences = [(f1, f3, h_left, h_right)]
    return corpus


def corpus_nontriviality(corpus):
    """(some op1 nonzero, some op2 nonzero) over the extended algebras."""
    has1 = any(not a.op(1).is_zero() for a in corpus.algebras)
    has2 = any(not a.op(2).is_zero() for a in corpus.algebras)
    return has1, has2


# -- suites -----------------------------------------------------------------------

def congruence_report(max_n=8, report=None):
    """Exhaustive block-permutation suite: hat-collection equality, the
    closed-form inversion count, and both sign congruences."""
    import itertools
    if report is None:
        report = VerificationReport("block congruences")
    for n in range(0, max_n + 1):
        ok_hat = ok_inv = ok_sign = ok_special = True
        count = 0
        for s in range(1, n + 1):
            for total_n in range(s, n + 1):
                m = n - total_n
                for n_blocks in positive_compositions(total_n, s):
                    for total_t in range(s, m + 3):
                        for t_blocks in positive_compositions(total_t, s):
                            perm = block_permutation(n, n_blocks, t_blocks)
                            count += 1
                            expected = tuple(range(1, m + 2)) + tuple(
                                itertools.chain(*perm.b_blocks))
                            ok_hat &= hat_sequence(perm.image) == expected
                            ok_inv &= block_inversion_formula(perm) == perm.inversions()
                            ok_sign &= (block_sign_exponent(n, t_blocks, n_blocks)
                                        == perm.sign())
        for m in range(0, n):
            for t in range(1, m + 3):
                perm = block_permutation(n, (n - m,), (t,))
                ok_special &= block_sign_single_exponent(n, m, t) == perm.sign()
        report.record("hat-equality", {"n": n, "instances": count}, ok_hat)
        report.record("inversion-formula", {"n": n}, ok_inv)
        report.record("block-sign", {"n": n}, ok_sign)
        report.record("block-sign-special", {"n": n}, ok_special)
    return report


def exponent_report(max_n=6, max_q=6, report=None):
    """The raw proof exponents reduce to their closed forms, and the grouped
    exponents match the composition-indexed ones."""
    if report is None:
        report = VerificationReport("exponent reductions")
    for n in range(0, max_n + 1):
        ok_am = ok_ah = ok_bm = ok_bh = True
        for m in range(0, n):
            for t in range(1, m + 3):
                for q in range(0, max_q + 1):
                    ok_am &= raw_alpha_morphism(n, m, t, q) == reduced_alpha_morphism(n, m, t)
                    ok_ah &= raw_alpha_homotopy(n, m, t, q) == reduced_alpha_homotopy(n, m, t)
            for s in range(1, m + 3):
                for n_blocks in positive_compositions(n - m, s):
                    for total_t in range(s, m + 3):
                        for t_blocks in positive_compositions(total_t, s):
                            for q in range(0, max_q + 1):
                                ok_bm &= (raw_beta_morphism(n, m, q, t_blocks, n_blocks)
                                          == grouped_interleave_exponent(t_blocks, n_blocks))
                                ok_bh &= (raw_beta_homotopy(n, m, q, t_blocks, n_blocks)
                                          == grouped_homotopy_exponent(m, t_blocks, n_blocks))
        report.record("alpha-morphism", {"n": n}, ok_am)
        report.record("alpha-homotopy", {"n": n}, ok_ah)
        report.record("beta-morphism", {"n": n}, ok_bm)
        report.record("beta-homotopy", {"n": n}, ok_bh)
    exponent_reindex_report(max_n, report)
    return report


def koszul_report(max_n=6, report=None):
    """Every closed-form exponent equals its mechanical derivation through
    the interchange primitive."""
    if report is None:
        report = VerificationReport("koszul cross-derivation")
    for n in range(-1, max_n + 1):
        ok_ins = True
        for m in range(0, n + 1):
            for t in range(1, m + 3):
                ok_ins &= (derived_insertion_exponent_structure(n, m, t)
                           == insertion_exponent_structure(n, m, t))
            for t in range(1, m + 2):
                ok_ins &= (derived_insertion_exponent_morphism(n, m, t)
                           == insertion_exponent_morphism(n, m, t))
                ok_ins &= (derived_insertion_exponent_homotopy(n, m, t)
                           == insertion_exponent_homotopy(n, m, t))
        report.record("insertion-signs", {"n": n}, ok_ins)
    for n in range(0, max_n + 1):
        ok_il = ok_slot = True
        for m in range(0, n + 1):
            for parts in compositions(n - m, m + 2):
                ok_il &= derived_interleave_exponent(parts) == interleave_exponent(parts)
                for i in range(1, m + 3):
                    ok_slot &= (derived_homotopy_slot_exponent(m, parts, i)
                                == homotopy_slot_exponent(m, parts, i))
        report.record("interleave-sign", {"n": n}, ok_il)
        report.record("homotopy-slot-sign", {"n": n}, ok_slot)
        ok_runs = True
        for s in range(1, n + 1):
            for lengths in positive_compositions(n, s):
                ok_runs &= (derived_run_interchange_exponent(lengths)
                            == run_interchange_exponent(lengths))
        report.record("run-interchange-sign", {"n": n}, ok_runs)
    return report


def structure_report(corpus, max_relation=3, max_degree=6, report=None):
    """Structure, morphism, and homotopy relations over the whole corpus."""
    if report is None:
        report = VerificationReport("corpus structure checks")
    for a in corpus.all_algebras():
        sub = check_ainf(a, max_relation=max_relation, max_degree=max_degree)
        for e in sub.entries:
            e.params["instance"] = a.name
        report.merge(sub)
    for f in corpus.morphisms:
        sub = check_ainf_morphism(f, max_relation=max_relation, max_degree=max_degree)
        for e in sub.entries:
            e.params["instance"] = f.name
        report.merge(sub)
    for h in corpus.homotopies:
        sub = check_ainf_homotopy(h, max_relation=max_relation, max_degree=max_degree)
        for e in sub.entries:
            e.params["instance"] = h.name
        report.merge(sub)
    return report


def theorem_report(corpus, max_level=6, max_degree=None, report=None):
    """All functor-level checks over the corpus: images of objects,
    morphisms, and homotopies pass their relations; the functor preserves
    composition and identities; equivalence witnesses transport."""
    if report is None:
        report = VerificationReport("functor theorems")
    for a in corpus.all_algebras():
        tx = tensor_object(a, max_level)
        sub = check_faces(tx, max_level, max_degree)
        for e in sub.entries:
            e.params["instance"] = a.name
        report.merge(sub)
    for f in corpus.morphisms:
        tf = tensor_morphism(f, max_level - 1, check=False)
        sub = check_morphism(tf, max_level - 1, max_degree)
        for e in sub.entries:
            e.params["instance"] = f.name
        report.merge(sub)
    for h in corpus.homotopies:
        th = tensor_homotopy(h, max_level - 1, check=False)
        sub = check_homotopy(th, max_level - 1, max_degree)
        for e in sub.entries:
            e.params["instance"] = h.name
        report.merge(sub)
    f1, f3 = corpus.morphisms[0], corpus.morphisms[2]
    verify_functoriality(f3, f1, max_level, report)
    verify_identity_image(corpus.algebras[0], max_level, report)
    for witnesses in corpus.equivalences:
        verify_homotopy_equivalence(*witnesses, max_level - 2,
                                    max_degree, report)
    return report


def suspension_report(corpus, max_relation=3, report=None):
    """Sign-free suspension relations hold iff the base relations hold, and
    the residual transport identity holds relation by relation."""
    if report is None:
        report = VerificationReport("suspension equivalence")
    for a in corpus.all_algebras():
        susp = suspend_structure(a)
        sub = check_suspended_structure(susp, max_relation)
        for e in sub.entries:
            e.params["instance"] = a.name
        report.merge(sub)
        ok = all(structure_transport_identity(a, susp, n)
                 for n in range(-1, max_relation + 1))
        report.record("2.1-transport", {"instance": a.name}, ok)
    for f in corpus.morphisms[:2]:
        sf = suspend_morphism(f)
        ok = all(morphism_transport_identity(f, sf, n)
                 for n in range(-1, max_relation + 1))
        report.record("2.2-transport", {"instance": f.name}, ok)
    for h in corpus.homotopies[:1]:
        sh = suspend_homotopy(h)
        ok = all(homotopy_transport_identity(h, sh, n)
                 for n in range(-1, max_relation + 1))
        report.record("2.4-transport", {"instance": h.name}, ok)
    return report


def rewrite_report(corpus, max_relation=3, report=None):
    """Grouped rewrites agree with the direct relations; block forms vanish
    on images."""
    if report is None:
        report = VerificationReport("rewritten relations")
    f = corpus.morphisms[0]
    verify_rewrites_morphism(f, max_relation, report=report)
    h = corpus.homotopies[0]
    verify_rewrites_homotopy(h, max_relation, report=report)
    tf = tensor_morphism(f, 4, check=False)
    verify_blockforms(f, tf, 2, "morphism", report=report)
    th = tensor_homotopy(h, 4, check=False)
    verify_blockforms(h, th, 2, "homotopy", report=report)
    return report


def run_campaign(max_level=6, max_degree=6, max_relation=3, field_=None):
    """Run everything; returns one merged report."""
    report = VerificationReport("verification campaign",
                                config={"max_level": max_level,
                                        "max_degree": max_degree,
                                        "max_relation": max_relation})
    golden_report(report)
    congruence_report(8, report)
    exponent_report(6, 6, report)
    koszul_report(6, report)
    corpus = default_corpus(field_)
    has1, has2 = corpus_nontriviality(corpus)
    report.record("corpus-nontrivial", {"op1": has1, "op2": has2}, has1 and has2)
    structure_report(corpus, max_relation, max_degree, report)
    theorem_report(corpus, max_level, None, report)
    suspension_report(corpus, max_relation, report)
    rewrite_report(corpus, max_relation, report)
    return report
