"""The tensor functor: component plans against closed-form examples, theorem
checks on instances, functor laws, rewrites, and mutation sensitivity."""

import pytest

import ainfsimp.functor as functor
from ainfsimp.ainf import compose_ainf, identity_ainf_morphism
from ainfsimp.functor import (FunctorInputError, face_plan,
                              homotopy_component_plan, morphism_component_plan,
                              tensor_homotopy, tensor_morphism, tensor_object,
                              verify_blockforms, verify_functoriality,
                              verify_homotopy_equivalence, verify_identity_image,
                              verify_rewrites_homotopy, verify_rewrites_morphism)
from ainfsimp.generators import (GeneratorSpec, extend_ainf, extend_homotopy,
                                 extend_morphism, strict_dga_catalog)
from ainfsimp.simplicial import check_faces, check_homotopy, check_morphism

PROFILE = ((0, 1), (1, 1))


@pytest.fixture(scope="module")
def instances():
    a = extend_ainf(GeneratorSpec(seed=1, profile=PROFILE, kernel_offset=True))
    b = extend_ainf(GeneratorSpec(seed=22, profile=PROFILE, kernel_offset=True))
    f = extend_morphism(GeneratorSpec(seed=31), a, b)
    g = extend_morphism(GeneratorSpec(seed=32), a, b)
    h = extend_homotopy(GeneratorSpec(seed=33), f, g)
    back = extend_morphism(GeneratorSpec(seed=41), b, a)
    return dict(a=a, b=b, f=f, g=g, h=h, back=back)


def test_face_plan_window():
    assert face_plan(2, (1,)) == 1
    assert face_plan(2, (0,)) is None
    assert face_plan(2, (2,)) is None
    assert face_plan(5, (2, 3)) == 2
    assert face_plan(5, (2, 4)) is None  # not consecutive
    assert face_plan(4, (3,)) == 3
    assert face_plan(4, (2, 3, 4)) is None  # touches the right edge


def test_morphism_plan_worked_example():
    desc, lengths = morphism_component_plan(15, (2, 3, 6, 7, 8))
    assert lengths == (2, 3)
    assert desc == [("f", 0), ("f", 2), ("f", 0), ("f", 3)] + [("f", 0)] * 6
    # outer exponent 5(q-1) + 2*3
    assert functor.morphism_sign_exponent(5, 1, lengths) == 0
    assert functor.morphism_sign_exponent(5, 2, lengths) == 1


def test_morphism_plan_boundaries():
    assert morphism_component_plan(4, (0, 2)) is None
    assert morphism_component_plan(4, (2, 4)) is None
    desc, lengths = morphism_component_plan(3, ())
    assert desc == [("f", 0)] * 3 and lengths == ()


def test_homotopy_plan_worked_example():
    summands, lengths = homotopy_component_plan(15, (2, 3, 6, 7, 8))
    assert lengths == (2, 3)
    expected_first = [
        (0, [("g", 0), ("h", 2), ("f", 0), ("f", 3)] + [("f", 0)] * 6),
        (0, [("g", 0), ("g", 2), ("g", 0), ("h", 3)] + [("f", 0)] * 6),
    ]
    assert summands[:2] == [(p, d) for p, d in expected_first]
    # second group: h_0 walking the gaps with the prefix signs
    assert summands[2] == (0, [("h", 0), ("f", 2), ("f", 0), ("f", 3)] + [("f", 0)] * 6)
    assert summands[3] == (0, [("g", 0), ("g", 2), ("h", 0), ("f", 3)] + [("f", 0)] * 6)
    tail = summands[4:]
    assert len(tail) == 6
    for j, (prefix, desc) in enumerate(tail, start=1):
        assert prefix == 1  # (-1)**(n_1 + n_2) = (-1)**5
        want = ([("g", 0), ("g", 2), ("g", 0), ("g", 3)]
                + [("g", 0)] * (j - 1) + [("h", 0)] + [("f", 0)] * (6 - j))
        assert desc == want


def test_homotopy_plan_empty_tuple():
    summands, lengths = homotopy_component_plan(3, ())
    assert lengths == ()
    assert [d for _, d in summands] == [
        [("h", 0), ("f", 0), ("f", 0)],
        [("g", 0), ("h", 0), ("f", 0)],
        [("g", 0), ("g", 0), ("h", 0)],
    ]


def test_strict_dga_image_is_strict(instances):
    exterior = [x for x in strict_dga_catalog() if x.name == "exterior-rank1"][0]
    tx = tensor_object(exterior, 4)
    for n in range(1, 5):
        for t in tx.level_tuples(n):
            if len(t) >= 2:
                assert tx.face(n, t).is_zero()
    assert check_faces(tx, 4).ok


def test_object_boundary_faces_vanish(instances):
    tx = tensor_object(instances["a"], 3, check=False)
    assert tx.face(2, (0,)).is_zero()
    assert tx.face(2, (2,)).is_zero()
    assert not tx.face(2, (1,)).is_zero()


def test_object_theorem(instances):
    tx = tensor_object(instances["a"], 5)
    assert check_faces(tx, 5).ok


def test_morphism_theorem(instances):
    tf = tensor_morphism(instances["f"], 4)
    assert check_morphism(tf, 4).ok
    assert not tf.component(3, (1,)).is_zero()


def test_homotopy_theorem(instances):
    th = tensor_homotopy(instances["h"], 4)
    assert check_homotopy(th, 4).ok


def test_invalid_input_refused(instances):
    from ainfsimp.ainf import AInfAlgebra
    a = instances["a"]
    broken = AInfAlgebra(a.dm, {0: a.op(0), 1: -a.op(1), 2: a.op(2)},
                         name="broken")
    with pytest.raises(FunctorInputError):
        tensor_object(broken, 3)


def test_image_of_identity_is_identity(instances):
    assert verify_identity_image(instances["a"], 4).ok


def test_functoriality(instances):
    assert verify_functoriality(instances["back"], instances["f"], 4).ok


def test_functoriality_with_identity(instances):
    a, f = instances["a"], instances["f"]
    rep = verify_functoriality(f, identity_ainf_morphism(a), 3)
    assert rep.ok


def test_homotopy_equivalence_transport(instances):
    a, b = instances["a"], instances["b"]
    phi, psi = instances["f"], instances["back"]
    h_left = extend_homotopy(GeneratorSpec(seed=51, profile=PROFILE),
                             compose_ainf(psi, phi), identity_ainf_morphism(a))
    h_right = extend_homotopy(GeneratorSpec(seed=52, profile=PROFILE),
                              compose_ainf(phi, psi), identity_ainf_morphism(b))
    assert verify_homotopy_equivalence(phi, psi, h_left, h_right, 3).ok


def test_rewrites(instances):
    assert verify_rewrites_morphism(instances["f"], 3).ok
    assert verify_rewrites_homotopy(instances["h"], 3).ok


def test_blockforms(instances):
    tf = tensor_morphism(instances["f"], 4, check=False)
    assert verify_blockforms(instances["f"], tf, 2, "morphism").ok
    th = tensor_homotopy(instances["h"], 4, check=False)
    assert verify_blockforms(instances["h"], th, 2, "homotopy").ok


# -- mutation sensitivity: flipping any single sign site must break a check ----

def _flip(fn):
    def flipped(*args, **kwargs):
        return (fn(*args, **kwargs) + 1) % 2
    return flipped


def _flip_interior(fn):
    # the k = 0 rules carry no sign, so "the" sign lives on k >= 1 components
    def flipped(k, q, lengths):
        value = fn(k, q, lengths)
        return (value + 1) % 2 if k >= 1 else value
    return flipped


def test_mutated_face_sign_detected(instances, monkeypatch):
    monkeypatch.setattr(functor, "face_sign_exponent",
                        _flip(functor.face_sign_exponent))
    tx = tensor_object(instances["a"], 4, check=False)
    assert not check_faces(tx, 4).ok


def test_mutated_morphism_sign_detected(instances, monkeypatch):
    monkeypatch.setattr(functor, "morphism_sign_exponent",
                        _flip_interior(functor.morphism_sign_exponent))
    tf = tensor_morphism(instances["f"], 4, check=False)
    assert not check_morphism(tf, 4).ok


def test_mutated_morphism_interchange_part_detected(instances, monkeypatch):
    # flip only the run-interchange part of the component sign
    original = functor.morphism_sign_exponent

    def flipped(k, q, lengths):
        value = original(k, q, lengths)
        return (value + 1) % 2 if len(lengths) >= 2 else value

    monkeypatch.setattr(functor, "morphism_sign_exponent", flipped)
    tf = tensor_morphism(instances["f"], 4, check=False)
    assert not check_morphism(tf, 4).ok


def test_mutated_homotopy_sign_detected(instances, monkeypatch):
    monkeypatch.setattr(functor, "homotopy_sign_exponent",
                        _flip(functor.homotopy_sign_exponent))
    th = tensor_homotopy(instances["h"], 4, check=False)
    assert not check_homotopy(th, 4).ok


def test_mutated_homotopy_prefix_sign_detected(instances, monkeypatch):
    monkeypatch.setattr(functor, "homotopy_prefix_exponent",
                        _flip(functor.homotopy_prefix_exponent))
    th = tensor_homotopy(instances["h"], 4, check=False)
    assert not check_homotopy(th, 4).ok
