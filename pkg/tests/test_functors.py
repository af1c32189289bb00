import pytest
from hypothesis import given, strategies as st

from frobex.catalog import (
    c2_listed_structures,
    complex_over_real_structures,
    cyclic_group,
    group_algebra,
    matrix_algebra,
    matrix_extended,
    unit_extensions,
)
from frobex.errors import PreconditionError, ShapeError
from frobex.extended import check_extended, make_ext
from frobex.frobenius import rescale
from frobex.functors import (
    BiproductWith,
    IdentityFunctor,
    ObjectSample,
    Override,
    TensorWith,
    apply_functor,
    biproduct_ext,
    check_extended_functor,
    check_frobenius_functor,
    check_separable_functor,
    compare_structures,
    compose_functors,
    make_sample,
    separable_extension_functor,
    tensor_product_ext,
    zero_ext,
)
from frobex.linalg import Mat, Vec, vec_kron
from frobex.scalars import field_make

F = field_make(8)
C2 = c2_listed_structures(F)
B_ID = C2[0]  # (id, sqrt2 e)
B_FLIP = C2[4]  # (g -> -g, 0)
BASE = unit_extensions(F) + C2 + complex_over_real_structures(F) + [matrix_extended(2, 1, F)]


def test_fixtures_are_what_they_claim():
    assert B_ID.phi.is_identity() and not B_ID.theta.is_zero()
    assert not B_FLIP.phi.is_identity() and B_FLIP.theta.is_zero()


pairs = st.tuples(st.sampled_from(BASE), st.sampled_from(BASE))


@given(pairs, st.data())
def test_tensor_product_multiplies_factorwise(ab, data):
    A, B = ab
    P = tensor_product_ext(A, B)
    i, k = data.draw(st.integers(0, A.dim - 1)), data.draw(st.integers(0, A.dim - 1))
    j, l = data.draw(st.integers(0, B.dim - 1)), data.draw(st.integers(0, B.dim - 1))
    x = vec_kron(A.frob.basis(i), B.frob.basis(j))
    y = vec_kron(A.frob.basis(k), B.frob.basis(l))
    want = vec_kron(A.frob.mult(A.frob.basis(i), A.frob.basis(k)), B.frob.mult(B.frob.basis(j), B.frob.basis(l)))
    assert P.frob.mult(x, y) == want
    assert P.phi.apply(x) == vec_kron(A.phi.apply(A.frob.basis(i)), B.phi.apply(B.frob.basis(j)))


@given(pairs)
def test_products_are_extended(ab):
    A, B = ab
    assert check_extended(tensor_product_ext(A, B)).ok
    S = biproduct_ext(A, B)
    assert check_extended(S).ok
    x = Vec(F, list(A.theta) + [0] * B.dim)
    y = Vec(F, [0] * A.dim + list(B.theta))
    assert S.frob.mult(x, y).is_zero()


def test_zero_is_unit_for_biproduct():
    for A in BASE[:4]:
        assert compare_structures(biproduct_ext(A, zero_ext(F)), A).ok
        assert compare_structures(biproduct_ext(zero_ext(F), A), A).ok


SAMPLE = make_sample(F, [1, 2], seed=7, per_pair=2)


@pytest.mark.parametrize("kind", [TensorWith, BiproductWith])
@pytest.mark.parametrize("B", [B_ID, B_FLIP], ids=["id", "flip"])
def test_realized_functors_are_extended(kind, B):
    Fn = kind(B)
    assert check_frobenius_functor(Fn, SAMPLE).ok
    assert check_extended_functor(Fn, SAMPLE).ok


def test_identity_functor():
    Id = IdentityFunctor(F)
    assert check_extended_functor(Id, SAMPLE).ok and check_separable_functor(Id, SAMPLE)
    assert compare_structures(apply_functor(Id, B_ID), B_ID).ok


def test_broken_evaluators_are_caught():
    Fn = TensorWith(B_ID)
    bad = Override(Fn, Fcheck=lambda: Fn.Fcheck().scale(2))
    assert "b.theta_square" in {r.name for r in check_extended_functor(bad, SAMPLE).failed()}
    bad = Override(Fn, F0=lambda: Fn.F0().scale(3))
    assert any(r.name.startswith("left_unit") for r in check_frobenius_functor(bad, SAMPLE).failed())
    with pytest.raises(ValueError):
        Override(Fn, nope=lambda: None)


def test_separability():
    kc2 = group_algebra(cyclic_group(2), F)
    assert not check_separable_functor(TensorWith(kc2), SAMPLE)
    sep = rescale(matrix_algebra(2, F), F(1) / 2)
    Fn = TensorWith(sep)
    assert check_separable_functor(Fn, SAMPLE)
    assert check_extended_functor(separable_extension_functor(Fn), SAMPLE).ok
    with pytest.raises(PreconditionError):
        Fn.Fhat(1)


@pytest.mark.parametrize("A", BASE[:5], ids=lambda e: e.name)
@pytest.mark.parametrize("B", [B_ID, B_FLIP], ids=["id", "flip"])
def test_apply_functor_agrees_with_products(A, B):
    assert compare_structures(apply_functor(TensorWith(B), A), tensor_product_ext(A, B)).ok
    out = apply_functor(BiproductWith(B), A)
    assert check_extended(out).ok
    assert compare_structures(out, biproduct_ext(A, B)).ok


def test_apply_functor_rejects_invalid_input():
    bad = make_ext(B_ID.frob, B_ID.phi, B_ID.theta.scale(2))
    with pytest.raises(PreconditionError):
        apply_functor(TensorWith(B_FLIP), bad)


def test_composition():
    G, H = TensorWith(B_FLIP), BiproductWith(B_ID)
    C = compose_functors(G, H, SAMPLE)
    assert C.obj(2) == G.obj(H.obj(2))
    assert check_extended_functor(C, SAMPLE).ok
    A = unit_extensions(F)[0]
    assert compare_structures(apply_functor(C, A), apply_functor(G, apply_functor(H, A))).ok
    broken = Override(H, Fhat=lambda x: Mat.identity(F, H.obj(x)).scale(-1))
    with pytest.raises(PreconditionError):
        compose_functors(G, broken, SAMPLE)


def test_samples():
    a = make_sample(F, [2, 1, 2], seed=3)
    b = make_sample(F, [1, 2], seed=3)
    assert a == b and a.dims == (1, 2) and a.seed == 3
    assert make_sample(F, [1, 2], seed=4) != a
    with pytest.raises(ShapeError):
        ObjectSample((0,))
    with pytest.raises(ShapeError):
        ObjectSample((1, 2), ((1, 2, Mat.zeros(F, 1, 2)),))
