from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from frobex.errors import ShapeError
from frobex.linalg import (
    Mat,
    Vec,
    charpoly,
    direct_sum,
    inverse,
    is_invertible,
    kron,
    mat_mul,
    nullspace,
    rank,
    solve_linear,
    swap_map,
    trace,
)
from frobex.scalars import field_make

Q = field_make(1)
small = st.integers(-4, 4)


@st.composite
def int_matrices(draw, rows=None, cols=None):
    r = rows or draw(st.integers(1, 4))
    c = cols or draw(st.integers(1, 4))
    return draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))


def ours(rows):
    return Mat.from_rows(Q, rows, len(rows[0]))


def theirs(rows):
    return sympy.Matrix(rows)


def to_rows(M: Mat):
    return [[Fraction(str(e)) for e in r] for r in M.entries]


def sym_rows(S):
    return [[Fraction(int(e.p), int(e.q)) for e in S.row(i)] for i in range(S.rows)]


@given(int_matrices(), int_matrices())
def test_kron_matches_sympy(a, b):
    assert to_rows(kron(ours(a), ours(b))) == sym_rows(sympy.kronecker_product(theirs(a), theirs(b)))


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 4), st.data())
def test_mat_mul_matches_sympy(n, k, m, data):
    a = data.draw(int_matrices(n, k))
    b = data.draw(int_matrices(k, m))
    assert to_rows(mat_mul(ours(a), ours(b))) == sym_rows(theirs(a) * theirs(b))


@given(int_matrices())
def test_rank_matches_sympy(a):
    assert rank(ours(a)) == theirs(a).rank()


@given(st.integers(1, 4).flatmap(lambda n: int_matrices(n, n)))
def test_inverse_and_charpoly_match_sympy(a):
    S = theirs(a)
    inv = inverse(ours(a))
    if S.det() == 0:
        assert inv is None and not is_invertible(ours(a))
    else:
        assert to_rows(inv) == sym_rows(S.inv())
    x = sympy.Symbol("x")
    want = [Fraction(str(c)) for c in reversed(S.charpoly(x).all_coeffs())]
    assert [Fraction(str(c)) for c in charpoly(ours(a))] == want
    assert Fraction(str(trace(ours(a)))) == Fraction(str(S.trace()))


@given(int_matrices(), st.data())
def test_solve_linear(a, data):
    M = ours(a)
    rhs = data.draw(st.lists(small, min_size=M.rows, max_size=M.rows))
    b = Vec(Q, rhs)
    sol = solve_linear(M, b)
    consistent = theirs(a).rank() == sympy.Matrix.hstack(theirs(a), sympy.Matrix(rhs)).rank()
    assert (sol is not None) == consistent
    if sol is not None:
        assert M.apply(sol.particular) == b
        for v in sol.nullspace:
            assert M.apply(v).is_zero()
        assert len(sol.nullspace) == M.cols - rank(M)


def test_nullspace_basis_is_independent():
    M = ours([[1, 2, 3], [2, 4, 6]])
    ns = nullspace(M)
    assert len(ns) == 2
    assert rank(Mat.from_columns(Q, ns)) == 2


def test_swap_map_is_pairing_swap():
    F = field_make(1)
    c = swap_map(2, 3, F)
    for i in range(2):
        for j in range(3):
            src = Vec.basis(F, 6, i * 3 + j)
            assert c.apply(src) == Vec.basis(F, 6, j * 2 + i)
    assert mat_mul(swap_map(3, 2, F), c).is_identity()


def test_kron_index_convention():
    # (A (x) B)[(i,k),(j,l)] = A[i,j] B[k,l] with (i,k) -> i*rows(B) + k
    A = ours([[1, 2], [3, 4]])
    B = ours([[0, 5, 1]])
    K = kron(A, B)
    for i in range(2):
        for j in range(2):
            for l in range(3):
                assert K[i, j * 3 + l] == A[i, j] * B[0, l]


def test_direct_sum_blocks():
    D = direct_sum(ours([[1]]), ours([[2, 3]]))
    assert D.shape == (2, 3)
    assert to_rows(D) == [[1, 0, 0], [0, 2, 3]]


def test_shape_errors():
    with pytest.raises(ShapeError):
        mat_mul(ours([[1, 2]]), ours([[1, 2]]))
    with pytest.raises(ShapeError):
        inverse(ours([[1, 2]]))


def test_exact_over_cyclotomic_field():
    F = field_make(8)
    z = F.z()
    M = Mat.from_rows(F, [[z, 1], [0, z ** 3]])
    assert mat_mul(M, inverse(M)).is_identity()
