from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supertensor.exactlin import (
    GF,
    QQ,
    DimensionMismatch,
    EchelonBasis,
    Field,
    FieldError,
    Matrix,
    Mod,
    Subspace,
    kernel,
    rref,
)


def det(rows):
    """Leibniz expansion; independent of elimination."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, p in enumerate(perm):
            term *= rows[i][p]
        total += term
    return total


def test_rref_identity():
    m = Matrix.from_rows(QQ, [[1, 0], [0, 1]])
    r, rank, piv = rref(m)
    assert r == m and rank == 2 and piv == [0, 1]


def test_rref_proportional_rows():
    r, rank, piv = rref(Matrix.from_rows(QQ, [[1, 2], [2, 4]]))
    assert r.entries == ((1, 2), (0, 0))
    assert rank == 1 and piv == [0]


def test_rref_full_rank_3x3():
    rows = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    assert det(rows) == 2
    assert rref(Matrix.from_rows(QQ, rows))[1] == 3


def test_rref_rank_over_gf5_differs_when_det_vanishes():
    # det = 2 is a unit mod 5, so full rank there too
    assert rref(Matrix.from_rows(GF(5), [[0, 1, 1], [1, 0, 1], [1, 1, 0]]))[1] == 3
    # det = 5 vanishes mod 5
    rows = [[1, 2], [-1, 3]]
    assert det(rows) == 5
    assert rref(Matrix.from_rows(QQ, rows))[1] == 2
    assert rref(Matrix.from_rows(GF(5), rows))[1] == 1


def test_matrix_shape_checked():
    with pytest.raises(DimensionMismatch):
        Matrix(QQ, 2, 2, ((1, 2),))


def test_subspace_sum_and_intersection():
    e1 = Subspace.span(QQ, [[1, 0]], 2)
    e2 = Subspace.span(QQ, [[0, 1]], 2)
    assert (e1 + e2) == Subspace.full(QQ, 2)
    assert (e1 + e2).rank == 2
    diag = Subspace.span(QQ, [[1, 1]], 2)
    anti = Subspace.span(QQ, [[1, -1]], 2)
    assert diag.intersection(anti).dim == 0
    assert [2, 2] in diag
    assert [2, 3] not in diag
    assert diag.quotient_dim() == 1


def test_subspace_ambient_mismatch():
    with pytest.raises(DimensionMismatch):
        Subspace.span(QQ, [[1, 0]], 2) + Subspace.span(QQ, [[1, 0, 0]], 3)


def test_canonical_form_makes_equal_spans_equal():
    a = Subspace.span(QQ, [[1, 2, 3], [0, 1, 1]], 3)
    b = Subspace.span(QQ, [[1, 3, 4], [2, 5, 7]], 3)
    assert a == b


def test_mod_arithmetic():
    F = GF(7)
    a, b = F(3), F(5)
    assert a + b == 1 and a * b == 1 and a / b == F(2)
    assert F(Fraction(1, 2)) == 4
    assert -a == 4
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()
    with pytest.raises(FieldError):
        F(Fraction(1, 7))


@pytest.mark.parametrize("p", [2, 3, 4, 9, -5])
def test_bad_characteristics(p):
    with pytest.raises(FieldError):
        Field(p)


def test_kernel_basis():
    m = Matrix.from_rows(QQ, [[1, 1, 0], [0, 0, 1]])
    (v,) = kernel(m)
    assert v == (-1, 1, 0)


def test_echelon_basis_matches_subspace():
    vecs = [{0: 1, 2: 2}, {1: 1, 2: 1}, {0: 2, 1: 2, 2: 6}, {0: 1}]
    R = EchelonBasis(QQ, 3)
    grew = [R.insert({k: Fraction(v) for k, v in x.items()}) for x in vecs]
    assert grew == [True, True, False, True]
    dense = [[x.get(i, 0) for i in range(3)] for x in vecs]
    assert R.to_subspace() == Subspace.span(QQ, dense, 3)


small = st.integers(-3, 3)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=max_rows))


@given(matrices())
def test_rref_idempotent(rows):
    m = Matrix.from_rows(QQ, rows)
    r, rank, piv = rref(m)
    r2, rank2, piv2 = rref(r)
    assert (r2, rank2, piv2) == (r, rank, piv)


@given(matrices())
def test_rank_nullity(rows):
    m = Matrix.from_rows(QQ, rows)
    ker = kernel(m)
    assert rref(m)[1] + len(ker) == m.ncols
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m.entries)


@given(matrices(), st.sampled_from([5, 7, 11]))
def test_rank_nullity_prime_field(rows, p):
    m = Matrix.from_rows(GF(p), rows)
    assert rref(m)[1] + len(kernel(m)) == m.ncols


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(small, min_size=n, max_size=n), max_size=5),
    st.lists(st.lists(small, min_size=n, max_size=n), max_size=5))))
def test_dimension_formula(data):
    n, us, vs = data
    U, V = Subspace.span(QQ, us, n), Subspace.span(QQ, vs, n)
    I = U.intersection(V)
    assert (U + V).dim + I.dim == U.dim + V.dim
    assert I.issubspace(U) and I.issubspace(V)


@pytest.mark.parametrize("field", [QQ, GF(7)])
def test_echelon_basis_keeps_field_scalars(field):
    R = EchelonBasis(field, 3)
    R.insert({0: 2, 2: 1})
    R.insert({1: 3})
    for _, row in R.rows():
        assert all(type(x) is type(field.one) for x in row.values())
