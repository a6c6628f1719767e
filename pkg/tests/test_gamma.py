from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supertensor.gamma import gamma_basis, gamma_dim, gamma_direct_sum_check, gamma_of_abelianization
from supertensor.superalg import SuperDim, abelian, heisenberg_even, heisenberg_odd


@pytest.mark.parametrize("d,want", [
    ((2, 0), (3, 0)),
    ((0, 1), (0, 0)),
    ((2, 1), (3, 2)),
    ((2, 2), (4, 4)),
])
def test_gamma_dim_examples(d, want):
    d = SuperDim(*d)
    # the enumerated basis is the oracle for the closed form
    assert gamma_basis(d).dim == SuperDim(*want)
    assert gamma_dim(d) == SuperDim(*want)


def test_basis_has_no_diagonal_pairs():
    B = gamma_basis(SuperDim(2, 2))
    assert ("gamma", 0) in B.generators and ("gamma", 2) not in B.generators
    assert not [g for g in B.generators if g[0] == "pair" and g[1] == g[2]]
    assert ("pair", 0, 2) in B.generators
    assert B.parities[B.generators.index(("pair", 0, 2))] == 1


@pytest.mark.parametrize("m", range(11))
def test_classical_divided_square(m):
    assert gamma_dim(SuperDim(m, 0)) == SuperDim(m * (m + 1) // 2, 0)
    assert gamma_dim(SuperDim(0, m)) == SuperDim(m * (m - 1) // 2, 0)


@pytest.mark.parametrize("m,n", [(m, n) for m in range(6) for n in range(6)])
def test_counts_match_enumeration(m, n):
    d = SuperDim(m, n)
    B = gamma_basis(d)
    assert len(B.generators) == m + comb(m + n, 2)
    assert B.dim == gamma_dim(d)


def test_direct_sum_examples():
    assert gamma_direct_sum_check(SuperDim(1, 0), SuperDim(1, 1))
    assert gamma_direct_sum_check(SuperDim(0, 0), SuperDim(3, 2))
    assert gamma_direct_sum_check(SuperDim(2, 0), SuperDim(0, 2))


def test_direct_sum_exhaustive():
    dims = [SuperDim(e, o) for e in range(7) for o in range(7) if e + o <= 6]
    for a in dims:
        for b in dims:
            if a.total() + b.total() <= 6:
                assert gamma_direct_sum_check(a, b), (a, b)


@given(st.integers(0, 12), st.integers(0, 12), st.integers(0, 12), st.integers(0, 12))
def test_direct_sum_law_property(a, b, c, d):
    assert gamma_direct_sum_check(SuperDim(a, b), SuperDim(c, d))


@pytest.mark.parametrize("m,n", [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (1, 2), (3, 2)])
def test_gamma_of_heisenberg(m, n):
    want = SuperDim(2 * m * m + m + n * (n - 1) // 2, 2 * m * n)
    assert gamma_of_abelianization(heisenberg_even(m, n)) == want


def test_gamma_of_small_algebras():
    assert gamma_of_abelianization(abelian(1, 0)) == SuperDim(1, 0)
    assert gamma_of_abelianization(heisenberg_odd(1)) == SuperDim(1, 1)
