"""Universal quadratic functor Gamma on finite-dimensional supermodules.

Over a field every supermodule is free, so Gamma(M) is described by its
basis: gamma(x_i) for each even basis vector and the pair symbols
b(x_i, x_j) for i < j.  Diagonal pairs are absent: the even ones are
absorbed by gamma, the odd ones vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .superalg import LieSuperAlgebra, SuperDim, abelianization


@dataclass(frozen=True)
class GammaBasis:
    source: SuperDim
    generators: tuple  # ("gamma", i) or ("pair", i, j)
    parities: tuple

    @property
    def dim(self) -> SuperDim:
        even = sum(1 for p in self.parities if p == 0)
        return SuperDim(even, len(self.parities) - even)


def gamma_basis(d: SuperDim) -> GammaBasis:
    """Enumerate the basis for an ordered homogeneous basis with evens first."""
    par = (0,) * d.even + (1,) * d.odd
    gens, pars = [], []
    for i in range(d.even):
        gens.append(("gamma", i))
        pars.append(0)
    for i in range(d.total()):
        for j in range(i + 1, d.total()):
            gens.append(("pair", i, j))
            pars.append((par[i] + par[j]) % 2)
    return GammaBasis(d, tuple(gens), tuple(pars))


def gamma_dim(d: SuperDim) -> SuperDim:
    m, n = d.even, d.odd
    return SuperDim(m + comb(m, 2) + comb(n, 2), m * n)


def gamma_direct_sum_check(a: SuperDim, b: SuperDim) -> bool:
    """Gamma(A + B) = Gamma(A) + Gamma(B) + A (x) B, on superdimensions."""
    return gamma_dim(a + b) == gamma_dim(a) + gamma_dim(b) + a * b


def gamma_of_abelianization(L: LieSuperAlgebra) -> SuperDim:
    return gamma_dim(abelianization(L).dim)
