import random

import pytest
from hypothesis import HealthCheck, settings

from supertensor.exactlin import QQ, Matrix, Subspace, kernel
from supertensor.superalg import LieSuperAlgebra, bracket

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def _invertible(rng, n, field):
    while True:
        rows = [[field(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if n == 0 or Subspace.span(field, rows, n).dim == n:
            return rows


def _solve(rows, target, field):
    """Coefficients a with sum_i a_i rows[i] = target (rows independent)."""
    n = len(rows)
    m = Matrix.from_rows(field, [list(col) + [-t] for col, t in zip(zip(*rows), target)], n + 1)
    (sol,) = kernel(m)
    return [x / sol[-1] for x in sol[:-1]]


def change_basis(L: LieSuperAlgebra, seed: int) -> LieSuperAlgebra:
    """An isomorphic copy of L in a random parity-preserving basis."""
    rng = random.Random(seed)
    f, e, o = L.field, L.dim.even, L.dim.odd
    Pe, Po = _invertible(rng, e, f), _invertible(rng, o, f)
    zero = f.zero
    new = [list(r) + [zero] * o for r in Pe] + [[zero] * e + list(r) for r in Po]
    table = {}
    for a in range(L.size):
        for b in range(L.size):
            w = bracket(L, new[a], new[b])
            if any(x != 0 for x in w):
                coeffs = _solve(new, w, f)
                table[(a, b)] = {k: c for k, c in enumerate(coeffs) if c != 0}
    return LieSuperAlgebra(f"{L.name}'", L.dim, table, f)


@pytest.fixture
def qq():
    return QQ
