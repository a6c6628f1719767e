"""Upper bound on dim(L ⊗ L) for non-abelian nilpotent Lie superalgebras.

For L of dimension (k|l) with derived subalgebra of dimension (r|s)::

    dim(L ⊗ L) <= (k + l - (r + s)) (k + l - 1) + 2

with equality for (r|s) = (1|0) exactly when L = H(1,0) + A(k-3|l).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .superalg import (
    HeisenbergTag,
    LieSuperAlgebra,
    SuperDim,
    abelian,
    derived_subalgebra,
    direct_sum,
    heisenberg_even,
    heisenberg_odd,
    is_nilpotent,
    recognize_heisenberg_plus_abelian,
)
from .tensor import NotNilpotentError, tensor_square

log = logging.getLogger(__name__)

DEFAULT_CEILING = 7


class BoundViolation(AssertionError):
    pass


class AbelianInputError(ValueError):
    pass


def upper_bound(k: int, l: int, r: int, s: int) -> int:
    if min(k, l, r, s) < 0 or k + l < 1 or not 1 <= r + s <= k + l:
        raise ValueError(f"need k+l >= 1 and 1 <= r+s <= k+l, got k={k} l={l} r={r} s={s}")
    return (k + l - (r + s)) * (k + l - 1) + 2


@dataclass(frozen=True)
class BoundReport:
    name: str
    k: int
    l: int
    r: int
    s: int
    bound: int
    actual: int
    classification: HeisenbergTag | None = None

    @property
    def slack(self) -> int:
        return self.bound - self.actual

    @property
    def equality(self) -> bool:
        return self.slack == 0

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": [self.k, self.l],
            "derived": [self.r, self.s],
            "bound": self.bound,
            "actual": self.actual,
            "slack": self.slack,
            "equality": self.equality,
            "classification": str(self.classification) if self.classification else None,
        }


def _is_h10(tag: HeisenbergTag | None) -> bool:
    return tag is not None and tag.center_parity == "even" and (tag.m, tag.n) == (1, 0)


def check_bound(L: LieSuperAlgebra) -> BoundReport:
    """Compute dim(L ⊗ L) and check it against the bound and the equality classification."""
    if L.is_abelian():
        raise AbelianInputError(f"{L.name} is abelian; the bound concerns non-abelian algebras")
    if not is_nilpotent(L)[0]:
        raise NotNilpotentError(f"{L.name} is not nilpotent")
    k, l = L.dim.even, L.dim.odd
    D = derived_subalgebra(L).dim
    r, s = D.even, D.odd
    actual = tensor_square(L).dim.total()
    tag = recognize_heisenberg_plus_abelian(L) if r + s == 1 else None
    rep = BoundReport(L.name, k, l, r, s, upper_bound(k, l, r, s), actual, tag)

    if rep.slack < 0:
        raise BoundViolation(f"{L.name}: dim(L⊗L) = {actual} exceeds bound {rep.bound}")
    sq = (k + l - 1) ** 2
    if (r, s) == (1, 0) and tag is not None:
        if rep.equality != _is_h10(tag):
            raise BoundViolation(f"{L.name}: equality={rep.equality} but classified as {tag}")
        if rep.equality and tag.complement != SuperDim(k - 3, l):
            raise BoundViolation(f"{L.name}: equality case with complement {tag.complement}")
        if not _is_h10(tag) and actual != sq:
            raise BoundViolation(f"{L.name}: {tag} should give (k+l-1)^2 = {sq}, got {actual}")
    if (r, s) == (0, 1) and tag is not None and actual > sq + 2:
        raise BoundViolation(f"{L.name}: odd-center case exceeds (k+l-1)^2 + 2")
    return rep


def sweep_family(max_total_dim: int, field=None):
    """Yield (label, algebra) for H(m,n)+A(a|b) and H_m+A(a|b) with total dim <= max_total_dim."""
    kw = {} if field is None else {"field": field}
    out = []
    for m in range(0, max_total_dim):
        for n in range(0, max_total_dim):
            base = 2 * m + 1 + n
            if m + n < 1 or base > max_total_dim:
                continue
            H = heisenberg_even(m, n, **kw)
            for a in range(max_total_dim - base + 1):
                for b in range(max_total_dim - base - a + 1):
                    out.append((HeisenbergTag("even", m, n, SuperDim(a, b)), H, a, b))
    for m in range(1, max_total_dim):
        base = 2 * m + 1
        if base > max_total_dim:
            continue
        H = heisenberg_odd(m, **kw)
        for a in range(max_total_dim - base + 1):
            for b in range(max_total_dim - base - a + 1):
                out.append((HeisenbergTag("odd", m, None, SuperDim(a, b)), H, a, b))
    out.sort(key=lambda e: (e[1].size + e[2] + e[3], str(e[0])))
    for tag, H, a, b in out:
        L = direct_sum(H, abelian(a, b, H.field)) if a + b else H
        yield tag, L


def family_sweep(max_total_dim: int, ceiling: int = DEFAULT_CEILING) -> list[BoundReport]:
    """check_bound on every family member up to ``max_total_dim``; raises on any failure."""
    if max_total_dim > ceiling:
        raise ValueError(f"sweep dimension {max_total_dim} exceeds ceiling {ceiling}")
    reports = []
    for expected, L in sweep_family(max_total_dim):
        rep = check_bound(L)
        if rep.classification is not None and rep.classification != expected:
            raise BoundViolation(f"{L.name} recognized as {rep.classification}, built as {expected}")
        if rep.r + rep.s == 1 and rep.classification is None:
            raise BoundViolation(f"{L.name} not recognized although built as {expected}")
        log.info("%s: bound %d actual %d", L.name, rep.bound, rep.actual)
        reports.append(rep)
    return reports
