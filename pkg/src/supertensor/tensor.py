"""Non-abelian tensor square, exterior square and square ideal of a Lie superalgebra.

``L (x) L`` is presented by symbols ``x_i (x) x_j`` and relations.  The
bracket relation rewrites any bracket of symbols as a combination of
symbols, so the presentation collapses to a quotient of the
``t^2``-dimensional symbol space by a relation subspace R.  R is the least
subspace that

* contains the crossed-pairing relations of every basis triple, and
* makes the induced bracket well defined (ideal closure), graded
  antisymmetric and graded Jacobi (defect closure).

For the self-action the bracket table factors through the derived map
``d(x_i (x) x_j) = [x_i, x_j]``::

    [x_i (x) x_j, x_k (x) x_l] = -(-1)^{|i||j|} [x_j, x_i] (x) [x_k, x_l]
                               = d(x_i (x) x_j) (x) d(x_k (x) x_l)

which :func:`bracket_table` evaluates literally and the closure uses in
the factored form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .exactlin import EchelonBasis, Subspace
from .gamma import gamma_of_abelianization
from .superalg import (
    GradedSubspace,
    LieSuperAlgebra,
    SuperDim,
    abelianization,
    bracket_sparse,
    center,
    derived_subalgebra,
    ensure_valid,
    is_nilpotent,
    quotient,
    sign,
)

log = logging.getLogger(__name__)


class NotNilpotentError(ValueError):
    pass


class ClosureInconsistency(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


# --- symbol space -----------------------------------------------------------------

@dataclass(frozen=True)
class SymbolSpace:
    algebra: LieSuperAlgebra
    symbols: tuple  # column -> (i, j)
    index: Mapping  # (i, j) -> column
    parities: tuple  # column -> parity of x_i (x) x_j

    @classmethod
    def of(cls, L: LieSuperAlgebra) -> "SymbolSpace":
        p, t = L.parity, L.size
        pairs = [(i, j) for i in range(t) for j in range(t)]
        ordered = [ij for ij in pairs if (p[ij[0]] + p[ij[1]]) % 2 == 0]
        ordered += [ij for ij in pairs if (p[ij[0]] + p[ij[1]]) % 2 == 1]
        index = {ij: c for c, ij in enumerate(ordered)}
        pars = tuple((p[i] + p[j]) % 2 for i, j in ordered)
        return cls(L, tuple(ordered), index, pars)

    @property
    def size(self) -> int:
        return len(self.symbols)

    @property
    def dim(self) -> SuperDim:
        even = self.parities.count(0)
        return SuperDim(even, self.size - even)

    def e(self, i: int, j: int) -> int:
        return self.index[(i, j)]

    def outer(self, a: Mapping, b: Mapping) -> dict:
        """The symbol vector ``a (x) b`` for sparse vectors a, b of L."""
        return {self.index[(i, j)]: x * y for i, x in a.items() for j, y in b.items()}

    def delta(self, vec: Mapping) -> dict:
        """Derived map to L: ``x_i (x) x_j -> [x_i, x_j]``."""
        L = self.algebra
        out: dict = {}
        for col, a in vec.items():
            for k, c in L.basis_bracket(*self.symbols[col]).items():
                y = out.get(k, 0) + a * c
                if y == 0:
                    out.pop(k, None)
                else:
                    out[k] = y
        return out

    def bracket(self, u: Mapping, v: Mapping) -> dict:
        return self.outer(self.delta(u), self.delta(v))

    def is_homogeneous(self, vec: Mapping) -> bool:
        return len({self.parities[c] for c in vec}) <= 1


def _acc(out: dict, col: int, x) -> None:
    y = out.get(col, 0) + x
    if y == 0:
        out.pop(col, None)
    else:
        out[col] = y


def pair_relations(L: LieSuperAlgebra, space: SymbolSpace | None = None) -> list[tuple[str, tuple, dict]]:
    """Crossed-pairing relations for every ordered basis triple (i, j, k).

    ``left``:  [x_i,x_j] (x) x_k - x_i (x) [x_j,x_k] + (-1)^{|i||j|} x_j (x) [x_i,x_k]
    ``right``: x_i (x) [x_j,x_k] - (-1)^{|k|(|i|+|j|)} [x_k,x_i] (x) x_j
              + (-1)^{|i||j|} [x_j,x_i] (x) x_k
    Each is returned as ``(rule, (i, j, k), sparse vector)`` with rule "left" or "right"; vectors may be empty.
    """
    space = space or SymbolSpace.of(L)
    p, t, e = L.parity, L.size, space.index
    out = []
    for i in range(t):
        for j in range(t):
            sij = sign(p[i], p[j])
            for k in range(t):
                a: dict = {}
                for r, c in L.basis_bracket(i, j).items():
                    _acc(a, e[(r, k)], c)
                for r, c in L.basis_bracket(j, k).items():
                    _acc(a, e[(i, r)], -c)
                for r, c in L.basis_bracket(i, k).items():
                    _acc(a, e[(j, r)], sij * c)
                out.append(("left", (i, j, k), a))

                b: dict = {}
                for r, c in L.basis_bracket(j, k).items():
                    _acc(b, e[(i, r)], c)
                sk = sign(p[k], (p[i] + p[j]) % 2)
                for r, c in L.basis_bracket(k, i).items():
                    _acc(b, e[(r, j)], -sk * c)
                for r, c in L.basis_bracket(j, i).items():
                    _acc(b, e[(r, k)], sij * c)
                out.append(("right", (i, j, k), b))
    return out


def bracket_table(L: LieSuperAlgebra, space: SymbolSpace | None = None) -> dict:
    """``{(p, q): vector}`` for symbol columns p, q with nonzero bracket.

    Literal expansion of ``-(-1)^{|m||n|} [n, m] (x) [m', n']``.
    """
    space = space or SymbolSpace.of(L)
    par = L.parity
    table = {}
    for p, (i, j) in enumerate(space.symbols):
        left = L.basis_bracket(j, i)
        if not left:
            continue
        s = -sign(par[i], par[j])
        for q, (k, l) in enumerate(space.symbols):
            right = L.basis_bracket(k, l)
            if not right:
                continue
            vec: dict = {}
            for a, x in left.items():
                for b, y in right.items():
                    _acc(vec, space.e(a, b), s * x * y)
            if vec:
                table[(p, q)] = vec
    return table


# --- closure ----------------------------------------------------------------------

@dataclass(frozen=True)
class RelationSystem:
    space: SymbolSpace
    relations: Subspace
    log: tuple  # (rule, rank gained) per batch, in order
    echelon: EchelonBasis = field(repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.relations.dim

    def reduce(self, vec: Mapping) -> dict:
        return self.echelon.reduce(dict(vec))

    def contains(self, vec: Mapping) -> bool:
        return self.echelon.contains(dict(vec))


def _images(space: SymbolSpace, exhaustive: bool = False) -> list[tuple[int, dict]]:
    """Generators for the defect rules, as (parity, vector in L) pairs.

    Defects are multilinear in the derived images of their arguments, so
    a homogeneous basis of the image span (which is L^2) generates the
    same relations as every symbol.  ``exhaustive`` returns the image of
    every symbol instead, for independent verification.
    """
    if exhaustive:
        out = []
        for col in range(space.size):
            img = space.delta({col: 1})
            if img:
                out.append((space.parities[col], img))
        return out
    L = space.algebra
    D = derived_subalgebra(L)
    return [(0 if n < D.dim.even else 1, {k: x for k, x in enumerate(v) if x != 0})
            for n, v in enumerate(D.vectors())]


def antisymmetry_defects(space: SymbolSpace, exhaustive: bool = False) -> Iterable[dict]:
    """B(u,v) + (-1)^{|u||v|} B(v,u) over all symbol pairs."""
    ims = _images(space, exhaustive)
    for pu, a in ims:
        for pv, b in ims:
            vec = space.outer(a, b)
            for col, x in space.outer(b, a).items():
                _acc(vec, col, sign(pu, pv) * x)
            if vec:
                yield vec


def jacobi_defects(space: SymbolSpace, exhaustive: bool = False) -> Iterable[dict]:
    """Graded Jacobi sums of B over all symbol triples."""
    L = space.algebra
    ims = _images(space, exhaustive)
    for pu, a in ims:
        for pv, b in ims:
            ab = bracket_sparse(L, a, b)
            for pw, c in ims:
                vec: dict = {}
                bc = bracket_sparse(L, b, c)
                ca = bracket_sparse(L, c, a)
                for s, x, y in ((sign(pu, pw), a, bc), (sign(pv, pu), b, ca), (sign(pw, pv), c, ab)):
                    if y:
                        for col, z in space.outer(x, y).items():
                            _acc(vec, col, s * z)
                if vec:
                    yield vec


def ideal_defects(space: SymbolSpace, R: EchelonBasis, exhaustive: bool = False) -> list[dict]:
    """B(r, e) and B(e, r) for every relation row r and symbol e."""
    ims = _images(space, exhaustive)
    out = []
    for _, row in list(R.rows()):
        dr = space.delta(row)
        if not dr:
            continue
        for _, img in ims:
            out.append(space.outer(dr, img))
            out.append(space.outer(img, dr))
    return out


def _insert_all(R: EchelonBasis, vecs: Iterable[dict]) -> int:
    return sum(R.insert(v) for v in vecs)


def _require_nilpotent(L: LieSuperAlgebra) -> None:
    ok, _ = is_nilpotent(L)
    if not ok:
        raise NotNilpotentError(f"{L.name} is not nilpotent")


def closure(L: LieSuperAlgebra, seeds: Iterable[dict] = (), space: SymbolSpace | None = None) -> RelationSystem:
    """Least relation subspace containing the pair relations (and ``seeds``) closed under the defect rules."""
    _require_nilpotent(L)
    space = space or SymbolSpace.of(L)
    R = EchelonBasis(L.field, space.size)
    history = [("pair-relations", _insert_all(R, (v for _, _, v in pair_relations(L, space))))]
    seeds = list(seeds)
    if seeds:
        history.append(("seeds", _insert_all(R, seeds)))
    sweep = 0
    while True:
        sweep += 1
        gained = 0
        for rule, vecs in (
            ("antisymmetry", antisymmetry_defects(space)),
            ("jacobi", jacobi_defects(space)),
            ("ideal", ideal_defects(space, R)),
        ):
            n = _insert_all(R, vecs)
            history.append((rule, n))
            gained += n
        log.debug("%s: sweep %d gained %d (rank %d)", L.name, sweep, gained, len(R))
        if not gained:
            break
    return RelationSystem(space, R.to_subspace(), tuple(history), R)


def extra_sweep_gain(rs: RelationSystem) -> int:
    """Rank gained by one more sweep over every symbol (no generator reduction); zero at a fixpoint."""
    R = EchelonBasis(rs.space.algebra.field, rs.space.size)
    for _, row in rs.echelon.rows():
        R.insert(row)
    before = len(R)
    space = rs.space
    for vecs in (antisymmetry_defects(space, True), jacobi_defects(space, True), ideal_defects(space, R, True)):
        _insert_all(R, vecs)
    return len(R) - before


# --- results ----------------------------------------------------------------------

@dataclass(frozen=True)
class TensorSquareResult:
    kind: str  # "tensor" | "exterior"
    source: LieSuperAlgebra
    algebra: LieSuperAlgebra  # the quotient Q
    relations: RelationSystem
    columns: tuple  # Q basis index -> symbol column

    @property
    def dim(self) -> SuperDim:
        return self.algebra.dim

    @property
    def space(self) -> SymbolSpace:
        return self.relations.space

    def to_quotient(self, vec: Mapping) -> tuple:
        rem = self.relations.reduce(vec)
        zero = self.algebra.field.zero
        pos = {c: n for n, c in enumerate(self.columns)}
        out = [zero] * len(self.columns)
        for c, x in rem.items():
            out[pos[c]] = x
        return tuple(out)

    def generator(self, i: int, j: int) -> tuple:
        """Image of x_i (x) x_j in Q."""
        return self.to_quotient({self.space.e(i, j): 1})

    def derived_map(self) -> list[dict]:
        """For each Q basis vector, its image ``[x_i, x_j]`` in L."""
        return [self.space.delta({c: 1}) for c in self.columns]

    def derived_image(self) -> GradedSubspace:
        L, zero = self.source, self.source.field.zero
        vecs = [tuple(img.get(k, zero) for k in range(L.size)) for img in self.derived_map()]
        return GradedSubspace.from_vectors(L, vecs, homogeneous=False)

    def is_abelian(self) -> bool:
        return self.algebra.is_abelian()


def _quotient_result(kind: str, L: LieSuperAlgebra, rs: RelationSystem) -> TensorSquareResult:
    space = rs.space
    piv = set(rs.relations.pivots)
    columns = tuple(c for c in range(space.size) if c not in piv)
    pos = {c: n for n, c in enumerate(columns)}
    active = [(n, space.delta({c: 1})) for n, c in enumerate(columns)]
    active = [(n, d) for n, d in active if d]
    table = {}
    for a, da in active:
        for b, db in active:
            rem = rs.reduce(space.outer(da, db))
            if rem:
                table[(a, b)] = {pos[c]: x for c, x in rem.items()}
    qdim = SuperDim(sum(1 for c in columns if space.parities[c] == 0),
                    sum(1 for c in columns if space.parities[c] == 1))
    sym = "⊗" if kind == "tensor" else "∧"
    Q = LieSuperAlgebra(f"{L.name}{sym}{L.name}", qdim, table, L.field)
    return TensorSquareResult(kind, L, Q, rs, columns)


def _key(L: LieSuperAlgebra):
    return (L.field, L.dim, tuple(sorted((ij, tuple(sorted(t.items()))) for ij, t in L.table.items())))


_cache: dict = {}


def _cached(kind: str, L: LieSuperAlgebra, build):
    key = (kind, _key(L))
    hit = _cache.get(key)
    if hit is None or hit.source.name != L.name:
        hit = build()
        if len(_cache) > 512:
            _cache.clear()
        _cache[key] = hit
    return hit


def tensor_square(L: LieSuperAlgebra) -> TensorSquareResult:
    return _cached("tensor", L, lambda: _quotient_result("tensor", L, closure(L)))


def exterior_seeds(space: SymbolSpace) -> list[dict]:
    """x_i (x) x_j + (-1)^{|i||j|} x_j (x) x_i for all i, j, and x_i (x) x_i for even i."""
    L = space.algebra
    p = L.parity
    out = []
    for i in range(L.size):
        for j in range(L.size):
            vec: dict = {}
            _acc(vec, space.e(i, j), 1)
            _acc(vec, space.e(j, i), sign(p[i], p[j]))
            if vec:
                out.append(vec)
        if p[i] == 0:
            out.append({space.e(i, i): 1})
    return out


def exterior_square(L: LieSuperAlgebra) -> TensorSquareResult:
    def build():
        space = SymbolSpace.of(L)
        return _quotient_result("exterior", L, closure(L, exterior_seeds(space), space))

    return _cached("exterior", L, build)


@dataclass(frozen=True)
class SquareIdeal:
    tensor: TensorSquareResult
    subspace: GradedSubspace  # inside tensor.algebra

    @property
    def dim(self) -> SuperDim:
        return self.subspace.dim


def square_ideal(L_or_T, check_exterior: bool = True) -> SquareIdeal:
    """The span of graded-symmetric and even-diagonal tensors inside L (x) L.

    Verifies it is central and, with ``check_exterior``, that its
    codimension matches the directly computed exterior square.
    """
    T = L_or_T if isinstance(L_or_T, TensorSquareResult) else tensor_square(L_or_T)
    if T.kind != "tensor":
        raise ValueError("square_ideal needs the tensor square, not the exterior square")
    vecs = [T.to_quotient(s) for s in exterior_seeds(T.space)]
    box = GradedSubspace.from_vectors(T.algebra, vecs)
    Q = T.algebra
    for v in box.vectors():
        sv = {i: x for i, x in enumerate(v) if x != 0}
        for b in range(Q.size):
            if bracket_sparse(Q, sv, {b: 1}) or bracket_sparse(Q, {b: 1}, sv):
                raise ClosureInconsistency(f"square ideal of {T.source.name} is not central")
    if check_exterior:
        ext = exterior_square(T.source).dim
        if T.dim - box.dim != ext:
            raise ClosureInconsistency(
                f"{T.source.name}: dim tensor {T.dim} - dim square {box.dim} != dim exterior {ext}")
    return SquareIdeal(T, box)


def exterior_via_quotient(L: LieSuperAlgebra) -> LieSuperAlgebra:
    """(L (x) L) / (L square L), the second route to the exterior square."""
    box = square_ideal(L, check_exterior=False)
    return quotient(box.tensor.algebra, box.subspace, name=f"{L.name}∧{L.name}")


def module_tensor(a: SuperDim, b: SuperDim) -> SuperDim:
    return a * b


def multiplier_dim(L: LieSuperAlgebra) -> SuperDim:
    """dim (L ∧ L) - dim L^2."""
    ext, der = exterior_square(L).dim, derived_subalgebra(L).dim
    if ext.even < der.even or ext.odd < der.odd:
        raise ClosureInconsistency(f"{L.name}: exterior square {ext} smaller than derived {der}")
    return ext - der


@dataclass(frozen=True)
class CentralQuotientTerms:
    tensor_total: int
    quotient_tensor_total: int
    module_term_total: int

    @property
    def holds(self) -> bool:
        return self.tensor_total <= self.quotient_tensor_total + self.module_term_total


def central_quotient_terms(L: LieSuperAlgebra, N: GradedSubspace) -> CentralQuotientTerms:
    if N.dim not in (SuperDim(1, 0), SuperDim(0, 1)):
        raise ValueError(f"N must have dimension (1|0) or (0|1), got {N.dim}")
    if not N.issubspace(derived_subalgebra(L).intersection(center(L))):
        raise ValueError("N must lie in the intersection of L^2 and Z(L)")
    return CentralQuotientTerms(
        tensor_square(L).dim.total(),
        tensor_square(quotient(L, N, name=f"{L.name}/N")).dim.total(),
        module_tensor(abelianization(L).dim, N.dim).total(),
    )


def central_quotient_inequality(L: LieSuperAlgebra, N: GradedSubspace) -> bool:
    """dim(L⊗L) <= dim(L/N ⊗ L/N) + dim(L^ab ⊗_mod N), for central N in L^2."""
    return central_quotient_terms(L, N).holds


def check_result(T: TensorSquareResult) -> None:
    """Internal consistency of a computed square; raises ClosureInconsistency."""
    space = T.space
    for _, row in T.relations.echelon.rows():
        if space.delta(row):
            raise ClosureInconsistency("derived map does not vanish on a relation")
        if not space.is_homogeneous(row):
            raise ClosureInconsistency("relation vector is not homogeneous")
    ensure_valid(T.algebra)
    if T.derived_image() != derived_subalgebra(T.source):
        raise ClosureInconsistency("derived map is not onto L^2")


def predicted_square_dim(L: LieSuperAlgebra) -> SuperDim:
    return gamma_of_abelianization(L)
