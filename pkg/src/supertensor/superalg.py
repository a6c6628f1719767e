"""Finite-dimensional Lie superalgebras given by structure constants.

Basis convention: all even basis vectors come first, then all odd ones.
``table[(i, j)]`` is a sparse ``{k: c}`` dict meaning
``[x_i, x_j] = sum_k c * x_k``; every ordered pair with a nonzero bracket
is stored, so skew-symmetry is checked by :func:`validate`, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Mapping, Sequence

from .exactlin import QQ, Field, Matrix, Subspace, kernel


class InvalidAlgebraError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        lines = "\n".join(f"  {v}" for v in self.violations[:20])
        super().__init__(f"{len(self.violations)} axiom violation(s):\n{lines}")


class NotAnIdealError(ValueError):
    pass


@dataclass(frozen=True)
class SuperDim:
    even: int = 0
    odd: int = 0

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"negative superdimension ({self.even}|{self.odd})")

    def total(self) -> int:
        return self.even + self.odd

    def __add__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: "SuperDim") -> "SuperDim":
        return SuperDim(self.even - other.even, self.odd - other.odd)

    def __mul__(self, other):
        # module tensor product: (a|b)(c|d) = (ac+bd | ad+bc)
        if isinstance(other, SuperDim):
            return SuperDim(
                self.even * other.even + self.odd * other.odd,
                self.even * other.odd + self.odd * other.even,
            )
        if isinstance(other, int):
            return SuperDim(self.even * other, self.odd * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def as_pair(self) -> list[int]:
        return [self.even, self.odd]

    def __str__(self):
        return f"({self.even}|{self.odd})"


@dataclass(frozen=True, eq=True)
class LieSuperAlgebra:
    name: str
    dim: SuperDim
    table: Mapping = dc_field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        t = self.dim.total()
        clean = {}
        for (i, j), terms in self.table.items():
            if not (0 <= i < t and 0 <= j < t):
                raise IndexError(f"bracket index ({i},{j}) out of range for dimension {t}")
            row = {}
            for k, c in terms.items():
                if not 0 <= k < t:
                    raise IndexError(f"bracket value index {k} out of range for dimension {t}")
                c = self.field(c)
                if c != 0:
                    row[k] = c
            if row:
                clean[(i, j)] = row
        object.__setattr__(self, "table", clean)

    __hash__ = None

    @property
    def size(self) -> int:
        return self.dim.total()

    @property
    def parity(self) -> tuple[int, ...]:
        return (0,) * self.dim.even + (1,) * self.dim.odd

    @property
    def even_indices(self) -> range:
        return range(self.dim.even)

    @property
    def odd_indices(self) -> range:
        return range(self.dim.even, self.size)

    def c(self, i: int, j: int, k: int):
        return self.table.get((i, j), {}).get(k, self.field.zero)

    def basis_bracket(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def structure_constants(self) -> list:
        t = self.size
        return [[[self.c(i, j, k) for k in range(t)] for j in range(t)] for i in range(t)]

    def is_abelian(self) -> bool:
        return not self.table

    def basis_vector(self, i: int) -> tuple:
        zero, one = self.field.zero, self.field.one
        return tuple(one if k == i else zero for k in range(self.size))

    def __repr__(self):
        return f"LieSuperAlgebra({self.name!r}, dim={self.dim}, field={self.field})"


def sign(a: int, b: int) -> int:
    """(-1)^(a*b) for parities a, b."""
    return -1 if (a & b) else 1


def from_brackets(name: str, dim: SuperDim, brackets: Mapping, field: Field = QQ) -> LieSuperAlgebra:
    """Build an algebra, completing ``[x_j, x_i]`` from ``[x_i, x_j]`` by graded skew-symmetry.

    Pairs given in both orders are taken as-is, so contradictions surface
    in :func:`validate`.
    """
    par = (0,) * dim.even + (1,) * dim.odd
    table = {key: dict(val) for key, val in brackets.items()}
    for (i, j), terms in brackets.items():
        if i == j or (j, i) in brackets:
            continue
        s = sign(par[i], par[j])
        table[(j, i)] = {k: -s * field(c) for k, c in terms.items()}
    return LieSuperAlgebra(name, dim, table, field)


# --- bracket on coefficient vectors -------------------------------------------------

def bracket_sparse(L: LieSuperAlgebra, u: Mapping, v: Mapping) -> dict:
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            terms = L.table.get((i, j))
            if not terms:
                continue
            ab = a * b
            for k, c in terms.items():
                y = out.get(k, 0) + ab * c
                if y == 0:
                    out.pop(k, None)
                else:
                    out[k] = y
    return out


def bracket(L: LieSuperAlgebra, u: Sequence, v: Sequence) -> tuple:
    """Bilinear extension of the structure constants to coefficient vectors."""
    t = L.size
    if len(u) != t or len(v) != t:
        raise ValueError(f"vectors of length {len(u)}, {len(v)} for algebra of dimension {t}")
    su = {i: L.field(x) for i, x in enumerate(u) if x != 0}
    sv = {i: L.field(x) for i, x in enumerate(v) if x != 0}
    w = bracket_sparse(L, su, sv)
    zero = L.field.zero
    return tuple(w.get(k, zero) for k in range(t))


# --- validation -------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    axiom: str  # "grading" | "skew-symmetry" | "jacobi"
    indices: tuple
    detail: str = ""

    def __str__(self):
        return f"{self.axiom} at {self.indices}: {self.detail}"


def _jacobi(L: LieSuperAlgebra, x: int, y: int, z: int) -> dict:
    p = L.parity
    ex, ey, ez = {x: 1}, {y: 1}, {z: 1}
    out: dict = {}
    terms = (
        (sign(p[x], p[z]), ex, bracket_sparse(L, ey, ez)),
        (sign(p[y], p[x]), ey, bracket_sparse(L, ez, ex)),
        (sign(p[z], p[y]), ez, bracket_sparse(L, ex, ey)),
    )
    for s, a, inner in terms:
        for k, c in bracket_sparse(L, a, inner).items():
            out[k] = out.get(k, 0) + s * c
    return {k: c for k, c in out.items() if c != 0}


def validate(L: LieSuperAlgebra) -> list[Violation]:
    """All axiom violations: grading, graded skew-symmetry, graded Jacobi."""
    p = L.parity
    out: list[Violation] = []
    for (i, j), terms in sorted(L.table.items()):
        for k in sorted(terms):
            if p[k] != (p[i] + p[j]) % 2:
                out.append(Violation("grading", (i, j, k), f"parities {p[i]}+{p[j]} -> {p[k]}"))
    pairs = {tuple(sorted(key)) for key in L.table}
    for i, j in sorted(pairs):
        s = sign(p[i], p[j])
        ks = set(L.basis_bracket(i, j)) | set(L.basis_bracket(j, i))
        for k in sorted(ks):
            if L.c(j, i, k) != -s * L.c(i, j, k):
                out.append(Violation("skew-symmetry", (i, j, k),
                                     f"[x{j},x{i}] and [x{i},x{j}] disagree on x{k}"))
    # a Jacobi sum can only be nonzero if one of its three inner brackets is
    t = L.size
    candidates = set()
    for a, b in L.table:
        for c in range(t):
            candidates.update({(c, a, b), (b, c, a), (a, b, c)})
    seen = set()
    for x, y, z in sorted(candidates):
        key = tuple(sorted((x, y, z)))
        if key in seen:
            continue
        if _jacobi(L, x, y, z):
            seen.add(key)
            out.append(Violation("jacobi", key, f"graded Jacobi sum nonzero for ({x},{y},{z})"))
    return out


def ensure_valid(L: LieSuperAlgebra) -> LieSuperAlgebra:
    bad = validate(L)
    if bad:
        raise InvalidAlgebraError(bad)
    return L


# --- graded subspaces -------------------------------------------------------------

@dataclass(frozen=True)
class GradedSubspace:
    """A graded subspace of ``parent``: even part in even coordinates, odd part in odd ones."""

    parent: LieSuperAlgebra
    even: Subspace
    odd: Subspace

    @property
    def dim(self) -> SuperDim:
        return SuperDim(self.even.dim, self.odd.dim)

    @classmethod
    def from_vectors(cls, L: LieSuperAlgebra, vectors: Iterable[Sequence], homogeneous: bool = True):
        """Span of ``vectors``; with ``homogeneous`` each vector must lie in one parity."""
        e, evens, odds = L.dim.even, [], []
        for v in vectors:
            v = L.field.vector(v)
            if len(v) != L.size:
                raise ValueError(f"vector of length {len(v)} for algebra of dimension {L.size}")
            ev, od = v[:e], v[e:]
            has_e, has_o = any(x != 0 for x in ev), any(x != 0 for x in od)
            if homogeneous and has_e and has_o:
                raise ValueError(f"vector {v} is not homogeneous")
            if has_e:
                evens.append(ev)
            if has_o:
                odds.append(od)
        return cls(L, Subspace.span(L.field, evens, e), Subspace.span(L.field, odds, L.dim.odd))

    @classmethod
    def zero(cls, L: LieSuperAlgebra):
        return cls(L, Subspace.zero(L.field, L.dim.even), Subspace.zero(L.field, L.dim.odd))

    @classmethod
    def whole(cls, L: LieSuperAlgebra):
        return cls(L, Subspace.full(L.field, L.dim.even), Subspace.full(L.field, L.dim.odd))

    def vectors(self) -> list[tuple]:
        """Homogeneous basis as full-length coordinate vectors, even part first."""
        zero = self.parent.field.zero
        ne, no = self.parent.dim.even, self.parent.dim.odd
        return ([r + (zero,) * no for r in self.even.rows]
                + [(zero,) * ne + r for r in self.odd.rows])

    def reduce(self, v: Sequence) -> tuple:
        e = self.parent.dim.even
        return self.even.reduce(v[:e]) + self.odd.reduce(v[e:])

    def __contains__(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(self.parent.field.vector(v)))

    def issubspace(self, other: "GradedSubspace") -> bool:
        return self.even.issubspace(other.even) and self.odd.issubspace(other.odd)

    def intersection(self, other: "GradedSubspace") -> "GradedSubspace":
        return GradedSubspace(self.parent, self.even.intersection(other.even), self.odd.intersection(other.odd))

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        return GradedSubspace(self.parent, self.even + other.even, self.odd + other.odd)

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return self.even == other.even and self.odd == other.odd

    __hash__ = None


def _span_of_brackets(L: LieSuperAlgebra, left: Iterable[Sequence]) -> GradedSubspace:
    vecs = []
    for u in left:
        su = {i: x for i, x in enumerate(u) if x != 0}
        for j in range(L.size):
            w = bracket_sparse(L, su, {j: 1})
            if w:
                vecs.append(tuple(w.get(k, L.field.zero) for k in range(L.size)))
    return GradedSubspace.from_vectors(L, vecs, homogeneous=False)


def derived_subalgebra(L: LieSuperAlgebra) -> GradedSubspace:
    zero = L.field.zero
    vecs = [tuple(terms.get(k, zero) for k in range(L.size)) for terms in L.table.values()]
    return GradedSubspace.from_vectors(L, vecs, homogeneous=False)


def center(L: LieSuperAlgebra) -> GradedSubspace:
    """Solve ``[z, x_j] = 0`` for all j, separately on each parity."""
    t = L.size
    parts = []
    for idx in (L.even_indices, L.odd_indices):
        idx = list(idx)
        if not idx:
            parts.append(Subspace.zero(L.field, 0))
            continue
        eqs = [[L.c(i, j, k) for i in idx] for j in range(t) for k in range(t)]
        eqs = [r for r in eqs if any(x != 0 for x in r)]
        if not eqs:
            parts.append(Subspace.full(L.field, len(idx)))
            continue
        sol = kernel(Matrix.from_rows(L.field, eqs, len(idx)))
        parts.append(Subspace.span(L.field, sol, len(idx)))
    return GradedSubspace(L, parts[0], parts[1])


def lower_central_series(L: LieSuperAlgebra, max_len: int | None = None) -> list[GradedSubspace]:
    """``[L, L^2, L^3, ...]`` up to the first zero term or the first repeat."""
    terms = [GradedSubspace.whole(L)]
    limit = max_len or L.size + 2
    while terms[-1].dim.total() and len(terms) < limit:
        nxt = _span_of_brackets(L, terms[-1].vectors())
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def is_nilpotent(L: LieSuperAlgebra) -> tuple[bool, int | None]:
    """(nilpotent?, class).  Abelian algebras report class 1; the zero algebra class 0."""
    if L.size == 0:
        return True, 0
    series = lower_central_series(L)
    # the series only stops early on a zero term or a nonzero repeat
    if series[-1].dim.total():
        return False, None
    nonzero = [s for s in series if s.dim.total()]
    return True, len(nonzero)


def is_ideal(L: LieSuperAlgebra, I: GradedSubspace) -> bool:
    return _span_of_brackets(L, I.vectors()).issubspace(I)


def quotient(L: LieSuperAlgebra, I: GradedSubspace, name: str | None = None) -> LieSuperAlgebra:
    """``L / I`` on the coordinate complement of ``I``'s pivot columns."""
    if I.even.ambient != L.dim.even or I.odd.ambient != L.dim.odd:
        raise ValueError("graded subspace does not live in this algebra")
    if not is_ideal(L, I):
        raise NotAnIdealError(f"subspace of dim {I.dim} is not an ideal of {L.name}")
    e = L.dim.even
    keep = I.even.complement_columns() + [e + c for c in I.odd.complement_columns()]
    pos = {old: new for new, old in enumerate(keep)}
    zero = L.field.zero
    table = {}
    for a, ia in enumerate(keep):
        for b, ib in enumerate(keep):
            terms = L.basis_bracket(ia, ib)
            if not terms:
                continue
            w = I.reduce(tuple(terms.get(k, zero) for k in range(L.size)))
            row = {pos[k]: w[k] for k in keep if w[k] != 0}
            if row:
                table[(a, b)] = row
    Q = LieSuperAlgebra(name or f"{L.name}/I", SuperDim(I.even.quotient_dim(), I.odd.quotient_dim()),
                        table, L.field)
    return ensure_valid(Q)


def abelianization(L: LieSuperAlgebra) -> LieSuperAlgebra:
    return quotient(L, derived_subalgebra(L), name=f"{L.name}^ab")


def direct_sum(L: LieSuperAlgebra, M: LieSuperAlgebra, name: str | None = None) -> LieSuperAlgebra:
    if L.field != M.field:
        raise ValueError(f"summands over {L.field} and {M.field}")
    le, me = L.dim.even, M.dim.even
    even_total = le + me
    lmap = [i if i < le else even_total + (i - le) for i in range(L.size)]
    mmap = [le + i if i < me else even_total + L.dim.odd + (i - me) for i in range(M.size)]
    table = {}
    for alg, mp in ((L, lmap), (M, mmap)):
        for (i, j), terms in alg.table.items():
            table[(mp[i], mp[j])] = {mp[k]: c for k, c in terms.items()}
    return LieSuperAlgebra(name or f"{L.name}+{M.name}", L.dim + M.dim, table, L.field)


# --- built-in families ------------------------------------------------------------

def abelian(m: int, n: int, field: Field = QQ) -> LieSuperAlgebra:
    return LieSuperAlgebra(f"A({m}|{n})", SuperDim(m, n), {}, field)


def heisenberg_even(m: int, n: int, field: Field = QQ) -> LieSuperAlgebra:
    """H(m, n): even x_1..x_2m, z; odd y_1..y_n; [x_i, x_{m+i}] = z, [y_j, y_j] = z."""
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError(f"H(m,n) needs m, n >= 0 and m + n >= 1, got ({m},{n})")
    z = 2 * m
    br = {(i, m + i): {z: 1} for i in range(m)}
    for j in range(n):
        y = 2 * m + 1 + j
        br[(y, y)] = {z: 1}
    return from_brackets(f"H({m},{n})", SuperDim(2 * m + 1, n), br, field)


def heisenberg_odd(m: int, field: Field = QQ) -> LieSuperAlgebra:
    """H_m: even x_1..x_m; odd y_1..y_m, z; [x_j, y_j] = z."""
    if m < 1:
        raise ValueError(f"H_m needs m >= 1, got {m}")
    z = 2 * m
    br = {(j, m + j): {z: 1} for j in range(m)}
    return from_brackets(f"H_{m}", SuperDim(m, m + 1), br, field)


# --- recognizer -------------------------------------------------------------------

@dataclass(frozen=True)
class HeisenbergTag:
    center_parity: str  # "even" | "odd"
    m: int
    n: int | None
    complement: SuperDim

    def __post_init__(self):
        if self.center_parity == "even":
            if self.n is None or self.m + self.n < 1:
                raise ValueError("even-center tag needs m + n >= 1")
        elif self.center_parity == "odd":
            if self.m < 1 or self.n is not None:
                raise ValueError("odd-center tag needs m >= 1 and no n")
        else:
            raise ValueError(f"unknown center parity {self.center_parity!r}")

    def __str__(self):
        core = f"H({self.m},{self.n})" if self.center_parity == "even" else f"H_{self.m}"
        if self.complement.total():
            return f"{core}+A({self.complement.even}|{self.complement.odd})"
        return core


def _rank(field: Field, rows: list[list]) -> int:
    if not rows or not rows[0]:
        return 0
    return Subspace.span(field, rows, len(rows[0])).dim


def recognize_heisenberg_plus_abelian(L: LieSuperAlgebra) -> HeisenbergTag | None:
    """Tag ``L`` as H(m,n)+A(a|b) or H_m+A(a|b), or None if it is not of that shape."""
    D = derived_subalgebra(L)
    if D.dim not in (SuperDim(1, 0), SuperDim(0, 1)):
        return None
    Z = center(L)
    if not D.issubspace(Z):
        return None
    (w,) = D.vectors()
    p = next(k for k, x in enumerate(w) if x != 0)
    scale = 1 / w[p]
    # the bracket as a scalar form: [x_a, x_b] = f(a,b) * w
    f = [[L.c(a, b, p) * scale for b in range(L.size)] for a in range(L.size)]
    if _rank(L.field, f) != L.size - Z.dim.total():
        return None
    ev, od = list(L.even_indices), list(L.odd_indices)
    block = lambda rs, cs: [[f[a][b] for b in cs] for a in rs]
    if D.dim.even:
        r_even = _rank(L.field, block(ev, ev))
        r_odd = _rank(L.field, block(od, od))
        if r_even % 2:
            return None
        return HeisenbergTag("even", r_even // 2, r_odd, Z.dim - D.dim)
    r = _rank(L.field, block(ev, od))
    if r != _rank(L.field, block(od, ev)) or r < 1:
        return None
    return HeisenbergTag("odd", r, None, Z.dim - D.dim)
