"""Exact linear algebra over the rationals or a prime field GF(p), p > 3.

Scalars are ``fractions.Fraction`` for the rationals and :class:`Mod` for
prime fields.  Both support ``+ - * /`` and comparison with ``0``, so the
elimination code below is written once for either field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class FieldError(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class Mod:
    """Residue class in GF(p), stored canonically in ``[0, p)``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        return NotImplemented if o is NotImplemented else Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def inverse(self) -> "Mod":
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Mod(o, self.p) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class Field:
    """The ground field.  ``characteristic == 0`` means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p == 0:
            return
        if p in (2, 3):
            raise FieldError(f"characteristic {p} is not supported (need 0 or a prime > 3)")
        if not _is_prime(p):
            raise FieldError(f"characteristic {p} is not a prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, x) -> Fraction | Mod:
        """Coerce an int, Fraction, Mod or ``"a/b"`` string into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        p = self.characteristic
        if p == 0:
            if isinstance(x, Mod):
                raise FieldError("cannot coerce a GF(p) element to the rationals")
            return Fraction(x)
        if isinstance(x, Mod):
            if x.p != p:
                raise FieldError(f"cannot coerce GF({x.p}) element into GF({p})")
            return x
        x = Fraction(x)
        if x.denominator % p == 0:
            raise FieldError(f"denominator of {x} vanishes in GF({p})")
        return Mod(x.numerator * pow(x.denominator, -1, p), p)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def vector(self, values: Iterable) -> tuple:
        return tuple(self(v) for v in values)

    def __str__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


@dataclass(frozen=True)
class Matrix:
    field: Field
    nrows: int
    ncols: int
    entries: tuple  # row-major tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise DimensionMismatch("entry count does not match rows x cols")

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = [field.vector(r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionMismatch("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        return cls(field, len(rows), ncols, tuple(rows))

    def transpose(self) -> "Matrix":
        cols = tuple(tuple(self.entries[i][j] for i in range(self.nrows)) for j in range(self.ncols))
        return Matrix(self.field, self.ncols, self.nrows, cols)

    def rows(self) -> list[tuple]:
        return list(self.entries)


def _rref_rows(rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form of ``m``, its rank and pivot columns.

    Zero rows are kept at the bottom so the returned matrix has the
    shape of ``m``.
    """
    reduced, pivots = _rref_rows([list(r) for r in m.entries], m.ncols)
    zero = m.field.zero
    full = [tuple(r) for r in reduced] + [(zero,) * m.ncols] * (m.nrows - len(reduced))
    return Matrix(m.field, m.nrows, m.ncols, tuple(full)), len(pivots), pivots


def kernel(m: Matrix) -> list[tuple]:
    """Basis of the right null space ``{x : m x = 0}``, one vector per free column."""
    reduced, pivots = _rref_rows([list(r) for r in m.entries], m.ncols)
    zero, one = m.field.zero, m.field.one
    pivset = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        x = [zero] * m.ncols
        x[free] = one
        for row, pc in zip(reduced, pivots):
            x[pc] = -row[free]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Subspace:
    """Row space in canonical RREF, so equal subspaces compare equal."""

    field: Field
    ambient: int
    rows: tuple = ()
    pivots: tuple = ()

    @classmethod
    def span(cls, field: Field, vectors: Iterable[Sequence], ambient: int) -> "Subspace":
        vecs = [field.vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {ambient}")
        reduced, pivots = _rref_rows(vecs, ambient)
        return cls(field, ambient, tuple(tuple(r) for r in reduced), tuple(pivots))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient)

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        one, zero = field.one, field.zero
        rows = tuple(tuple(one if i == j else zero for j in range(ambient)) for i in range(ambient))
        return cls(field, ambient, rows, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    rank = dim

    def quotient_dim(self) -> int:
        return self.ambient - self.dim

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise DimensionMismatch(f"ambient dimensions {self.ambient} and {other.ambient} differ")
        if self.field != other.field:
            raise FieldError(f"subspaces over {self.field} and {other.field}")

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of ``v`` after eliminating the pivot coordinates."""
        if len(v) != self.ambient:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {self.ambient}")
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            f = v[pc]
            if f != 0:
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def __contains__(self, v: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(v))

    contains = __contains__

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.rows + other.rows, self.ambient)

    sum = __add__

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.rows or not other.rows:
            return Subspace.zero(self.field, self.ambient)
        # left kernel of the stacked rows: a.U + b.V = 0  =>  a.U lies in both
        stacked = Matrix(self.field, len(self.rows) + len(other.rows), self.ambient, self.rows + other.rows)
        combos = kernel(stacked.transpose())
        n = len(self.rows)
        zero = self.field.zero
        vecs = []
        for a in combos:
            v = [zero] * self.ambient
            for coef, row in zip(a[:n], self.rows):
                if coef != 0:
                    v = [x + coef * y for x, y in zip(v, row)]
            vecs.append(v)
        return Subspace.span(self.field, vecs, self.ambient)

    def issubspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(r in other for r in self.rows)

    def complement_columns(self) -> list[int]:
        piv = set(self.pivots)
        return [c for c in range(self.ambient) if c not in piv]


class EchelonBasis:
    """Growing RREF basis with sparse ``{column: value}`` rows.

    Mutable accumulator for the relation closure; freeze it with
    :meth:`to_subspace`.
    """

    def __init__(self, field: Field, ambient: int):
        self.field = field
        self.ambient = ambient
        self._rows: dict[int, dict[int, object]] = {}  # pivot column -> row

    def __len__(self) -> int:
        return len(self._rows)

    def reduce(self, vec: dict) -> dict:
        v = {c: x for c, x in vec.items() if x != 0}
        for pc in sorted(c for c in v if c in self._rows):
            f = v.get(pc)
            if not f:
                continue
            for c, x in self._rows[pc].items():
                y = v.get(c, 0) - f * x
                if y == 0:
                    v.pop(c, None)
                else:
                    v[c] = y
        return v

    def insert(self, vec: dict) -> bool:
        """Add ``vec`` to the span; return True iff the rank grew."""
        # rows are kept fully reduced, so one pass clears every pivot column
        v = self.reduce(vec)
        if not v:
            return False
        pc = min(v)
        # coerce: raw int input would otherwise turn into floats under 1/x
        inv = 1 / self.field(v[pc])
        v = {c: self.field(x) * inv for c, x in v.items()}
        for row in self._rows.values():
            f = row.get(pc)
            if f:
                for c, x in v.items():
                    y = row.get(c, 0) - f * x
                    if y == 0:
                        row.pop(c, None)
                    else:
                        row[c] = y
        self._rows[pc] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def rows(self):
        for pc in sorted(self._rows):
            yield pc, self._rows[pc]

    def to_subspace(self) -> Subspace:
        zero = self.field.zero
        rows, pivots = [], []
        for pc, row in self.rows():
            dense = [zero] * self.ambient
            for c, x in row.items():
                dense[c] = x
            rows.append(tuple(dense))
            pivots.append(pc)
        return Subspace(self.field, self.ambient, tuple(rows), tuple(pivots))


def dense(vec: dict, n: int, field: Field) -> tuple:
    zero = field.zero
    out = [zero] * n
    for c, x in vec.items():
        out[c] = x
    return tuple(out)


def sparse(vec: Sequence) -> dict:
    return {i: x for i, x in enumerate(vec) if x != 0}
