"""The ``.lsa`` text format for Lie superalgebras.

::

    lsa 1
    name H(1,0)          # optional
    even 3
    odd 0
    char 0               # 0 = rationals, otherwise a prime p > 3
    [1,2] = 3:1          # [e1,e2] = 1*e3

Indices are 1-based and global: e1..e_even, then the odd basis vectors.
A bracket line lists ``k:coef`` terms separated by whitespace; ``0`` or an
empty right-hand side means a zero bracket.  The mirror bracket [j,i] is
filled in by graded skew-symmetry unless the file gives it as well, in
which case the two must agree.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exactlin import Field, FieldError
from .superalg import LieSuperAlgebra, SuperDim, from_brackets, sign, validate

FORMAT_VERSION = "1"

_BRACKET = re.compile(r"\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*=\s*(.*)$")
_TERM = re.compile(r"(\d+)\s*:\s*([+-]?\d+(?:/\d+)?)")


class LsaError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line, self.column = line, column
        where = f"line {line}" + (f", column {column}" if column is not None else "") if line else ""
        super().__init__(f"{where}: {message}" if where else message)


class LsaValidationError(LsaError):
    def __init__(self, violations, lines):
        self.violations = violations
        detail = "; ".join(
            f"{v.axiom} at {tuple(i + 1 for i in v.indices)}"
            + (f" (line {lines[v.indices[:2]]})" if v.indices[:2] in lines else "")
            for v in violations[:10]
        )
        super().__init__(f"algebra fails validation: {detail}")


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_algebra(text: str, field: Field | None = None, name: str | None = None,
                  default_name: str = "L") -> LieSuperAlgebra:
    """Parse and validate an ``.lsa`` document.

    ``field`` overrides the file's ``char`` line and ``name`` its ``name`` line.
    """
    header: dict = {}
    entries: list[tuple[int, int, int, dict]] = []  # (lineno, i, j, {k: coef})
    seen_version = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        col = raw.index(line[0]) + 1
        if not seen_version:
            if line.split() != ["lsa", FORMAT_VERSION]:
                raise LsaError(f"expected header 'lsa {FORMAT_VERSION}'", lineno, col)
            seen_version = True
            continue
        if line.startswith("["):
            m = _BRACKET.match(line)
            if not m:
                raise LsaError("malformed bracket line", lineno, col)
            rhs = m.group(3).strip()
            terms = {}
            if rhs not in ("", "0"):
                pos = 0
                for tm in _TERM.finditer(rhs):
                    gap = rhs[pos:tm.start()].strip(" ,")
                    if gap:
                        raise LsaError(f"unexpected {gap!r} in bracket value", lineno,
                                       col + m.start(3) + pos)
                    k = int(tm.group(1))
                    if k in terms:
                        raise LsaError(f"duplicate term for index {k}", lineno, col + m.start(3) + tm.start())
                    terms[k] = Fraction(tm.group(2))
                    pos = tm.end()
                if rhs[pos:].strip(" ,"):
                    raise LsaError(f"unexpected {rhs[pos:]!r} in bracket value", lineno, col + m.start(3) + pos)
            entries.append((lineno, int(m.group(1)), int(m.group(2)), terms))
            continue
        key, _, value = line.partition(" ")
        value = value.strip()
        if key == "name":
            header["name"] = value
        elif key in ("even", "odd", "char"):
            if key in header:
                raise LsaError(f"duplicate '{key}' line", lineno, col)
            if not re.fullmatch(r"\d+", value):
                raise LsaError(f"'{key}' needs a nonnegative integer", lineno, col + len(key) + 1)
            header[key] = (int(value), lineno)
        else:
            raise LsaError(f"unknown directive {key!r}", lineno, col)
    if not seen_version:
        raise LsaError("empty document")
    for key in ("even", "odd"):
        if key not in header:
            raise LsaError(f"missing '{key}' line")

    ne, no = header["even"][0], header["odd"][0]
    if field is None:
        p, pline = header.get("char", (0, None))
        try:
            field = Field(p)
        except FieldError as exc:
            raise LsaError(f"unsupported characteristic: {exc}", pline) from None
    t = ne + no
    par = (0,) * ne + (1,) * no

    brackets: dict = {}
    where: dict = {}
    for lineno, i, j, terms in entries:
        for idx in (i, j, *terms):
            if not 1 <= idx <= t:
                raise LsaError(f"index {idx} out of range 1..{t}", lineno)
        i0, j0 = i - 1, j - 1
        row = brackets.setdefault((i0, j0), {})
        for k, c in terms.items():
            if k - 1 in row:
                raise LsaError(f"duplicate entry [{i},{j}] -> {k}", lineno)
            try:
                row[k - 1] = field(c)
            except FieldError as exc:
                raise LsaError(str(exc), lineno) from None
        where.setdefault((i0, j0), lineno)

    for (i, j), row in brackets.items():
        s = sign(par[i], par[j])
        if i == j and par[i] == 0 and any(c != 0 for c in row.values()):
            raise LsaError(f"[{i + 1},{i + 1}] must vanish for an even basis vector (skew-symmetry)",
                           where[(i, j)])
        if i < j and (j, i) in brackets:
            mirror = brackets[(j, i)]
            for k in set(row) | set(mirror):
                if mirror.get(k, field.zero) != -s * row.get(k, field.zero):
                    raise LsaError(f"[{i + 1},{j + 1}] and [{j + 1},{i + 1}] contradict skew-symmetry",
                                   where[(j, i)])

    L = from_brackets(name or header.get("name") or default_name, SuperDim(ne, no), brackets, field)
    bad = validate(L)
    if bad:
        raise LsaValidationError(bad, where)
    return L


def _coef(c) -> str:
    return str(c)


def render_algebra(L: LieSuperAlgebra) -> str:
    lines = [
        f"lsa {FORMAT_VERSION}",
        f"name {L.name}",
        f"even {L.dim.even}",
        f"odd {L.dim.odd}",
        f"char {L.field.characteristic}",
    ]
    if L.size:
        lines.append(f"# basis: e1..e{L.size}; the first {L.dim.even} even, the rest odd")
    for (i, j) in sorted(L.table):
        if i > j:
            continue
        terms = " ".join(f"{k + 1}:{_coef(c)}" for k, c in sorted(L.table[(i, j)].items()))
        lines.append(f"[{i + 1},{j + 1}] = {terms}")
    return "\n".join(lines) + "\n"
