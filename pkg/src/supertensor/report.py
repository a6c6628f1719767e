"""Per-algebra reports and the table of numeric claims checked by ``paper-report``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable

from .bounds import check_bound, family_sweep
from .exactlin import QQ, Field
from .gamma import gamma_of_abelianization
from .superalg import (
    LieSuperAlgebra,
    SuperDim,
    abelian,
    abelianization,
    center,
    derived_subalgebra,
    direct_sum,
    from_brackets,
    heisenberg_even,
    heisenberg_odd,
    is_nilpotent,
    recognize_heisenberg_plus_abelian,
)
from .tensor import (
    exterior_square,
    exterior_via_quotient,
    extra_sweep_gain,
    check_result,
    module_tensor,
    multiplier_dim,
    square_ideal,
    tensor_square,
)

HEISENBERG_PAIRS = [(2, 0), (1, 1), (0, 2), (2, 1), (1, 2)]


def super_class2(field: Field = QQ) -> LieSuperAlgebra:
    """(2|2) algebra with [x1,y1] = y2, [y1,y1] = x2; derived subalgebra (1|1)."""
    return from_brackets("S(2|2)", SuperDim(2, 2), {(0, 2): {3: 1}, (2, 2): {1: 1}}, field)


def filiform4(field: Field = QQ) -> LieSuperAlgebra:
    """4-dim filiform Lie algebra [x1,x2] = x3, [x1,x3] = x4 (class 3)."""
    return from_brackets("F4", SuperDim(4, 0), {(0, 1): {2: 1}, (0, 2): {3: 1}}, field)


def reference_family(field: Field = QQ) -> list[LieSuperAlgebra]:
    """The algebras every identity is checked on."""
    H = lambda m, n: heisenberg_even(m, n, field)
    Ho = lambda m: heisenberg_odd(m, field)
    A = lambda a, b: abelian(a, b, field)
    return [
        H(1, 0), H(0, 1), H(1, 1), H(2, 0), H(0, 2), H(2, 1), H(1, 2),
        Ho(1), Ho(2), Ho(3),
        A(1, 0), A(0, 1), A(1, 1), A(2, 1), A(0, 3),
        direct_sum(H(1, 0), A(1, 0)), direct_sum(H(0, 1), A(0, 1)), direct_sum(Ho(1), A(1, 0)),
        direct_sum(H(1, 0), H(0, 1)), direct_sum(H(1, 0), Ho(1)),
        super_class2(field), filiform4(field),
    ]


def direct_sum_pieces(field: Field = QQ) -> list[LieSuperAlgebra]:
    return [heisenberg_even(1, 0, field), heisenberg_even(0, 1, field), heisenberg_odd(1, field),
            abelian(1, 0, field), abelian(0, 1, field), abelian(1, 1, field)]


def algebra_report(L: LieSuperAlgebra) -> dict:
    """Everything the CLI knows about ``L``, with superdimensions as [even, odd]."""
    nil, cls = is_nilpotent(L)
    out = {
        "name": L.name,
        "field": L.field.characteristic,
        "dim": L.dim.as_pair(),
        "derived": derived_subalgebra(L).dim.as_pair(),
        "center": center(L).dim.as_pair(),
        "nilpotent": nil,
        "class": cls,
        "classification": None,
    }
    tag = recognize_heisenberg_plus_abelian(L) if nil else None
    out["classification"] = str(tag) if tag else None
    if not nil:
        return out
    T = tensor_square(L)
    out.update({
        "tensor": T.dim.as_pair(),
        "tensor_abelian": T.is_abelian(),
        "exterior": exterior_square(L).dim.as_pair(),
        "square": square_ideal(T).dim.as_pair(),
        "gamma": gamma_of_abelianization(L).as_pair(),
        "multiplier": multiplier_dim(L).as_pair(),
    })
    if not L.is_abelian():
        rep = check_bound(L)
        out.update({"bound": rep.bound, "actual": rep.actual, "slack": rep.slack, "equality": rep.equality})
    return out


@dataclass(frozen=True)
class Claim:
    label: str
    expected: str
    actual: str
    passed: bool


def _claim(label: str, expected, actual) -> Claim:
    return Claim(label, str(expected), str(actual), expected == actual)


def _dims_claims(field: Field, tag: str = "") -> list[Claim]:
    H = lambda m, n: heisenberg_even(m, n, field)
    out = []
    T = tensor_square(H(1, 0))
    out.append(_claim(f"H(1,0)⊗H(1,0) = A(6|0){tag}", (SuperDim(6, 0), True), (T.dim, T.is_abelian())))
    out.append(_claim(f"H(0,1)⊗H(0,1) dim (1|0){tag}", SuperDim(1, 0), tensor_square(H(0, 1)).dim))
    T = tensor_square(heisenberg_odd(1, field))
    out.append(_claim(f"H_1⊗H_1 = A(2|3){tag}", (SuperDim(2, 3), True), (T.dim, T.is_abelian())))
    for m, n in HEISENBERG_PAIRS:
        out.append(_claim(f"dim H({m},{n})⊗H({m},{n}) = (4m²+n²|4mn){tag}",
                          SuperDim(4 * m * m + n * n, 4 * m * n), tensor_square(H(m, n)).dim))
    return out


def paper_claims(max_dim: int = 7) -> list[Claim]:
    out = _dims_claims(QQ)
    for m in (2, 3):
        L = heisenberg_odd(m)
        ab = abelianization(L).dim
        d = tensor_square(L).dim
        out.append(_claim(f"H_{m}⊗H_{m} total 4m², ≅ dims of H_m^ab ⊗ H_m^ab",
                          (4 * m * m, module_tensor(ab, ab)), (d.total(), d)))
    for m, n in HEISENBERG_PAIRS:
        out.append(_claim(f"dim H({m},{n})□H({m},{n}) = (2m²+m+n(n-1)/2|2mn)",
                          SuperDim(2 * m * m + m + n * (n - 1) // 2, 2 * m * n),
                          square_ideal(heisenberg_even(m, n)).dim))
    mult = [(heisenberg_even(1, 0), SuperDim(2, 0)), (heisenberg_even(0, 1), SuperDim(0, 0)),
            (heisenberg_odd(1), SuperDim(1, 1))]
    mult += [(heisenberg_even(m, n), SuperDim(2 * m * m - m + n * (n + 1) // 2 - 1, 2 * m * n))
             for m, n in HEISENBERG_PAIRS]
    mult += [(heisenberg_odd(m), SuperDim(m * m, m * m - 1)) for m in (2, 3)]
    for L, want in mult:
        out.append(_claim(f"dim M({L.name}) = {want}", want, multiplier_dim(L)))
    for L in reference_family():
        if not is_nilpotent(L)[0]:
            continue
        T = tensor_square(L)
        box = square_ideal(T).dim
        out.append(_claim(f"{L.name}: ⊗ = □ + ∧ and □ = Γ(L^ab)",
                          (T.dim, gamma_of_abelianization(L)), (box + exterior_square(L).dim, box)))
    reps = family_sweep(max_dim)
    eq = sorted(r.name for r in reps if r.equality)
    want_eq = sorted(r.name for r in reps if r.classification and r.classification.center_parity == "even"
                     and (r.classification.m, r.classification.n) == (1, 0))
    out.append(_claim(f"sweep({max_dim}): {len(reps)} algebras, min slack >= 0",
                      True, min(r.slack for r in reps) >= 0))
    out.append(_claim(f"sweep({max_dim}): equality exactly on H(1,0)+A", want_eq, eq))
    for L, M in combinations_with_replacement(direct_sum_pieces(), 2):
        S = direct_sum(L, M)
        want = (tensor_square(L).dim + tensor_square(M).dim
                + 2 * module_tensor(abelianization(L).dim, abelianization(M).dim))
        out.append(_claim(f"direct-sum law {L.name} ⊕ {M.name}", want, tensor_square(S).dim))
    for L in reference_family():
        if not is_nilpotent(L)[0]:
            continue
        T, E = tensor_square(L), exterior_square(L)
        ok = True
        try:
            check_result(T)
            check_result(E)
        except Exception:
            ok = False
        out.append(_claim(f"{L.name}: closure properties", (True, 0, E.dim),
                          (ok, extra_sweep_gain(T.relations), exterior_via_quotient(L).dim)))
    for p in (5, 7):
        out.extend(_dims_claims(Field(p), f" over GF({p})"))
    return out
