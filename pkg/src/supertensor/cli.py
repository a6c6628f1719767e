"""Command-line interface: ``supertensor <command> [file.lsa] [flags]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bounds import DEFAULT_CEILING, AbelianInputError, BoundViolation, check_bound, family_sweep
from .exactlin import Field, FieldError
from .gamma import gamma_dim, gamma_of_abelianization
from .lsa import LsaError, parse_algebra, render_algebra
from .report import algebra_report, paper_claims
from .superalg import (
    SuperDim,
    abelian,
    center,
    derived_subalgebra,
    heisenberg_even,
    heisenberg_odd,
    is_nilpotent,
    recognize_heisenberg_plus_abelian,
    validate,
)
from .tensor import NotNilpotentError, exterior_square, multiplier_dim, square_ideal, tensor_square

FAMILIES = ("heisenberg-even", "heisenberg-odd", "abelian")


def _field(args) -> Field | None:
    return None if args.field is None else Field(args.field)


def _load(args):
    path = Path(args.file)
    return parse_algebra(path.read_text(), field=_field(args), name=args.name, default_name=path.stem)


def _emit(args, text: str, payload: dict | list) -> None:
    out = json.dumps(payload, indent=2, ensure_ascii=False) if args.json else text
    if args.out and args.command != "new":
        Path(args.out).write_text(out + "\n")
    else:
        print(out)


def cmd_new(args) -> int:
    field = _field(args) or Field(0)
    if args.family == "heisenberg-even":
        L = heisenberg_even(args.m, args.n or 0, field)
    elif args.family == "heisenberg-odd":
        L = heisenberg_odd(args.m, field)
    else:
        L = abelian(args.m, args.n or 0, field)
    text = render_algebra(L)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_validate(args) -> int:
    path = Path(args.file)
    try:
        L = parse_algebra(path.read_text(), field=_field(args), name=args.name, default_name=path.stem)
    except LsaError as exc:
        _emit(args, f"invalid: {exc}", {"valid": False, "error": str(exc)})
        return 1
    _emit(args, f"valid: {L.name} dim {L.dim} over {L.field}", {"valid": True, "dim": L.dim.as_pair()})
    return 0


def cmd_invariants(args) -> int:
    L = _load(args)
    nil, cls = is_nilpotent(L)
    tag = recognize_heisenberg_plus_abelian(L) if nil else None
    lines = [
        f"dim L = {L.dim}",
        f"dim L² = {derived_subalgebra(L).dim}",
        f"dim Z(L) = {center(L).dim}",
        f"nilpotent: {'yes, class ' + str(cls) if nil else 'no'}",
        f"structure: {tag if tag else 'unclassified'}",
    ]
    _emit(args, "\n".join(lines), algebra_report(L) if args.json else {})
    return 0


def cmd_tensor(args) -> int:
    L = _load(args)
    T = tensor_square(L)
    _emit(args, f"dim L⊗L = {T.dim}, abelian: {'yes' if T.is_abelian() else 'no'}",
          algebra_report(L) if args.json else {})
    return 0


def cmd_exterior(args) -> int:
    L = _load(args)
    _emit(args, f"dim L∧L = {exterior_square(L).dim}", algebra_report(L) if args.json else {})
    return 0


def cmd_square(args) -> int:
    L = _load(args)
    box = square_ideal(L)
    _emit(args, f"dim L□L = {box.dim}, Γ(L^ab) = {gamma_of_abelianization(L)}",
          algebra_report(L) if args.json else {})
    return 0


def cmd_gamma(args) -> int:
    if args.dim:
        d = SuperDim(*args.dim)
        _emit(args, str(gamma_dim(d)), {"dim": d.as_pair(), "gamma": gamma_dim(d).as_pair()})
        return 0
    if not args.file:
        raise SystemExit("gamma needs a file or --dim EVEN ODD")
    L = _load(args)
    _emit(args, f"Γ(L^ab) = {gamma_of_abelianization(L)}", algebra_report(L) if args.json else {})
    return 0


def cmd_multiplier(args) -> int:
    L = _load(args)
    _emit(args, f"dim M(L) = {multiplier_dim(L)}", algebra_report(L) if args.json else {})
    return 0


def cmd_bound(args) -> int:
    L = _load(args)
    try:
        rep = check_bound(L)
    except BoundViolation as exc:
        _emit(args, f"FAIL: {exc}", {"name": L.name, "error": str(exc)})
        return 1
    verdict = "equality" if rep.equality else "strict"
    text = f"bound {rep.bound}, actual {rep.actual}, {verdict}"
    if rep.classification:
        text += f" ({rep.classification})"
    payload = algebra_report(L) if args.json else {}
    _emit(args, text, payload)
    return 0


def cmd_sweep(args) -> int:
    try:
        reps = family_sweep(args.max_dim, ceiling=max(args.max_dim, DEFAULT_CEILING) if args.force else DEFAULT_CEILING)
    except BoundViolation as exc:
        print(f"FAIL: {exc}")
        return 1
    lines = [f"{'algebra':<22} {'(k|l)':>7} {'(r|s)':>7} {'bound':>6} {'actual':>6} {'slack':>6}"]
    for r in reps:
        lines.append(f"{r.name:<22} {f'({r.k}|{r.l})':>7} {f'({r.r}|{r.s})':>7} {r.bound:>6} {r.actual:>6} "
                     f"{r.slack:>6}{'  equality' if r.equality else ''}")
    lines.append(f"{len(reps)} algebras, {sum(r.equality for r in reps)} equality cases, "
                 f"min slack {min((r.slack for r in reps), default=0)}")
    _emit(args, "\n".join(lines), [r.as_dict() for r in reps])
    return 0


def cmd_paper_report(args) -> int:
    claims = paper_claims(args.max_dim)
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.label}" + ("" if c.passed else f"  expected {c.expected}, got {c.actual}")
             for c in claims]
    failed = sum(not c.passed for c in claims)
    lines.append(f"{len(claims) - failed}/{len(claims)} claims pass")
    _emit(args, "\n".join(lines), [c.__dict__ for c in claims])
    return 1 if failed else 0


COMMANDS = {
    "new": cmd_new,
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "tensor-square": cmd_tensor,
    "exterior-square": cmd_exterior,
    "square": cmd_square,
    "gamma": cmd_gamma,
    "multiplier-dim": cmd_multiplier,
    "bound-check": cmd_bound,
    "sweep": cmd_sweep,
    "paper-report": cmd_paper_report,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="supertensor", description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_file=True):
        if needs_file:
            p.add_argument("file", nargs=None if needs_file is True else "?")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--field", type=int, default=None, metavar="P", help="0 for QQ or a prime p > 3")
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument("--name", default=None, help="algebra name (default: file stem)")
        return p

    p = common(sub.add_parser("new", help="write a built-in family as .lsa"), needs_file=False)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    for name in ("validate", "invariants", "tensor-square", "exterior-square", "square",
                 "multiplier-dim", "bound-check"):
        common(sub.add_parser(name))
    p = common(sub.add_parser("gamma"), needs_file="optional")
    p.add_argument("--dim", type=int, nargs=2, metavar=("EVEN", "ODD"))
    p = common(sub.add_parser("sweep"), needs_file=False)
    p.add_argument("--max-dim", type=int, default=DEFAULT_CEILING)
    p.add_argument("--force", action="store_true", help="allow --max-dim above the default ceiling")
    p = common(sub.add_parser("paper-report"), needs_file=False)
    p.add_argument("--max-dim", type=int, default=DEFAULT_CEILING)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return COMMANDS[args.command](args)
    except (LsaError, FieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AbelianInputError, NotNilpotentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
