import json

import pytest

from supertensor.cli import main
from supertensor.exactlin import GF, QQ
from supertensor.lsa import LsaError, LsaValidationError, parse_algebra, render_algebra
from supertensor.report import reference_family
from supertensor.superalg import SuperDim, heisenberg_even, heisenberg_odd
from supertensor.tensor import tensor_square

H10 = """lsa 1
name H(1,0)
even 3
odd 0
[1,2] = 3:1
"""


def test_parse_heisenberg():
    L = parse_algebra(H10)
    assert L.name == "H(1,0)" and L.dim == SuperDim(3, 0) and L.field == QQ
    assert L.c(0, 1, 2) == 1 and L.c(1, 0, 2) == -1


def test_parse_comments_zero_and_fractions():
    L = parse_algebra("# a comment\nlsa 1\neven 2\nodd 1\n[1,2] = 0\n[3,3] = 1:1/2  # y.y\n", name="X")
    assert L.name == "X" and L.c(2, 2, 0) == QQ("1/2")
    assert parse_algebra("lsa 1\neven 1\nodd 0\n", default_name="stem").name == "stem"


@pytest.mark.parametrize("text,line", [
    ("lsa 2\neven 1\nodd 0\n", 1),
    ("lsa 1\neven 3\nodd 0\n[1,2] = 4:1\n", 4),
    ("lsa 1\neven 3\nodd 0\n[1,2] = 3:1 3:2\n", 4),
    ("lsa 1\neven 2\nodd 0\n[1,1] = 2:1\n", 4),
    ("lsa 1\neven 3\nodd 0\n[1,2] = 3:1\n[2,1] = 3:1\n", 5),
    ("lsa 1\neven 3\nodd 0\nchar 3\n", 4),
    ("lsa 1\neven 3\nodd 0\nfoo 1\n", 4),
    ("lsa 1\neven x\n", 2),
    ("lsa 1\neven 3\nodd 0\n[1,2 = 3:1\n", 4),
    ("lsa 1\neven 3\nodd 0\n[1,2] = 3:1 junk\n", 4),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(LsaError) as info:
        parse_algebra(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_missing_lines():
    with pytest.raises(LsaError):
        parse_algebra("")
    with pytest.raises(LsaError):
        parse_algebra("lsa 1\neven 2\n")


def test_validation_error_names_axiom():
    # A(2|1) with [y1, y1] = y1 breaks the grading
    with pytest.raises(LsaValidationError) as info:
        parse_algebra("lsa 1\neven 2\nodd 1\n[3,3] = 3:1\n")
    assert "grading" in str(info.value) and "line 4" in str(info.value)
    with pytest.raises(LsaValidationError) as info:
        parse_algebra(H10 + "[1,3] = 1:1\n")
    assert [v.axiom for v in info.value.violations] == ["jacobi"]


def test_char_line_selects_field():
    L = parse_algebra(H10 + "char 5\n")
    assert L.field == GF(5)
    assert tensor_square(L).dim == SuperDim(6, 0)
    assert parse_algebra(H10 + "char 5\n", field=QQ).field == QQ


@pytest.mark.parametrize("L", reference_family() + [heisenberg_even(1, 2, GF(7)), heisenberg_odd(2, GF(5))],
                         ids=lambda L: L.name)
def test_round_trip(L):
    text = render_algebra(L)
    L2 = parse_algebra(text)
    assert (L2.name, L2.dim, L2.field, L2.table) == (L.name, L.dim, L.field, L.table)
    assert render_algebra(L2) == text


# --- CLI --------------------------------------------------------------------------

@pytest.fixture
def h10_file(tmp_path):
    p = tmp_path / "h10.lsa"
    assert main(["new", "--family", "heisenberg-even", "--m", "1", "--n", "0", "--out", str(p)]) == 0
    return p


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_new_and_validate(capsys, h10_file):
    code, out, _ = run(capsys, "validate", str(h10_file))
    assert code == 0 and "dim (3|0)" in out


def test_cli_new_to_stdout(capsys):
    code, out, _ = run(capsys, "new", "--family", "heisenberg-odd", "--m", "1")
    assert code == 0 and out.startswith("lsa 1\n") and "odd 2" in out


def test_cli_computations(capsys, h10_file):
    f = str(h10_file)
    assert run(capsys, "tensor-square", f)[1].strip() == "dim L⊗L = (6|0), abelian: yes"
    assert run(capsys, "exterior-square", f)[1].strip() == "dim L∧L = (3|0)"
    assert run(capsys, "square", f)[1].strip() == "dim L□L = (3|0), Γ(L^ab) = (3|0)"
    assert run(capsys, "multiplier-dim", f)[1].strip() == "dim M(L) = (2|0)"
    assert run(capsys, "bound-check", f)[1].strip() == "bound 6, actual 6, equality (H(1,0))"
    out = run(capsys, "invariants", f)[1]
    assert "nilpotent: yes, class 2" in out and "structure: H(1,0)" in out


def test_cli_bound_check_strict(capsys, tmp_path):
    p = tmp_path / "h11.lsa"
    p.write_text(render_algebra(heisenberg_even(1, 1)))
    code, out, _ = run(capsys, "bound-check", str(p))
    assert code == 0 and out.strip() == "bound 11, actual 9, strict (H(1,1))"


def test_cli_gamma(capsys, h10_file):
    assert run(capsys, "gamma", "--dim", "2", "1")[1].strip() == "(3|2)"
    assert run(capsys, "gamma", str(h10_file))[1].strip() == "Γ(L^ab) = (3|0)"


def test_cli_json_is_stable(capsys, h10_file):
    code, out, _ = run(capsys, "tensor-square", str(h10_file), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["tensor"] == [6, 0] and data["tensor_abelian"] is True
    assert data["multiplier"] == [2, 0] and data["equality"] is True
    assert run(capsys, "tensor-square", str(h10_file), "--json")[1] == out


def test_cli_field_override(capsys, h10_file):
    code, out, _ = run(capsys, "tensor-square", str(h10_file), "--field", "7", "--json")
    assert code == 0 and json.loads(out)["field"] == 7
    code, _, err = run(capsys, "tensor-square", str(h10_file), "--field", "4")
    assert code == 2 and "error" in err


def test_cli_errors(capsys, tmp_path):
    bad = tmp_path / "bad.lsa"
    bad.write_text("lsa 1\neven 3\nodd 0\n[1,2] = 3:1\n[1,3] = 1:1\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1 and "jacobi" in out
    code, _, err = run(capsys, "tensor-square", str(bad))
    assert code == 2 and "jacobi" in err
    code, _, err = run(capsys, "tensor-square", str(tmp_path / "missing.lsa"))
    assert code == 2
    aff = tmp_path / "aff.lsa"
    aff.write_text("lsa 1\neven 2\nodd 0\n[1,2] = 2:1\n")
    code, _, err = run(capsys, "tensor-square", str(aff))
    assert code == 1 and "nilpotent" in err
    ab = tmp_path / "ab.lsa"
    ab.write_text("lsa 1\neven 2\nodd 1\n")
    code, _, err = run(capsys, "bound-check", str(ab))
    assert code == 1 and "abelian" in err


def test_cli_sweep(capsys, tmp_path):
    code, out, _ = run(capsys, "sweep", "--max-dim", "4")
    assert code == 0 and out.strip().endswith("17 algebras, 3 equality cases, min slack 0")
    code, _, err = run(capsys, "sweep", "--max-dim", "8")
    assert code == 1 and "ceiling" in err
    target = tmp_path / "sweep.json"
    assert run(capsys, "sweep", "--max-dim", "3", "--json", "--out", str(target))[0] == 0
    assert len(json.loads(target.read_text())) == 6


def test_cli_paper_report(capsys):
    code, out, _ = run(capsys, "paper-report", "--max-dim", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(l.startswith("PASS") for l in lines[:-1])
