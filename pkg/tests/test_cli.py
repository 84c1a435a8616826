import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from cases import DATA
from weylmod import cli
from weylmod.notation import parse
from weylmod.numpoly import NumericalPolynomial
from weylmod.oracle import DimensionRow, DimensionTable


def run(*argv):
    out = io.StringIO()
    args = cli.build_parser().parse_args([str(a) for a in argv])
    status = cli.run(args, out=out)
    return status, out.getvalue()


def test_bernstein_three_relations():
    status, out = run("bernstein", DATA / "three_relations_n3.weyl")
    assert status == 0
    assert out.strip() == "chi = C(t+3,3) = 1/6 t^3 + t^2 + 11/6 t + 1"


def test_bernstein_two_generators_both_bases():
    _, out = run("bernstein", DATA / "two_generators_n2.weyl")
    assert out.strip() == "chi = 6 C(t+3,3) - 5 C(t+2,2) - 5 C(t+1,1) + 15 C(t,0) = t^3 + 7/2 t^2 - 3/2 t + 11"


def test_invariants_two_generators():
    _, out = run("invariants", DATA / "two_generators_n2.weyl")
    lines = dict(line.split(" = ") for line in out.strip().splitlines())
    assert lines["d"] == "3" and lines["a_d"] == "6" and lines["delta"] == "0"
    assert lines["krull_type"] == "< 4" and lines["krull_dim"] == "not determined"


def test_groebner_prints_basis_in_order():
    _, out = run("groebner", DATA / "two_generators_n2.weyl")
    assert out.splitlines() == [
        "g1 = x1^2 d1^3 e1 + d1^5 e1",
        "g2 = x2^2 e1 - x1 e2",
        "g3 = x1^3 d1^3 e2 + x1 d1^5 e2 + 3 x1^2 d1^2 e2 + 5 d1^4 e2",
    ]


def test_verify_free_module_rmax_zero():
    status, out = run("verify", DATA / "free_rank1_n1.weyl", "--rmax", 0)
    assert status == 0
    assert out.splitlines()[1].split() == ["0", "1", "1", "yes"]


def test_verify_default_range_passes():
    status, out = run("verify", DATA / "two_generators_n2.weyl")
    assert status == 0
    assert "agreement from: r = 3" in out


def test_json_schema_and_round_trip():
    status, out = run("bernstein", DATA / "two_generators_n2.weyl", "--json")
    data = json.loads(out)
    assert set(data) == {
        "n", "m", "groebner", "chi_binomial", "chi_monomial", "d", "a_d", "multiplicity",
        "literal_paper_multiplicity", "delta", "krull_type", "krull_dim",
    }
    assert data["chi_binomial"] == [15, -5, -5, 6]
    assert [Fraction(c) for c in data["chi_monomial"]] == list(NumericalPolynomial((15, -5, -5, 6)).to_monomial())
    assert data["chi_monomial"][1] == "-3/2"
    # the printed basis re-parses to the same elements
    header = f"weyl n={data['n']} m={data['m']}\n"
    P = parse(header + "".join(f"rel: {g}\n" for g in data["groebner"]))
    assert len(P.relations) == 3


def test_verify_json_has_table():
    _, out = run("verify", DATA / "single_relation_n1.weyl", "--json", "--rmax", 4)
    table = json.loads(out)["table"]
    assert [row["dim"] for row in table["rows"]] == [1, 3, 5, 7, 9]
    assert table["mismatch"] is False


def test_reduce_basis_flag():
    _, plain = run("bernstein", DATA / "two_generators_n2.weyl")
    _, reduced = run("bernstein", DATA / "two_generators_n2.weyl", "--reduce-basis")
    assert plain == reduced


def test_kolchin_command():
    status, out = run("kolchin", "--points", "(2,0)")
    assert status == 0
    assert out.strip() == "omega = 2 C(t+1,1) - C(t,0) = 2 t + 1"
    _, out = run("kolchin", "--points", "", "--m", 2, "--json")
    assert json.loads(out)["chi_binomial"] == [0, 0, 1]


@pytest.mark.parametrize(
    "points, m",
    [("(1,2);(3)", None), ("(1,x)", None), ("", None), ("(1,2)", 3), ("", 0)],
)
def test_kolchin_bad_points(points, m):
    with pytest.raises(cli.InputError):
        cli.parse_points(points, m)


def test_exit_status_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.weyl"
    bad.write_text("weyl n=1 m=1\nrel: x1 e3\n")
    assert cli.main(["bernstein", str(bad)]) == 1
    assert "line 2, col 10" in capsys.readouterr().err


def test_exit_status_missing_file(tmp_path):
    assert cli.main(["bernstein", str(tmp_path / "nope.weyl")]) == 1
    assert cli.main(["bernstein"]) == 1
    assert cli.main(["kolchin"]) == 1


def test_usage_error_is_input_error():
    with pytest.raises(SystemExit) as info:
        cli.main(["frobnicate"])
    assert info.value.code == 1


def test_exit_status_invariant_violation(monkeypatch):
    def broken(*args, **kwargs):
        raise AssertionError("deg chi exceeds 2n")

    monkeypatch.setattr(cli, "report_from_basis", broken)
    assert cli.main(["bernstein", str(DATA / "single_relation_n1.weyl")]) == 2


def test_exit_status_mismatch(monkeypatch, capsys):
    def fake_table(G, n, m, r_max):
        return DimensionTable([DimensionRow(0, 1, 2, False)], None, 0, 1)

    monkeypatch.setattr(cli, "build_table", fake_table)
    assert cli.main(["verify", str(DATA / "single_relation_n1.weyl")]) == 3
    assert "MISMATCH" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "weylmod", "bernstein", str(DATA / "single_relation_n1.weyl")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "chi = 2 C(t+1,1) - C(t,0) = 2 t + 1"


def test_stdin_input(monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("weyl n=1 m=1\n"))
    status, out = run("bernstein", "-")
    assert status == 0 and out.strip() == "chi = C(t+2,2) = 1/2 t^2 + 3/2 t + 1"


def test_flags_may_precede_file(capsys):
    assert cli.main(["invariants", "--json", str(DATA / "free_rank1_n1.weyl")]) == 0
    assert json.loads(capsys.readouterr().out)["d"] == 2
