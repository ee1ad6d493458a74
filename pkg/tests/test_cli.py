import json

import pytest

from nijenhuis2d.cli import main
from nijenhuis2d.parser import parse_poly, parse_rational


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTorsion:
    def test_nijenhuis(self, capsys):
        code, out, _ = run(capsys, ["torsion", "--L", "x", "2*y", "y/2", "0"])
        assert code == 0
        assert "n1 = 0" in out and "n2 = 0" in out and "NIJENHUIS" in out

    def test_not_nijenhuis(self, capsys):
        code, out, _ = run(capsys, ["torsion", "--L", "y", "0", "0", "x"])
        assert code == 1
        assert "NOT NIJENHUIS" in out

    def test_identity(self, capsys):
        code, _, _ = run(capsys, ["torsion", "--L", "1", "0", "0", "1"])
        assert code == 0

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, ["torsion", "--L", "x", "2*(y", "y/2", "0"])
        assert code == 2
        assert "entry (1,2)" in err

    def test_no_ansi_when_piped(self, capsys):
        _, out, _ = run(capsys, ["torsion", "--L", "x", "2*y", "y/2", "0"])
        assert "\x1b[" not in out


class TestCheck:
    def test_accept(self, capsys):
        code, out, _ = run(capsys, ["check", "--g", "y^3"])
        assert code == 0 and "AdmissibleExact" in out

    def test_reject(self, capsys):
        code, out, _ = run(capsys, ["check", "--g", "y^2 + x^3"])
        assert code == 1 and "9*x^4 - x^3" in out


class TestReconstruct:
    def test_from_disc(self, capsys):
        code, out, _ = run(capsys, ["reconstruct", "--g", "y^3 + x^2/4"])
        assert code == 0
        assert "[[x, 3*y^2], [1/3*y, 0]]" in out

    def test_non_polynomial_corner(self, capsys):
        code, out, _ = run(capsys, ["reconstruct", "--g", "y^2 + 2*x*y"])
        assert code == 1
        assert "not polynomial" in out

    def test_degenerate_routes_to_family(self, capsys):
        code, out, _ = run(capsys, ["reconstruct", "--g", "x^2/4"])
        assert code == 0
        assert "y-independent" in out

    def test_from_det(self, capsys):
        # leading-minus expressions need the --flag=value form
        code, out, _ = run(capsys, ["reconstruct", "--f=-y^2"])
        assert code == 0
        assert "[[x, 2*y], [1/2*y, 0]]" in out

    def test_requires_exactly_one(self, capsys):
        code, _, err = run(capsys, ["reconstruct", "--g", "y", "--f", "y"])
        assert code == 2


class TestClassify:
    def test_morse(self, capsys):
        code, out, _ = run(capsys, ["classify", "--g", "y^2 + x^2/4"])
        assert code == 0
        assert "morse" in out and "L1+" in out

    def test_homogeneous(self, capsys):
        code, out, _ = run(capsys, ["classify", "--g", "x^2*y^3"])
        assert code == 0
        assert "homogeneous" in out and "m: 2" in out and "k: 3" in out

    def test_undecided_exit_3(self, capsys):
        code, out, _ = run(capsys, ["classify", "--g", "y^4 + x*y^5"])
        assert code == 3
        assert "undecided" in out

    def test_not_admissible_exit_1(self, capsys):
        code, _, _ = run(capsys, ["classify", "--g", "y^2 + 2*x*y"])
        assert code == 1

    def test_json_roundtrip(self, capsys):
        code, out, _ = run(capsys, ["classify", "--g", "y^3 + x^2/4", "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert parse_poly(payload["g"]) == parse_poly("y^3 + x^2/4")
        entries = payload["result"]["operator"]
        assert [parse_rational(e) for e in entries] == [
            parse_rational(t) for t in ("x", "3*y^2", "y/3", "0")
        ]

    def test_jet_order_flag(self, capsys):
        code, out, _ = run(capsys, ["classify", "--g", "y^2 + x*y^2", "--jet-order", "8",
                                    "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["result"]["certificate"] == "jet-order-8"


class TestPlot:
    def test_csv(self, capsys, tmp_path):
        out_path = tmp_path / "c.csv"
        code, out, _ = run(capsys, ["plot", "--L", "1", "0", "0", "1",
                                    "--out", str(out_path), "--nx", "5", "--ny", "4"])
        assert code == 0
        lines = out_path.read_text().strip().split("\n")
        assert len(lines) == 21

    def test_svg_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        args = ["plot", "--g", "-y^2 + x^2/4", "--nx", "41", "--ny", "41", "--levels", "7"]
        assert run(capsys, args + ["--out", str(a)])[0] == 0
        assert run(capsys, args + ["--out", str(b)])[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_caption_note(self, capsys, tmp_path):
        out_path = tmp_path / "f5.svg"
        code, out, _ = run(capsys, ["plot", "--g", "y^3 + x^2/4", "--nx", "31",
                                    "--ny", "31", "--out", str(out_path)])
        assert code == 0
        assert "x^2 + 16*y^3" in out  # discrepancy note is reported

    def test_rejects_degenerate_g(self, capsys, tmp_path):
        code, _, err = run(capsys, ["plot", "--g", "x^2/4", "--out", str(tmp_path / "x.svg")])
        assert code == 2

    def test_bad_extension(self, capsys, tmp_path):
        code, _, err = run(capsys, ["plot", "--L", "1", "0", "0", "1",
                                    "--out", str(tmp_path / "x.txt")])
        assert code == 2


class TestLemma1Verify:
    def test_default_sweep(self, capsys):
        code, out, _ = run(capsys, ["lemma1-verify"])
        assert code == 0
        assert "all formulas verified" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, ["lemma1-verify", "--k-max", "1", "--c", "1", "1/2",
                                    "--format", "json"])
        assert code == 0
        payload = json.loads(out)
        assert payload["all_ok"] is True
        assert len(payload["results"]) == 4

    def test_rejects_zero_c(self, capsys):
        code, _, _ = run(capsys, ["lemma1-verify", "--c", "0"])
        assert code == 2


class TestDeterminism:
    def test_text_output_stable(self, capsys):
        args = ["classify", "--g", "x^2*y^3"]
        _, out1, _ = run(capsys, args)
        _, out2, _ = run(capsys, args)
        assert out1 == out2

    def test_json_output_stable(self, capsys):
        args = ["check", "--g", "y^2 + x^3", "--format", "json"]
        _, out1, _ = run(capsys, args)
        _, out2, _ = run(capsys, args)
        assert out1 == out2
