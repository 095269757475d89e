"""End-to-end runs of the command-line interface."""
import json

from meshforge.cli import main
from meshforge.koszul import AugmentedDgAlgebra
from meshforge.path_algebra import BasisLabel, FinDimAlgebra


def test_gen_tikz(capsys):
    code = main(["gen", "--family", "A", "--index", "3", "--dim", "2", "--format", "tikz"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith(r"\begin{tikzpicture}")


def test_gen_writes_file(tmp_path):
    code = main(["gen", "--family", "E", "--index", "6", "--dim", "1", "--out", str(tmp_path)])
    assert code == 0
    data = json.loads((tmp_path / "E6_d1.json").read_text())
    assert len(data["vertices"]) == 6


def test_usage_errors(capsys):
    """Bad families, indices and missing arguments exit with 2."""
    assert main(["gen", "--family", "Z", "--index", "2", "--dim", "0"]) == 2
    assert main(["gen", "--family", "D", "--index", "3", "--dim", "1"]) == 2
    assert main(["gen"]) == 2
    assert main(["frobnicate"]) == 2

    capsys.readouterr()
    assert main(["gen", "--in", "no_such_quiver"]) == 2
    err = capsys.readouterr().err
    assert "available fixtures" in err
    assert "conifold" in err


def test_dg_h0(capsys):
    code = main(["dg", "--family", "A", "--index", "2", "--dim", "2", "--h0"])
    report = json.loads(capsys.readouterr().out)
    assert code == 0
    assert report["d_squared"] is True
    assert report["h0"]["dim"] == 4
    assert report["h0"]["stabilized"] is True


def test_dg_presentation(tmp_path):
    code = main(["dg", "--family", "A", "--index", "1", "--dim", "1", "--out", str(tmp_path)])
    assert code == 0
    report = json.loads((tmp_path / "A1_d1_dg.json").read_text())
    arrows = report["presentation"]["arrows"]
    assert [a["degree"] for a in arrows] == [-1, -1]
    assert report["presentation"]["diff"] == {}


def test_dg_needs_stable_quiver(capsys):
    assert main(["dg", "--in", "intro_a1"]) == 1
    assert "NotStableError" in capsys.readouterr().err


def test_ext_conifold(capsys):
    assert main(["ext", "--in", "conifold"]) == 0
    table = json.loads(capsys.readouterr().out)
    dims = {(r["l"], r["i"], r["j"]): r["dim"] for r in table["dims"]}
    assert dims[(2, "+", "-")] == 1
    assert dims[(1, "+", "-")] == 0
    assert table["pi"] == {"+": "-", "-": "+"}


def test_cy_curve(capsys):
    assert main(["cy", "--in", "curve_a2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report == {
        "duality": True,
        "serre_orbits": True,
        "fractions": {"1": [2, 1], "2": [2, 1]},
    }


def test_koszul_from_algebra_file(tmp_path, capsys):
    basis = [BasisLabel("e(1)", "1", "1", trivial=True), BasisLabel("x", "1", "1")]
    mult = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    algebra = AugmentedDgAlgebra.from_algebra(FinDimAlgebra(["1"], basis, mult))
    path = tmp_path / "dual_numbers.json"
    path.write_text(algebra.to_json())

    assert main(["koszul", "--in", str(path), "--words", "6"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["generators"] == {"1": 1}
    assert [report["cohomology"][str(n)]["dim"] for n in range(5)] == [1, 1, 1, 1, 1]


def test_koszul_from_fixture(capsys):
    """The conifold's stable algebra is k x k."""
    assert main(["koszul", "--in", "conifold", "--words", "4"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["generators"] == {}
    assert report["cohomology"]["0"]["blocks"] == {"+->+": 1, "-->-": 1}
    assert report["cohomology"]["1"]["dim"] == 0


def test_koszul_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    assert main(["koszul", "--in", str(path)]) == 2
