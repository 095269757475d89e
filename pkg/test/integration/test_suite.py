"""A small verification run through the library and the CLI."""
import json

from meshforge.cli import main
from meshforge.suite import build_tasks, load_config, run_suite

SMALL_CONFIG = """
families=A
max_index=3
krull_dims=0,1
trunc=7
words=6
dg_trunc=5
ncpu=1
random_trials=5
"""


def test_small_suite_passes(tmp_path):
    """Every check of a reduced A-only run passes and the report is reproducible."""
    config = tmp_path / "suite.env"
    config.write_text(SMALL_CONFIG)
    out_dir = tmp_path / "results"

    cfg = load_config(str(config), out_dir=str(out_dir))
    report = run_suite(cfg)
    assert report.failures() == []
    assert report.passed

    checks = [r.check for r in report.results]
    assert "knorrer/A3" in checks
    assert "bridge/curve_a2" in checks
    assert "koszul/stable/curve_a3" in checks
    assert "perturbation/odd-a5-pad-4-scaled" in checks
    assert list(report.timings) == [name for name, _, _ in build_tasks(cfg)]

    report.write()
    written = (out_dir / "report.json").read_text()

    cli_out = tmp_path / "cli"
    code = main(["verify", "--config", str(config), "--out", str(cli_out)])
    assert code == 0
    cli_report = json.loads((cli_out / "report.json").read_text())
    first = json.loads(written)
    assert cli_report["checks"] == first["checks"]
    assert cli_report["passed"] is True


def test_failing_suite_exit_code(tmp_path, capsys):
    """A bound too small for the quotients to stabilize fails the run."""
    config = tmp_path / "suite.env"
    config.write_text(SMALL_CONFIG.replace("trunc=7", "trunc=2"))
    code = main(["verify", "--config", str(config), "--out", str(tmp_path / "out")])
    assert code == 1
    summary = json.loads(capsys.readouterr().out)
    assert summary["passed"] is False
    assert summary["counts"]["fail"] >= 1
