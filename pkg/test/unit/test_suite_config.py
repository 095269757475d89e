"""Unit tests for the suite configuration, checks and reports."""
import json

import pytest

from meshforge.exceptions import ConfigError, QuiverError
from meshforge.quiver import ade_translation_quiver
from meshforge.suite import CheckResult, SuiteConfig, SuiteReport, build_tasks, load_config
from meshforge.suite.checks import (
    dynkin_indices,
    expected_counts,
    expected_cy_fractions,
    generator_task,
    k0_task,
    minimal_relations_task,
    perturbation_task,
    truncation_task,
)


def test_defaults():
    cfg = load_config()
    assert cfg == SuiteConfig()
    assert cfg.families == ("A", "D", "E")
    assert cfg.to_dict()["krull_dims"] == [0, 1, 2, 3]


def test_config_file_and_overrides(tmp_path):
    path = tmp_path / "suite.env"
    path.write_text("families=a,e\nmax_index=6\ntrunc=5\n# comment\nout_dir=out\n")

    cfg = load_config(str(path))
    assert cfg.families == ("A", "E")
    assert cfg.max_index == 6
    assert cfg.trunc == 5
    assert cfg.out_dir == "out"

    cfg = load_config(str(path), trunc=9, words=None)
    assert cfg.trunc == 9
    assert cfg.words == SuiteConfig().words


def test_config_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "suite.env"
    path.write_text("krull_dims=0,1\n")
    monkeypatch.setenv("MESHFORGE_CONFIG", str(path))
    assert load_config().krull_dims == (0, 1)


def test_config_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.env"))

    path = tmp_path / "bad.env"
    path.write_text("colour=blue\n")
    with pytest.raises(ConfigError):
        load_config(str(path))

    path.write_text("trunc=seven\n")
    with pytest.raises(ConfigError):
        load_config(str(path))

    with pytest.raises(ConfigError):
        load_config(families=("B",))

    with pytest.raises(ConfigError):
        SuiteConfig(trunc=1)

    with pytest.raises(ConfigError):
        SuiteConfig(max_index=13)

    with pytest.raises(ConfigError):
        SuiteConfig().replace(ncpu=0)


def test_build_tasks_follows_families():
    names = [name for name, _, _ in build_tasks(SuiteConfig(families=("E",)))]
    assert [n for n in names if n.startswith("generators/")] == [
        "generators/E6",
        "generators/E7",
        "generators/E8",
    ]
    assert not [n for n in names if n.startswith("perturbation/")]
    assert "koszul/dual_numbers" in names
    assert names[-2:] == ["truncations", "k0"]

    names = [name for name, _, _ in build_tasks(SuiteConfig(families=("A",), max_index=3))]
    assert sum(n.startswith("generators/") for n in names) == 3
    assert sum(n.startswith("perturbation/") for n in names) == 10


def test_dynkin_indices():
    assert dynkin_indices("A", 3) == [1, 2, 3]
    assert dynkin_indices("D", 6) == [4, 5, 6]
    assert dynkin_indices("E", 12) == [6, 7, 8]
    assert dynkin_indices("E", 5) == []


def test_expected_counts():
    assert expected_counts("A", 4, "odd") == {"vertices": 2, "solid": 3}
    assert expected_counts("A", 5, "odd") == {"vertices": 4, "solid": 6}
    assert expected_counts("D", 7, "odd") == {"vertices": 11}
    assert expected_counts("E", 7, "even") == {"vertices": 7, "solid": 12}


def test_expected_cy_fractions():
    """Fixed vertices give 2/1, swapped pairs 4/2; anything else cannot match."""
    odd_a3 = ade_translation_quiver("A", 3, 1)
    assert expected_cy_fractions(odd_a3, "odd") == {"1": [4, 2], "2": [4, 2], "3": [2, 1]}

    odd_a4 = ade_translation_quiver("A", 4, 1)
    assert expected_cy_fractions(odd_a4, "odd") == {"1": [2, 1], "2": [2, 1]}

    odd_d5 = ade_translation_quiver("D", 5, 1)
    fractions = expected_cy_fractions(odd_d5, "odd")
    assert fractions["6"] == [2, 1]
    assert all(fractions[str(v)] == [4, 2] for v in range(6))

    even_a3 = ade_translation_quiver("A", 3, 0)
    assert set(map(tuple, expected_cy_fractions(even_a3, "even").values())) == {(2, 1)}

    cycled = even_a3.replace(tau={"1": "2", "2": "3", "3": "1"})
    assert expected_cy_fractions(cycled, "odd") == {"1": None, "2": None, "3": None}


@pytest.mark.parametrize("family,index", [("A", 1), ("A", 5), ("D", 5), ("D", 6), ("E", 6)])
def test_generator_cy_checks(family, index):
    cfg = SuiteConfig(krull_dims=(0,), dg_trunc=4)
    cy = [r for r in generator_task(cfg, family, index) if r.check.startswith("cy/")]
    assert [r.check for r in cy] == [f"cy/{family}{index}/even", f"cy/{family}{index}/odd"]
    assert all(r.passed for r in cy)


def test_check_result():
    ok = CheckResult.compare("x", {"dim": 1}, {"dim": 1}, 4)
    assert ok.passed
    assert ok.to_dict() == {
        "check": "x",
        "status": "pass",
        "expected": {"dim": 1},
        "actual": {"dim": 1},
        "L_used": 4,
    }

    failed = CheckResult.error("y", 1, QuiverError("boom"))
    assert not failed.passed
    assert failed.actual == {"error": "QuiverError", "message": "boom"}


def test_small_tasks():
    cfg = SuiteConfig(random_trials=10)
    assert all(r.passed for r in truncation_task(cfg))
    assert all(r.passed for r in k0_task(cfg))
    results = minimal_relations_task(cfg.replace(max_index=3))
    assert [r.check for r in results] == ["minimal-relations/A2", "minimal-relations/A3"]
    assert all(r.passed for r in results)


def test_report(tmp_path):
    cfg = SuiteConfig(out_dir=str(tmp_path))
    results = [
        CheckResult.compare("h0/A2/even", 4, 4, 3),
        CheckResult.compare("k0", 1, 2),
    ]
    report = SuiteReport(cfg, results, {"h0": 0.5, "k0": 0.1})
    assert not report.passed
    assert [r.check for r in report.failures()] == ["k0"]

    summary = report.summary()
    assert list(summary.columns) == ["check", "group", "status", "L_used"]
    assert list(summary["group"]) == ["h0", "k0"]

    path = report.write()
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    assert data["passed"] is False
    assert "timings" not in data
    with open(tmp_path / "timings.json", encoding="utf-8") as f:
        assert json.load(f) == {"h0": 0.5, "k0": 0.1}


def test_perturbation_task_compares_stabilization():
    """Both presentations must settle before their cohomology dims are compared."""
    [result] = perturbation_task(SuiteConfig(), "even-a3-scale")
    assert result.passed
    assert result.actual["stabilized"] == {"h0": True, "-2": True, "-1": True, "0": True}
    assert result.actual["window"].keys() == {"-2", "-1", "0"}
