import json

import pytest

from oavqe import cli, pauli


def test_spectrum_command(tmp_path):
    h = pauli.PauliSum(2, {"ZI": 1.0, "IZ": 0.5, "XX": 0.2})
    pauli_file = tmp_path / "h.txt"
    pauli_file.write_text(pauli.format_pauli_sum(h))
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"pauli_file": str(pauli_file),
                                  "family": "compact"}))
    rc = cli.main(["spectrum", "--config", str(config),
                   "--output-dir", str(tmp_path)])
    assert rc == cli.EXIT_OK
    lines = (tmp_path / "spectrum.csv").read_text().splitlines()
    assert lines[0] == "level,energy_vqe,energy_exact,abs_error"
    assert len(lines) == 5
    errors = [float(line.split(",")[-1]) for line in lines[1:]]
    assert max(errors) < 1e-6


def test_spectrum_requires_pauli_file(tmp_path):
    rc = cli.main(["spectrum", "--output-dir", str(tmp_path)])
    assert rc == cli.EXIT_CONFIG_ERROR


def test_unknown_optimizer_key_is_config_error(tmp_path):
    h = pauli.PauliSum(1, {"Z": 1.0})
    pauli_file = tmp_path / "h.txt"
    pauli_file.write_text(pauli.format_pauli_sum(h))
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"pauli_file": str(pauli_file),
                                  "optimizer": {"bogus": 1}}))
    rc = cli.main(["spectrum", "--config", str(config),
                   "--output-dir", str(tmp_path)])
    assert rc == cli.EXIT_CONFIG_ERROR


def test_bad_trotter_r_is_config_error(tmp_path):
    rc = cli.main(["band-structure", "--trotter-r", "nope",
                   "--output-dir", str(tmp_path)])
    assert rc == cli.EXIT_CONFIG_ERROR


def test_band_structure_small_run(tmp_path):
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"samples_per_segment": 1,
                                  "k_path": ["G", "X"]}))
    rc = cli.main(["band-structure", "--config", str(config),
                   "--output-dir", str(tmp_path)])
    assert rc == cli.EXIT_OK
    summary = json.loads((tmp_path / "band_structure.json").read_text())
    assert max(summary["worst_abs_error_per_band"]) < 1e-4
    lines = (tmp_path / "band_structure.csv").read_text().splitlines()
    assert len(lines) == 1 + 2 * 4  # header + 2 k-points x 4 bands


def test_verify_reports_all_checks(tmp_path, capsys):
    rc = cli.main(["verify", "--output-dir", str(tmp_path)])
    assert rc == cli.EXIT_OK
    report = json.loads((tmp_path / "verify.json").read_text())
    assert set(report) == {"fixture", "oracle_equivalence",
                           "trotter_scaling", "jw_anticommutators"}
    assert all(entry["passed"] for entry in report.values())
    out = capsys.readouterr().out
    assert out.count("PASS") == 4


def test_verify_skips_when_fixture_is_broken(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"geometries": []}')
    config = tmp_path / "cfg.json"
    config.write_text(json.dumps({"integrals": str(bad)}))
    rc = cli.main(["verify", "--config", str(config),
                   "--output-dir", str(tmp_path)])
    assert rc == cli.EXIT_VERIFY_FAIL
    report = json.loads((tmp_path / "verify.json").read_text())
    assert not report["fixture"]["passed"]
    assert report["oracle_equivalence"].get("skipped")
