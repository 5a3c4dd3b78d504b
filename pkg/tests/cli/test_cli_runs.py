import json

import pytest
from click.testing import CliRunner

from cli import cli
from cli.commons import read_manifest
from experiments.io import read_nla_csv


def test_nla_writes_monotone_curves(tmp_path):
    """Test a 10-row curve per kernel, monotone for the exact ideal bank."""
    out = tmp_path / "nla"
    result = CliRunner().invoke(
        cli,
        ["nla", "--graph", "sensor:100:1", "-k", "ideal", "-k", "butterworth:5",
         "--fractions", "0.05:0.05:0.5", "-o", str(out)],
    )
    assert result.exit_code == 0, result.output
    curve = read_nla_csv(str(out / "nla_I.csv"))
    assert len(curve.fractions) == 10
    assert curve.is_monotone()
    assert (out / "nla_B5.csv").exists()

    manifest = read_manifest(str(out / "manifest.json"))
    assert manifest.command == "nla"
    assert manifest.kernel == ["ideal", "butterworth:5"]
    assert manifest.outputs == ["nla_I.csv", "nla_B5.csv"]


def test_nla_bad_fractions(tmp_path):
    """Test that fractions outside (0, 1] fail."""
    result = CliRunner().invoke(
        cli, ["nla", "--graph", "sensor:100:1", "--fractions", "abc", "-o", str(tmp_path)]
    )
    assert result.exit_code == 2


def test_denoise_writes_results(tmp_path):
    """Test the JSON summary, per-run CSV and manifest of a short run."""
    out = tmp_path / "dn"
    result = CliRunner().invoke(
        cli,
        ["denoise", "--graph", "sensor:100:1", "--sigma", "1", "--runs", "20", "-o", str(out)],
    )
    assert result.exit_code == 0, result.output
    summary = json.loads((out / "denoise_I.json").read_text())
    assert summary["runs"] == 20
    assert summary["sigma"] == 1.0
    assert (out / summary["per_run_path"]).exists()
    assert (out / "denoise_B5.json").exists()
    assert read_manifest(str(out / "manifest.json")).command == "denoise"


def test_denoise_zero_runs(tmp_path):
    """Test that --runs 0 is a usage error."""
    result = CliRunner().invoke(
        cli, ["denoise", "--graph", "sensor:100:1", "--sigma", "1", "--runs", "0", "-o", str(tmp_path)]
    )
    assert result.exit_code == 2


@pytest.mark.parametrize(
    "args",
    [
        ["nla", "--graph", "sensor:100:1", "-k", "ideal:0.1", "--signal-kind", "localized"],
        ["denoise", "--graph", "sensor:100", "--sigma", "0.5", "--runs", "10", "--threads", "3"],
    ],
)
def test_outputs_are_bit_identical(tmp_path, args):
    """Test that two runs with the same arguments write identical files."""
    runner = CliRunner()
    contents = []
    for name in ["first", "second"]:
        out = tmp_path / name
        result = runner.invoke(cli, [*args, "--seed", "4", "-o", str(out)])
        assert result.exit_code == 0, result.output
        contents.append({path.name: path.read_bytes() for path in sorted(out.iterdir())})
    assert contents[0] == contents[1]
    assert "manifest.json" in contents[0]
