import json

from click.testing import CliRunner

from cli import cli
from graph.build import is_connected
from graph.io import read_edge_list
from utils import read_signal


def test_gen_graph_sensor(tmp_path):
    """Test that gen-graph writes a connected edge list and a parameter sidecar."""
    out = tmp_path / "g.el"
    result = CliRunner().invoke(
        cli, ["gen-graph", "--type", "sensor", "--n", "100", "--seed", "1", "-o", str(out)]
    )
    assert result.exit_code == 0, result.output
    g = read_edge_list(str(out))
    assert g.n == 100
    assert is_connected(g)
    params = json.loads((tmp_path / "g.el.json").read_text())
    assert params == {"type": "sensor", "n": 100, "seed": 1, "knn": 6, "radius": None}


def test_gen_graph_is_deterministic(tmp_path):
    """Test that two identical invocations write identical files."""
    runner = CliRunner()
    for name in ["a.el", "b.el"]:
        result = runner.invoke(
            cli, ["gen-graph", "--type", "community", "--n", "40", "--communities", "2",
                  "--seed", "3", "-o", str(tmp_path / name)]
        )
        assert result.exit_code == 0, result.output
    assert (tmp_path / "a.el").read_bytes() == (tmp_path / "b.el").read_bytes()


def test_gen_graph_odd_n(tmp_path):
    """Test that an odd vertex count is a usage error naming OddVertexCount."""
    result = CliRunner().invoke(
        cli, ["gen-graph", "--type", "sensor", "--n", "101", "-o", str(tmp_path / "g.el")]
    )
    assert result.exit_code == 2
    assert "OddVertexCount" in result.output


def test_gen_graph_seed_from_env(tmp_path):
    """Test the SGFB_SEED fallback."""
    runner = CliRunner()
    runner.invoke(cli, ["gen-graph", "--type", "sensor", "--n", "20", "--seed", "9",
                        "-o", str(tmp_path / "a.el")])
    result = runner.invoke(
        cli, ["gen-graph", "--type", "sensor", "--n", "20", "-o", str(tmp_path / "b.el")],
        env={"SGFB_SEED": "9"},
    )
    assert result.exit_code == 0, result.output
    assert (tmp_path / "a.el").read_bytes() == (tmp_path / "b.el").read_bytes()


def test_gen_graph_connectivity_failure(tmp_path):
    """Test that a generator that cannot connect exits with 1."""
    result = CliRunner().invoke(
        cli, ["gen-graph", "--type", "community", "--n", "20", "--p-in", "0", "--p-out", "0",
              "-o", str(tmp_path / "g.el")]
    )
    assert result.exit_code == 1


def test_gen_signal(tmp_path):
    """Test a unit-norm smooth signal on a generated graph."""
    out = tmp_path / "f.txt"
    result = CliRunner().invoke(cli, ["gen-signal", "--graph", "sensor:100:1", "-o", str(out)])
    assert result.exit_code == 0, result.output
    values = read_signal(str(out))
    assert values.size == 100
    assert abs(sum(values**2) - 1) <= 1e-12
