import json
import subprocess
import sys

import pytest

from kcover.cli import main
from kcover.graph import complete_graph, serialize_graph

K4 = "4\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n"
TRIANGLE = "3\n0 1 1\n0 2 1\n1 2 1\n"
SQUARE = "4\n0 1 2\n0 3 5\n1 2 3\n2 3 4\n"  # triangle-free


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(K4)
    return str(path)


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.txt"
    path.write_text(TRIANGLE)
    return str(path)


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.txt"
    path.write_text(SQUARE)
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def parse_kv(out):
    pairs = {}
    for line in out.strip().splitlines():
        key, _, value = line.partition("=")
        pairs[key] = value
    return pairs


class TestCover:
    def test_improved_cycle_on_k4_certified(self, capsys, k4_file):
        code, out = run_cli(
            capsys, "cover", k4_file, "--k", "3", "--kind", "cycle", "--algorithm", "improved"
        )
        assert code == 0
        report = parse_kv(out)
        assert report["certified"] == "true"
        assert report["algorithm"] == "improved-cycle"
        assert report["ratio_bound"] == "5/2"
        assert int(report["cover_weight"]) <= 5

    def test_improved_cycle_rejects_even_k(self, capsys, k4_file):
        code, _ = run_cli(
            capsys, "cover", k4_file, "--k", "4", "--kind", "cycle", "--algorithm", "improved"
        )
        assert code == 2

    def test_triangle_free_empty_cover(self, capsys, square_file):
        code, out = run_cli(capsys, "cover", square_file, "--k", "3", "--kind", "cycle")
        assert code == 0
        report = parse_kv(out)
        assert report["cover_weight"] == "0"
        assert report["cover"] == ""
        assert report["certified"] == "true"

    def test_structured_format(self, capsys, k4_file):
        code, out = run_cli(
            capsys,
            "cover",
            k4_file,
            "--k",
            "3",
            "--kind",
            "clique",
            "--algorithm",
            "improved",
            "--format",
            "structured",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["certified"] is True
        assert doc["ratio_bound"] == "5/2"
        assert all(len(e) == 2 for e in doc["cover"])

    def test_enumeration_cap_exit_code(self, capsys, k4_file):
        code, _ = run_cli(
            capsys, "cover", k4_file, "--k", "3", "--kind", "cycle", "--max-structures", "2"
        )
        assert code == 3

    def test_missing_file(self, capsys):
        code, _ = run_cli(capsys, "cover", "/nonexistent/g.txt", "--k", "3", "--kind", "cycle")
        assert code == 2

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("3\n0 0 1\n")
        code, _ = run_cli(capsys, "cover", str(bad), "--k", "3", "--kind", "cycle")
        assert code == 2

    def test_k_below_three_is_usage_error(self, capsys, k4_file):
        code, _ = run_cli(capsys, "cover", k4_file, "--k", "2", "--kind", "cycle")
        assert code == 2

    def test_env_override_max_structures(self, capsys, k4_file, monkeypatch):
        monkeypatch.setenv("KCOVER_MAX_STRUCTURES", "2")
        code, _ = run_cli(capsys, "cover", k4_file, "--k", "3", "--kind", "cycle")
        assert code == 3

    def test_flag_beats_env(self, capsys, k4_file, monkeypatch):
        monkeypatch.setenv("KCOVER_MAX_STRUCTURES", "2")
        code, _ = run_cli(
            capsys, "cover", k4_file, "--k", "3", "--kind", "cycle",
            "--max-structures", "1000",
        )
        assert code == 0


class TestExact:
    def test_k5_triangle_cover(self, capsys, tmp_path):
        path = tmp_path / "k5.txt"
        path.write_text(serialize_graph(complete_graph(5)))
        code, out = run_cli(capsys, "exact", str(path), "--k", "3", "--kind", "cycle")
        assert code == 0
        report = parse_kv(out)
        assert report["weight"] == "4"
        assert report["status"] == "optimal"

    def test_triangle(self, capsys, triangle_file):
        code, out = run_cli(capsys, "exact", triangle_file, "--k", "3", "--kind", "cycle")
        assert code == 0
        assert parse_kv(out)["weight"] == "1"

    def test_budget_exhaustion_exit_code(self, capsys, tmp_path):
        path = tmp_path / "k7.txt"
        path.write_text(serialize_graph(complete_graph(7)))
        code, out = run_cli(
            capsys, "exact", str(path), "--k", "3", "--kind", "cycle", "--node-budget", "2"
        )
        assert code == 3
        assert parse_kv(out)["status"] == "unsolved"

    def test_env_override_node_budget(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("KCOVER_NODE_BUDGET", "2")
        path = tmp_path / "k7.txt"
        path.write_text(serialize_graph(complete_graph(7)))
        code, _ = run_cli(capsys, "exact", str(path), "--k", "3", "--kind", "cycle")
        assert code == 3


class TestPack:
    def test_k7_perfect_packing(self, capsys, tmp_path):
        path = tmp_path / "k7.txt"
        path.write_text(serialize_graph(complete_graph(7)))
        code, out = run_cli(capsys, "pack", str(path), "--k", "3")
        assert code == 0
        report = parse_kv(out)
        assert report["count"] == "7"
        assert len(report["cliques"].split(",")) == 7

    def test_k4(self, capsys, k4_file):
        code, out = run_cli(capsys, "pack", k4_file, "--k", "3")
        assert code == 0
        assert parse_kv(out)["count"] == "1"


class TestRatioStudy:
    def test_small_table(self, capsys):
        code, out = run_cli(
            capsys, "ratio-study", "--k", "3", "--kind", "clique", "--n-range", "3:4"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n=3 tau=1 nu=1 tau_over_nu=1 tau_over_binom=1/3"
        assert lines[1] == "n=4 tau=2 nu=1 tau_over_nu=2 tau_over_binom=1/3"

    def test_k7_row_has_exact_fraction(self, capsys):
        code, out = run_cli(
            capsys, "ratio-study", "--k", "3", "--kind", "clique", "--n-range", "7:7"
        )
        assert code == 0
        assert "tau=9 nu=7 tau_over_nu=9/7" in out

    def test_unsolved_rows_marked(self, capsys):
        code, out = run_cli(
            capsys,
            "ratio-study",
            "--k",
            "3",
            "--kind",
            "clique",
            "--n-range",
            "6:7",
            "--node-budget",
            "2",
        )
        assert code == 3
        assert "status=unsolved" in out

    def test_bad_range(self, capsys):
        code, _ = run_cli(capsys, "ratio-study", "--k", "3", "--kind", "clique", "--n-range", "9")
        assert code == 2

    def test_structured(self, capsys):
        code, out = run_cli(
            capsys,
            "ratio-study",
            "--k",
            "3",
            "--kind",
            "clique",
            "--n-range",
            "3:5",
            "--format",
            "structured",
        )
        assert code == 0
        doc = json.loads(out)
        assert [row["tau"] for row in doc["rows"]] == [1, 2, 4]


class TestVerify:
    def test_triangle_single_edge_feasible(self, capsys, triangle_file, tmp_path):
        cover = tmp_path / "cover.txt"
        cover.write_text("3\n0 1\n")
        code, out = run_cli(
            capsys,
            "verify",
            triangle_file,
            "--k",
            "3",
            "--kind",
            "cycle",
            "--cover-file",
            str(cover),
        )
        assert code == 0
        assert parse_kv(out)["feasible"] == "true"

    def test_adjacent_pair_infeasible_on_k4(self, capsys, k4_file, tmp_path):
        cover = tmp_path / "cover.txt"
        cover.write_text("4\n0 1\n0 2\n")
        code, out = run_cli(
            capsys, "verify", k4_file, "--k", "3", "--kind", "cycle", "--cover-file", str(cover)
        )
        assert code == 1
        assert parse_kv(out)["feasible"] == "false"

    def test_empty_cover_feasible_without_structures(self, capsys, square_file, tmp_path):
        cover = tmp_path / "cover.txt"
        cover.write_text("4\n")
        code, out = run_cli(
            capsys, "verify", square_file, "--k", "3", "--kind", "cycle", "--cover-file", str(cover)
        )
        assert code == 0

    def test_foreign_edges_rejected(self, capsys, triangle_file, tmp_path):
        cover = tmp_path / "cover.txt"
        cover.write_text("5\n3 4\n")
        code, _ = run_cli(
            capsys, "verify", triangle_file, "--k", "3", "--kind", "cycle", "--cover-file", str(cover)
        )
        assert code == 2


class TestDeterminism:
    @pytest.mark.parametrize("fmt", ["text", "structured"])
    def test_cover_output_byte_identical(self, capsys, k4_file, fmt):
        args = [
            "cover", k4_file, "--k", "3", "--kind", "cycle",
            "--algorithm", "improved", "--format", fmt,
        ]
        _, first = run_cli(capsys, *args)
        _, second = run_cli(capsys, *args)
        assert first == second

    def test_all_commands_byte_identical(self, capsys, k4_file, tmp_path):
        cover = tmp_path / "cover.txt"
        cover.write_text("4\n0 3\n1 2\n")
        commands = [
            ["cover", k4_file, "--k", "3", "--kind", "clique"],
            ["exact", k4_file, "--k", "3", "--kind", "cycle"],
            ["pack", k4_file, "--k", "3"],
            ["ratio-study", "--k", "3", "--kind", "clique", "--n-range", "3:5"],
            ["verify", k4_file, "--k", "3", "--kind", "cycle", "--cover-file", str(cover)],
        ]
        for argv in commands:
            _, first = run_cli(capsys, *argv)
            _, second = run_cli(capsys, *argv)
            assert first == second, f"nondeterministic output for {argv}"


class TestSubprocessEntry:
    def test_module_invocation_and_exit_code(self, tmp_path):
        path = tmp_path / "k4.txt"
        path.write_text(K4)
        proc = subprocess.run(
            [sys.executable, "-m", "kcover.cli", "exact", str(path), "--k", "3", "--kind", "cycle"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "weight=2" in proc.stdout

    def test_wall_time_not_on_stdout(self, tmp_path):
        path = tmp_path / "k4.txt"
        path.write_text(K4)
        proc = subprocess.run(
            [sys.executable, "-m", "kcover.cli", "cover", str(path), "--k", "3", "--kind", "cycle"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert not any(line.startswith("wall_time") for line in proc.stdout.splitlines())
        assert any(line.startswith("wall_time_seconds=") for line in proc.stderr.splitlines())

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "kcover.cli", "cover"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2
