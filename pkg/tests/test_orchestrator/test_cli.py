"""
Tests for the maze-mappers command line.
"""

import json

import pytest

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from maze.ascii import parse_ascii
from maze.oracle import corridor_edge_count
from orchestrator.cli import main
from tests.mazes import TWO_BRANCH


@pytest.fixture
def maze_file(tmp_path):
    """Write maze text to a file and return its path."""
    def write(text: str) -> str:
        path = tmp_path / "maze.txt"
        path.write_text(text)
        return str(path)
    return write


class TestGenerate:
    """Test cases for the generate command."""

    def test_stdout_is_a_perfect_maze(self, capsys):
        assert main(["generate", "--width", "11", "--height", "9", "--seed", "4"]) == 0
        grid = parse_ascii(capsys.readouterr().out)
        assert (grid.width, grid.height) == (11, 9)
        assert corridor_edge_count(grid) == sum(1 for _ in grid.corridor_cells()) - 1

    def test_deterministic_file(self, tmp_path):
        first, second = tmp_path / "a.txt", tmp_path / "b.txt"
        for out in (first, second):
            assert main(["generate", "--width", "21", "--height", "21", "--seed", "9",
                         "--braid", "0.5", "--out", str(out)]) == 0
        assert first.read_text() == second.read_text()

    def test_even_width(self, capsys):
        assert main(["generate", "--width", "4", "--height", "9", "--seed", "1"]) == 2
        assert capsys.readouterr().err.startswith("error:")

    def test_bad_braid(self):
        assert main(["generate", "--width", "5", "--height", "5", "--seed", "1", "--braid", "2"]) == 2


class TestSolve:
    """Test cases for the solve command."""

    def test_report(self, capsys, maze_file):
        assert main(["solve", "--maze", maze_file("S.D\n"), "--mapper", "lee"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["path_length"] == report["oracle_length"] == 3
        assert report["length_ratio"] == 1.0
        assert "error" not in report

    def test_report_file(self, capsys, maze_file, tmp_path):
        out = tmp_path / "report.json"
        assert main(["solve", "--maze", maze_file(TWO_BRANCH), "--mapper", "fluid",
                     "--report", str(out)]) == 0
        assert json.loads(out.read_text()) == json.loads(capsys.readouterr().out)

    def test_no_path(self, capsys, maze_file):
        assert main(["solve", "--maze", maze_file("S#D\n"), "--mapper", "electrical"]) == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_solver_failure(self, maze_file):
        code = main(["solve", "--maze", maze_file(TWO_BRANCH), "--mapper", "electrical",
                     "--max-iters", "1"])
        assert code == 3

    def test_marker_override(self, capsys, maze_file):
        assert main(["solve", "--maze", maze_file("S..D\n"), "--mapper", "lee",
                     "--source", "1,0"]) == 0
        assert json.loads(capsys.readouterr().out)["path_length"] == 3

    def test_marker_on_wall(self, maze_file):
        assert main(["solve", "--maze", maze_file("S#.D\n"), "--mapper", "lee",
                     "--source", "1,0"]) == 2

    def test_bad_maze_text(self, maze_file):
        assert main(["solve", "--maze", maze_file("S.?D\n"), "--mapper", "lee"]) == 2

    def test_missing_maze_file(self, tmp_path):
        assert main(["solve", "--maze", str(tmp_path / "none.txt"), "--mapper", "lee"]) == 2

    def test_unknown_mapper_flag(self, maze_file):
        assert main(["solve", "--maze", maze_file("S.D\n"), "--mapper", "sonar"]) == 2

    def test_config_layering(self, maze_file, tmp_path):
        """Test a flag overrides the value from the config file."""
        config = tmp_path / "pipelines.json"
        config.write_text(json.dumps({"solver": {"max_iters": 1}}))
        maze = maze_file(TWO_BRANCH)
        assert main(["solve", "--maze", maze, "--mapper", "electrical", "--config", str(config)]) == 3
        assert main(["solve", "--maze", maze, "--mapper", "electrical", "--config", str(config),
                     "--max-iters", "100000"]) == 0

    def test_bad_config(self, maze_file, tmp_path):
        config = tmp_path / "pipelines.json"
        config.write_text("[1, 2")
        assert main(["solve", "--maze", maze_file("S.D\n"), "--mapper", "lee",
                     "--config", str(config)]) == 2

    def test_render_with_snapshots(self, maze_file, tmp_path):
        out = tmp_path / "frames"
        assert main(["solve", "--maze", maze_file("S.D\n"), "--mapper", "chemotaxis",
                     "--render", str(out), "--snapshot-every", "1", "--scale", "1"]) == 0
        assert (out / "chemotaxis_0000000.pgm").read_bytes().startswith(b"P5\n3 1\n255\n")
        assert (out / "chemotaxis_path.ppm").exists()

    def test_bad_scale(self, maze_file):
        assert main(["solve", "--maze", maze_file("S.D\n"), "--mapper", "lee", "--scale", "0"]) == 2


class TestCompare:
    """Test cases for the compare command."""

    def test_sorted_reports(self, capsys, maze_file):
        code = main(["compare", "--maze", maze_file(TWO_BRANCH), "--mappers", "lee,fluid,electrical"])
        assert code == 0
        reports = json.loads(capsys.readouterr().out)
        assert [report["mapper"] for report in reports] == ["electrical", "fluid", "lee"]
        assert all(report["length_ratio"] == 1.0 for report in reports)

    def test_all_failed(self, capsys, maze_file):
        code = main(["compare", "--maze", maze_file(TWO_BRANCH), "--mappers", "electrical,fluid",
                     "--max-iters", "1"])
        assert code == 3
        reports = json.loads(capsys.readouterr().out)
        assert {report["error"] for report in reports} == {"NOT_CONVERGED"}

    def test_partial_failure_succeeds(self, capsys, maze_file):
        code = main(["compare", "--maze", maze_file(TWO_BRANCH), "--mappers", "electrical,lee",
                     "--max-iters", "1"])
        assert code == 0

    def test_no_path(self, maze_file):
        assert main(["compare", "--maze", maze_file("S#D\n"), "--mappers", "lee"]) == 1


class TestVoronoi:
    """Test cases for the voronoi command."""

    def test_summary_and_image(self, capsys, tmp_path):
        code = main(["voronoi", "--width", "21", "--height", "21", "--seeds", "5,10;15,10",
                     "--render", str(tmp_path), "--scale", "1"])
        assert code == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary == {"seeds": 2, "boundary_cells": 21, "labelled_cells": 441}
        assert (tmp_path / "voronoi.ppm").read_bytes().startswith(b"P6\n21 21\n255\n")

    def test_long_arena(self, capsys):
        code = main(["voronoi", "--width", "600", "--height", "3", "--seeds", "0,1;599,1"])
        assert code == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary == {"seeds": 2, "boundary_cells": 6, "labelled_cells": 1800}

    def test_one_seed(self):
        assert main(["voronoi", "--width", "5", "--height", "5", "--seeds", "1,1"]) == 2

    def test_seed_outside(self):
        assert main(["voronoi", "--width", "5", "--height", "5", "--seeds", "1,1;9,9"]) == 2

    def test_bad_seed_text(self):
        assert main(["voronoi", "--width", "5", "--height", "5", "--seeds", "1;2"]) == 2
