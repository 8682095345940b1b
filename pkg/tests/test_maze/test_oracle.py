"""
Tests for the BFS oracle and corridor-graph helpers.
"""

import pytest

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from maze.ascii import parse_ascii
from maze.oracle import (
    UNREACHED,
    bfs_distances,
    corridor_degree,
    corridor_edge_count,
    is_connected,
    oracle_path,
)
from utils.errors import FromIsWallError, NoPathError


class TestBfsDistances:
    """Test cases for bfs_distances."""

    def test_line(self, line_maze):
        distances = bfs_distances(line_maze, line_maze.destination)
        assert distances.tolist() == [[2, 1, 0]]

    def test_walls_unreached(self, walled_maze):
        """Test walls and sealed cells hold UNREACHED."""
        distances = bfs_distances(walled_maze, walled_maze.source)
        assert distances.tolist() == [[0, UNREACHED, UNREACHED]]

    def test_from_wall(self, walled_maze):
        with pytest.raises(FromIsWallError):
            bfs_distances(walled_maze, (1, 0))


class TestOraclePath:
    """Test cases for oracle_path."""

    def test_line(self, line_maze):
        assert oracle_path(line_maze).cells == ((0, 0), (1, 0), (2, 0))

    def test_two_branch_takes_short_branch(self, two_branch_maze):
        """Test the oracle goes along the bottom row."""
        path = oracle_path(two_branch_maze)
        assert len(path) == 8
        assert (2, 4) in path.cells

    def test_no_path(self, walled_maze):
        """Test a sealed destination raises with exit code 1."""
        with pytest.raises(NoPathError) as info:
            oracle_path(walled_maze)
        assert info.value.exit_code == 1

    def test_path_length_matches_distance(self, perfect_maze):
        distances = bfs_distances(perfect_maze, perfect_maze.source)
        dx, dy = perfect_maze.destination
        assert len(oracle_path(perfect_maze)) == distances[dy, dx] + 1


class TestGraphHelpers:
    """Test cases for corridor_degree, corridor_edge_count and is_connected."""

    def test_degree(self):
        grid = parse_ascii(".S.\n#..\n.D.")
        assert corridor_degree(grid, (1, 1)) == 3
        assert corridor_degree(grid, (0, 2)) == 1

    def test_edge_count(self, two_branch_maze):
        """Test the two-branch loop has one more edge than a tree."""
        cells = int(two_branch_maze.corridor_mask().sum())
        assert corridor_edge_count(two_branch_maze) == cells

    def test_connected(self, two_branch_maze, walled_maze):
        assert is_connected(two_branch_maze)
        assert not is_connected(walled_maze)
