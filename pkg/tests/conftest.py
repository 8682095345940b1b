"""
Shared fixtures: small hand-drawn mazes and seeded generated ones.
"""

import sys
from pathlib import Path

import pytest
from hypothesis import settings as hypothesis_settings

sys.path.insert(0, str(Path(__file__).parent.parent))

from maze.ascii import parse_ascii
from maze.generator import generate
from maze.models import GenConfig, MazeGrid
from tests.mazes import STUB_MAZE, TWO_BRANCH, corridor_text

hypothesis_settings.register_profile("repo", max_examples=25, deadline=None)
hypothesis_settings.load_profile("repo")


@pytest.fixture
def line_maze() -> MazeGrid:
    return parse_ascii("S.D")


@pytest.fixture
def walled_maze() -> MazeGrid:
    return parse_ascii("S#D")


@pytest.fixture
def two_branch_maze() -> MazeGrid:
    return parse_ascii(TWO_BRANCH)


@pytest.fixture
def stub_maze() -> MazeGrid:
    return parse_ascii(STUB_MAZE)


@pytest.fixture
def corridor_maze():
    """Factory for straight 1xN corridors."""
    return lambda length: parse_ascii(corridor_text(length))


@pytest.fixture
def perfect_maze() -> MazeGrid:
    return generate(GenConfig(width=15, height=15, seed=3))


@pytest.fixture
def braided_maze() -> MazeGrid:
    return generate(GenConfig(width=15, height=15, seed=11, braid_fraction=0.5))
