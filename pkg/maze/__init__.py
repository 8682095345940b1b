"""Maze representation, ASCII format, generation and the BFS oracle."""

from .ascii import open_arena, parse_ascii, serialize_ascii, with_markers
from .generator import generate
from .models import NEIGHBOR_OFFSETS, CellKind, Coord, GenConfig, MazeGrid, PathTrace
from .oracle import (
    UNREACHED,
    bfs_distances,
    corridor_degree,
    corridor_edge_count,
    is_connected,
    oracle_path,
)

__all__ = [
    'CellKind',
    'Coord',
    'GenConfig',
    'MazeGrid',
    'NEIGHBOR_OFFSETS',
    'PathTrace',
    'UNREACHED',
    'bfs_distances',
    'corridor_degree',
    'corridor_edge_count',
    'generate',
    'is_connected',
    'open_arena',
    'oracle_path',
    'parse_ascii',
    'serialize_ascii',
    'with_markers',
]
