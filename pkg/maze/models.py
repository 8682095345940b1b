"""
Pydantic models for maze grids, traced paths and generator settings.
"""

from enum import Enum
from typing import Iterator, List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from utils.errors import InvalidMazeError, PathOffGridError

Coord = Tuple[int, int]  # (col, row)

# N, E, S, W as (dx, dy); rows grow southwards
NEIGHBOR_OFFSETS: Tuple[Coord, ...] = ((0, -1), (1, 0), (0, 1), (-1, 0))


class CellKind(str, Enum):
    WALL = "#"
    CORRIDOR = "."


class MazeGrid(BaseModel):
    """Rectangular lattice of wall/corridor cells with a source and a destination."""

    model_config = ConfigDict(frozen=True)

    width: int = Field(gt=0)
    height: int = Field(gt=0)
    cells: Tuple[CellKind, ...]  # row-major
    source: Coord
    destination: Coord

    @model_validator(mode="after")
    def _check_invariants(self) -> "MazeGrid":
        if len(self.cells) != self.width * self.height:
            raise InvalidMazeError(
                f"expected {self.width * self.height} cells, got {len(self.cells)}"
            )
        for name, cell in (("source", self.source), ("destination", self.destination)):
            if not self.in_bounds(cell):
                raise InvalidMazeError(f"{name} {cell} is outside the grid")
            if not self.is_corridor(cell):
                raise InvalidMazeError(f"{name} {cell} is a wall")
        if self.source == self.destination:
            raise InvalidMazeError("source and destination must differ")
        return self

    def in_bounds(self, cell: Coord) -> bool:
        x, y = cell
        return 0 <= x < self.width and 0 <= y < self.height

    def kind(self, cell: Coord) -> CellKind:
        x, y = cell
        return self.cells[y * self.width + x]

    def is_corridor(self, cell: Coord) -> bool:
        return self.in_bounds(cell) and self.kind(cell) is CellKind.CORRIDOR

    def neighbors(self, cell: Coord) -> List[Coord]:
        """Corridor 4-neighbours of a cell in N, E, S, W order."""
        x, y = cell
        result = []
        for dx, dy in NEIGHBOR_OFFSETS:
            candidate = (x + dx, y + dy)
            if self.is_corridor(candidate):
                result.append(candidate)
        return result

    def corridor_cells(self) -> Iterator[Coord]:
        """Corridor cells in row-major scan order."""
        for y in range(self.height):
            for x in range(self.width):
                if self.cells[y * self.width + x] is CellKind.CORRIDOR:
                    yield (x, y)

    def corridor_mask(self) -> np.ndarray:
        """Boolean (height, width) array, True on corridor cells."""
        flat = np.fromiter(
            (c is CellKind.CORRIDOR for c in self.cells), dtype=bool, count=len(self.cells)
        )
        return flat.reshape(self.height, self.width)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.height, self.width)


class PathTrace(BaseModel):
    """Ordered corridor cells from a source to a destination."""

    model_config = ConfigDict(frozen=True)

    cells: Tuple[Coord, ...]

    @field_validator("cells")
    @classmethod
    def _check_chain(cls, v: Tuple[Coord, ...]) -> Tuple[Coord, ...]:
        if not v:
            raise ValueError("a path needs at least one cell")
        if len(set(v)) != len(v):
            raise ValueError("path revisits a cell")
        for (ax, ay), (bx, by) in zip(v, v[1:]):
            if abs(ax - bx) + abs(ay - by) != 1:
                raise ValueError(f"cells {(ax, ay)} and {(bx, by)} are not 4-neighbours")
        return v

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def start(self) -> Coord:
        return self.cells[0]

    @property
    def end(self) -> Coord:
        return self.cells[-1]

    def check_on(self, grid: MazeGrid) -> None:
        """
        Verify the path lies on corridor cells of a grid.

        Raises:
            PathOffGridError: a cell is outside the grid or on a wall
        """
        for cell in self.cells:
            if not grid.is_corridor(cell):
                raise PathOffGridError(f"path cell {cell} is not a corridor cell")


class GenConfig(BaseModel):
    """Settings for the seeded maze generator."""

    model_config = ConfigDict(frozen=True)

    width: int
    height: int
    seed: int = Field(ge=0, lt=2**64)
    braid_fraction: float = Field(default=0.0, ge=0.0, le=1.0)
