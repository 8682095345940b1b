"""
Field containers and solver settings shared by every mapper.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from config import settings
from maze.models import Coord, MazeGrid
from utils.errors import DimensionMismatchError


def _frozen_array(values: np.ndarray, dtype) -> np.ndarray:
    array = np.array(values, dtype=dtype, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ScalarField:
    """
    One real value per cell, stored as a read-only (height, width) array.

    Cells equal to ``sentinel`` (when set) carry no value: they were never
    reached by the mapping process.
    """

    values: np.ndarray
    sentinel: Optional[float] = None

    def __post_init__(self) -> None:
        array = _frozen_array(self.values, np.float64)
        if array.ndim != 2:
            raise DimensionMismatchError(f"expected a 2-D array, got shape {array.shape}")
        object.__setattr__(self, "values", array)

    @classmethod
    def zeros(cls, grid: MazeGrid) -> "ScalarField":
        return cls(np.zeros(grid.shape))

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    def at(self, cell: Coord) -> float:
        return float(self.values[cell[1], cell[0]])

    def is_sentinel(self, cell: Coord) -> bool:
        return self.sentinel is not None and self.at(cell) == self.sentinel

    def check_matches(self, grid: MazeGrid) -> None:
        """
        Raises:
            DimensionMismatchError: field and grid shapes differ
        """
        if self.values.shape != grid.shape:
            raise DimensionMismatchError(
                f"field is {self.width}x{self.height}, grid is {grid.width}x{grid.height}"
            )

    def finite_on(self, grid: MazeGrid) -> bool:
        return bool(np.all(np.isfinite(self.values[grid.corridor_mask()])))


@dataclass(frozen=True, eq=False)
class VectorField:
    """Per-cell 2-vector; ``vx`` along columns, ``vy`` along rows (southwards)."""

    vx: np.ndarray
    vy: np.ndarray

    def __post_init__(self) -> None:
        vx = _frozen_array(self.vx, np.float64)
        vy = _frozen_array(self.vy, np.float64)
        if vx.shape != vy.shape:
            raise DimensionMismatchError(f"component shapes differ: {vx.shape} vs {vy.shape}")
        object.__setattr__(self, "vx", vx)
        object.__setattr__(self, "vy", vy)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.vx.shape  # type: ignore[return-value]

    def magnitude(self) -> np.ndarray:
        return np.hypot(self.vx, self.vy)

    def negated(self) -> "VectorField":
        return VectorField(-self.vx, -self.vy)


class TraceMode(str, Enum):
    ASCEND = "ascend"
    DESCEND = "descend"


class SolverConfig(BaseModel):
    """Successive over-relaxation settings for the masked Laplace solve."""

    model_config = ConfigDict(frozen=True)

    tolerance: float = Field(default=settings.SOR_TOLERANCE, gt=0)
    max_iters: int = Field(default=settings.SOR_MAX_ITERS, gt=0)
    omega: float = Field(default=settings.SOR_OMEGA, gt=0, lt=2)


class SolveReport(BaseModel):
    """Outcome of an iterative solve."""

    model_config = ConfigDict(frozen=True)

    iterations: int
    final_residual: float
    converged: bool
