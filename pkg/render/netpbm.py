"""
Binary PGM (P5) and PPM (P6) rendering of fields, paths and Voronoi labels.

Every cell becomes a ``scale`` x ``scale`` block of identical pixels.
"""

import io
from dataclasses import dataclass
from typing import AbstractSet, Optional, Tuple

import numpy as np
from PIL import Image

from config import settings
from field.models import ScalarField
from maze.models import Coord, MazeGrid, PathTrace
from utils.errors import BadInputError

RGB = Tuple[int, int, int]

WALL_RGB: RGB = (0, 0, 0)
CORRIDOR_RGB: RGB = (255, 255, 255)
PATH_RGB: RGB = (255, 0, 0)
SOURCE_RGB: RGB = (0, 255, 0)
DESTINATION_RGB: RGB = (0, 0, 255)
BOUNDARY_RGB: RGB = (0, 0, 0)

PALETTE: Tuple[RGB, ...] = (
    (230, 25, 75),
    (60, 180, 75),
    (255, 225, 25),
    (0, 130, 200),
    (245, 130, 48),
    (145, 30, 180),
    (70, 240, 240),
    (240, 50, 230),
    (210, 245, 60),
    (250, 190, 190),
    (0, 128, 128),
    (170, 110, 40),
)


@dataclass(frozen=True, eq=False)
class Raster:
    """8-bit image, row-major; ``pixels`` is (h, w) for gray or (h, w, 3) for RGB."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        pixels = np.ascontiguousarray(self.pixels, dtype=np.uint8)
        if pixels.ndim not in (2, 3) or (pixels.ndim == 3 and pixels.shape[2] != 3):
            raise BadInputError(f"raster must be (h, w) or (h, w, 3), got {pixels.shape}")
        pixels.setflags(write=False)
        object.__setattr__(self, "pixels", pixels)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def is_rgb(self) -> bool:
        return self.pixels.ndim == 3

    def to_bytes(self) -> bytes:
        """Binary netpbm: "P5" or "P6", then "W H", then maxval 255, then raw pixels."""
        buffer = io.BytesIO()
        Image.fromarray(self.pixels).save(buffer, format="PPM")
        return buffer.getvalue()


def _check_scale(scale: int) -> None:
    if scale < 1:
        raise BadInputError(f"scale must be at least 1, got {scale}")


def _upscale(pixels: np.ndarray, scale: int) -> np.ndarray:
    return np.repeat(np.repeat(pixels, scale, axis=0), scale, axis=1)


def quantize(field: ScalarField, grid: MazeGrid) -> np.ndarray:
    """
    Min-max normalise the field's valid corridor values to 0..255.

    Valid means corridor, finite and not the sentinel. A constant field maps
    to 0. Everything else is 0.
    """
    field.check_matches(grid)
    values = field.values
    valid = grid.corridor_mask() & np.isfinite(values)
    if field.sentinel is not None:
        valid &= values != field.sentinel

    gray = np.zeros(grid.shape, dtype=np.uint8)
    if not valid.any():
        return gray
    low = float(values[valid].min())
    span = float(values[valid].max()) - low
    if span <= 0.0:
        return gray
    normalised = np.clip((values[valid] - low) / span, 0.0, 1.0)
    gray[valid] = np.floor(normalised * 255.0).astype(np.uint8)
    return gray


def render_scalar_pgm(
    field: ScalarField, grid: MazeGrid, scale: int = settings.DEFAULT_SCALE
) -> bytes:
    """
    Grayscale heat map of a field.

    Raises:
        DimensionMismatchError: field and grid shapes differ
        BadInputError: scale < 1
    """
    _check_scale(scale)
    return Raster(_upscale(quantize(field, grid), scale)).to_bytes()


def _paint(image: np.ndarray, cell: Coord, colour: RGB) -> None:
    image[cell[1], cell[0]] = colour


def render_overlay_ppm(
    grid: MazeGrid,
    path: Optional[PathTrace] = None,
    field: Optional[ScalarField] = None,
    scale: int = settings.DEFAULT_SCALE,
) -> bytes:
    """
    Colour image of the maze with an optional gray field and a red path.

    Marker colours beat the path colour, which beats the field gray.

    Raises:
        DimensionMismatchError: field and grid shapes differ
        PathOffGridError: the path leaves the corridors
        BadInputError: scale < 1
    """
    _check_scale(scale)
    mask = grid.corridor_mask()
    image = np.zeros((*grid.shape, 3), dtype=np.uint8)
    if field is not None:
        image[mask] = quantize(field, grid)[mask][:, None]
    else:
        image[mask] = CORRIDOR_RGB

    if path is not None:
        path.check_on(grid)
        for cell in path.cells:
            _paint(image, cell, PATH_RGB)
    _paint(image, grid.source, SOURCE_RGB)
    _paint(image, grid.destination, DESTINATION_RGB)
    return Raster(_upscale(image, scale)).to_bytes()


def render_labels_ppm(
    labels: ScalarField,
    grid: MazeGrid,
    boundary: AbstractSet[Coord] = frozenset(),
    scale: int = settings.DEFAULT_SCALE,
) -> bytes:
    """
    Voronoi colouring: seed i gets ``PALETTE[i % 12]``; walls, unlabelled
    and boundary cells are black.
    """
    _check_scale(scale)
    labels.check_matches(grid)
    palette = np.array(PALETTE, dtype=np.uint8)
    values = labels.values.astype(np.int64)

    labelled = grid.corridor_mask() & (values >= 0)
    image = np.zeros((*grid.shape, 3), dtype=np.uint8)
    image[labelled] = palette[values[labelled] % len(PALETTE)]
    for cell in boundary:
        if grid.in_bounds(cell):
            _paint(image, cell, BOUNDARY_RGB)
    return Raster(_upscale(image, scale)).to_bytes()
