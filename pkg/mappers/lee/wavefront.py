"""
Lee wavefront labelling and backtrace.

The whole front advances in parallel: at layer k every unlabelled corridor
cell touching the layer k-1 front receives label k.
"""

import logging
from typing import Tuple

import numpy as np

from field.diffusion import dilate_front
from field.models import ScalarField
from maze.models import NEIGHBOR_OFFSETS, Coord, MazeGrid, PathTrace
from maze.oracle import UNREACHED
from utils.errors import UnreachableError

logger = logging.getLogger(__name__)


def lee_wave(grid: MazeGrid) -> Tuple[ScalarField, int]:
    """
    Label every corridor cell with its step count from the destination.

    Returns:
        (labels, layers) where layers is the number of wavefront expansions
    """
    mask = grid.corridor_mask()
    labels = np.full(grid.shape, UNREACHED, dtype=np.int64)
    front = np.zeros(grid.shape, dtype=bool)
    dx, dy = grid.destination
    front[dy, dx] = True
    labels[dy, dx] = 0

    layer = 0
    while front.any():
        layer += 1
        front = dilate_front(front) & mask & (labels == UNREACHED)
        labels[front] = layer

    logger.debug(f"Lee wave settled after {layer - 1} layers")
    return ScalarField(labels, sentinel=UNREACHED), layer - 1


def lee_map(grid: MazeGrid) -> ScalarField:
    """
    Lee wavefront labels: 0 at the destination, hop count elsewhere.

    Unreachable corridor cells and walls hold UNREACHED.
    """
    labels, _ = lee_wave(grid)
    return labels


def lee_trace(labels: ScalarField, grid: MazeGrid, source: Coord) -> PathTrace:
    """
    Backtrace from source along labels that drop by exactly one per step.

    Args:
        labels: Output of lee_map on this grid
        grid: The labelled maze
        source: Start of the trace

    Returns:
        Path of label(source) + 1 cells ending at label 0

    Raises:
        UnreachableError: the source carries the UNREACHED label
    """
    labels.check_matches(grid)
    if not grid.is_corridor(source) or labels.at(source) == UNREACHED:
        raise UnreachableError(f"source {source} was not reached by the wavefront")

    cells = [source]
    x, y = source
    current = int(labels.at(source))
    while current > 0:
        for ox, oy in NEIGHBOR_OFFSETS:
            nxt = (x + ox, y + oy)
            if grid.is_corridor(nxt) and int(labels.at(nxt)) == current - 1:
                break
        else:
            raise UnreachableError(f"label gap at {(x, y)}: no neighbour labelled {current - 1}")
        cells.append(nxt)
        x, y = nxt
        current -= 1
    return PathTrace(cells=tuple(cells))
