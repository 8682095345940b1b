"""
ASCII maze format: '#' wall, '.' corridor, 'S' source, 'D' destination.
"""

from typing import List, Optional

from utils.errors import (
    BadCharError,
    DuplicateMarkerError,
    MissingMarkerError,
    RaggedRowsError,
)

from .models import CellKind, Coord, MazeGrid

SOURCE_CHAR = "S"
DESTINATION_CHAR = "D"


def parse_ascii(text: str) -> MazeGrid:
    """
    Parse an ASCII maze.

    Args:
        text: Newline-separated rows; a single trailing newline is allowed

    Returns:
        Parsed MazeGrid

    Raises:
        RaggedRowsError: rows of unequal length
        MissingMarkerError: no 'S' or no 'D'
        DuplicateMarkerError: more than one 'S' or 'D'
        BadCharError: any character outside {#, ., S, D}
    """
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise MissingMarkerError("empty maze text")

    rows = text.split("\n")
    width = len(rows[0])
    for index, row in enumerate(rows):
        if len(row) != width:
            raise RaggedRowsError(
                f"row {index} has length {len(row)}, expected {width}"
            )

    cells: List[CellKind] = []
    source: Optional[Coord] = None
    destination: Optional[Coord] = None

    for y, row in enumerate(rows):
        for x, char in enumerate(row):
            if char == "#":
                cells.append(CellKind.WALL)
            elif char == ".":
                cells.append(CellKind.CORRIDOR)
            elif char == SOURCE_CHAR:
                if source is not None:
                    raise DuplicateMarkerError(f"second '{SOURCE_CHAR}' at {(x, y)}")
                source = (x, y)
                cells.append(CellKind.CORRIDOR)
            elif char == DESTINATION_CHAR:
                if destination is not None:
                    raise DuplicateMarkerError(f"second '{DESTINATION_CHAR}' at {(x, y)}")
                destination = (x, y)
                cells.append(CellKind.CORRIDOR)
            else:
                raise BadCharError(f"unexpected character {char!r} at {(x, y)}")

    if source is None:
        raise MissingMarkerError(f"no '{SOURCE_CHAR}' marker")
    if destination is None:
        raise MissingMarkerError(f"no '{DESTINATION_CHAR}' marker")

    return MazeGrid(
        width=width,
        height=len(rows),
        cells=tuple(cells),
        source=source,
        destination=destination,
    )


def serialize_ascii(grid: MazeGrid) -> str:
    """Inverse of parse_ascii; every row is newline-terminated."""
    lines = []
    for y in range(grid.height):
        chars = []
        for x in range(grid.width):
            if (x, y) == grid.source:
                chars.append(SOURCE_CHAR)
            elif (x, y) == grid.destination:
                chars.append(DESTINATION_CHAR)
            else:
                chars.append(grid.kind((x, y)).value)
        lines.append("".join(chars) + "\n")
    return "".join(lines)


def open_arena(
    width: int,
    height: int,
    source: Optional[Coord] = None,
    destination: Optional[Coord] = None,
) -> MazeGrid:
    """
    Build an obstacle-free grid.

    Args:
        width: Arena width in cells
        height: Arena height in cells
        source: Source cell (defaults to the top-left corner)
        destination: Destination cell (defaults to the bottom-right corner)

    Returns:
        All-corridor MazeGrid
    """
    return MazeGrid(
        width=width,
        height=height,
        cells=(CellKind.CORRIDOR,) * (width * height),
        source=source if source is not None else (0, 0),
        destination=destination if destination is not None else (width - 1, height - 1),
    )


def with_markers(
    grid: MazeGrid,
    source: Optional[Coord] = None,
    destination: Optional[Coord] = None,
) -> MazeGrid:
    """Copy of a grid with relocated source and/or destination."""
    return MazeGrid(
        width=grid.width,
        height=grid.height,
        cells=grid.cells,
        source=source if source is not None else grid.source,
        destination=destination if destination is not None else grid.destination,
    )
