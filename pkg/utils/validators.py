"""
Command-line input validation utilities.
"""

import re
from typing import List, Optional, Tuple

from .errors import BadInputError

Coord = Tuple[int, int]

_COORD_PATTERN = re.compile(r'^\s*(-?\d+)\s*,\s*(-?\d+)\s*$')


def parse_coordinate(text: str) -> Coord:
    """
    Parse an "x,y" coordinate.

    Args:
        text: Column and row separated by a comma

    Returns:
        (x, y) tuple

    Raises:
        BadInputError: text is not two comma-separated integers
    """
    match = _COORD_PATTERN.match(text)
    if not match:
        raise BadInputError(f"expected a coordinate like '3,5', got {text!r}")
    return int(match.group(1)), int(match.group(2))


def parse_seeds(text: str) -> List[Coord]:
    """
    Parse a seed list "x1,y1;x2,y2;...".

    Empty entries (a trailing ';') are ignored.

    Raises:
        BadInputError: an entry is not a coordinate
    """
    return [parse_coordinate(part) for part in text.split(';') if part.strip()]


def validate_in_bounds(cell: Coord, width: int, height: int) -> bool:
    """
    Check a coordinate lies on a width x height grid.

    Returns:
        True if 0 <= x < width and 0 <= y < height
    """
    x, y = cell
    return 0 <= x < width and 0 <= y < height


def validate_seeds(seeds: List[Coord], width: int, height: int) -> Optional[str]:
    """
    Check seeds for the Voronoi arena.

    Returns:
        None when valid, otherwise a message naming the first problem
    """
    if len(set(seeds)) < 2:
        return f"need at least 2 distinct seeds, got {len(set(seeds))}"
    for seed in seeds:
        if not validate_in_bounds(seed, width, height):
            return f"seed {seed} is outside the {width}x{height} arena"
    return None


def validate_positive(name: str, value: Optional[float]) -> None:
    """
    Raises:
        BadInputError: value is set and not positive
    """
    if value is not None and value <= 0:
        raise BadInputError(f"{name} must be positive, got {value}")
