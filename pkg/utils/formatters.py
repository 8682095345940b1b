"""
Report and message formatting utilities.
"""

import json
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple


def format_report_json(report: Dict[str, Any]) -> str:
    """
    Serialise one run report as a single JSON object.

    Keys are sorted so identical runs give identical text apart from timing.

    Args:
        report: Report dictionary

    Returns:
        JSON text with a trailing newline
    """
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def format_reports_json(reports: Iterable[Dict[str, Any]]) -> str:
    """Serialise a batch of run reports as a JSON array."""
    return json.dumps(list(reports), sort_keys=True, indent=2) + "\n"


def format_path_summary(cells: Sequence[Tuple[int, int]], limit: int = 6) -> str:
    """
    Short human-readable description of a traced path.

    Args:
        cells: Path cells from start to end
        limit: Cells shown before eliding the middle

    Returns:
        e.g. "12 cells: (1,1) -> (2,1) -> ... -> (9,9)"
    """
    if not cells:
        return "empty path"
    shown = [f"({x},{y})" for x, y in cells]
    if len(shown) > limit:
        shown = shown[:limit // 2] + ["..."] + shown[-(limit // 2):]
    return f"{len(cells)} cells: " + " -> ".join(shown)


def format_error_message(error_code: str, details: Optional[str] = None) -> str:
    """
    Format a command-line error message.

    Args:
        error_code: Error code
        details: Optional error details

    Returns:
        Formatted error message
    """
    error_messages = {
        "NO_PATH": "No path connects the source and the destination.",
        "UNREACHABLE": "The wavefront never reached the source.",
        "BAD_INPUT": "The input is not valid.",
        "INVALID_MAZE": "The maze is not valid.",
        "NOT_CONVERGED": "The field solver did not converge.",
        "WAVE_DIED": "The excitation wave died out before reaching the source.",
    }

    message = error_messages.get(error_code, f"{error_code}.")

    if details:
        message += f" {details}"

    return f"error: {message}"
