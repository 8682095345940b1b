"""
Tests for formatting utilities.
"""

import json

import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from utils.formatters import (
    format_error_message, format_path_summary, format_report_json, format_reports_json
)


class TestFormatters:
    """Test cases for formatting utilities."""

    def test_format_report_json(self):
        """Test report serialisation is key-sorted with a trailing newline."""
        text = format_report_json({"mapper": "lee", "converged": True, "error": None})
        assert text.endswith("}\n")
        assert text.index('"converged"') < text.index('"error"') < text.index('"mapper"')
        assert json.loads(text)["error"] is None

    def test_format_reports_json(self):
        text = format_reports_json(iter([{"mapper": "a"}, {"mapper": "b"}]))
        assert [item["mapper"] for item in json.loads(text)] == ["a", "b"]

    def test_format_path_summary(self):
        """Test path summary formatting."""
        assert format_path_summary([]) == "empty path"
        assert format_path_summary([(0, 0), (1, 0)]) == "2 cells: (0,0) -> (1,0)"
        long = [(x, 0) for x in range(10)]
        assert format_path_summary(long) == "10 cells: (0,0) -> (1,0) -> (2,0) -> ... -> (7,0) -> (8,0) -> (9,0)"

    def test_format_error_message(self):
        """Test error message formatting."""
        assert format_error_message("NO_PATH") == "error: No path connects the source and the destination."
        assert format_error_message("BAD_INPUT", "bad seed") == "error: The input is not valid. bad seed"
        assert format_error_message("CFL_VIOLATION") == "error: CFL_VIOLATION."
