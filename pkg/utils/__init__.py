"""Utility functions package."""

from .validators import *
from .formatters import *

__all__ = [
    'parse_coordinate',
    'parse_seeds',
    'validate_in_bounds',
    'validate_seeds',
    'validate_positive',
    'format_report_json',
    'format_reports_json',
    'format_path_summary',
    'format_error_message',
]
