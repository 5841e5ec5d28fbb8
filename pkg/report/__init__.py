"""Reporters: console, CSV, JSON manifest and Excel output."""

from .console_reporter import ConsoleReporter
from .csv_reporter import (
    RESULT_COLUMNS,
    VALIDATION_COLUMNS,
    CSVReporter,
    result_row,
    validation_row,
)
from .json_reporter import JSONReporter
from .xlsx_reporter import XLSXReporter

__all__ = [
    "ConsoleReporter",
    "RESULT_COLUMNS",
    "VALIDATION_COLUMNS",
    "CSVReporter",
    "result_row",
    "validation_row",
    "JSONReporter",
    "XLSXReporter",
]
