"""Excel workbook for sweeps."""

from pathlib import Path
from typing import List, Optional, Sequence, Union

from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill
from openpyxl.utils import get_column_letter

from engines.base import Flag, ScenarioContext, Severity
from report.csv_reporter import RESULT_COLUMNS, result_row


class XLSXReporter:
    """Write sweep rows and flags to an Excel workbook."""

    # Severity fill colors
    SEVERITY_FILLS = {
        Severity.ERROR: PatternFill(start_color="FFCCCC", end_color="FFCCCC", fill_type="solid"),
        Severity.WARNING: PatternFill(start_color="FFFFCC", end_color="FFFFCC", fill_type="solid"),
        Severity.INFO: PatternFill(start_color="CCE5FF", end_color="CCE5FF", fill_type="solid"),
    }

    HEADER_FONT = Font(bold=True, color="FFFFFF")
    HEADER_FILL = PatternFill(start_color="305496", end_color="305496", fill_type="solid")

    FLAG_COLUMNS = [
        ("point", "Point", 8),
        ("severity", "Severity", 12),
        ("code", "Code", 10),
        ("description", "Description", 55),
        ("value", "Value", 20),
        ("expected", "Expected", 20),
    ]

    def __init__(self):
        self.wb: Optional[Workbook] = None

    def write(
        self,
        contexts: Sequence[ScenarioContext],
        output_path: Union[str, Path],
        title: str = "",
    ) -> None:
        """Write Excel report to file."""
        self.wb = Workbook()

        # Remove default sheet
        default_sheet = self.wb.active
        if default_sheet:
            self.wb.remove(default_sheet)

        self._create_rows_sheet(contexts, title)
        self._create_flags_sheet(contexts)

        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.wb.save(path)

    def _style_header(self, ws, widths: List[int]) -> None:
        for col, width in enumerate(widths, start=1):
            cell = ws.cell(row=1, column=col)
            cell.font = self.HEADER_FONT
            cell.fill = self.HEADER_FILL
            cell.alignment = Alignment(horizontal="center")
            ws.column_dimensions[get_column_letter(col)].width = width
        ws.freeze_panes = "A2"

    def _create_rows_sheet(self, contexts: Sequence[ScenarioContext], title: str) -> None:
        ws = self.wb.create_sheet("Rates")
        ws.append(RESULT_COLUMNS)
        self._style_header(ws, [max(12, len(name) + 2) for name in RESULT_COLUMNS])
        for context in contexts:
            row = result_row(context)
            ws.append([row[name] for name in RESULT_COLUMNS])
        if title:
            ws.title = title[:31]

    def _create_flags_sheet(self, contexts: Sequence[ScenarioContext]) -> None:
        ws = self.wb.create_sheet("Flags")
        ws.append([header for _, header, _ in self.FLAG_COLUMNS])
        self._style_header(ws, [width for _, _, width in self.FLAG_COLUMNS])

        for point, context in enumerate(contexts, start=1):
            for flag in context.flags:
                ws.append(self._flag_cells(point, flag))
                fill = self.SEVERITY_FILLS[flag.severity]
                for col in range(1, len(self.FLAG_COLUMNS) + 1):
                    ws.cell(row=ws.max_row, column=col).fill = fill

    @staticmethod
    def _flag_cells(point: int, flag: Flag) -> list:
        return [point, flag.severity.value, flag.code, flag.description, flag.value, flag.expected]
