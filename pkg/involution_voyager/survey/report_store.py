import io
import json
import os
from typing import Any, Dict, List, Optional

import pandas as pd

from involution_voyager.interfaces.report_interface import IReportStore

CSV_COLUMNS = ["q", "family", "k", "term_count", "passed"]


def _frame(rows: List[Dict[str, Any]]) -> pd.DataFrame:
    if rows:
        return pd.DataFrame(rows)
    return pd.DataFrame(columns=CSV_COLUMNS)


def render_csv(rows: List[Dict[str, Any]]) -> str:
    """CSV text of the given rows, header included, no index column."""
    buffer = io.StringIO()
    _frame(rows).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


class ReportStore(IReportStore):
    """
    Local file-based storage for reports.
    Each report is stored as a separate JSON or CSV file in a target directory.
    """
    def __init__(self, output_dir: str = "reports"):
        self.output_dir = output_dir

    def _get_report_path(self, name: str, extension: str) -> str:
        return os.path.join(self.output_dir, f"{name}.{extension}")

    def save_json(self, name: str, payload: Any) -> str:
        os.makedirs(self.output_dir, exist_ok=True)
        path = self._get_report_path(name, "json")
        with open(path, "w", encoding="utf-8") as f:
            json.dump(payload, f, ensure_ascii=False, indent=2)
        return path

    def save_csv(self, name: str, rows: List[Dict[str, Any]]) -> str:
        os.makedirs(self.output_dir, exist_ok=True)
        path = self._get_report_path(name, "csv")
        _frame(rows).to_csv(path, index=False, lineterminator="\n")
        return path

    def load_json(self, name: str) -> Optional[Any]:
        path = self._get_report_path(name, "json")
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)

    def list_reports(self) -> List[str]:
        if not os.path.isdir(self.output_dir):
            return []
        return sorted(
            fname for fname in os.listdir(self.output_dir)
            if fname.endswith((".json", ".csv"))
        )
