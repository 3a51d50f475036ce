"""
Report storage interfaces for Involution Voyager.

This module defines the interface for persisting survey and verification
reports.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional


class IReportStore(ABC):
    """Interface for stores that persist reports by name."""

    @abstractmethod
    def save_json(self, name: str, payload: Any) -> str:
        """
        Save a JSON report.

        Args:
            name: Report name, without extension
            payload: JSON-serializable report

        Returns:
            Path of the written file
        """
        pass

    @abstractmethod
    def save_csv(self, name: str, rows: List[Dict[str, Any]]) -> str:
        """
        Save a CSV summary.

        Args:
            name: Report name, without extension
            rows: One dictionary per row, all with the same keys

        Returns:
            Path of the written file
        """
        pass

    @abstractmethod
    def load_json(self, name: str) -> Optional[Any]:
        """
        Load a JSON report.

        Args:
            name: Report name, without extension

        Returns:
            The payload if found, None otherwise
        """
        pass

    @abstractmethod
    def list_reports(self) -> List[str]:
        """
        List stored report names.

        Returns:
            Sorted report file names
        """
        pass
