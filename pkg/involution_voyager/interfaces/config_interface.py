"""
Configuration interface for Involution Voyager.

The command line and the surveyor read their defaults (output format, survey
range, worker count, interpolation threshold) through this contract.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from involution_voyager.interfaces.dto import ConfigDTO


class IConfig(ABC):
    """Layered settings addressed by dot-separated keys such as "survey.q_max"."""

    @abstractmethod
    def load_config(self, config_path: Optional[str] = None) -> Dict:
        """
        (Re)load the settings.

        Args:
            config_path: A single YAML file to use instead of the base file,
                the environment overlay and VOYAGER_* variables

        Returns:
            The merged settings

        Raises:
            FileNotFoundError: If config_path names a missing file
            ValueError: If a file is not valid YAML or the settings fail validation
        """
        pass

    @abstractmethod
    def save_config(self, config_path: str) -> bool:
        """Write the merged settings as YAML; False when the file cannot be written."""
        pass

    @abstractmethod
    def get(self, key: str, default: Any = None) -> Any:
        """Value at a dotted key, or default when any part of the path is missing."""
        pass

    @abstractmethod
    def set(self, key: str, value: Any) -> None:
        """
        Override a value at runtime, creating intermediate sections.

        Raises:
            ValueError: If a parent of the key holds a scalar
        """
        pass

    @abstractmethod
    def get_section(self, section: str) -> Dict:
        """
        Copy of one top-level section ("survey", "interpolation", ...).

        Raises:
            KeyError: If the section does not exist
        """
        pass

    @abstractmethod
    def get_config_dto(self) -> ConfigDTO:
        """Typed view of the current configuration."""
        pass
