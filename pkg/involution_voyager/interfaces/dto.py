"""
Data Transfer Objects (DTOs) Module

This module defines the data structures passed between the configuration
layer, the command line and the survey layer of Involution Voyager.
"""

from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any, Dict


class OutputFormat(Enum):
    """Formats the command line can emit."""
    JSON = "json"
    CSV = "csv"
    PRETTY = "pretty"


class Environment(Enum):
    """Deployment environments with their own configuration overlay."""
    DEVELOPMENT = "development"
    TESTING = "testing"
    PRODUCTION = "production"


@dataclass
class ConfigDTO:
    """Data transfer object for configuration settings."""
    environment: str = "development"
    debug: bool = False
    logging_level: str = "INFO"
    output_format: str = OutputFormat.JSON.value
    output_directory: str = "reports"
    survey_settings: Dict[str, Any] = None
    interpolation_settings: Dict[str, Any] = None

    def __post_init__(self):
        """Initialize default values for mutable fields."""
        if self.survey_settings is None:
            self.survey_settings = {
                "q_min": 7,
                "q_max": 343,
                "max_workers": 4
            }
        if self.interpolation_settings is None:
            self.interpolation_settings = {
                "enabled": True,
                "max_q": 49
            }

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ConfigDTO":
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(**known)
