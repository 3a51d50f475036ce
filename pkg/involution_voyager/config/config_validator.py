"""
Configuration Validator Module

This module validates Involution Voyager configuration sections and collects
readable error messages instead of raising.
"""

import logging
from typing import Any, Dict, List, Optional, Type

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from involution_voyager.interfaces.dto import ConfigDTO, Environment, OutputFormat

VALID_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class LoggingConfig(BaseModel):
    """Validation model for logging configuration."""
    level: str
    format: Optional[str] = None

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Validate logging level."""
        if v.upper() not in VALID_LEVELS:
            raise ValueError(f"Logging level must be one of {VALID_LEVELS}")
        return v.upper()


class OutputConfig(BaseModel):
    """Validation model for output configuration."""
    format: str = OutputFormat.JSON.value
    directory: str = "reports"

    @field_validator("format")
    @classmethod
    def validate_format(cls, v: str) -> str:
        """Validate output format."""
        valid_formats = [f.value for f in OutputFormat]
        if v.lower() not in valid_formats:
            raise ValueError(f"Output format must be one of {valid_formats}")
        return v.lower()


class SurveyConfig(BaseModel):
    """Validation model for survey configuration."""
    q_min: int = Field(default=7, ge=2)
    q_max: int = Field(default=343, ge=2)
    max_workers: int = Field(default=4, gt=0)

    @model_validator(mode="after")
    def validate_range(self) -> "SurveyConfig":
        """Validate that the survey range is not reversed."""
        if self.q_min > self.q_max:
            raise ValueError("q_min must not exceed q_max")
        return self


class InterpolationConfig(BaseModel):
    """Validation model for the interpolation oracle."""
    enabled: bool = True
    max_q: int = Field(default=49, ge=0)


SECTION_MODELS: Dict[str, Type[BaseModel]] = {
    "logging": LoggingConfig,
    "output": OutputConfig,
    "survey": SurveyConfig,
    "interpolation": InterpolationConfig,
}


class ConfigValidator:
    """
    Configuration validator that checks required settings are present and valid.
    """

    def __init__(self):
        """Initialize the configuration validator."""
        self._logger = logging.getLogger(__name__)
        self._validation_errors: List[str] = []

    def _check_section(self, name: str, values: Dict[str, Any]) -> None:
        try:
            SECTION_MODELS[name](**values)
        except ValidationError as e:
            for error in e.errors():
                self._validation_errors.append(
                    f"{name.capitalize()} configuration error: {error['msg']}"
                )

    def validate_config(self, config: Dict[str, Any]) -> bool:
        """
        Validate the configuration dictionary.

        Args:
            config: Configuration dictionary to validate

        Returns:
            True if configuration is valid, False otherwise
        """
        self._validation_errors = []

        for key in ("environment", "logging"):
            if key not in config:
                self._validation_errors.append(f"Missing required configuration key: {key}")
        if self._validation_errors:
            return False

        valid_environments = [e.value for e in Environment]
        if config["environment"] not in valid_environments:
            self._validation_errors.append(
                f"Invalid environment: {config['environment']}. "
                f"Must be one of {valid_environments}"
            )

        for name in SECTION_MODELS:
            if name in config:
                section = config[name]
                if not isinstance(section, dict):
                    self._validation_errors.append(f"Configuration section '{name}' must be a mapping")
                    continue
                self._check_section(name, section)

        if self._validation_errors:
            self._logger.warning(f"Configuration has {len(self._validation_errors)} problem(s)")
        return len(self._validation_errors) == 0

    def validate_config_dto(self, config_dto: ConfigDTO) -> bool:
        """
        Validate the ConfigDTO object.

        Args:
            config_dto: ConfigDTO object to validate

        Returns:
            True if ConfigDTO is valid, False otherwise
        """
        self._validation_errors = []

        valid_environments = [e.value for e in Environment]
        if config_dto.environment not in valid_environments:
            self._validation_errors.append(
                f"Invalid environment: {config_dto.environment}. "
                f"Must be one of {valid_environments}"
            )

        self._check_section("logging", {"level": config_dto.logging_level})
        self._check_section(
            "output",
            {"format": config_dto.output_format, "directory": config_dto.output_directory},
        )
        self._check_section("survey", config_dto.survey_settings)
        self._check_section("interpolation", config_dto.interpolation_settings)

        return len(self._validation_errors) == 0

    def get_validation_errors(self) -> List[str]:
        """
        Get the list of validation errors.

        Returns:
            List of validation error messages
        """
        return self._validation_errors.copy()
