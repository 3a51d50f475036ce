"""
Configuration Manager Module

This module implements configuration management for Involution Voyager.
Settings are layered from YAML files, an optional .env file and VOYAGER_*
environment variables.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from involution_voyager.config.config_validator import ConfigValidator
from involution_voyager.interfaces.config_interface import IConfig
from involution_voyager.interfaces.dto import ConfigDTO

ENV_PREFIX = "VOYAGER_"

# Sections whose keys may contain underscores; VOYAGER_SURVEY_MAX_WORKERS
# resolves to survey.max_workers.
KNOWN_SECTIONS = ("logging", "output", "survey", "interpolation")


class ConfigManager(IConfig):
    """
    Configuration manager that loads settings from multiple sources with
    environment-specific overrides.
    """

    def __init__(self, config_dir: str = None, env_file: str = None):
        """
        Initialize the configuration manager.

        Args:
            config_dir: Directory containing configuration files (default: project_root/config)
            env_file: Path to .env file (default: <config_dir>/.env)
        """
        self._config: Dict[str, Any] = {}
        self._config_dto: Optional[ConfigDTO] = None

        if config_dir is None:
            project_root = Path(__file__).parent.parent.parent
            config_dir = os.path.join(project_root, "config")
        self._config_dir = config_dir

        if env_file is None:
            env_file = os.path.join(config_dir, ".env")
        if os.path.exists(env_file):
            load_dotenv(env_file)

        self._environment = os.environ.get("VOYAGER_ENV", "development")
        self._logger = logging.getLogger(__name__)

    @property
    def environment(self) -> str:
        return self._environment

    def load_config(self, config_path: str = None) -> Dict:
        """
        Load configuration from files and environment variables.

        Args:
            config_path: Optional single config file; replaces the layered load

        Returns:
            Dictionary containing merged configuration settings

        Raises:
            FileNotFoundError: If config_path is given but does not exist
            ValueError: If a config file is invalid YAML, or the merged settings fail validation
        """
        try:
            if config_path:
                self._config = self._read_yaml(config_path, required=True)
                self._logger.debug(f"Loaded configuration from {config_path}")
            else:
                self._config = self._read_yaml(os.path.join(self._config_dir, "config.yaml"))
                env_config = self._read_yaml(
                    os.path.join(self._config_dir, "environments", f"{self._environment}.yaml")
                )
                self._deep_merge(self._config, env_config)
                self._override_from_env_vars()

            self._validate()
            self._create_config_dto()
            return self._config

        except yaml.YAMLError as e:
            self._logger.error(f"Invalid YAML in configuration file: {e}")
            raise ValueError(f"Invalid YAML in configuration file: {e}")

    def _validate(self) -> None:
        self._config.setdefault("environment", self._environment)
        self._config.setdefault("logging", {"level": "INFO"})
        validator = ConfigValidator()
        if not validator.validate_config(self._config):
            errors = validator.get_validation_errors()
            raise ValueError("Invalid configuration: " + "; ".join(errors))

    def _read_yaml(self, path: str, required: bool = False) -> Dict[str, Any]:
        if not os.path.exists(path):
            if required:
                raise FileNotFoundError(f"Configuration file not found: {path}")
            self._logger.debug(f"Configuration file not found at {path}")
            return {}
        with open(path, "r", encoding="utf-8") as file:
            data = yaml.safe_load(file) or {}
        if not isinstance(data, dict):
            raise ValueError(f"Configuration file {path} must contain a mapping")
        return data

    def save_config(self, config_path: str) -> bool:
        """
        Save current configuration to a YAML file.

        Args:
            config_path: Path to save the configuration file

        Returns:
            True if save was successful, False otherwise
        """
        try:
            directory = os.path.dirname(config_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(config_path, "w", encoding="utf-8") as file:
                yaml.safe_dump(self._config, file, default_flow_style=False)
            self._logger.info(f"Saved configuration to {config_path}")
            return True
        except OSError as e:
            self._logger.error(f"Error saving configuration to {config_path}: {e}")
            return False

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value by key.

        Args:
            key: Configuration key (dot notation supported for nested keys)
            default: Default value to return if key is not found

        Returns:
            Configuration value or default if key is not found
        """
        current: Any = self._config
        for part in key.split("."):
            if isinstance(current, dict) and part in current:
                current = current[part]
            else:
                return default
        return current

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value.

        Args:
            key: Configuration key (dot notation supported for nested keys)
            value: Configuration value

        Raises:
            ValueError: If a parent of a nested key is not a section
        """
        parts = key.split(".")
        current = self._config
        for part in parts[:-1]:
            if part not in current:
                current[part] = {}
            elif not isinstance(current[part], dict):
                raise ValueError(
                    f"Cannot set nested key '{key}' because '{part}' is not a dictionary"
                )
            current = current[part]
        current[parts[-1]] = value
        self._create_config_dto()

    def get_section(self, section: str) -> Dict:
        """
        Get a configuration section.

        Args:
            section: Section name

        Returns:
            Copy of the section

        Raises:
            KeyError: If section does not exist
        """
        if section in self._config and isinstance(self._config[section], dict):
            return self._config[section].copy()
        raise KeyError(f"Configuration section '{section}' not found")

    def get_config_dto(self) -> ConfigDTO:
        """
        Get the configuration as a ConfigDTO object.

        Returns:
            ConfigDTO object representing the current configuration
        """
        if self._config_dto is None:
            self._create_config_dto()
        return self._config_dto

    def _create_config_dto(self) -> None:
        defaults = ConfigDTO()
        self._config_dto = ConfigDTO(
            environment=self.get("environment", self._environment),
            debug=bool(self.get("debug", False)),
            logging_level=str(self.get("logging.level", defaults.logging_level)).upper(),
            output_format=str(self.get("output.format", defaults.output_format)).lower(),
            output_directory=self.get("output.directory", defaults.output_directory),
            survey_settings={**defaults.survey_settings, **self.get("survey", {})},
            interpolation_settings={
                **defaults.interpolation_settings, **self.get("interpolation", {})
            },
        )

    def _override_from_env_vars(self) -> None:
        """
        Override configuration values with environment variables.

        VOYAGER_SECTION_KEY=value sets config[section][key]; for example
        VOYAGER_OUTPUT_FORMAT=csv sets output.format. VOYAGER_ENV only selects
        the environment overlay.
        """
        for key, value in os.environ.items():
            if not key.startswith(ENV_PREFIX) or key == "VOYAGER_ENV":
                continue
            config_key = key[len(ENV_PREFIX):].lower()
            section = next(
                (s for s in KNOWN_SECTIONS if config_key.startswith(s + "_")), None
            )
            if section is None:
                parts = config_key.split("_", 1)
                if len(parts) < 2:
                    self._config[config_key] = self._convert_env_value(value)
                    continue
                section, subkey = parts
            else:
                subkey = config_key[len(section) + 1:]

            if not isinstance(self._config.get(section), dict):
                self._config[section] = {}
            self._config[section][subkey] = self._convert_env_value(value)

    def _convert_env_value(self, value: str) -> Any:
        """
        Convert an environment variable string to bool, int, float or str.

        Args:
            value: String value from environment variable

        Returns:
            Converted value
        """
        if value.lower() in ("true", "yes"):
            return True
        if value.lower() in ("false", "no"):
            return False
        try:
            return int(value)
        except ValueError:
            try:
                return float(value)
            except ValueError:
                return value

    def _deep_merge(self, base: Dict, override: Dict) -> None:
        """
        Deep merge two dictionaries, modifying base in-place.

        Args:
            base: Base dictionary to merge into
            override: Dictionary with values to override base
        """
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._deep_merge(base[key], value)
            else:
                base[key] = value


_config_instance = None


def get_config() -> ConfigManager:
    """
    Get the global configuration manager instance.

    Returns:
        ConfigManager instance
    """
    global _config_instance

    if _config_instance is None:
        manager = ConfigManager()
        manager.load_config()
        _config_instance = manager

    return _config_instance


def reset_config() -> None:
    """Drop the global instance so the next get_config() reloads."""
    global _config_instance
    _config_instance = None
