"""
Configuration Package

This package provides layered configuration for Involution Voyager.
"""

from involution_voyager.config.config_manager import ConfigManager, get_config, reset_config
from involution_voyager.config.config_validator import ConfigValidator
