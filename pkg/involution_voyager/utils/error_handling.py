"""
Error handling utilities for Involution Voyager.

This module defines the exception hierarchy shared by the field, family,
verification and survey layers, and helpers for formatting, logging and
mapping errors to command-line exit statuses.
"""

import logging
import traceback
from typing import Any, Dict, Optional

from pydantic import ValidationError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


class VoyagerError(Exception):
    """Base class for all errors raised by Involution Voyager."""
    pass


class DomainError(VoyagerError):
    """Input outside the mathematical domain of an operation (bad q, k, gamma, ...)."""
    pass


class ZeroElementError(DomainError, ZeroDivisionError):
    """An operation that needs a nonzero element received zero."""
    pass


class NotAGeneratorError(DomainError):
    """An element that should generate the multiplicative group does not."""

    def __init__(self, message: str, order: Optional[int] = None):
        """
        Initialize the error.

        Args:
            message: Error message
            order: Actual multiplicative order of the rejected element
        """
        super().__init__(message)
        self.order = order


class InvalidModulusError(DomainError):
    """A modulus override that is not monic, of the right degree, or irreducible."""
    pass


class OutputPathError(DomainError):
    """Output or report files could not be written where requested."""
    pass


class FieldConstructionError(VoyagerError):
    """Field construction failed in a way that signals an internal fault."""
    pass


class ConstructionFault(VoyagerError):
    """A family construction normalized to the zero polynomial."""
    pass


class ErrorHandler:
    """
    Error handler for Involution Voyager.

    Formats and logs errors, and decides the exit status the command line
    reports for them.
    """

    @staticmethod
    def is_domain_error(error: Exception) -> bool:
        """
        Check whether an error is a usage or domain problem.

        Args:
            error: The error to check

        Returns:
            True for domain errors and configuration validation errors
        """
        return isinstance(error, (DomainError, ValidationError))

    @staticmethod
    def exit_code(error: Exception) -> int:
        """
        Map an error to a command-line exit status.

        Args:
            error: The error raised while serving a command

        Returns:
            2 for usage/domain errors, 1 otherwise
        """
        if ErrorHandler.is_domain_error(error):
            return EXIT_USAGE
        return EXIT_VERIFICATION_FAILED

    @staticmethod
    def format_error(error: Exception) -> str:
        """
        Format an error for logging.

        Args:
            error: The error to format

        Returns:
            Formatted error string
        """
        error_type = type(error).__name__
        if isinstance(error, NotAGeneratorError) and error.order is not None:
            return f"{error_type} (order {error.order}): {error}"
        return f"{error_type}: {error}"

    @staticmethod
    def log_error(
        error: Exception,
        context: Optional[Dict[str, Any]] = None,
        level: int = logging.ERROR
    ) -> None:
        """
        Log an error with context.

        Args:
            error: The error to log
            context: Additional context for the error
            level: Logging level (default: ERROR)
        """
        error_message = ErrorHandler.format_error(error)

        if context:
            context_str = ", ".join(f"{k}={v}" for k, v in context.items())
            message = f"{error_message} [Context: {context_str}]"
        else:
            message = error_message

        logger.log(level, message)

        # Domain errors are user mistakes; only internal faults get a traceback
        if level >= logging.ERROR and not ErrorHandler.is_domain_error(error):
            logger.log(level, f"Traceback:\n{traceback.format_exc()}")
