"""
Utilities Package

Shared error types and error handling helpers.
"""
