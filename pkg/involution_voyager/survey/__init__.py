"""
Survey Package

Field, range and generator surveys and report persistence.
"""
