"""
Interfaces Module

This module defines the abstract interfaces and data transfer objects shared
by the Involution Voyager components.
"""
