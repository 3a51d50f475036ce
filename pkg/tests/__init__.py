"""
Test package for Involution Voyager.
"""
