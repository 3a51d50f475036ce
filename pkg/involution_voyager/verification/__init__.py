"""
Verification Package

Permutation analysis, record verification and the interpolation oracle.
"""
