"""
Core Package

Finite field arithmetic, generator contexts, sparse polynomials and the
involution families.
"""
