"""Bicrossproducts of algebraic quantum groups with exact arithmetic."""

__version__ = "0.1.0"
