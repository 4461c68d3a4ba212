"""Regularity of tensor products of field extensions, decided with exact arithmetic."""

__version__ = "0.1.0"
