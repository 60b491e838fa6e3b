"""Render figures from the sampling CLI's delimited output files.

This package never computes statistics of its own; it draws exactly
what the CSV artifacts contain.
"""

from .io import SCHEMAS, SchemaError, read_table
from .render import KINDS, PlotSpec, render

__version__ = "0.1.0"

__all__ = [
    "KINDS",
    "PlotSpec",
    "SCHEMAS",
    "SchemaError",
    "read_table",
    "render",
]
