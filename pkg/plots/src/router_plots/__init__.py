"""Publication-style figures rendered from router CSV files.

This package never computes scattering quantities itself; it only reads the
CSV files emitted by the ``router`` command line tool and maps them onto
matplotlib axes.
"""

from .figures import FigureSpec, SchemaError, read_map_csv, read_spectrum_csv, render

__all__ = [
    "FigureSpec",
    "SchemaError",
    "read_map_csv",
    "read_spectrum_csv",
    "render",
]
