"""Cooperative node selection and power allocation for coherent JT-CoMP."""

from cnspa.__about__ import __version__

__all__ = [
    "__version__",
]
