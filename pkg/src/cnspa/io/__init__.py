"""File output helpers: atomic writes, CSV, instance files."""

from cnspa.io.atomic import atomic_write_csv, atomic_write_text, render_csv
from cnspa.io.instances import InstanceFile, load_instance, write_instance

__all__ = [
    "InstanceFile",
    "atomic_write_csv",
    "atomic_write_text",
    "load_instance",
    "render_csv",
    "write_instance",
]
