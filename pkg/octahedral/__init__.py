"""Exact workbench for the binary octahedral group <i, w, d> of order 48."""
from .utils import WorkbenchError, configure, settings

__all__ = ["WorkbenchError", "configure", "settings"]
