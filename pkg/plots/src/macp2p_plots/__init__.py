"""Figure rendering for macp2p GDoF sweep CSVs."""

from .render import FigureSpec, SchemaError, load_sweep, render

__all__ = ["FigureSpec", "SchemaError", "load_sweep", "render"]
