"""Figure rendering for the experiment CSV schemas."""

from .render import KINDS, FigureSpec, PlotError, render

__all__ = ["KINDS", "FigureSpec", "PlotError", "render"]
