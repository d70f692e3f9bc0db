"""Exact invariants and stable-growth bounds for twist families of knots."""

from tkt.linkdiag import LinkDiagram, PDError, parse_pd

__all__ = ["LinkDiagram", "PDError", "parse_pd"]
__version__ = "0.1.0"
