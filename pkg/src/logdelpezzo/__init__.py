"""Exact computations for complements and exceptional log del Pezzo surfaces."""

from .rational import Rational, fmt, parse_rational

__version__ = "0.1.0"
