"""Tight bounds on degree-k vertices in minimally k-connected graphs."""

__version__ = "0.1.0"
