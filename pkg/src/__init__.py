"""Renewal Hawkes process toolkit"""

__version__ = "0.1.0"
