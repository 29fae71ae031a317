"""Command-line interface for the renewal Hawkes toolkit"""

from .main import cli

__all__ = ['cli']
