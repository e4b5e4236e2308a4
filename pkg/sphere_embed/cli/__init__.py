"""
Command-line interface
"""

from .runner import main, run

__all__ = ["main", "run"]
