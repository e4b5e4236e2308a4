"""
Acceptance harness integration
"""

from .runner import main

__all__ = ["main"]
