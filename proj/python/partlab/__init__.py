"""Exact partition statistics, bijections, q-series and identity checks."""

from ._partlab import *  # noqa: F401,F403
from ._partlab import DomainError, checker_names, verify

__all__ = [name for name in dir() if not name.startswith("_")]
