"""Rindler, Unruh and Bogoliubov mode toolkit."""

from ._core import *  # noqa: F401,F403
from ._core import Error, DomainError, PoleError, SectorError, RegionError, RangeError, ConvergenceError

__version__ = "0.1.0"
