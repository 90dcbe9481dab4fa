"""Exact order certificates for preordered polynomial semirings."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
