"""Delta-v and mass-budget models for multi-target on-orbit refueling trade studies."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
