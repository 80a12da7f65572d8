"""Bulgarian solitaire and its variants."""

from ._core import *  # noqa: F401,F403
from ._core import BoundExceeded

__version__ = "0.1.0"
