"""Semi-biplanes from semi-planar functions over finite abelian groups."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
