"""Concert tour scheduling: solver core plus a brute-force oracle.

Everything lives in the compiled extension; this package just re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "1.0.0"
