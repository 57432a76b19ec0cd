from ._sicsep import *  # noqa: F401,F403
from ._sicsep import __doc__  # noqa: F401
