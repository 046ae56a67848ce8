from ._spnkit import *  # noqa: F401,F403
from ._spnkit import SpnkitError, Tolerances

__all__ = [name for name in dir() if not name.startswith("_")]
