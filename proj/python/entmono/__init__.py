"""Majorization monotones, entanglement statistics and free-fermion chains."""

from ._entmono import *  # noqa: F401,F403
from ._entmono import EntmonoError  # noqa: F401
