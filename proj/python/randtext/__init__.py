"""Random-text null model: closed-form word statistics, seeded simulation,
corpus profiling and rank-frequency fitting."""

from ._randtext import *  # noqa: F401,F403
from ._randtext import __version__  # noqa: F401
