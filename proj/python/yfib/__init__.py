"""Young-Fibonacci insertion, growth diagrams, tableau posets and
Kostka-style matrices, backed by the C++ core."""

from ._yfib import *  # noqa: F401,F403
from ._yfib import __doc__  # noqa: F401
